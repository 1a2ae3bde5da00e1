#include "taa/lpf_kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "taa/fourier.hpp"

namespace taa {

namespace {

void check_spec(const KernelSpec& spec, KernelFamily expected) {
  if (spec.family != expected) {
    throw std::invalid_argument("kernel spec has the wrong family");
  }
  if (spec.length < 1 || spec.length % 2 == 0) {
    throw std::invalid_argument("kernel length must be odd and positive");
  }
  if (!std::isfinite(spec.mu)) {
    throw std::invalid_argument("kernel mu must be finite");
  }
}

LpfKernel normalize(std::vector<double> taps, const KernelSpec& spec) {
  LpfKernel k;
  k.center = spec.length / 2;
  k.spec = spec;
  if (spec.normalize_dc) {
    double z = 0.0;
    for (double w : taps) z += w;
    if (std::abs(z) < 1e-12) {
      throw std::invalid_argument("kernel taps sum to ~0, cannot normalize DC gain");
    }
    for (double& w : taps) w /= z;
    k.z = z;
  }
  k.weights = std::move(taps);
  return k;
}

}  // namespace

CutoffFrequency::CutoffFrequency(double v) : value(v) {
  if (!(v > 0.0) || v > 0.5 || !std::isfinite(v)) {
    throw std::invalid_argument("cutoff frequency must lie in (0, 0.5]");
  }
}

LpfKernel build_sinc_kernel(const KernelSpec& spec) {
  check_spec(spec, KernelFamily::sinc);
  const double fc = spec.cutoff.value;
  const auto center = static_cast<double>(spec.length / 2);
  std::vector<double> taps(spec.length);
  for (std::size_t m = 0; m < spec.length; ++m) {
    const double d = static_cast<double>(m) - center - spec.mu;
    taps[m] = 2.0 * fc * sinc(2.0 * fc * d);
  }
  return normalize(std::move(taps), spec);
}

LpfKernel build_gaussian_kernel(const KernelSpec& spec) {
  check_spec(spec, KernelFamily::gaussian);
  const double sigma = kGaussianBandwidthKappa / spec.cutoff.value;
  const auto center = static_cast<double>(spec.length / 2);
  std::vector<double> taps(spec.length);
  for (std::size_t m = 0; m < spec.length; ++m) {
    const double d = static_cast<double>(m) - center - spec.mu;
    taps[m] = std::exp(-d * d / (2.0 * sigma * sigma));
  }
  return normalize(std::move(taps), spec);
}

LpfKernel build_kernel(const KernelSpec& spec) {
  return spec.family == KernelFamily::sinc ? build_sinc_kernel(spec)
                                           : build_gaussian_kernel(spec);
}

Signal apply_lpf(const Signal& signal, const LpfKernel& kernel, Boundary boundary) {
  signal.validate();
  Signal out(signal.timesteps, signal.channels);
  out.sample_rate = signal.sample_rate;
  for (std::size_t c = 0; c < signal.channels; ++c) {
    const auto filtered =
        convolve_same(signal.channel(c), kernel.weights, kernel.center, boundary);
    std::copy(filtered.begin(), filtered.end(), out.channel(c).begin());
  }
  return out;
}

std::vector<double> kernel_frequency_response(const LpfKernel& kernel,
                                              std::size_t n_bins) {
  if (n_bins < kernel.weights.size()) {
    throw std::invalid_argument("kernel_frequency_response: n_bins < kernel length");
  }
  std::vector<double> padded(n_bins, 0.0);
  std::copy(kernel.weights.begin(), kernel.weights.end(), padded.begin());
  const Spectrum spec = fft(padded);
  std::vector<double> mag(n_bins);
  for (std::size_t k = 0; k < n_bins; ++k) mag[k] = std::abs(spec[k]);
  return mag;
}

std::vector<double> grad_kernel_wrt_cutoff(const KernelSpec& spec) {
  if (spec.length < 1 || spec.length % 2 == 0) {
    throw std::invalid_argument("kernel length must be odd and positive");
  }
  if (!std::isfinite(spec.mu)) {
    throw std::invalid_argument("kernel mu must be finite");
  }
  const double fc = spec.cutoff.value;
  const auto center = static_cast<double>(spec.length / 2);
  std::vector<double> taps(spec.length), dtaps(spec.length);

  if (spec.family == KernelFamily::sinc) {
    for (std::size_t m = 0; m < spec.length; ++m) {
      const double d = static_cast<double>(m) - center - spec.mu;
      const double u = 2.0 * fc * d;
      taps[m] = 2.0 * fc * sinc(u);
      // d/dfc [2 fc sinc(2 fc d)] = 2 sinc(u) + 4 fc d sinc'(u).
      dtaps[m] = 2.0 * sinc(u) + 4.0 * fc * d * sinc_derivative(u);
    }
  } else {
    const double kappa2 = kGaussianBandwidthKappa * kGaussianBandwidthKappa;
    for (std::size_t m = 0; m < spec.length; ++m) {
      const double d = static_cast<double>(m) - center - spec.mu;
      // exp(-d^2 fc^2 / (2 kappa^2)) since sigma = kappa/fc.
      taps[m] = std::exp(-d * d * fc * fc / (2.0 * kappa2));
      dtaps[m] = taps[m] * (-d * d * fc / kappa2);
    }
  }

  if (!spec.normalize_dc) return dtaps;

  double z = 0.0, dz = 0.0;
  for (std::size_t m = 0; m < spec.length; ++m) {
    z += taps[m];
    dz += dtaps[m];
  }
  if (std::abs(z) < 1e-12) {
    throw std::invalid_argument("kernel taps sum to ~0, cannot normalize DC gain");
  }
  std::vector<double> grad(spec.length);
  for (std::size_t m = 0; m < spec.length; ++m) {
    grad[m] = (dtaps[m] * z - taps[m] * dz) / (z * z);
  }
  return grad;
}

namespace {

// w[n] = (1/Z) sum_m h(n - m - mu) over the window. All pairwise offsets
// n - m lie in (-(W-1), W-1), so one table of h at integer offsets plus a
// prefix sum gives every w[n] in O(W) total.
std::vector<double> window_weight_sums(std::size_t window_len, double fc, double mu,
                                       bool derivative) {
  const auto w = static_cast<std::int64_t>(window_len);
  std::vector<double> table(2 * window_len - 1);
  for (std::int64_t j = -(w - 1); j <= w - 1; ++j) {
    const double d = static_cast<double>(j) - mu;
    const double u = 2.0 * fc * d;
    table[static_cast<std::size_t>(j + w - 1)] =
        derivative ? 2.0 * sinc(u) + 4.0 * fc * d * sinc_derivative(u)
                   : 2.0 * fc * sinc(u);
  }
  std::vector<double> prefix(table.size() + 1, 0.0);
  for (std::size_t i = 0; i < table.size(); ++i) prefix[i + 1] = prefix[i] + table[i];

  std::vector<double> sums(window_len);
  for (std::int64_t n = 0; n < w; ++n) {
    // sum over m in [0, W) of table[n - m] = prefix range [n-(W-1), n].
    const std::size_t lo = static_cast<std::size_t>(n);          // n-(W-1) shifted by W-1
    const std::size_t hi = static_cast<std::size_t>(n + w - 1);  // n shifted by W-1
    sums[static_cast<std::size_t>(n)] = prefix[hi + 1] - prefix[lo];
  }
  return sums;
}

}  // namespace

std::vector<double> low_pass_weights(std::size_t window_len, CutoffFrequency cutoff,
                                     double mu) {
  if (window_len < 1) throw std::invalid_argument("low_pass_weights: empty window");
  if (!std::isfinite(mu)) throw std::invalid_argument("low_pass_weights: mu must be finite");
  std::vector<double> u = window_weight_sums(window_len, cutoff.value, mu, false);
  double z = 0.0;
  for (double v : u) z += v;
  if (std::abs(z) < 1e-12) {
    throw std::invalid_argument("low_pass_weights: weights sum to ~0");
  }
  for (double& v : u) v /= z;
  return u;
}

std::vector<double> low_pass_weights_cutoff_grad(std::size_t window_len,
                                                 CutoffFrequency cutoff, double mu) {
  if (window_len < 1) throw std::invalid_argument("low_pass_weights: empty window");
  if (!std::isfinite(mu)) throw std::invalid_argument("low_pass_weights: mu must be finite");
  const std::vector<double> u = window_weight_sums(window_len, cutoff.value, mu, false);
  const std::vector<double> du = window_weight_sums(window_len, cutoff.value, mu, true);
  double z = 0.0, dz = 0.0;
  for (std::size_t n = 0; n < window_len; ++n) {
    z += u[n];
    dz += du[n];
  }
  if (std::abs(z) < 1e-12) {
    throw std::invalid_argument("low_pass_weights: weights sum to ~0");
  }
  std::vector<double> grad(window_len);
  for (std::size_t n = 0; n < window_len; ++n) {
    grad[n] = (du[n] * z - u[n] * dz) / (z * z);
  }
  return grad;
}

double cutoff_from_logit(double logit) noexcept {
  return 0.5 / (1.0 + std::exp(-logit));
}

double cutoff_from_logit_grad(double logit) noexcept {
  const double s = 1.0 / (1.0 + std::exp(-logit));
  return 0.5 * s * (1.0 - s);
}

double logit_from_cutoff(double cutoff) {
  if (!(cutoff > 0.0) || !(cutoff < 0.5)) {
    throw std::invalid_argument("logit_from_cutoff: cutoff must lie in (0, 0.5)");
  }
  const double s = cutoff / 0.5;
  return std::log(s / (1.0 - s));
}

}  // namespace taa
