#include "taa/downsample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace taa {

DownsampleSpec DownsampleSpec::stride(std::size_t factor, std::size_t phase) {
  DownsampleSpec s;
  s.mode = SampleMode::stride;
  s.factor = factor;
  s.phase = phase;
  return s;
}

DownsampleSpec DownsampleSpec::count(std::size_t target_count) {
  DownsampleSpec s;
  s.mode = SampleMode::count;
  s.target_count = target_count;
  return s;
}

namespace {

std::vector<std::size_t> kept_indices(std::size_t t, const DownsampleSpec& spec) {
  std::vector<std::size_t> idx;
  if (spec.mode == SampleMode::stride) {
    if (spec.factor < 1) throw std::invalid_argument("uniform_sample: factor must be >= 1");
    if (spec.phase >= spec.factor) {
      throw std::invalid_argument("uniform_sample: phase must be < factor");
    }
    for (std::size_t n = spec.phase; n < t; n += spec.factor) idx.push_back(n);
  } else {
    const std::size_t k = spec.target_count;
    if (k < 1) throw std::invalid_argument("uniform_sample: target_count must be >= 1");
    if (k > t) {
      throw std::invalid_argument(
          "uniform_sample: target_count exceeds signal length (upsampling is out of scope)");
    }
    if (k == 1) {
      idx.push_back(0);
    } else {
      for (std::size_t i = 0; i < k; ++i) {
        const double pos = static_cast<double>(i) * static_cast<double>(t - 1) /
                           static_cast<double>(k - 1);
        idx.push_back(static_cast<std::size_t>(std::llround(pos)));
      }
    }
  }
  if (idx.empty()) throw std::invalid_argument("uniform_sample: no samples selected");
  return idx;
}

}  // namespace

Signal uniform_sample(const Signal& signal, const DownsampleSpec& spec) {
  signal.validate();
  const auto idx = kept_indices(signal.timesteps, spec);
  Signal out(idx.size(), signal.channels);
  out.sample_rate = signal.sample_rate;
  for (std::size_t c = 0; c < signal.channels; ++c) {
    const auto src = signal.channel(c);
    auto dst = out.channel(c);
    for (std::size_t i = 0; i < idx.size(); ++i) dst[i] = src[idx[i]];
  }
  return out;
}

Signal impulse_train_sample(const Signal& signal, std::size_t factor) {
  signal.validate();
  if (factor < 1) throw std::invalid_argument("impulse_train_sample: factor must be >= 1");
  if (factor > signal.timesteps) {
    throw std::invalid_argument("impulse_train_sample: factor exceeds signal length");
  }
  Signal out(signal.timesteps, signal.channels);
  out.sample_rate = signal.sample_rate;
  for (std::size_t c = 0; c < signal.channels; ++c) {
    const auto src = signal.channel(c);
    auto dst = out.channel(c);
    for (std::size_t n = 0; n < signal.timesteps; n += factor) dst[n] = src[n];
  }
  return out;
}

Signal lpf_uniform_sample(const Signal& signal, const DownsampleSpec& spec,
                          CutoffFrequency cutoff, std::size_t kernel_length,
                          Boundary boundary) {
  KernelSpec kspec;
  kspec.family = KernelFamily::sinc;
  kspec.cutoff = cutoff;
  kspec.length = kernel_length;
  const Signal filtered = apply_lpf(signal, build_sinc_kernel(kspec), boundary);
  return uniform_sample(filtered, spec);
}

namespace {

void check_window(const Signal& signal, std::size_t start, std::size_t end) {
  if (start >= end) throw std::invalid_argument("pooling window is empty");
  if (end > signal.timesteps) {
    throw std::invalid_argument("pooling window exceeds signal length");
  }
}

}  // namespace

std::vector<double> average_pool(const Signal& signal, std::size_t start,
                                 std::size_t end) {
  signal.validate();
  check_window(signal, start, end);
  std::vector<double> out(signal.channels);
  const double inv = 1.0 / static_cast<double>(end - start);
  for (std::size_t c = 0; c < signal.channels; ++c) {
    const auto src = signal.channel(c);
    double acc = 0.0;
    for (std::size_t n = start; n < end; ++n) acc += src[n];
    out[c] = acc * inv;
  }
  return out;
}

std::vector<double> max_pool(const Signal& signal, std::size_t start,
                             std::size_t end) {
  signal.validate();
  check_window(signal, start, end);
  std::vector<double> out(signal.channels);
  for (std::size_t c = 0; c < signal.channels; ++c) {
    const auto src = signal.channel(c);
    double best = src[start];
    for (std::size_t n = start + 1; n < end; ++n) best = std::max(best, src[n]);
    out[c] = best;
  }
  return out;
}

std::vector<double> lpf_average_pool(const Signal& signal, std::size_t start,
                                     std::size_t end, CutoffFrequency cutoff) {
  signal.validate();
  check_window(signal, start, end);
  const std::vector<double> w = low_pass_weights(end - start, cutoff);
  std::vector<double> out(signal.channels);
  for (std::size_t c = 0; c < signal.channels; ++c) {
    const auto src = signal.channel(c);
    double acc = 0.0;
    for (std::size_t n = 0; n < w.size(); ++n) acc += w[n] * src[start + n];
    out[c] = acc;
  }
  return out;
}

Signal sinc_reconstruct(const Signal& sampled, std::size_t factor,
                        std::size_t original_length, std::size_t kernel_length) {
  sampled.validate();
  if (factor < 1) throw std::invalid_argument("sinc_reconstruct: factor must be >= 1");
  if (original_length < 1) {
    throw std::invalid_argument("sinc_reconstruct: original_length must be >= 1");
  }
  if (sampled.timesteps * factor + factor < original_length) {
    throw std::invalid_argument("sinc_reconstruct: sampled sequence too short");
  }
  if (factor == 1) {
    if (sampled.timesteps < original_length) {
      throw std::invalid_argument("sinc_reconstruct: sampled sequence too short");
    }
    Signal out(original_length, sampled.channels);
    out.sample_rate = sampled.sample_rate;
    for (std::size_t c = 0; c < sampled.channels; ++c) {
      const auto src = sampled.channel(c);
      std::copy(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(original_length),
                out.channel(c).begin());
    }
    return out;
  }

  Signal stuffed(original_length, sampled.channels);
  stuffed.sample_rate = sampled.sample_rate;
  for (std::size_t c = 0; c < sampled.channels; ++c) {
    const auto src = sampled.channel(c);
    auto dst = stuffed.channel(c);
    for (std::size_t i = 0; i < src.size(); ++i) {
      const std::size_t n = i * factor;
      if (n < original_length) dst[n] = src[i];
    }
  }

  KernelSpec kspec;
  kspec.family = KernelFamily::sinc;
  kspec.cutoff = CutoffFrequency(0.5 / static_cast<double>(factor));
  kspec.length = kernel_length;
  kspec.normalize_dc = false;  // interpolation gain comes from the factor scale
  LpfKernel kernel = build_sinc_kernel(kspec);
  for (double& w : kernel.weights) w *= static_cast<double>(factor);

  // Zero boundary: the stuffed sequence is mostly zeros anyway and mirrored
  // stuffing phase would be wrong at the edges.
  return apply_lpf(stuffed, kernel, Boundary::zero);
}

}  // namespace taa
