#include "taa/fourier.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace taa {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Complex FFT for arbitrary sizes: radix-2 when possible, Bluestein otherwise.
void fft_any_inplace(std::vector<std::complex<double>>& a, bool inverse);

// Bluestein chirp-z: x_n -> (x_n w_n) circularly convolved with conj(w),
// w_n = exp(-i pi n^2 / T), evaluated through a power-of-two FFT.
void bluestein_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  const double sign = inverse ? 1.0 : -1.0;
  std::vector<std::complex<double>> chirp(n);
  for (std::size_t k = 0; k < n; ++k) {
    // k^2 mod 2n keeps the phase argument small for long transforms.
    const std::size_t k2 = static_cast<std::size_t>((static_cast<unsigned long long>(k) * k) % (2 * n));
    const double angle = sign * kPi * static_cast<double>(k2) / static_cast<double>(n);
    chirp[k] = std::polar(1.0, angle);
  }

  const std::size_t m = next_pow2(2 * n - 1);
  std::vector<std::complex<double>> fa(m), fb(m);
  for (std::size_t k = 0; k < n; ++k) fa[k] = a[k] * chirp[k];
  fb[0] = std::conj(chirp[0]);
  for (std::size_t k = 1; k < n; ++k) {
    fb[k] = std::conj(chirp[k]);
    fb[m - k] = std::conj(chirp[k]);
  }

  fft_pow2_inplace(fa, false);
  fft_pow2_inplace(fb, false);
  for (std::size_t k = 0; k < m; ++k) fa[k] *= fb[k];
  fft_pow2_inplace(fa, true);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n; ++k) a[k] = fa[k] * scale * chirp[k];
}

void fft_any_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  if (a.size() <= 1) return;
  if (is_pow2(a.size())) {
    fft_pow2_inplace(a, inverse);
  } else {
    bluestein_inplace(a, inverse);
  }
}

}  // namespace

double sinc(double x) noexcept {
  const double px = kPi * x;
  if (std::abs(x) < 1e-6) {
    // sin(px)/px = 1 - px^2/6 + px^4/120 - ...
    const double p2 = px * px;
    return 1.0 - p2 / 6.0 * (1.0 - p2 / 20.0);
  }
  return std::sin(px) / px;
}

double sinc_derivative(double x) noexcept {
  const double px = kPi * x;
  // The direct numerator cancels catastrophically near 0; switch to the
  // series -pi^2 x/3 + pi^4 x^3/30 where it is accurate to ~1e-13 relative.
  if (std::abs(x) < 1e-3) {
    const double pi2 = kPi * kPi;
    return -pi2 * x / 3.0 + pi2 * pi2 * x * x * x / 30.0;
  }
  return (px * std::cos(px) - std::sin(px)) / (px * px) * kPi;
}

Spectrum dft(std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("dft: empty input");
  const std::size_t t = x.size();
  Spectrum out;
  out.coeffs.assign(t, {0.0, 0.0});
  for (std::size_t k = 0; k < t; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t n = 0; n < t; ++n) {
      // Reduce k*n modulo T before forming the angle to keep precision.
      const std::size_t kn = (static_cast<std::size_t>(k) * n) % t;
      const double angle = -2.0 * kPi * static_cast<double>(kn) / static_cast<double>(t);
      acc += x[n] * std::polar(1.0, angle);
    }
    out.coeffs[k] = acc;
  }
  return out;
}

std::vector<double> idft(const Spectrum& spec) {
  const std::size_t t = spec.size();
  if (t == 0) throw std::invalid_argument("idft: empty spectrum");
  std::vector<std::complex<double>> inv(spec.coeffs);
  fft_any_inplace(inv, true);
  double max_abs = 0.0;
  double max_imag = 0.0;
  const double scale = 1.0 / static_cast<double>(t);
  std::vector<double> out(t);
  for (std::size_t n = 0; n < t; ++n) {
    const std::complex<double> v = inv[n] * scale;
    max_abs = std::max(max_abs, std::abs(v));
    max_imag = std::max(max_imag, std::abs(v.imag()));
    out[n] = v.real();
  }
  if (max_imag > 1e-6 * std::max(max_abs, 1e-30)) {
    throw std::runtime_error("idft: spectrum does not invert to a real signal");
  }
  return out;
}

Spectrum fft(std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("fft: empty input");
  std::vector<std::complex<double>> a(x.begin(), x.end());
  fft_any_inplace(a, false);
  Spectrum out;
  out.coeffs = std::move(a);
  return out;
}

void fft_pow2_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  if (!is_pow2(n)) throw std::invalid_argument("fft_pow2_inplace: size must be a power of two");

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = sign * 2.0 * kPi / static_cast<double>(len);
    const std::complex<double> wlen = std::polar(1.0, angle);
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w{1.0, 0.0};
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::complex<double> u = a[i + j];
        const std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

std::vector<double> spectrum_diff(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("spectrum_diff: length mismatch");
  }
  std::vector<double> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    out[k] = std::abs(std::abs(a[k]) - std::abs(b[k]));
  }
  return out;
}

}  // namespace taa
