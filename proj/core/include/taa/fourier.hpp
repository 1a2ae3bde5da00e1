#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace taa {

/// Complex DFT coefficients of one channel. Bin k corresponds to the angular
/// frequency 2*pi*k/T radians per sample, equivalently k/T cycles per sample.
struct Spectrum {
  std::vector<std::complex<double>> coeffs;

  std::size_t size() const { return coeffs.size(); }
  std::complex<double>& operator[](std::size_t k) { return coeffs[k]; }
  const std::complex<double>& operator[](std::size_t k) const { return coeffs[k]; }
};

/// Normalized sinc: sin(pi x)/(pi x), with sinc(0) = 1. With this convention
/// a cutoff is expressed in cycles/sample and Nyquist sits at 0.5.
double sinc(double x) noexcept;

/// Derivative of the normalized sinc, (pi x cos(pi x) - sin(pi x))/(pi x^2),
/// with the removable singularity d/dx sinc(0) = 0 handled explicitly.
double sinc_derivative(double x) noexcept;

/// Direct O(T^2) forward transform: coeffs[k] = sum_n x[n] exp(-i 2 pi k n / T).
/// Exact length, unnormalized forward. This is the oracle fft() is tested against.
Spectrum dft(std::span<const double> x);

/// Inverse transform with 1/T scaling. Throws std::invalid_argument on an
/// empty spectrum and std::runtime_error when the inverse has relative
/// imaginary magnitude above 1e-6 (the spectrum does not describe a real signal).
std::vector<double> idft(const Spectrum& spec);

/// Fast transform with the same contract as dft(). Power-of-two lengths use
/// iterative radix-2 Cooley-Tukey; other lengths go through Bluestein's chirp-z,
/// so any T >= 1 is accepted.
Spectrum fft(std::span<const double> x);

/// In-place complex FFT building block used by fft(); exposed for reuse.
/// Requires a power-of-two size. `inverse` applies the conjugate transform
/// without the 1/T scaling.
void fft_pow2_inplace(std::vector<std::complex<double>>& a, bool inverse);

/// Per-bin magnitude difference | |a[k]| - |b[k]| |.
/// Throws std::invalid_argument on length mismatch.
std::vector<double> spectrum_diff(const Spectrum& a, const Spectrum& b);

}  // namespace taa
