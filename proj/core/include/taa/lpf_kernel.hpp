#pragma once

#include <cstddef>
#include <vector>

#include "taa/convolve.hpp"
#include "taa/signal.hpp"

namespace taa {

/// Cutoff frequency in cycles per sample, restricted to (0, 0.5] with
/// Nyquist at 0.5. Construction validates the range.
struct CutoffFrequency {
  explicit CutoffFrequency(double v);
  double value;
};

enum class KernelFamily { sinc, gaussian };

/// Recipe for a discrete low-pass kernel: family, cutoff, tap count
/// (odd, so a center tap exists), sub-sample shift mu, and whether the taps
/// are normalized to unit DC gain.
struct KernelSpec {
  KernelFamily family = KernelFamily::sinc;
  CutoffFrequency cutoff{0.25};
  std::size_t length = 63;
  double mu = 0.0;
  bool normalize_dc = true;
};

/// Discrete low-pass taps plus the spec that generated them. `z` is the
/// normalization constant that was actually divided out (1 when
/// normalize_dc is off).
struct LpfKernel {
  std::vector<double> weights;
  std::size_t center = 0;
  KernelSpec spec;
  double z = 1.0;
};

/// Ideal low-pass impulse response truncated to spec.length taps:
/// tap m = 2 f_C sinc(2 f_C (m - center - mu)), divided by Z = sum of taps
/// when normalize_dc is set. Throws std::invalid_argument on even length or
/// a spec of the wrong family.
LpfKernel build_sinc_kernel(const KernelSpec& spec);

/// Gaussian low-pass taps exp(-(m - center - mu)^2 / (2 sigma^2)) with
/// sigma = kGaussianBandwidthKappa / f_C, normalized like the sinc family.
LpfKernel build_gaussian_kernel(const KernelSpec& spec);

/// Dispatch on spec.family.
LpfKernel build_kernel(const KernelSpec& spec);

/// sigma * f_C product that places the Gaussian's half-power (-3 dB)
/// frequency at the cutoff: sqrt(ln 2) / (2 pi).
inline constexpr double kGaussianBandwidthKappa = 0.1325;

/// Convolve every channel with the kernel (convolve_same at the kernel's
/// center). Output shape equals input shape.
Signal apply_lpf(const Signal& signal, const LpfKernel& kernel,
                 Boundary boundary = Boundary::reflect);

/// Magnitude of the zero-padded DFT of the taps; bin k of the result
/// corresponds to k/n_bins cycles per sample. Requires n_bins >= tap count.
std::vector<double> kernel_frequency_response(const LpfKernel& kernel,
                                              std::size_t n_bins);

/// Per-tap derivative of the kernel weights with respect to the cutoff.
/// Matches the weights build_kernel() returns: unnormalized taps when
/// normalize_dc is off, the quotient rule through Z when it is on.
std::vector<double> grad_kernel_wrt_cutoff(const KernelSpec& spec);

/// Low pass weights over a pooling window: w[n] proportional to
/// sum_m h(n - m - mu) with h the sinc low-pass response and m ranging over
/// the window, normalized so the weights sum to 1. This is the per-position
/// weight used by LPF-fused pooling and by mixture kernels.
std::vector<double> low_pass_weights(std::size_t window_len, CutoffFrequency cutoff,
                                     double mu = 0.0);

/// d low_pass_weights / d cutoff, same shape as the weights.
std::vector<double> low_pass_weights_cutoff_grad(std::size_t window_len,
                                                 CutoffFrequency cutoff,
                                                 double mu = 0.0);

/// Range mapping used wherever a cutoff is learned: logit -> 0.5 * sigmoid,
/// keeping the cutoff inside (0, 0.5).
double cutoff_from_logit(double logit) noexcept;
double cutoff_from_logit_grad(double logit) noexcept;
/// Inverse of cutoff_from_logit for cutoffs in (0, 0.5).
double logit_from_cutoff(double cutoff);

}  // namespace taa
