#pragma once

#include <cstddef>
#include <vector>

#include "taa/lpf_kernel.hpp"
#include "taa/signal.hpp"

namespace taa {

enum class SampleMode { stride, count };

/// Temporal downsampling recipe. In stride mode keep indices
/// {phase, phase+factor, ...}; in count mode keep round(linspace) indices
/// over [0, T-1] inclusive.
struct DownsampleSpec {
  SampleMode mode = SampleMode::stride;
  std::size_t factor = 1;
  std::size_t target_count = 0;
  std::size_t phase = 0;

  static DownsampleSpec stride(std::size_t factor, std::size_t phase = 0);
  static DownsampleSpec count(std::size_t target_count);
};

/// Keep the selected timesteps of every channel. In count mode,
/// target_count > T throws std::invalid_argument (upsampling is out of scope).
Signal uniform_sample(const Signal& signal, const DownsampleSpec& spec);

/// Length-preserving impulse-train sampling: out[n] = x[n] when
/// n mod factor == 0, else 0. The spectrum of the result is the 1/N-scaled
/// sum of N shifted copies of the input spectrum.
Signal impulse_train_sample(const Signal& signal, std::size_t factor);

/// Sinc low-pass at `cutoff` (kernel_length taps) followed by uniform_sample;
/// identical to filtering then decimating by construction.
Signal lpf_uniform_sample(const Signal& signal, const DownsampleSpec& spec,
                          CutoffFrequency cutoff, std::size_t kernel_length = 63,
                          Boundary boundary = Boundary::reflect);

/// Per-channel mean over the half-open window [start, end).
std::vector<double> average_pool(const Signal& signal, std::size_t start,
                                 std::size_t end);

/// Per-channel max over [start, end).
std::vector<double> max_pool(const Signal& signal, std::size_t start,
                             std::size_t end);

/// Low-pass weighted pooling: per channel sum_n w[n] x[start+n] with
/// w = low_pass_weights(end-start, cutoff). Computed directly as a weighted
/// sum, never by filtering and then averaging.
std::vector<double> lpf_average_pool(const Signal& signal, std::size_t start,
                                     std::size_t end, CutoffFrequency cutoff);

/// Zero-stuff a decimated signal back to original_length and interpolate with
/// a sinc kernel at cutoff 0.5/factor scaled by the factor (band-limited
/// interpolation). Requires sampled length * factor >= original_length - factor.
Signal sinc_reconstruct(const Signal& sampled, std::size_t factor,
                        std::size_t original_length,
                        std::size_t kernel_length = 255);

}  // namespace taa
