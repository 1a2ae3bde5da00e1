#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "taa/matrix.hpp"
#include "taa/signal.hpp"

namespace taa {

/// Frequency-domain comparison of a signal with its downsampled version.
/// per_channel_diff is C x B where B equals the sampled length: column k
/// holds | |X(nu_k)| * S/T - |Y[k]| | with nu_k the original-domain frequency
/// of sampled bin k. The energy errors are sums of squared diffs, the low
/// band covering bins with |frequency| below half the post-decimation Nyquist.
struct AliasingReport {
  Matrix per_channel_diff;
  double low_band_energy_error = 0.0;
  double full_band_energy_error = 0.0;
  std::size_t factor = 1;
  std::optional<double> cutoff_used;
};

/// Compare `sampled` (decimated by `factor`) against `original` on the
/// sampled sequence's bin grid. The original's spectrum is evaluated at the
/// matching normalized frequencies by exact DFT summation, not interpolation.
/// Throws std::invalid_argument when lengths are inconsistent beyond rounding.
AliasingReport aliasing_error(const Signal& original, const Signal& sampled,
                              std::size_t factor,
                              std::optional<double> cutoff_used = std::nullopt);

/// The per_channel_diff block alone (row per channel, column per bin).
Matrix spectrum_heatmap(const Signal& original, const Signal& sampled,
                        std::size_t factor);

/// Original-domain frequency (cycles/sample) of each comparison bin, in
/// column order of the heatmap; negative-frequency bins are reported signed.
std::vector<double> comparison_bin_frequencies(std::size_t sampled_length,
                                               std::size_t factor);

struct LabeledVector {
  int class_id = 0;
  std::vector<double> values;
};

/// Class-separability of pooled feature vectors: the RMS distance from each
/// sample to the other classes' centroids divided by the RMS distance to its
/// own class centroid. 1 means no structure; higher is more separable.
/// Throws std::invalid_argument on fewer than 2 classes, fewer than
/// 2 samples per class, or zero within-class scatter.
double separability_score(std::span<const LabeledVector> features_by_class);

}  // namespace taa
