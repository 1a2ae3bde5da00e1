#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "taa/convolve.hpp"
#include "taa/matrix.hpp"
#include "taa/signal.hpp"

namespace taa {

/// Parameters of a temporal low-pass mixture kernel: P sets of low pass
/// weights (each defined by a cutoff logit and a location mu), soft attention
/// logits mixing the sets per output channel, and an optional truncation
/// half-width L (infinity = untruncated).
struct TlpmParams {
  std::size_t p_sets = 16;
  std::size_t length = 31;
  std::size_t out_channels = 8;
  std::vector<double> cutoff_logits;  // size p_sets
  std::vector<double> mu;             // size p_sets, samples
  Matrix attention_logits;            // out_channels x p_sets
  double trunc_half_width = std::numeric_limits<double>::infinity();
  /// When truncation zeroes taps, re-scale each surviving set back to unit
  /// sum so DC gain is preserved. The raw zero-only variant of the paper-alike
  /// rule is available by switching this off.
  bool renormalize_after_truncation = true;

  /// Throws std::invalid_argument on inconsistent sizes, P < 1, N < 1,
  /// non-positive L, or non-finite entries.
  void validate() const;

  /// Number of learnable shape parameters per set bank (cutoff + location
  /// per set), excising attention; 2P, same as a Gaussian-mixture kernel
  /// with per-set (mu, sigma).
  std::size_t shape_parameter_count() const { return 2 * p_sets; }
};

/// Mixed kernel rows, one per output channel, each a convex combination of
/// the P generating low pass weight vectors.
struct TlpmKernel {
  Matrix weights;  // out_channels x length
  TlpmParams provenance;
};

/// Row-wise numerically stable softmax (max subtraction).
Matrix softmax_attention(const Matrix& logits);

/// Build the mixture kernel: row c = sum_p attention[c][p] * w_p where w_p is
/// the length-N unit-sum low pass weight vector at cutoff_from_logit(theta_p)
/// shifted by mu_p, truncated per trunc_half_width.
TlpmKernel build_tlpm_kernel(const TlpmParams& params);

/// Re-truncate to half-width min(L, previous L). Taps whose offset from the
/// kernel center exceeds L (per set, using that set's mu) are zeroed before
/// mixing. Throws std::invalid_argument when a set loses all taps.
TlpmKernel truncate_weights(const TlpmKernel& kernel, double half_width);

/// Temporal convolution with the kernel rows (stride 1, length preserved).
/// When in_channels == out_channels, channel c is filtered with row c;
/// otherwise the input channels are mean-reduced before filtering.
Signal tlpm_convolve(const Signal& signal, const TlpmKernel& kernel,
                     Boundary boundary = Boundary::reflect);

/// As tlpm_convolve but with an arbitrary rows matrix in place of the
/// kernel weights (used to push kernel-space derivatives through the
/// convolution, which is linear in the kernel).
Signal tlpm_convolve_rows(const Signal& signal, const Matrix& rows,
                          Boundary boundary = Boundary::reflect);

/// d kernel.weights / d cutoff_logits[p], an out_channels x length matrix.
Matrix tlpm_kernel_grad_cutoff_logit(const TlpmParams& params, std::size_t p);

/// d kernel.weights / d attention_logits[c][q]; only row c is nonzero.
Matrix tlpm_kernel_grad_attention_logit(const TlpmParams& params, std::size_t c,
                                        std::size_t q);

}  // namespace taa
