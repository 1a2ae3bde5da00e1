#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace taa {

/// Out-of-range sample policy for same-length convolution.
/// Reflect mirrors about the edge sample (x[-1] -> x[1]); zero pads with 0;
/// circular wraps modulo the length.
enum class Boundary { reflect, zero, circular };

/// Same-length convolution: out[n] = sum_m kernel[m] * x[n - (m - center)].
/// `center` is the kernel tap aligned with the output position and must lie
/// within the kernel. Throws std::invalid_argument on empty inputs or a
/// center out of bounds.
std::vector<double> convolve_same(std::span<const double> x,
                                  std::span<const double> kernel,
                                  std::size_t center,
                                  Boundary boundary = Boundary::reflect);

}  // namespace taa
