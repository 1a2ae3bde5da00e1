#include "taa/convolve.hpp"

#include <cstdint>
#include <stdexcept>

namespace taa {

namespace {

// Fold an out-of-range index back into [0, t) by mirroring about the edge
// samples (x[-1] -> x[1], x[t] -> x[t-2]), repeatedly for far overshoots.
std::size_t reflect_index(std::int64_t i, std::int64_t t) {
  if (t == 1) return 0;
  while (i < 0 || i >= t) {
    if (i < 0) i = -i;
    if (i >= t) i = 2 * t - 2 - i;
  }
  return static_cast<std::size_t>(i);
}

std::size_t wrap_index(std::int64_t i, std::int64_t t) {
  std::int64_t m = i % t;
  if (m < 0) m += t;
  return static_cast<std::size_t>(m);
}

}  // namespace

std::vector<double> convolve_same(std::span<const double> x,
                                  std::span<const double> kernel,
                                  std::size_t center, Boundary boundary) {
  if (x.empty()) throw std::invalid_argument("convolve_same: empty signal");
  if (kernel.empty()) throw std::invalid_argument("convolve_same: empty kernel");
  if (center >= kernel.size()) {
    throw std::invalid_argument("convolve_same: center outside kernel");
  }

  const std::int64_t t = static_cast<std::int64_t>(x.size());
  const std::int64_t klen = static_cast<std::int64_t>(kernel.size());
  const std::int64_t c = static_cast<std::int64_t>(center);

  std::vector<double> out(x.size(), 0.0);
  for (std::int64_t n = 0; n < t; ++n) {
    double acc = 0.0;
    for (std::int64_t m = 0; m < klen; ++m) {
      const std::int64_t src = n - (m - c);
      double v;
      if (src >= 0 && src < t) {
        v = x[static_cast<std::size_t>(src)];
      } else {
        switch (boundary) {
          case Boundary::reflect: v = x[reflect_index(src, t)]; break;
          case Boundary::circular: v = x[wrap_index(src, t)]; break;
          case Boundary::zero: default: v = 0.0; break;
        }
      }
      acc += kernel[static_cast<std::size_t>(m)] * v;
    }
    out[static_cast<std::size_t>(n)] = acc;
  }
  return out;
}

}  // namespace taa
