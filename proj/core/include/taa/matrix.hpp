#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace taa {

/// Dense row-major matrix of doubles. Just enough surface for attention
/// logits, kernel banks, and heatmaps; not a linear algebra library.
struct Matrix {
  std::vector<double> data;
  std::size_t rows = 0;
  std::size_t cols = 0;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : data(r * c, fill), rows(r), cols(c) {}

  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  std::span<double> row(std::size_t r) { return {data.data() + r * cols, cols}; }
  std::span<const double> row(std::size_t r) const {
    return {data.data() + r * cols, cols};
  }
};

}  // namespace taa
