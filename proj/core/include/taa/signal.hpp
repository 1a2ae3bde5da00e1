#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace taa {

/// Multi-channel discrete temporal feature sequence.
///
/// Storage is channel-major: channel c occupies data[c*timesteps ... c*timesteps+T).
/// Values are unitless feature magnitudes sampled at `sample_rate` samples per
/// unit time (1.0 unless the caller says otherwise).
struct Signal {
  std::vector<double> data;
  std::size_t timesteps = 0;
  std::size_t channels = 0;
  double sample_rate = 1.0;

  Signal() = default;
  Signal(std::size_t t, std::size_t c, double fill = 0.0)
      : data(t * c, fill), timesteps(t), channels(c) {}

  double& at(std::size_t t, std::size_t c) { return data[c * timesteps + t]; }
  double at(std::size_t t, std::size_t c) const { return data[c * timesteps + t]; }

  std::span<double> channel(std::size_t c) {
    return {data.data() + c * timesteps, timesteps};
  }
  std::span<const double> channel(std::size_t c) const {
    return {data.data() + c * timesteps, timesteps};
  }

  /// Throws std::invalid_argument if T < 1, C < 1, the buffer size is
  /// inconsistent, or any value is NaN/Inf.
  void validate() const;
};

}  // namespace taa
