#include "taa/signal.hpp"

#include <cmath>
#include <stdexcept>

namespace taa {

void Signal::validate() const {
  if (timesteps < 1) throw std::invalid_argument("Signal: timesteps must be >= 1");
  if (channels < 1) throw std::invalid_argument("Signal: channels must be >= 1");
  if (data.size() != timesteps * channels) {
    throw std::invalid_argument("Signal: buffer size does not match T*C");
  }
  for (double v : data) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("Signal: values must be finite");
    }
  }
  if (!(sample_rate > 0.0) || !std::isfinite(sample_rate)) {
    throw std::invalid_argument("Signal: sample_rate must be positive and finite");
  }
}

}  // namespace taa
