#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "taa/signal.hpp"

namespace taa {

enum class BandKind { low, high };

/// Recipe for a synthetic classification task whose instances carry
/// class-discriminative energy in a declared band plus shared interference
/// tones in noise_band and a small white floor. Everything is derived
/// deterministically from rng_seed.
struct SyntheticTaskSpec {
  std::size_t n_classes = 2;
  std::size_t timesteps = 128;
  std::vector<BandKind> discriminative_band;  // one entry per class
  std::pair<double, double> noise_band{0.2, 0.46};
  double noise_amplitude = 60.0;
  std::size_t factor = 4;
  std::size_t samples_per_class = 16;
  std::uint64_t rng_seed = 7;

  /// Throws std::invalid_argument when bands leave (0, 0.5), overlap a
  /// class's discriminative band, or counts are degenerate. The message
  /// names the offending field.
  void validate() const;

  /// Concrete frequency interval carrying class c's discriminative energy.
  std::pair<double, double> discriminative_interval(std::size_t class_id) const;
};

struct LabeledSignal {
  Signal signal;
  int class_id = 0;
};

using Dataset = std::vector<LabeledSignal>;

/// Deterministic synthetic dataset: samples_per_class instances per class,
/// ordered by class then sample index.
Dataset gen_synthetic(const SyntheticTaskSpec& spec);

/// Surrogate task loss: low-pass pool every instance over its full extent at
/// its cutoff (cutoffs has length 1 for a global cutoff or dataset.size() for
/// per-instance), classify by softmax over negative distances to class
/// centroids (temperature 1), return mean cross-entropy. `factor` is the
/// task's nominal downsampling factor, carried for reporting; the pooled
/// surrogate itself does not resample.
double task_loss(const Dataset& dataset, std::span<const double> cutoffs,
                 std::size_t factor);

/// Analytic d task_loss / d cutoff, one entry per learned scalar. Includes
/// the dependence of the class centroids on the pooled features.
std::vector<double> grad_cutoff(const Dataset& dataset,
                                std::span<const double> cutoffs,
                                std::size_t factor);

/// Hard nearest-centroid accuracy of the pooled features at the given cutoffs.
double hard_accuracy(const Dataset& dataset, std::span<const double> cutoffs,
                     std::size_t factor);

enum class LearnMode { global, per_instance };
enum class GradSource { analytic, finite_difference };

struct LearnerConfig {
  double learning_rate = 0.5;
  std::size_t epochs = 400;
  double init_logit = 0.0;  // cutoff_from_logit(0) = 0.25
  LearnMode mode = LearnMode::global;
  GradSource grad_source = GradSource::analytic;

  void validate() const;
};

struct TrainTrace {
  std::vector<double> loss;           // one entry per epoch actually run
  std::vector<double> final_cutoffs;  // length 1 or n_instances
  bool converged = false;
};

/// Raised when the loss turns non-finite mid-fit; carries the trace so far.
struct DivergenceError : std::runtime_error {
  DivergenceError(std::string msg, TrainTrace t)
      : std::runtime_error(std::move(msg)), trace(std::move(t)) {}
  TrainTrace trace;
};

/// Plain gradient descent on cutoff logits. Records the loss at the start of
/// every epoch; converged means the last 5 recorded losses span < 1e-6.
/// Per-instance steps use the per-sample loss gradient (mean-loss gradient
/// scaled by the dataset size) so both modes see comparably scaled steps.
TrainTrace fit(const Dataset& dataset, const LearnerConfig& config,
               std::size_t factor);

struct SweepPoint {
  double cutoff = 0.0;
  double loss = 0.0;
  double accuracy = 0.0;
};

/// Evaluate loss and hard accuracy at each fixed global cutoff in the grid.
std::vector<SweepPoint> cutoff_sweep(const Dataset& dataset,
                                     std::span<const double> grid,
                                     std::size_t factor);

/// Bundled tasks used throughout the tests and the command line examples.
/// Low-band: discriminative energy below 0.5/factor, interference above it.
/// High-band: discriminative energy above 0.5/factor, interference higher
/// still, so retaining high frequencies is rewarded.
SyntheticTaskSpec make_low_band_task(std::uint64_t seed = 7);
SyntheticTaskSpec make_high_band_task(std::uint64_t seed = 7);
/// Class 0 low-band, class 1 high-band; drives per-instance cutoffs apart.
SyntheticTaskSpec make_mixed_task(std::uint64_t seed = 7);

}  // namespace taa
