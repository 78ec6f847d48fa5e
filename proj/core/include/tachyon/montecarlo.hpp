#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "tachyon/rng.hpp"
#include "tachyon/sidereal.hpp"
#include "tachyon/timeline.hpp"
#include "tachyon/types.hpp"
#include "tachyon/window.hpp"

// Measurement statistics over many entangled pairs with aligned analyzers:
// perfect anticorrelation outside the window, all four outcomes equally
// likely inside it.

namespace tachyon {

/// Fixed window from physical parameters.
struct WindowParams {
    ParticleBeta beta1;
    TachyonBeta beta_t;
    SubluminalBeta beta;
};

using WindowSource = std::variant<WindowParams, UncorrelationWindow>;

/// Every pair created at the same Delta.
struct FixedDelta {
    double delta;
};

/// Per-pair Delta drawn uniformly from [lo, hi] (one draw per trial).
struct UniformDelta {
    double lo;
    double hi;
};

/// Engineered occupancy: trial i sits at the window center when
/// floor((i+1) f) > floor(i f) (Bresenham schedule, giving ~f n inside
/// trials), otherwise halfway between -1 and Delta_m.
struct OccupancySchedule {
    double fraction;
};

/// Fixed source at delta_obs with the window drifting sidereally: trial i
/// happens at t_i = (i + 1/2) P / n and is classified against the exact
/// window at the effective parameters of theta(t_i).
struct SiderealDrive {
    SiderealConfig config;
    double delta_obs;
};

using DeltaSource = std::variant<FixedDelta, UniformDelta, OccupancySchedule, SiderealDrive>;

struct ExperimentConfig {
    std::uint64_t n_pairs;
    WindowSource window_source;
    DeltaSource delta_source;
    std::uint64_t rng_seed = 0;
};

struct TrialRecord {
    double delta;
    RegimeLabel regime;
    int left;   ///< +1 or -1
    int right;  ///< +1 or -1
};

struct CorrelationStats {
    std::uint64_t n = 0;
    double coincidence_rate = 0.0;  ///< fraction of opposite-sign outcomes
    double correlation = 0.0;       ///< mean of left*right
    double occupancy = 0.0;         ///< fraction of Uncorrelated trials
    double stderr_correlation = 0.0;
    double stderr_occupancy = 0.0;
    std::uint64_t seed = 0;
    std::string rng_algorithm = kRngAlgorithm;
};

/// Run the experiment. Bit-identical for a given (config, seed) regardless
/// of `threads` (per-trial RNG streams, integer count aggregation). When
/// `trial_log` is non-null it is resized to n_pairs and filled per index.
///
/// Throws std::invalid_argument for n_pairs < 1 and std::domain_error when
/// a sidereal drive leaves the beta_t* > 1 validity regime.
CorrelationStats simulate(const ExperimentConfig& config, unsigned threads = 1,
                          std::vector<TrialRecord>* trial_log = nullptr);

/// Linear mixing model: (1 - occupancy) * C0 with C0 = -1 (aligned
/// analyzers, singlet anticorrelation). Throws std::invalid_argument
/// outside [0, 1].
double expected_correlation(double occupancy);

/// Inverse of expected_correlation: 1 - |observed|. Throws
/// std::invalid_argument outside [-1, 0].
double infer_occupancy(double observed_correlation);

/// CSV trial log, header `trial,delta,regime,left,right`.
void write_trial_log_csv(const std::vector<TrialRecord>& log, std::ostream& out);

/// One-line JSON object with keys n, correlation, occupancy,
/// stderr_correlation, seed, rng_algorithm (12 significant digits).
std::string stats_json(const CorrelationStats& stats);

}  // namespace tachyon
