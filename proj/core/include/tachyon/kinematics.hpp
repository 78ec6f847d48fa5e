#pragma once

#include "tachyon/types.hpp"

// One-dimensional tachyon speed composition between the preferred frame R'
// and the lab frame R, plus clock-synchronization utilities. All operations
// are pure functions; safe to call concurrently.

namespace tachyon {

/// Absolute tolerance below which |1 -+ beta*beta_t| counts as the pole.
inline constexpr double kPoleEpsilon = 1e-12;

/// Coordinate speed toward +x of a tachyon that is isotropic at beta_t in
/// the preferred frame, when the preferred frame moves at beta along +x:
/// (beta_t + beta) / (1 + beta*beta_t). Returns the infinite marker at the
/// pole.
CoordinateSpeed compose_plus(TachyonBeta beta_t, SubluminalBeta beta) noexcept;

/// Coordinate speed toward -x: (beta_t - beta) / (1 - beta*beta_t).
CoordinateSpeed compose_minus(TachyonBeta beta_t, SubluminalBeta beta) noexcept;

/// Clock reading at `to_x` when a tachyon departing (`depart_t`, `from_x`)
/// arrives there. Computed by transforming the departure event into the
/// preferred frame, propagating at beta_t, and transforming the arrival
/// event back, so the 1 + beta*beta_t = 0 pole needs no special case (it
/// simply yields depart_t). The result may be smaller than depart_t: clock
/// readings, not causal order.
///
/// Throws std::invalid_argument when from_x == to_x.
double tachyon_arrival_time(double depart_t, double from_x, double to_x,
                            TachyonBeta beta_t, SubluminalBeta beta);

/// Standard-synchronization setting for a transported clock: a clock leaves
/// A at instant t_bar (A's clock), measures proper time delta_tau en route,
/// and the clock at B, a distance `dist` away, is set to
/// t_bar + delta_tau * sqrt(1 + (dist/delta_tau)^2)   (c = 1).
///
/// Throws std::invalid_argument when delta_tau <= 0 or dist < 0.
double transport_sync_setting(double t_bar, double delta_tau, double dist);

}  // namespace tachyon
