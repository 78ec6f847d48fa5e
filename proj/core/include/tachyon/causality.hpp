#pragma once

#include "tachyon/types.hpp"

// Round-trip signal exchanges on a segment of length d: the causal paradox
// of the relativity-principle tachyon model versus the positivity of the
// aether model. Elapsed times are read on the single clock at the starting
// point, in units of d/c.
//
// Naming: the going-signal speed is beta_g here (the source material's
// beta* -- renamed to avoid the collision with the effective parameter
// beta_star of the 3D reduction).

namespace tachyon {

struct RoundTripResult {
    double elapsed;         ///< t_fin - t_in in units of d/c (signed)
    bool paradoxical;       ///< elapsed < 0
    double threshold_beta;  ///< 2 beta_g / (1 + beta_g^2); NaN for the aether model
};

/// Relativity-principle model, tachyonic going signal (beta_g > 1): the
/// return signal propagates at beta_g toward -x in a frame R2 moving at
/// beta, giving
///   elapsed = (2 beta_g - beta (1 + beta_g^2)) / (beta_g (beta_g - beta)).
/// Negative exactly when beta > 2 beta_g / (1 + beta_g^2) (always reachable
/// with |beta| < 1): the round trip ends before it starts.
///
/// Throws std::invalid_argument unless beta_g > 1.
RoundTripResult rp_round_trip(double beta_g, SubluminalBeta beta);

/// Same two-leg construction with a subluminal going signal, 0 < beta_g < 1.
/// For beta < beta_g the return leg actually propagates back toward the
/// start and the elapsed time is always positive. For beta >= beta_g the
/// R2-emitted signal moves away from the start and never returns; the
/// formula value returned is the (sign-ambiguous) backward extension of its
/// worldline, and beta == beta_g itself throws std::domain_error.
///
/// Throws std::invalid_argument unless 0 < beta_g < 1.
RoundTripResult rp_subluminal_round_trip(double beta_g, SubluminalBeta beta);

/// Preferred-frame model: back-and-forth tachyon on the segment, elapsed =
/// 1/V+ + 1/V- evaluated through the pole-safe aether-frame transform and
/// cross-checked against the closed form 2 beta_t (1 - beta^2) /
/// (beta_t^2 - beta^2) to 1e-12. Always positive; never paradoxical.
RoundTripResult aether_round_trip(TachyonBeta beta_t, SubluminalBeta beta);

}  // namespace tachyon
