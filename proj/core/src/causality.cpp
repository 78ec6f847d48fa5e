#include "tachyon/causality.hpp"

#include <cmath>
#include <limits>

#include "tachyon/kinematics.hpp"

namespace tachyon {

namespace {

// Two-leg elapsed time of the relativity-principle construction, summing
// d/(beta_g c) and ((1 - beta_g beta)/(beta_g - beta)) d/c. The numerator
// 2 beta_g - beta (1 + beta_g^2) reproduces the sign threshold
// 2 beta_g / (1 + beta_g^2) exactly.
RoundTripResult rp_elapsed(double beta_g, double beta) {
    if (beta == beta_g)
        throw std::domain_error("round trip does not close for beta == beta_g");
    const double elapsed =
        (2.0 * beta_g - beta * (1.0 + beta_g * beta_g)) / (beta_g * (beta_g - beta));
    const double threshold = 2.0 * beta_g / (1.0 + beta_g * beta_g);
    return {elapsed, elapsed < 0.0, threshold};
}

}  // namespace

RoundTripResult rp_round_trip(double beta_g, SubluminalBeta beta) {
    if (!(beta_g > 1.0))
        detail::fail_invariant("rp_round_trip requires a tachyonic going speed beta_g > 1");
    return rp_elapsed(beta_g, beta.value());
}

RoundTripResult rp_subluminal_round_trip(double beta_g, SubluminalBeta beta) {
    if (!(beta_g > 0.0 && beta_g < 1.0))
        detail::fail_invariant("rp_subluminal_round_trip requires 0 < beta_g < 1");
    return rp_elapsed(beta_g, beta.value());
}

RoundTripResult aether_round_trip(TachyonBeta beta_t, SubluminalBeta beta) {
    // Legs evaluated through the pole-safe aether-frame transform; the
    // infinite-speed leg contributes exactly 0.
    const double t1 = tachyon_arrival_time(0.0, 0.0, 1.0, beta_t, beta);
    const double t2 = tachyon_arrival_time(t1, 1.0, 0.0, beta_t, beta);

    const double bt = beta_t.value();
    const double b = beta.value();
    const double closed = 2.0 * bt * (1.0 - b * b) / (bt * bt - b * b);
    if (std::fabs(t2 - closed) > 1e-12 * std::max(1.0, std::fabs(closed)))
        throw std::logic_error("aether_round_trip: leg sum disagrees with the closed form");

    return {t2, t2 < 0.0, std::numeric_limits<double>::quiet_NaN()};
}

}  // namespace tachyon
