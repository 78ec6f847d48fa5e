#include "tachyon/kinematics.hpp"

#include <cmath>

namespace tachyon {

CoordinateSpeed compose_plus(TachyonBeta beta_t, SubluminalBeta beta) noexcept {
    const double bt = beta_t.value();
    const double b = beta.value();
    const double den = 1.0 + b * bt;
    if (std::fabs(den) < kPoleEpsilon) return CoordinateSpeed::infinite();
    return CoordinateSpeed::finite((bt + b) / den);
}

CoordinateSpeed compose_minus(TachyonBeta beta_t, SubluminalBeta beta) noexcept {
    const double bt = beta_t.value();
    const double b = beta.value();
    const double den = 1.0 - b * bt;
    if (std::fabs(den) < kPoleEpsilon) return CoordinateSpeed::infinite();
    return CoordinateSpeed::finite((bt - b) / den);
}

double tachyon_arrival_time(double depart_t, double from_x, double to_x, TachyonBeta beta_t,
                            SubluminalBeta beta) {
    if (from_x == to_x)
        throw std::invalid_argument("tachyon_arrival_time: departure and target coincide");

    const double bt = beta_t.value();
    const double b = beta.value();
    const double gamma = beta.gamma();
    // Propagation direction is the same sign in R and R': composing +-beta_t
    // with the frame velocity is exactly Eq.-(1)'s two branches.
    const double s = (to_x > from_x) ? 1.0 : -1.0;

    // Departure event in aether coordinates.
    const double tp_dep = gamma * (depart_t - b * from_x);
    const double xp_dep = gamma * (from_x - b * depart_t);

    // The target point (fixed at to_x in the lab) moves at -b in the aether:
    // x'(t') = to_x/gamma - b t'. Intersect with the tachyon worldline
    // x'(t') = xp_dep + s beta_t (t' - tp_dep). The denominator s*bt + b
    // never vanishes, so the 1 + b*bt = 0 lab pole needs no branch.
    const double tp_arr = (to_x / gamma - xp_dep + s * bt * tp_dep) / (s * bt + b);
    const double xp_arr = to_x / gamma - b * tp_arr;

    return gamma * (tp_arr + b * xp_arr);
}

double transport_sync_setting(double t_bar, double delta_tau, double dist) {
    if (!(delta_tau > 0.0))
        throw std::invalid_argument("transport_sync_setting: delta_tau must be positive");
    if (!(dist >= 0.0))
        throw std::invalid_argument("transport_sync_setting: distance must be non-negative");
    const double r = dist / delta_tau;
    return t_bar + delta_tau * std::sqrt(1.0 + r * r);
}

}  // namespace tachyon
