#include "tachyon/momentum.hpp"

#include <cmath>

namespace tachyon {

namespace {

void require_unit(const Vec3& direction) {
    if (std::fabs(norm(direction) - 1.0) > 1e-12)
        detail::fail_invariant("direction must be a unit vector (|n| = 1 within 1e-12)");
}

}  // namespace

double norm(const Vec3& v) noexcept { return std::sqrt(dot(v, v)); }

double norm_squared(const FourMomentum& m) noexcept { return m.p0 * m.p0 - dot(m.p, m.p); }

FourMomentum photon_momentum(double omega, const Vec3& direction) {
    if (!(omega > 0.0)) detail::fail_invariant("photon_momentum requires omega > 0");
    require_unit(direction);
    return {omega, omega * direction};
}

FourMomentum tachyon_momentum(double k_mag, const Vec3& direction, TachyonBeta beta_t,
                              double hbar_tach) {
    if (!(k_mag > 0.0)) detail::fail_invariant("tachyon_momentum requires k_mag > 0");
    if (!(hbar_tach > 0.0)) detail::fail_invariant("tachyon_momentum requires hbar_tach > 0");
    require_unit(direction);
    const double hk = hbar_tach * k_mag;
    return {hk / beta_t.value(), hk * direction};
}

FourMomentum boost(const FourMomentum& m, const BoostVector& b) noexcept {
    const Vec3& v = b.vec();
    const double v2 = dot(v, v);
    if (v2 == 0.0) return m;
    const double gamma = 1.0 / std::sqrt(1.0 - v2);
    const double vp = dot(v, m.p);
    const double along = (gamma - 1.0) * vp / v2 + gamma * m.p0;
    return {gamma * (m.p0 + vp), m.p + along * v};
}

std::optional<Vec3> velocity_from_momentum(const FourMomentum& m) noexcept {
    if (std::fabs(m.p0) <= 1e-14) return std::nullopt;
    return (1.0 / m.p0) * m.p;
}

int p0_sign(const Vec3& direction, TachyonBeta beta_t, const BoostVector& b) {
    require_unit(direction);
    const double s = 1.0 + beta_t.value() * dot(b.vec(), direction);
    if (s > 0.0) return 1;
    if (s < 0.0) return -1;
    return 0;
}

}  // namespace tachyon
