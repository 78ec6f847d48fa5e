#pragma once

#include <optional>

#include "tachyon/types.hpp"

// Photon- and tachyon-like 4-momenta, Lorentz boosts, and the sign of the
// time component. Propagation direction is carried by the spatial momentum;
// velocity (p_vec/p0) can be anti-parallel to it when p0 < 0, which is the
// backward-in-time reading of standard-synchronized clocks, not a reversed
// propagation. Units: c = 1, h = 1.

namespace tachyon {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) noexcept {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Vec3 operator*(double s, const Vec3& v) noexcept { return {s * v.x, s * v.y, s * v.z}; }
inline double dot(const Vec3& a, const Vec3& b) noexcept {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}
double norm(const Vec3& v) noexcept;

struct FourMomentum {
    double p0 = 0.0;  ///< energy-like component
    Vec3 p;           ///< spatial momentum
};

/// Boost-invariant p0^2 - |p|^2.
double norm_squared(const FourMomentum& m) noexcept;

/// Velocity of the frame the momentum components are given in, relative to
/// the frame we boost them into; |vec| < 1 validated.
class BoostVector {
public:
    explicit BoostVector(const Vec3& v) : v_(v) {
        if (!(dot(v, v) < 1.0)) detail::fail_invariant("boost vector requires |beta_vec| < 1");
    }

    const Vec3& vec() const noexcept { return v_; }

private:
    Vec3 v_;
};

/// (omega, omega * direction): null by construction.
/// Throws std::invalid_argument unless omega > 0 and |direction| = 1
/// within 1e-12.
FourMomentum photon_momentum(double omega, const Vec3& direction);

/// hbar_tach * k_mag * (1/beta_t, direction): spacelike, norm^2 =
/// (hbar_tach k)^2 (1/beta_t^2 - 1) < 0. hbar_tach is the undetermined
/// tachyon action constant; every sign/direction result is independent of
/// it (it only scales the components).
FourMomentum tachyon_momentum(double k_mag, const Vec3& direction, TachyonBeta beta_t,
                              double hbar_tach = 1.0);

/// Standard Lorentz boost: p0 -> gamma (p0' + b . p'), spatial part along b
/// rescaled accordingly. b = 0 is the identity.
FourMomentum boost(const FourMomentum& m, const BoostVector& b) noexcept;

/// p_vec / p0 in units of c, or std::nullopt (infinite-velocity marker)
/// when |p0| <= 1e-14. For tachyons with p0 < 0 the result points opposite
/// to the propagation (momentum) direction.
std::optional<Vec3> velocity_from_momentum(const FourMomentum& m) noexcept;

/// Sign of the boosted tachyon time component, i.e. of
/// 1 + beta_t (b . direction): -1, 0 or +1. Photons and massive particles
/// keep p0 > 0 under every |b| < 1; tachyons do not.
int p0_sign(const Vec3& direction, TachyonBeta beta_t, const BoostVector& b);

}  // namespace tachyon
