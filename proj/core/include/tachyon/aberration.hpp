#pragma once

#include "tachyon/types.hpp"
#include "tachyon/window.hpp"

// Reduction of the 3D geometry -- particle flight axis at angle theta to
// the aether velocity -- to effective 1D parameters, plus the aberration
// relations between preferred-frame and lab angles.
//
// Angle conventions: theta' is the tachyon propagation angle measured from
// the aether-velocity direction in the preferred frame R', theta the same
// angle in the lab R. Both live in [0, pi].

namespace tachyon {

/// Flight-axis orientation in the lab. The orientation is chosen so that
/// 0 <= theta < pi/2; phi is carried for the geometry but drops out of all
/// window formulas by axial symmetry.
class Orientation {
public:
    Orientation(double theta, double phi = 0.0) : theta_(theta), phi_(phi) {
        if (!(theta >= 0.0 && theta < 1.5707963267948966))
            detail::fail_invariant("orientation requires 0 <= theta < pi/2");
        if (!(phi >= 0.0 && phi < 6.283185307179586))
            detail::fail_invariant("orientation requires 0 <= phi < 2*pi");
    }

    double theta() const noexcept { return theta_; }
    double phi() const noexcept { return phi_; }

private:
    double theta_;
    double phi_;
};

/// Effective 1D parameters: the oblique problem is the 1D one with
/// beta -> beta_star and beta_t -> beta_t_star.
struct EffectiveParams {
    double beta_star;    ///< beta * cos(theta)
    double gamma_star;   ///< 1/sqrt(1 - beta_star^2)
    double beta_t_star;  ///< beta_t * gamma_star / gamma
};

/// Lab propagation angle for a tachyon at angle theta_prime in the aether:
/// theta = atan2(beta_t sin(theta'), gamma (beta_t cos(theta') + beta)),
/// mapped to [0, pi]. Strictly increasing in theta_prime for beta_t > 1.
double lab_angle(double theta_prime, TachyonBeta beta_t, SubluminalBeta beta);

/// Signed lab coordinate speed of that tachyon:
/// sqrt(beta_t^2 + beta^2 + 2 beta_t beta c' - (beta_t beta)^2 (1 - c'^2))
/// / (1 + beta_t beta c'), with c' = cos(theta'). The magnitude never
/// vanishes; the sign comes from the denominator, matching the 1D
/// composition at theta' in {0, pi}. Returns the infinite marker when the
/// denominator is within kPoleEpsilon of zero.
CoordinateSpeed tachyon_speed_3d(double theta_prime, TachyonBeta beta_t, SubluminalBeta beta);

/// Numerically exact inverse of lab_angle on [0, pi] by bisection on the
/// (asserted) monotonic bracket; |lab_angle(result) - theta| <= 1e-10.
///
/// Throws std::domain_error if the bracket does not contain a root.
double invert_angle_exact(double theta, TachyonBeta beta_t, SubluminalBeta beta);

/// Closed-form large-beta_t inversion cos(theta') = +-1/sqrt(1 + gamma^2
/// tan^2(theta)). Not valid near theta = pi/2 (throws std::domain_error
/// within 1e-12 of it); accuracy degrades as gamma grows.
double approx_inverse_cos(double theta, double gamma, bool positive_branch);

/// beta_star / gamma_star / beta_t_star at flight angle theta. Valid as a
/// 1D reduction only for beta_t >> 1 and moderate gamma (use
/// in_reduction_regime to check); the formulas themselves are evaluated
/// exactly for any theta in [0, pi].
EffectiveParams effective_params(double theta, SubluminalBeta beta, TachyonBeta beta_t);

/// True when the effective-parameter reduction is trustworthy:
/// beta_t >= 10, gamma <= 2 and theta at least ~10 degrees from pi/2.
bool in_reduction_regime(double theta, SubluminalBeta beta, TachyonBeta beta_t) noexcept;

/// Large-beta_t window center and width at flight angle theta:
/// center ~= -beta_star, width ~= 2 / (beta_t_star * gamma_star^2).
WindowSummary window_3d(double theta, SubluminalBeta beta, TachyonBeta beta_t);

}  // namespace tachyon
