#include "tachyon/aberration.hpp"

#include <cmath>

#include "tachyon/kinematics.hpp"

namespace tachyon {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kHalfPi = kPi / 2.0;

void require_theta_prime(double theta_prime) {
    if (!(theta_prime >= 0.0 && theta_prime <= kPi))
        detail::fail_invariant("aberration angle theta' must lie in [0, pi]");
}

}  // namespace

double lab_angle(double theta_prime, TachyonBeta beta_t, SubluminalBeta beta) {
    require_theta_prime(theta_prime);
    const double bt = beta_t.value();
    const double b = beta.value();
    const double y = bt * std::sin(theta_prime);
    const double x = beta.gamma() * (bt * std::cos(theta_prime) + b);
    // sin(theta') >= 0 on [0, pi], so atan2 already lands in [0, pi].
    return std::atan2(y, x);
}

CoordinateSpeed tachyon_speed_3d(double theta_prime, TachyonBeta beta_t, SubluminalBeta beta) {
    require_theta_prime(theta_prime);
    const double bt = beta_t.value();
    const double b = beta.value();
    const double c = std::cos(theta_prime);
    const double s2 = 1.0 - c * c;
    const double den = 1.0 + bt * b * c;
    if (std::fabs(den) < kPoleEpsilon) return CoordinateSpeed::infinite();
    // The radicand has no real roots in c for beta_t > 1, |beta| < 1, so
    // the magnitude never vanishes ("faster than light in every frame").
    const double mag = std::sqrt(bt * bt + b * b + 2.0 * bt * b * c - bt * bt * b * b * s2);
    return CoordinateSpeed::finite(mag / den);
}

double invert_angle_exact(double theta, TachyonBeta beta_t, SubluminalBeta beta) {
    if (!(theta >= 0.0 && theta <= kPi))
        detail::fail_invariant("lab angle theta must lie in [0, pi]");
    if (theta == 0.0) return 0.0;
    if (theta == kPi) return kPi;

    // lab_angle is strictly increasing on [0, pi] (derivative proportional
    // to beta_t + beta cos(theta') > 0), with fixed endpoints 0 and pi.
    double lo = 0.0;
    double hi = kPi;
    double f_lo = -theta;
    double f_hi = kPi - theta;
    if (!(f_lo <= 0.0 && f_hi >= 0.0))
        throw std::domain_error("invert_angle_exact: bracket does not contain a root");

    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = lab_angle(mid, beta_t, beta) - theta;
        if (f_mid < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    (void)f_lo;
    (void)f_hi;
    return 0.5 * (lo + hi);
}

double approx_inverse_cos(double theta, double gamma, bool positive_branch) {
    if (std::fabs(theta - kHalfPi) < 1e-12)
        throw std::domain_error("approx_inverse_cos: not valid at theta = pi/2");
    const double t = std::tan(theta);
    const double c = 1.0 / std::sqrt(1.0 + gamma * gamma * t * t);
    return positive_branch ? c : -c;
}

EffectiveParams effective_params(double theta, SubluminalBeta beta, TachyonBeta beta_t) {
    if (!(theta >= 0.0 && theta <= kPi))
        detail::fail_invariant("flight angle theta must lie in [0, pi]");
    const double beta_star = beta.value() * std::cos(theta);
    const double gamma_star = lorentz_gamma(beta_star);
    // The gamma*/gamma form is smooth through theta = pi/2; the direct
    // 1/(cos theta sqrt(1 + gamma^2 tan^2 theta)) form is its cos > 0
    // rewrite and is cross-checked in the tests.
    const double beta_t_star = beta_t.value() * gamma_star / beta.gamma();
    return {beta_star, gamma_star, beta_t_star};
}

bool in_reduction_regime(double theta, SubluminalBeta beta, TachyonBeta beta_t) noexcept {
    const double margin = kPi / 18.0;  // ~10 degrees
    return beta_t.value() >= 10.0 && beta.gamma() <= 2.0 && theta < kHalfPi - margin;
}

WindowSummary window_3d(double theta, SubluminalBeta beta, TachyonBeta beta_t) {
    const EffectiveParams ep = effective_params(theta, beta, beta_t);
    return {-ep.beta_star, 2.0 / (ep.beta_t_star * ep.gamma_star * ep.gamma_star)};
}

}  // namespace tachyon
