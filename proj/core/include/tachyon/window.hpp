#pragma once

#include "tachyon/types.hpp"

// The uncorrelation window (Delta_m, Delta_M) of dimensionless source
// positions Delta = x_bar/d for which neither detection's tachyon reaches
// the other particle before its detection, and the inversion of measured
// window edges back to (beta, beta_t).

namespace tachyon {

/// Tolerance for the Delta_M + Delta_m = 0 branch of the beta inversion.
inline constexpr double kZeroSumEpsilon = 1e-14;

/// Open interval (delta_m, delta_M) with delta_M > delta_m and both in
/// (-1, 1). Construction validates the invariants.
class UncorrelationWindow {
public:
    UncorrelationWindow(double delta_m, double delta_M) : delta_m_(delta_m), delta_M_(delta_M) {
        if (!(delta_M > delta_m))
            detail::fail_invariant("window requires delta_M > delta_m");
        if (!(delta_m > -1.0 && delta_m < 1.0) || !(delta_M > -1.0 && delta_M < 1.0))
            detail::fail_invariant("window edges must lie in (-1, 1)");
    }

    double delta_m() const noexcept { return delta_m_; }
    double delta_M() const noexcept { return delta_M_; }

    double center() const noexcept { return 0.5 * (delta_M_ + delta_m_); }
    double width() const noexcept { return delta_M_ - delta_m_; }

private:
    double delta_m_;
    double delta_M_;
};

/// Window center and width, used for the 3D reduction summaries.
struct WindowSummary {
    double center;  ///< (Delta_M + Delta_m) / 2
    double width;   ///< Delta_M - Delta_m, > 0
};

/// Exact window edges:
///   Delta_m = -beta1 (1 + beta_t beta) / (beta_t + beta)
///   Delta_M =  beta1 (1 - beta_t beta) / (beta_t - beta)
UncorrelationWindow compute_window(ParticleBeta beta1, TachyonBeta beta_t, SubluminalBeta beta);

/// Closed-form width 2 beta1 beta_t (1 - beta^2) / (beta_t^2 - beta^2);
/// equals compute_window(...).width() to rounding.
double window_width(ParticleBeta beta1, TachyonBeta beta_t, SubluminalBeta beta) noexcept;

/// Recover beta_t from measured window edges, assuming photons (beta1 = 1).
/// Solves beta_t^2 - 2 K beta_t + 1 = 0 with K = (1 - Delta_M Delta_m) /
/// (Delta_M - Delta_m); the root > 1 is returned, the other (its exact
/// reciprocal) is discarded. Computed in the cancellation-free form: larger
/// root first, companion by the unit product of roots.
///
/// Throws std::domain_error if the discriminant is negative (cannot happen
/// for a window produced by compute_window with beta1 = 1).
TachyonBeta invert_beta_t(const UncorrelationWindow& window);

/// Recover beta, assuming beta1 = 1. Three branches on the sign of
/// S = Delta_M + Delta_m (|S| < kZeroSumEpsilon returns exactly 0); the
/// |beta| < 1 root of (S) beta^2 + 2 (1 + Delta_M Delta_m) beta + S = 0 is
/// returned via the reciprocal of the larger-magnitude root.
///
/// Only specified for beta1 = 1; applying it to a window generated with
/// beta1 < 1 silently yields the beta1 = 1-consistent parameters.
SubluminalBeta invert_beta(const UncorrelationWindow& window);

/// Large-beta_t approximation beta_t ~= 2 (1 - Delta_M Delta_m) /
/// (Delta_M - Delta_m). No acceptability filtering.
///
/// Throws std::domain_error when the window width is below 1e-14.
double approx_beta_t(const UncorrelationWindow& window);

/// Large-beta_t approximation beta ~= -(Delta_M + Delta_m) / 2.
double approx_beta(const UncorrelationWindow& window) noexcept;

}  // namespace tachyon
