#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "tachyon/types.hpp"

// Daily variation of the flight-axis/aether angle theta from Earth
// rotation, drift of the window center, occupancy of an observed source
// position inside the drifting window, and the inference of (beta, beta_t)
// from the Faraci-type fifth measurement.

namespace tachyon {

/// One sidereal day in seconds.
inline constexpr double kSiderealDaySeconds = 86164.0905;

/// Lab + aether geometry for the daily drift. The flight axis is the local
/// South-North horizontal by default, which makes angle `latitude` with
/// the Earth axis; a different flight axis is configured through
/// flight_axis_angle (its angle to the Earth axis).
class SiderealConfig {
public:
    SiderealConfig(double latitude, double aether_tilt, SubluminalBeta beta, TachyonBeta beta_t,
                   double phase = 0.0, double period = kSiderealDaySeconds,
                   std::optional<double> flight_axis_angle = std::nullopt)
        : latitude_(latitude),
          aether_tilt_(aether_tilt),
          beta_(beta),
          beta_t_(beta_t),
          phase_(phase),
          period_(period),
          flight_axis_angle_(flight_axis_angle) {
        if (!(latitude >= 0.0 && latitude <= 1.5707963267948966))
            detail::fail_invariant("latitude must lie in [0, pi/2]");
        if (!(aether_tilt >= 0.0 && aether_tilt <= 1.5707963267948966))
            detail::fail_invariant("aether tilt must lie in [0, pi/2]");
        if (!(period > 0.0)) detail::fail_invariant("period must be positive");
        if (flight_axis_angle && !(*flight_axis_angle >= 0.0 && *flight_axis_angle <= 3.141592653589793))
            detail::fail_invariant("flight axis angle must lie in [0, pi]");
    }

    double latitude() const noexcept { return latitude_; }
    double aether_tilt() const noexcept { return aether_tilt_; }
    SubluminalBeta beta() const noexcept { return beta_; }
    TachyonBeta beta_t() const noexcept { return beta_t_; }
    double phase() const noexcept { return phase_; }
    double period() const noexcept { return period_; }

    /// Angle between the flight axis and the Earth axis.
    double axis_angle() const noexcept { return flight_axis_angle_.value_or(latitude_); }

private:
    double latitude_;
    double aether_tilt_;
    SubluminalBeta beta_;
    TachyonBeta beta_t_;
    double phase_;
    double period_;
    std::optional<double> flight_axis_angle_;
};

struct DriftSample {
    double t;             ///< seconds
    double theta;         ///< radians
    double delta_bar;     ///< window center -beta*cos(theta)
    double window_width;  ///< instantaneous width 2/(beta_t* gamma*^2)
};

/// Samples over exactly one period plus the peak-to-peak summary.
struct DriftSeries {
    std::vector<DriftSample> samples;
    double delta_bar_peak_to_peak;  ///< max - min of delta_bar over the samples
};

/// Spherical-triangle angle between the (rotating) flight axis and the
/// fixed aether direction:
/// cos(theta(t)) = cos(a) cos(delta) + sin(a) sin(delta) cos(2 pi t/P + phi0)
/// with a the flight-axis/Earth-axis angle. Range [|a - delta|, a + delta].
double theta_of_time(double t, const SiderealConfig& config);

/// n_samples evenly spaced samples (endpoints included) over one period.
/// Throws std::invalid_argument for n_samples < 2.
DriftSeries drift_series(const SiderealConfig& config, std::size_t n_samples);

/// Fraction of one period during which delta_obs lies inside the drifting
/// window [delta_bar(t) - w(t)/2, delta_bar(t) + w(t)/2]. Dense grid scan
/// with bisection refinement of every in/out crossing; deterministic for
/// any thread count (fixed block partition, block-ordered reduction).
double occupancy_fraction(const SiderealConfig& config, double delta_obs,
                          std::size_t n_samples = 1000000, unsigned threads = 1);

/// Interval estimate of the aether speed from an observed uncorrelating
/// source position: center = delta_obs/cos(theta_C), halfwidth =
/// delta * tan(theta_C).
struct FaraciBetaEstimate {
    double center;
    double halfwidth;
};

/// Throws std::domain_error when the center reaches 1 (the inferred aether
/// speed would be superluminal).
FaraciBetaEstimate faraci_beta(double delta_obs, double theta_c, double delta);

/// Tachyon-speed estimate from the drift/width ratio d(delta_bar) ~= 3 d(delta):
/// beta_t ~= 3 gamma / (delta * beta * sin(theta_C) * gamma_star^3).
/// Throws std::domain_error for delta == 0 (beta_t unconstrained).
double faraci_beta_t(double delta, SubluminalBeta beta, double theta_c);

/// CSV export, header `t_seconds,theta_rad,delta_bar,d_delta_window`,
/// 12 significant digits.
void export_drift_csv(const DriftSeries& series, std::ostream& out);

}  // namespace tachyon
