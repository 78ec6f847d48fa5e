#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "tachyon/sidereal.hpp"

using namespace tachyon;

namespace {

constexpr double kDeg = oracle::kPi / 180.0;
constexpr double kThetaC = 37.5 * kDeg;

SiderealConfig faraci_config(double tilt = 0.01, double phase = 0.0) {
    return {kThetaC, tilt, SubluminalBeta(0.91), TachyonBeta(432.71995739964291), phase};
}

}  // namespace

TEST_CASE("theta is constant when the aether lies on the Earth axis") {
    const SiderealConfig cfg(kThetaC, 0.0, SubluminalBeta(0.5), TachyonBeta(100));
    for (double t : {0.0, 12345.0, 43082.0, 86000.0})
        CHECK(theta_of_time(t, cfg) == doctest::Approx(kThetaC).epsilon(1e-15));
}

TEST_CASE("theta extrema are theta_C -+ delta") {
    const SiderealConfig cfg = faraci_config();
    CHECK(theta_of_time(0.0, cfg) == doctest::Approx(kThetaC - 0.01).epsilon(1e-12));
    CHECK(theta_of_time(0.5 * cfg.period(), cfg) ==
          doctest::Approx(kThetaC + 0.01).epsilon(1e-12));
}

TEST_CASE("frozen t = 0 value from the spherical formula") {
    const SiderealConfig cfg = faraci_config();
    // cos(theta) = cos(37.5deg) cos(0.01) + sin(37.5deg) sin(0.01)
    CHECK(std::cos(theta_of_time(0.0, cfg)) ==
          doctest::Approx(0.79940118578513975).epsilon(1e-14));
    CHECK(theta_of_time(0.0, cfg) == doctest::Approx(0.64449846949787359).epsilon(1e-13));
}

TEST_CASE("spherical formula matches the 3d dot-product oracle") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> axis_dist(0.0, 1.5);
    std::uniform_real_distribution<double> tilt_dist(0.0, 1.5);
    std::uniform_real_distribution<double> t_dist(0.0, kSiderealDaySeconds);
    for (int i = 0; i < 3000; ++i) {
        const double axis = axis_dist(rng);
        const double tilt = tilt_dist(rng);
        const double t = t_dist(rng);
        const SiderealConfig cfg(axis, tilt, SubluminalBeta(0.5), TachyonBeta(100));
        const double azimuth = 2.0 * oracle::kPi * t / cfg.period();
        CHECK(theta_of_time(t, cfg) ==
              doctest::Approx(oracle::axis_angle_3d(axis, tilt, azimuth)).epsilon(1e-12));
    }
}

TEST_CASE("theta range over one period") {
    for (auto [axis, tilt] : {std::pair{kThetaC, 0.01}, {0.3, 0.5}, {1.2, 0.2}}) {
        const SiderealConfig cfg(axis, tilt, SubluminalBeta(0.7), TachyonBeta(50));
        double lo = 10.0, hi = -10.0;
        const int n = 200001;
        for (int i = 0; i < n; ++i) {
            const double theta = theta_of_time(cfg.period() * i / (n - 1), cfg);
            lo = std::min(lo, theta);
            hi = std::max(hi, theta);
        }
        CHECK(std::fabs(lo - std::fabs(axis - tilt)) < 1e-9);
        CHECK(std::fabs(hi - (axis + tilt)) < 1e-9);
    }
}

TEST_CASE("drift peak-to-peak: frozen example and the small-delta form") {
    const auto series = drift_series(faraci_config(), 200001);
    // 2 * 0.91 * sin(37.5deg) * sin(0.01)
    CHECK(series.delta_bar_peak_to_peak ==
          doctest::Approx(0.011079273351248536).epsilon(1e-9));
    // small-delta form 2 * delta * beta * sin(theta_C)
    CHECK(std::fabs(series.delta_bar_peak_to_peak - 0.011079458007958716) < 1e-5);
}

TEST_CASE("drift vanishes for delta = 0 and for beta = 0") {
    const SiderealConfig no_tilt(kThetaC, 0.0, SubluminalBeta(0.91), TachyonBeta(100));
    CHECK(drift_series(no_tilt, 5001).delta_bar_peak_to_peak ==
          doctest::Approx(0.0).epsilon(1e-15));

    const SiderealConfig no_wind(kThetaC, 0.01, SubluminalBeta(0.0), TachyonBeta(100));
    const auto series = drift_series(no_wind, 5001);
    CHECK(series.delta_bar_peak_to_peak == 0.0);
    for (const auto& s : series.samples) CHECK(s.delta_bar == 0.0);
}

TEST_CASE("small-delta consistency bound") {
    for (double tilt : {0.005, 0.01, 0.02, 0.05}) {
        const auto series = drift_series(faraci_config(tilt), 200001);
        const double small_form = 2.0 * tilt * 0.91 * std::sin(kThetaC);
        const double rel = std::fabs(series.delta_bar_peak_to_peak - small_form) /
                           series.delta_bar_peak_to_peak;
        CHECK(rel <= tilt * tilt / 2.0 + 1e-9);
    }
}

TEST_CASE("drift series covers one period and exports 12-digit csv") {
    const auto series = drift_series(faraci_config(), 11);
    REQUIRE(series.samples.size() == 11);
    CHECK(series.samples.front().t == 0.0);
    CHECK(series.samples.back().t == doctest::Approx(kSiderealDaySeconds).epsilon(1e-12));

    std::ostringstream out;
    export_drift_csv(series, out);
    const std::string csv = out.str();
    CHECK(csv.find("t_seconds,theta_rad,delta_bar,d_delta_window\n") == 0);
    CHECK(csv.find("0.644498469498") != std::string::npos);  // theta(0), 12 digits
}

TEST_CASE("occupancy trivials") {
    CHECK(occupancy_fraction(faraci_config(), 0.9, 20000) == 0.0);

    const SiderealConfig no_tilt(kThetaC, 0.0, SubluminalBeta(0.91), TachyonBeta(100));
    const double center = -0.91 * std::cos(kThetaC);
    CHECK(occupancy_fraction(no_tilt, center, 20000) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("occupancy regression pinned by the brute-force oracle") {
    // Config engineered so the daily drift is 3x the window width; source
    // at the drift-band center. Frozen from a 4e7-sample midpoint scan.
    const double delta_obs = -0.91 * std::cos(kThetaC) * std::cos(0.01);
    CHECK(delta_obs == doctest::Approx(-0.72191544238885286).epsilon(1e-14));

    const double got = occupancy_fraction(faraci_config(), delta_obs, 1000000);
    CHECK(std::fabs(got - 0.2164043) < 2e-6);

    const double brute = oracle::occupancy_brute(kThetaC, 0.01, 0.91, 432.71995739964291,
                                                 delta_obs, kSiderealDaySeconds, 2000000);
    CHECK(std::fabs(got - brute) < 5e-6);
}

TEST_CASE("occupancy is phase-invariant and thread-deterministic") {
    const double delta_obs = -0.72191544238885286;
    const double base = occupancy_fraction(faraci_config(), delta_obs, 200000);
    for (double phase : {1.3, oracle::kPi, 5.0}) {
        const double shifted =
            occupancy_fraction(faraci_config(0.01, phase), delta_obs, 200000);
        CHECK(std::fabs(shifted - base) < 1e-9);
    }
    const double threaded = occupancy_fraction(faraci_config(), delta_obs, 200000, 4);
    CHECK(threaded == base);
}

TEST_CASE("faraci beta interval") {
    const auto est = faraci_beta(0.72, kThetaC, 1.0);
    CHECK(est.center == doctest::Approx(0.90754013808739042).epsilon(1e-13));
    CHECK(est.halfwidth == doctest::Approx(0.76732698797896037).epsilon(1e-13));
    // Printed-precision checks: center rounds to 0.91; the halfwidth
    // coefficient tan(37.5deg) rounds to 0.77 at two decimals.
    CHECK(std::round(est.center * 100.0) / 100.0 == doctest::Approx(0.91));
    CHECK(std::round(est.halfwidth * 100.0) / 100.0 == doctest::Approx(0.77));

    CHECK(faraci_beta(0.0, kThetaC, 0.3).center == 0.0);
    const auto equatorial = faraci_beta(0.72, 0.0, 0.3);
    CHECK(equatorial.center == doctest::Approx(0.72).epsilon(1e-15));
    CHECK(equatorial.halfwidth == 0.0);

    CHECK_THROWS_AS(faraci_beta(0.9, kThetaC, 0.1), std::domain_error);
}

TEST_CASE("faraci beta_t estimate") {
    // Frozen from the long-double evaluation chain.
    CHECK(faraci_beta_t(0.01, SubluminalBeta(0.91), kThetaC) ==
          doctest::Approx(432.71995739964292).epsilon(1e-12));

    // Exact 1/delta scaling.
    const double p1 = faraci_beta_t(0.01, SubluminalBeta(0.91), kThetaC) * 0.01;
    const double p2 = faraci_beta_t(0.02, SubluminalBeta(0.91), kThetaC) * 0.02;
    CHECK(p1 == doctest::Approx(p2).epsilon(1e-14));

    CHECK_THROWS_AS(faraci_beta_t(0.0, SubluminalBeta(0.91), kThetaC), std::domain_error);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(SiderealConfig(-0.1, 0.01, SubluminalBeta(0.5), TachyonBeta(10)),
                    std::invalid_argument);
    CHECK_THROWS_AS(SiderealConfig(kThetaC, 2.0, SubluminalBeta(0.5), TachyonBeta(10)),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        SiderealConfig(kThetaC, 0.01, SubluminalBeta(0.5), TachyonBeta(10), 0.0, -5.0),
        std::invalid_argument);
    // A general flight axis replaces the latitude in the spherical formula.
    const SiderealConfig tilted(kThetaC, 0.01, SubluminalBeta(0.5), TachyonBeta(10), 0.0,
                                kSiderealDaySeconds, 0.9);
    CHECK(tilted.axis_angle() == 0.9);
    CHECK(std::cos(theta_of_time(0.0, tilted)) ==
          doctest::Approx(std::cos(0.9 - 0.01)).epsilon(1e-13));
}
