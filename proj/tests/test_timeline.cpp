#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tachyon/timeline.hpp"
#include "tachyon/window.hpp"

using namespace tachyon;

namespace {

const TachyonBeta kBetaT(8.0);
const SubluminalBeta kBeta(-0.4);

TimelineRun figure4_run(double x_bar) {
    return run_timeline(Geometry1D(x_bar, ParticleBeta(1.0)), kBetaT, kBeta);
}

const Event* find_event(const TimelineRun& run, EventLabel label) {
    for (const Event& e : run.events)
        if (e.label == label) return &e;
    return nullptr;
}

}  // namespace

TEST_CASE("figure-4 three regimes") {
    CHECK(figure4_run(0.2).regime == RegimeLabel::CorrelatedViaLeftTachyon);
    CHECK(figure4_run(0.42).regime == RegimeLabel::Uncorrelated);
    CHECK(figure4_run(0.6).regime == RegimeLabel::CorrelatedViaRightTachyon);
}

TEST_CASE("figure-4a interception frozen from the line-intersection oracle") {
    const auto run = figure4_run(0.2);
    const Event* inter = find_event(run, EventLabel::TachyonInterception);
    REQUIRE(inter != nullptr);
    // Hand elimination of the two worldlines: x = 42.2/49, t = 32.4/49.
    CHECK(inter->x == doctest::Approx(42.2 / 49.0).epsilon(1e-13));
    CHECK(inter->t == doctest::Approx(32.4 / 49.0).epsilon(1e-13));

    // Live oracle: tachyon line through (-1, 1.2) with slope dt/dx = -11/38,
    // particle line through (0.2, 0) with slope 1.
    const auto [x, t] = oracle::intersect_lines(-1.0, 1.2, -11.0 / 38.0, 0.2, 0.0, 1.0);
    CHECK(inter->x == doctest::Approx(x).epsilon(1e-13));
    CHECK(inter->t == doctest::Approx(t).epsilon(1e-13));
}

TEST_CASE("detection clock readings") {
    const auto run = figure4_run(0.42);
    const Event* left = find_event(run, EventLabel::LeftDetection);
    const Event* right = find_event(run, EventLabel::RightDetection);
    REQUIRE(left != nullptr);
    REQUIRE(right != nullptr);
    CHECK(left->t == doctest::Approx(1.42).epsilon(1e-15));
    CHECK(left->x == -1.0);
    CHECK(right->t == doctest::Approx(0.58).epsilon(1e-15));
    CHECK(right->x == 1.0);

    // Uncorrelated runs carry both (late) tachyon arrivals.
    const Event* arr_l = find_event(run, EventLabel::LeftTachyonArrival);
    const Event* arr_r = find_event(run, EventLabel::RightTachyonArrival);
    REQUIRE(arr_l != nullptr);
    REQUIRE(arr_r != nullptr);
    CHECK(arr_l->t == doctest::Approx(1.42 - 22.0 / 38.0).epsilon(1e-13));
    CHECK(arr_r->t == doctest::Approx(1.58).epsilon(1e-13));
    CHECK(arr_l->t > right->t);  // condition (a)
    CHECK(arr_r->t > left->t);   // condition (b)
}

TEST_CASE("events are ordered by clock reading") {
    for (double x_bar : {-0.7, 0.2, 0.42, 0.6}) {
        const auto run = figure4_run(x_bar);
        CHECK(std::is_sorted(run.events.begin(), run.events.end(),
                             [](const Event& a, const Event& b) { return a.t < b.t; }));
    }
    // 4a: the interception clock reading precedes the left detection that
    // launched the tachyon.
    const auto run = figure4_run(0.2);
    const Event* inter = find_event(run, EventLabel::TachyonInterception);
    const Event* left = find_event(run, EventLabel::LeftDetection);
    REQUIRE(inter != nullptr);
    REQUIRE(left != nullptr);
    CHECK(inter->t < left->t);
}

TEST_CASE("classify_delta thresholds and boundary rule") {
    const UncorrelationWindow w(11.0 / 38.0, 0.5);
    CHECK(classify_delta(0.42, w) == RegimeLabel::Uncorrelated);
    CHECK(classify_delta(11.0 / 38.0, w) == RegimeLabel::CorrelatedViaLeftTachyon);
    CHECK(classify_delta(0.5, w) == RegimeLabel::CorrelatedViaRightTachyon);
    CHECK(classify_delta(-0.9, w) == RegimeLabel::CorrelatedViaLeftTachyon);
    CHECK_THROWS_AS(classify_delta(1.0, w), std::invalid_argument);
}

TEST_CASE("timeline agrees with the window classification over random draws") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> beta_dist(-0.95, 0.95);
    std::uniform_real_distribution<double> bt_dist(1.01, 1e3);
    std::uniform_real_distribution<double> b1_dist(0.05, 1.0);
    std::uniform_real_distribution<double> x_dist(-0.999, 0.999);
    for (int i = 0; i < 10000; ++i) {
        const SubluminalBeta b(beta_dist(rng));
        const TachyonBeta bt(bt_dist(rng));
        const ParticleBeta b1(b1_dist(rng));
        const double x_bar = x_dist(rng);
        const auto run = run_timeline(Geometry1D(x_bar, b1), bt, b);
        const auto w = compute_window(b1, bt, b);
        CHECK(run.regime == classify_delta(x_bar, w));
    }
}

TEST_CASE("boundary sweep flips the label exactly twice, at the window edges") {
    const auto w = compute_window(ParticleBeta(1.0), kBetaT, kBeta);
    const int n = 10000;
    const double step = 2.0 / (n + 1);
    RegimeLabel prev = figure4_run(-1.0 + step).regime;
    std::vector<double> flips;
    for (int i = 2; i <= n; ++i) {
        const double x = -1.0 + step * i;
        const RegimeLabel cur = figure4_run(x).regime;
        if (cur != prev) flips.push_back(x);
        prev = cur;
    }
    REQUIRE(flips.size() == 2);
    CHECK(std::fabs(flips[0] - w.delta_m()) <= step);
    CHECK(std::fabs(flips[1] - w.delta_M()) <= step);
}

TEST_CASE("interceptions lie on both worldlines, strictly inside") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> beta_dist(-0.9, 0.9);
    std::uniform_real_distribution<double> bt_dist(1.05, 50.0);
    std::uniform_real_distribution<double> b1_dist(0.1, 1.0);
    std::uniform_real_distribution<double> x_dist(-0.99, 0.99);
    int seen = 0;
    for (int i = 0; i < 20000 && seen < 3000; ++i) {
        const SubluminalBeta b(beta_dist(rng));
        const TachyonBeta bt(bt_dist(rng));
        const ParticleBeta b1(b1_dist(rng));
        const double x_bar = x_dist(rng);
        const auto run = run_timeline(Geometry1D(x_bar, b1), bt, b);
        const Event* inter = find_event(run, EventLabel::TachyonInterception);
        if (!inter) continue;
        ++seen;

        const double t_plus = (1.0 - x_bar) / b1.value();
        const double t_minus = (1.0 + x_bar) / b1.value();
        if (run.regime == RegimeLabel::CorrelatedViaLeftTachyon) {
            CHECK(inter->x > x_bar);
            CHECK(inter->x < 1.0);
            // On the Rparticle line and on the tachyon line.
            CHECK(std::fabs(inter->t - (inter->x - x_bar) / b1.value()) < 1e-10);
            CHECK(std::fabs(inter->t - (t_minus + (inter->x + 1.0) * run.recip_plus)) < 1e-10);
        } else {
            REQUIRE(run.regime == RegimeLabel::CorrelatedViaRightTachyon);
            CHECK(inter->x < x_bar);
            CHECK(inter->x > -1.0);
            CHECK(std::fabs(inter->t - (x_bar - inter->x) / b1.value()) < 1e-10);
            CHECK(std::fabs(inter->t - (t_plus + (1.0 - inter->x) * run.recip_minus)) < 1e-10);
        }
    }
    CHECK(seen >= 3000);
}

TEST_CASE("subluminal pairs still intercept when correlated") {
    const auto run = run_timeline(Geometry1D(0.1, ParticleBeta(0.5)), kBetaT, kBeta);
    CHECK(run.regime == RegimeLabel::CorrelatedViaLeftTachyon);
    const Event* inter = find_event(run, EventLabel::TachyonInterception);
    REQUIRE(inter != nullptr);
    CHECK(inter->x > 0.1);
    CHECK(inter->x < 1.0);
    CHECK(std::fabs(inter->t - (inter->x - 0.1) / 0.5) < 1e-10);
}

TEST_CASE("3d run at theta = 0 reduces to the 1d run") {
    for (double x_bar : {-0.5, 0.2, 0.42, 0.6}) {
        const Geometry1D geometry(x_bar, ParticleBeta(1.0));
        const auto flat = run_timeline(geometry, kBetaT, kBeta);
        const auto oblique = run_timeline_3d(geometry, 0.0, kBetaT, kBeta);
        CHECK(oblique.regime == flat.regime);
        CHECK(oblique.window.delta_m() ==
              doctest::Approx(flat.window.delta_m()).epsilon(1e-12));
        CHECK(oblique.window.delta_M() ==
              doctest::Approx(flat.window.delta_M()).epsilon(1e-12));
        REQUIRE(oblique.events.size() == flat.events.size());
        for (std::size_t i = 0; i < flat.events.size(); ++i)
            CHECK(oblique.events[i].t == doctest::Approx(flat.events[i].t).epsilon(1e-10));
    }
}

TEST_CASE("a source exactly on the window edge classifies correlated and exports") {
    const auto w = compute_window(ParticleBeta(1.0), kBetaT, kBeta);
    for (double edge : {w.delta_m(), w.delta_M()}) {
        const auto run = figure4_run(edge);
        CHECK(run.regime != RegimeLabel::Uncorrelated);
        const std::string csv = minkowski_csv(run);
        CHECK(csv.find("worldline,label,x_over_d,ct_over_d") != std::string::npos);
    }
}

TEST_CASE("creation clock offset shifts every reading") {
    const auto base = figure4_run(0.42);
    const auto shifted = run_timeline(Geometry1D(0.42, ParticleBeta(1.0), 2.5), kBetaT, kBeta);
    REQUIRE(base.events.size() == shifted.events.size());
    for (std::size_t i = 0; i < base.events.size(); ++i) {
        CHECK(shifted.events[i].label == base.events[i].label);
        CHECK(shifted.events[i].t == doctest::Approx(base.events[i].t + 2.5).epsilon(1e-13));
    }
}

TEST_CASE("minkowski export layout") {
    const std::string csv = minkowski_csv(figure4_run(0.2));
    CHECK(csv.find("worldline,label,x_over_d,ct_over_d\n") != std::string::npos);
    CHECK(csv.find("# regime=CorrelatedViaLeftTachyon") != std::string::npos);
    CHECK(csv.find("# Ltachyon_endpoint=interception") != std::string::npos);

    // Fixed worldline order.
    std::vector<std::string> names;
    std::istringstream in(csv);
    std::string line;
    bool past_header = false;
    while (std::getline(in, line)) {
        if (line == "worldline,label,x_over_d,ct_over_d") {
            past_header = true;
            continue;
        }
        if (!past_header || line.empty()) continue;
        const std::string name = line.substr(0, line.find(','));
        if (names.empty() || names.back() != name) names.push_back(name);
    }
    CHECK(names == std::vector<std::string>{"Lparticle", "Rparticle", "Ldetector", "Rdetector",
                                            "Ltachyon"});

    // Interception vertex printed with 12 significant digits.
    CHECK(csv.find("Ltachyon,TachyonInterception,0.861224489796,0.661224489796") !=
          std::string::npos);
}

TEST_CASE("uncorrelated export truncates the late tachyon at the later detection") {
    const std::string csv = minkowski_csv(figure4_run(0.42));
    CHECK(csv.find("# regime=Uncorrelated") != std::string::npos);
    CHECK(csv.find("# Ltachyon_endpoint=detector_arrival") != std::string::npos);
    CHECK(csv.find("# Rtachyon_endpoint=truncated_at_later_detection") != std::string::npos);
    // Rtachyon clipped where its worldline crosses t = 1.42: x = -0.68.
    CHECK(csv.find("Rtachyon,truncated,-0.68,1.42") != std::string::npos);
    CHECK(csv.find("Ltachyon,LeftTachyonArrival,1,0.841052631579") != std::string::npos);
}

TEST_CASE("photon worldlines have unit slope in the export") {
    const auto run = figure4_run(0.42);
    const std::string csv = minkowski_csv(run);
    std::istringstream in(csv);
    std::string line;
    std::vector<std::pair<double, double>> lparticle;
    while (std::getline(in, line)) {
        if (line.rfind("Lparticle,", 0) != 0) continue;
        std::istringstream fields(line);
        std::string name, label, xs, ts;
        std::getline(fields, name, ',');
        std::getline(fields, label, ',');
        std::getline(fields, xs, ',');
        std::getline(fields, ts, ',');
        lparticle.emplace_back(std::stod(xs), std::stod(ts));
    }
    REQUIRE(lparticle.size() == 2);
    const double slope = (lparticle[1].second - lparticle[0].second) /
                         (lparticle[1].first - lparticle[0].first);
    CHECK(std::fabs(std::fabs(slope) - 1.0) < 1e-12);
}

TEST_CASE("geometry validation") {
    CHECK_THROWS_AS(Geometry1D(1.5, ParticleBeta(1.0)), std::invalid_argument);
    CHECK_THROWS_AS(Geometry1D(-1.0, ParticleBeta(1.0)), std::invalid_argument);
}
