// Command-line front end for the tachyon-EPR toolkit. Subcommands map
// one-to-one onto the library modules: window, timeline, sidereal, faraci,
// simulate, paradox, momentum.
//
// Conventions:
//   - angles always carry an explicit unit suffix (37.5deg or 0.654rad);
//     bare numbers are rejected.
//   - internal units are c = 1, d = 1; --units si plus --d-meters adds
//     SI-converted report lines, machine-readable files stay dimensionless.
//   - exit codes: 0 ok, 2 validation error, 3 I/O error.
//   - stochastic commands echo their seed and RNG algorithm, and their
//     machine-readable output is byte-identical for any --threads value.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tachyon/aberration.hpp"
#include "tachyon/causality.hpp"
#include "tachyon/format.hpp"
#include "tachyon/kinematics.hpp"
#include "tachyon/momentum.hpp"
#include "tachyon/montecarlo.hpp"
#include "tachyon/sidereal.hpp"
#include "tachyon/timeline.hpp"
#include "tachyon/window.hpp"

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSpeedOfLight = 299792458.0;  // m/s

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_angle(const std::string& text) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("angle '" + text + "' is not a number with a unit suffix");
    }
    const std::string unit = text.substr(pos);
    if (unit == "deg") return value * kPi / 180.0;
    if (unit == "rad") return value;
    throw std::invalid_argument("angle '" + text +
                                "' needs an explicit unit suffix: <value>deg or <value>rad");
}

tachyon::Vec3 parse_vec3(const std::string& text) {
    std::istringstream in(text);
    tachyon::Vec3 v;
    char c1 = 0, c2 = 0;
    if (!(in >> v.x >> c1 >> v.y >> c2 >> v.z) || c1 != ',' || c2 != ',')
        throw std::invalid_argument("vector '" + text + "' must be three comma-separated numbers");
    return v;
}

unsigned default_threads() {
    if (const char* env = std::getenv("TACHYON_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n >= 1 && n <= 1024) return static_cast<unsigned>(n);
    }
    return 1;
}

void print(const std::string& key, double value) {
    std::cout << key << " = " << tachyon::format_sig(value) << "\n";
}

void print(const std::string& key, const std::string& value) {
    std::cout << key << " = " << value << "\n";
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open output file: " + path);
    return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw io_error("write failed: " + path);
}

struct UnitOptions {
    std::string mode = "natural";
    double d_meters = 1.0;

    bool si() const { return mode == "si"; }
    double seconds(double t_natural) const { return t_natural * d_meters / kSpeedOfLight; }
};

// ---------------------------------------------------------------------------
// window

struct WindowOptions {
    double beta = 0.0;
    double beta_t = 0.0;
    double beta1 = 1.0;
    std::string theta;
    bool invert = false;
    double delta_m = 0.0;
    double delta_M = 0.0;
    bool has_params = false;
    bool has_edges = false;
};

void run_window(const WindowOptions& opt, const UnitOptions& units) {
    using namespace tachyon;
    if (opt.invert) {
        if (!opt.has_edges)
            throw std::invalid_argument("--invert needs --delta-m and --delta-M");
        const UncorrelationWindow w(opt.delta_m, opt.delta_M);
        print("delta_m", w.delta_m());
        print("delta_M", w.delta_M());
        print("beta", invert_beta(w).value());
        print("beta_t", invert_beta_t(w).value());
        print("approx_beta", approx_beta(w));
        print("approx_beta_t", approx_beta_t(w));
        return;
    }

    if (!opt.has_params) throw std::invalid_argument("window needs --beta and --beta-t");
    const SubluminalBeta beta(opt.beta);
    const TachyonBeta beta_t(opt.beta_t);
    const ParticleBeta beta1(opt.beta1);

    if (!opt.theta.empty()) {
        const double theta = parse_angle(opt.theta);
        if (!in_reduction_regime(theta, beta, beta_t))
            std::cerr << "warning: outside the beta_t >> 1 / moderate-gamma regime; "
                         "the effective-parameter reduction is approximate\n";
        const EffectiveParams ep = effective_params(theta, beta, beta_t);
        print("theta_rad", theta);
        print("beta_star", ep.beta_star);
        print("gamma_star", ep.gamma_star);
        print("beta_t_star", ep.beta_t_star);
        const WindowSummary approx = window_3d(theta, beta, beta_t);
        print("delta_bar_approx", approx.center);
        print("d_delta_approx", approx.width);
        const auto w = compute_window(beta1, TachyonBeta(ep.beta_t_star),
                                      SubluminalBeta(ep.beta_star));
        print("delta_m", w.delta_m());
        print("delta_M", w.delta_M());
        print("delta_bar", w.center());
        print("d_delta", w.width());
        return;
    }

    const auto w = compute_window(beta1, beta_t, beta);
    print("delta_m", w.delta_m());
    print("delta_M", w.delta_M());
    print("delta_bar", w.center());
    print("d_delta", w.width());
    if (units.si()) {
        print("x_m_meters", w.delta_m() * units.d_meters);
        print("x_M_meters", w.delta_M() * units.d_meters);
    }
}

// ---------------------------------------------------------------------------
// timeline

struct TimelineOptions {
    double x_bar = 0.0;
    double beta = -0.4;
    double beta_t = 8.0;
    double beta1 = 1.0;
    double t_bar = 0.0;
    std::string theta;
    std::string minkowski_path;
};

void run_timeline_cmd(const TimelineOptions& opt, const UnitOptions& units) {
    using namespace tachyon;
    const Geometry1D geometry(opt.x_bar, ParticleBeta(opt.beta1), opt.t_bar);
    const SubluminalBeta beta(opt.beta);
    const TachyonBeta beta_t(opt.beta_t);

    const TimelineRun run =
        opt.theta.empty()
            ? run_timeline(geometry, beta_t, beta)
            : run_timeline_3d(geometry, parse_angle(opt.theta), beta_t, beta);

    print("regime", to_string(run.regime));
    print("delta_m", run.window.delta_m());
    print("delta_M", run.window.delta_M());
    for (const Event& e : run.events) {
        std::cout << "event " << to_string(e.label) << " x_over_d=" << format_sig(e.x)
                  << " ct_over_d=" << format_sig(e.t);
        if (units.si())
            std::cout << " x_meters=" << format_sig(e.x * units.d_meters)
                      << " t_seconds=" << format_sig(units.seconds(e.t));
        std::cout << "\n";
    }

    if (!opt.minkowski_path.empty()) {
        auto out = open_output(opt.minkowski_path);
        export_minkowski(run, out);
        finish_output(out, opt.minkowski_path);
        print("minkowski_file", opt.minkowski_path);
    }
}

// ---------------------------------------------------------------------------
// sidereal

struct SiderealOptions {
    std::string latitude;
    std::string tilt;
    double beta = 0.0;
    double beta_t = 0.0;
    std::string phase = "0rad";
    double period = tachyon::kSiderealDaySeconds;
    std::string flight_axis;
    std::size_t samples = 1000;
    std::string out_path;
    std::optional<double> delta_obs;
    std::size_t occupancy_samples = 1000000;
    unsigned threads = default_threads();
};

void run_sidereal(const SiderealOptions& opt) {
    using namespace tachyon;
    std::optional<double> axis;
    if (!opt.flight_axis.empty()) axis = parse_angle(opt.flight_axis);
    const SiderealConfig config(parse_angle(opt.latitude), parse_angle(opt.tilt),
                                SubluminalBeta(opt.beta), TachyonBeta(opt.beta_t),
                                parse_angle(opt.phase), opt.period, axis);

    print("latitude_rad", config.latitude());
    print("tilt_rad", config.aether_tilt());
    print("beta", config.beta().value());
    print("beta_t", config.beta_t().value());
    print("period_seconds", config.period());
    print("theta_min_rad", std::fabs(config.axis_angle() - config.aether_tilt()));
    print("theta_max_rad", config.axis_angle() + config.aether_tilt());

    const DriftSeries series = drift_series(config, opt.samples);
    print("d_delta_bar", series.delta_bar_peak_to_peak);
    print("d_delta_bar_small_tilt",
          2.0 * config.aether_tilt() * config.beta().value() * std::sin(config.axis_angle()));

    if (opt.delta_obs) {
        print("delta_obs", *opt.delta_obs);
        print("occupancy",
              occupancy_fraction(config, *opt.delta_obs, opt.occupancy_samples, opt.threads));
    }

    if (!opt.out_path.empty()) {
        auto out = open_output(opt.out_path);
        export_drift_csv(series, out);
        finish_output(out, opt.out_path);
        print("drift_file", opt.out_path);
    }
}

// ---------------------------------------------------------------------------
// faraci

struct FaraciOptions {
    double delta_obs = 0.0;
    std::string latitude;
    std::string tilt;
    std::optional<double> beta;
};

void run_faraci(const FaraciOptions& opt) {
    using namespace tachyon;
    const double theta_c = parse_angle(opt.latitude);
    const double tilt = parse_angle(opt.tilt);
    const FaraciBetaEstimate est = faraci_beta(opt.delta_obs, theta_c, tilt);
    print("delta_obs", opt.delta_obs);
    print("latitude_rad", theta_c);
    print("tilt_rad", tilt);
    print("beta_center", est.center);
    print("beta_halfwidth", est.halfwidth);
    const double beta_used = opt.beta.value_or(est.center);
    print("beta_used", beta_used);
    print("beta_t", faraci_beta_t(tilt, SubluminalBeta(beta_used), theta_c));
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateOptions {
    std::uint64_t pairs = 0;
    std::uint64_t seed = 0;
    unsigned threads = default_threads();
    double beta = -0.4;
    double beta_t = 8.0;
    double beta1 = 1.0;
    std::optional<double> delta;
    std::optional<double> occupancy_target;
    std::vector<double> jitter;
    bool sidereal = false;
    std::string latitude;
    std::string tilt;
    std::string phase = "0rad";
    double period = tachyon::kSiderealDaySeconds;
    std::optional<double> delta_obs;
    std::string trial_log_path;
};

void run_simulate(const SimulateOptions& opt) {
    using namespace tachyon;
    const WindowParams params{ParticleBeta(opt.beta1), TachyonBeta(opt.beta_t),
                              SubluminalBeta(opt.beta)};

    const int n_sources = (opt.delta ? 1 : 0) + (opt.occupancy_target ? 1 : 0) +
                          (opt.jitter.empty() ? 0 : 1) + (opt.sidereal ? 1 : 0);
    if (n_sources != 1)
        throw std::invalid_argument(
            "choose exactly one source-position mode: --delta, --occupancy-target, "
            "--jitter LO HI, or --sidereal");

    DeltaSource source = FixedDelta{0.0};
    if (opt.delta) {
        source = FixedDelta{*opt.delta};
    } else if (opt.occupancy_target) {
        source = OccupancySchedule{*opt.occupancy_target};
    } else if (!opt.jitter.empty()) {
        if (opt.jitter.size() != 2)
            throw std::invalid_argument("--jitter needs exactly two values: LO HI");
        source = UniformDelta{opt.jitter[0], opt.jitter[1]};
    } else {
        if (opt.latitude.empty() || opt.tilt.empty() || !opt.delta_obs)
            throw std::invalid_argument(
                "--sidereal needs --latitude, --tilt and --delta-obs");
        const SiderealConfig config(parse_angle(opt.latitude), parse_angle(opt.tilt),
                                    SubluminalBeta(opt.beta), TachyonBeta(opt.beta_t),
                                    parse_angle(opt.phase), opt.period);
        source = SiderealDrive{config, *opt.delta_obs};
    }

    const ExperimentConfig config{opt.pairs, params, std::move(source), opt.seed};

    std::vector<TrialRecord> log;
    std::vector<TrialRecord>* log_ptr = opt.trial_log_path.empty() ? nullptr : &log;
    const CorrelationStats stats = simulate(config, opt.threads, log_ptr);

    // Parameter echo (comment lines), then the stats object. Execution
    // knobs (threads, paths) stay out so reruns are byte-identical.
    std::cout << "# pairs = " << opt.pairs << "\n";
    std::cout << "# beta = " << format_sig(opt.beta) << "\n";
    std::cout << "# beta_t = " << format_sig(opt.beta_t) << "\n";
    std::cout << "# beta1 = " << format_sig(opt.beta1) << "\n";
    if (opt.delta) std::cout << "# delta = " << format_sig(*opt.delta) << "\n";
    if (opt.occupancy_target)
        std::cout << "# occupancy_target = " << format_sig(*opt.occupancy_target) << "\n";
    if (!opt.jitter.empty())
        std::cout << "# jitter = " << format_sig(opt.jitter[0]) << ","
                  << format_sig(opt.jitter[1]) << "\n";
    if (opt.sidereal)
        std::cout << "# sidereal latitude = " << opt.latitude << " tilt = " << opt.tilt
                  << " delta_obs = " << format_sig(*opt.delta_obs) << "\n";
    std::cout << "# seed = " << opt.seed << "\n";
    std::cout << "# rng_algorithm = " << stats.rng_algorithm << "\n";
    std::cout << "# coincidence_rate = " << format_sig(stats.coincidence_rate) << "\n";
    std::cout << "# stderr_occupancy = " << format_sig(stats.stderr_occupancy) << "\n";
    std::cout << stats_json(stats) << "\n";

    if (log_ptr) {
        auto out = open_output(opt.trial_log_path);
        write_trial_log_csv(log, out);
        finish_output(out, opt.trial_log_path);
    }
}

// ---------------------------------------------------------------------------
// paradox

struct ParadoxOptions {
    bool aether = false;
    std::optional<double> beta_g;
    std::optional<double> beta_t;
    double beta = 0.0;
};

void run_paradox(const ParadoxOptions& opt) {
    using namespace tachyon;
    const SubluminalBeta beta(opt.beta);
    if (opt.aether) {
        if (!opt.beta_t) throw std::invalid_argument("--aether needs --beta-t");
        const RoundTripResult r = aether_round_trip(TachyonBeta(*opt.beta_t), beta);
        print("model", "aether");
        print("beta_t", *opt.beta_t);
        print("beta", opt.beta);
        print("elapsed_d_over_c", r.elapsed);
        print("paradoxical", r.paradoxical ? "true" : "false");
        return;
    }
    if (!opt.beta_g) throw std::invalid_argument("paradox needs --beta-g (or --aether)");
    const RoundTripResult r = (*opt.beta_g > 1.0)
                                  ? rp_round_trip(*opt.beta_g, beta)
                                  : rp_subluminal_round_trip(*opt.beta_g, beta);
    print("model", "relativity-principle");
    print("beta_g", *opt.beta_g);
    print("beta", opt.beta);
    print("elapsed_d_over_c", r.elapsed);
    print("paradoxical", r.paradoxical ? "true" : "false");
    print("threshold_beta", r.threshold_beta);
}

// ---------------------------------------------------------------------------
// momentum

struct MomentumOptions {
    std::string type;
    double omega = 1.0;
    double k_mag = 1.0;
    std::optional<double> beta_t;
    std::string direction = "1,0,0";
    std::string boost_vec;
    double hbar = 1.0;
};

void print_momentum(const std::string& prefix, const tachyon::FourMomentum& m) {
    print(prefix + "_p0", m.p0);
    print(prefix + "_px", m.p.x);
    print(prefix + "_py", m.p.y);
    print(prefix + "_pz", m.p.z);
    print(prefix + "_norm2", tachyon::norm_squared(m));
    const auto v = tachyon::velocity_from_momentum(m);
    if (v) {
        print(prefix + "_vx", v->x);
        print(prefix + "_vy", v->y);
        print(prefix + "_vz", v->z);
        print(prefix + "_velocity_along_momentum",
              tachyon::dot(*v, m.p) >= 0.0 ? "true" : "false");
    } else {
        print(prefix + "_velocity", "infinite (p0 ~ 0)");
    }
}

void run_momentum(const MomentumOptions& opt) {
    using namespace tachyon;
    Vec3 dir = parse_vec3(opt.direction);
    const double len = norm(dir);
    if (!(len > 0.0)) throw std::invalid_argument("--dir must be a non-zero vector");
    dir = (1.0 / len) * dir;

    FourMomentum p;
    if (opt.type == "photon") {
        p = photon_momentum(opt.omega, dir);
    } else if (opt.type == "tachyon") {
        if (!opt.beta_t) throw std::invalid_argument("--type tachyon needs --beta-t");
        p = tachyon_momentum(opt.k_mag, dir, TachyonBeta(*opt.beta_t), opt.hbar);
    } else {
        throw std::invalid_argument("--type must be photon or tachyon");
    }

    print("type", opt.type);
    print_momentum("rest_frame", p);

    if (!opt.boost_vec.empty()) {
        const BoostVector b(parse_vec3(opt.boost_vec));
        print_momentum("boosted", boost(p, b));
        if (opt.type == "tachyon") {
            const int sign = p0_sign(dir, TachyonBeta(*opt.beta_t), b);
            print("boosted_p0_sign", sign > 0 ? "+1" : (sign < 0 ? "-1" : "0"));
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tachyon-mediated EPR correlation toolkit (c = 1, d = 1 internally)"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "flat key = value config file; sections [window], [timeline], ... hold "
                   "per-subcommand keys; command-line flags win");

    UnitOptions units;
    app.add_option("--units", units.mode, "unit mode for report lines: natural | si")
        ->check(CLI::IsMember({"natural", "si"}))
        ->capture_default_str();
    app.add_option("--d-meters", units.d_meters,
                   "detector half-separation in meters (used by --units si)")
        ->capture_default_str();

    WindowOptions wopt;
    auto* window = app.add_subcommand("window", "uncorrelation window and its inversion");
    auto* wbeta = window->add_option("--beta", wopt.beta, "aether speed beta (fraction of c)");
    auto* wbt = window->add_option("--beta-t", wopt.beta_t, "tachyon speed beta_t (> 1)");
    window->add_option("--beta1", wopt.beta1, "particle speed beta1 (0 < beta1 <= 1)")
        ->capture_default_str();
    window->add_option("--theta", wopt.theta,
                       "flight angle to the aether velocity, suffix deg|rad (3D reduction)");
    window->add_flag("--invert", wopt.invert, "invert measured edges back to (beta, beta_t)");
    auto* wdm = window->add_option("--delta-m", wopt.delta_m, "measured lower edge Delta_m");
    auto* wdM = window->add_option("--delta-M", wopt.delta_M, "measured upper edge Delta_M");
    window->callback([&] {
        wopt.has_params = wbeta->count() > 0 && wbt->count() > 0;
        wopt.has_edges = wdm->count() > 0 && wdM->count() > 0;
        run_window(wopt, units);
    });

    TimelineOptions topt;
    auto* timeline = app.add_subcommand("timeline", "single-pair run and Minkowski export");
    timeline->add_option("--xbar", topt.x_bar, "source position x_bar/d (dimensionless, in (-1, 1))")
        ->required();
    timeline->add_option("--beta", topt.beta, "aether speed beta (fraction of c)")->capture_default_str();
    timeline->add_option("--beta-t", topt.beta_t, "tachyon speed beta_t (fraction of c, > 1)")->capture_default_str();
    timeline->add_option("--beta1", topt.beta1, "particle speed beta1 (fraction of c)")->capture_default_str();
    timeline->add_option("--tbar", topt.t_bar, "creation clock reading (d/c units)")
        ->capture_default_str();
    timeline->add_option("--theta", topt.theta,
                         "flight angle to the aether velocity, suffix deg|rad (exact 3D speeds)");
    timeline->add_option("--minkowski", topt.minkowski_path, "write the worldline table here");
    timeline->callback([&] { run_timeline_cmd(topt, units); });

    SiderealOptions sopt;
    auto* sidereal = app.add_subcommand("sidereal", "daily window drift and occupancy");
    sidereal->add_option("--latitude", sopt.latitude, "lab latitude, suffix deg|rad")->required();
    sidereal->add_option("--tilt", sopt.tilt, "aether/Earth-axis angle delta, suffix deg|rad")
        ->required();
    sidereal->add_option("--beta", sopt.beta, "aether speed beta (fraction of c)")->required();
    sidereal->add_option("--beta-t", sopt.beta_t, "tachyon speed beta_t (fraction of c, > 1)")->required();
    sidereal->add_option("--phase", sopt.phase, "phase phi0, suffix deg|rad")
        ->capture_default_str();
    sidereal->add_option("--period", sopt.period, "rotation period in seconds")
        ->capture_default_str();
    sidereal->add_option("--flight-axis", sopt.flight_axis,
                         "flight-axis/Earth-axis angle, suffix deg|rad (default: latitude)");
    sidereal->add_option("--samples", sopt.samples, "drift series sample count (points per period)")
        ->capture_default_str();
    sidereal->add_option("--out", sopt.out_path, "write the drift series CSV here");
    sidereal->add_option("--delta-obs", sopt.delta_obs,
                         "source position: also report its window occupancy");
    sidereal->add_option("--occupancy-samples", sopt.occupancy_samples,
                         "grid density for the occupancy scan (points per period)")
        ->capture_default_str();
    sidereal->add_option("--threads", sopt.threads, "worker threads for the occupancy scan (count; result independent of it)")
        ->capture_default_str();
    sidereal->callback([&] { run_sidereal(sopt); });

    FaraciOptions fopt;
    auto* faraci = app.add_subcommand("faraci", "aether parameters from an uncorrelating source position");
    faraci->add_option("--delta-obs", fopt.delta_obs, "uncorrelating source position Delta = x_bar/d (dimensionless)")
        ->required();
    faraci->add_option("--latitude", fopt.latitude, "lab latitude, suffix deg|rad")->required();
    faraci->add_option("--tilt", fopt.tilt, "aether tilt delta, suffix deg|rad")->required();
    faraci->add_option("--beta", fopt.beta,
                       "aether speed used for the beta_t estimate (default: inferred center)");
    faraci->callback([&] { run_faraci(fopt); });

    SimulateOptions mopt;
    auto* simulate = app.add_subcommand("simulate", "entangled-pair statistics");
    simulate->add_option("--pairs", mopt.pairs, "number of pairs (count)")->required();
    simulate->add_option("--seed", mopt.seed, "RNG seed (64-bit integer)")->capture_default_str();
    simulate->add_option("--threads", mopt.threads, "worker threads (result is thread-count "
                         "independent)")
        ->capture_default_str();
    simulate->add_option("--beta", mopt.beta, "aether speed beta (fraction of c)")->capture_default_str();
    simulate->add_option("--beta-t", mopt.beta_t, "tachyon speed beta_t (fraction of c, > 1)")->capture_default_str();
    simulate->add_option("--beta1", mopt.beta1, "particle speed beta1 (fraction of c)")->capture_default_str();
    simulate->add_option("--delta", mopt.delta, "fixed source position Delta (dimensionless)");
    simulate->add_option("--occupancy-target", mopt.occupancy_target,
                         "engineered fraction of in-window trials (0..1)");
    simulate->add_option("--jitter", mopt.jitter, "uniform source jitter range LO HI (dimensionless)")
        ->expected(2);
    simulate->add_flag("--sidereal", mopt.sidereal, "drift the window sidereally per trial");
    simulate->add_option("--latitude", mopt.latitude, "(sidereal) latitude, suffix deg|rad");
    simulate->add_option("--tilt", mopt.tilt, "(sidereal) aether tilt, suffix deg|rad");
    simulate->add_option("--phase", mopt.phase, "(sidereal) phase, suffix deg|rad")
        ->capture_default_str();
    simulate->add_option("--period", mopt.period, "(sidereal) period in seconds")
        ->capture_default_str();
    simulate->add_option("--delta-obs", mopt.delta_obs, "(sidereal) fixed source position Delta (dimensionless)");
    simulate->add_option("--trial-log", mopt.trial_log_path, "write per-trial CSV here");
    simulate->callback([&] { run_simulate(mopt); });

    ParadoxOptions popt;
    auto* paradox = app.add_subcommand("paradox", "round-trip elapsed times");
    paradox->add_flag("--aether", popt.aether, "preferred-frame model (needs --beta-t)");
    paradox->add_option("--beta-g", popt.beta_g,
                        "going-signal speed (fraction of c; > 1 tachyonic, < 1 subluminal)");
    paradox->add_option("--beta-t", popt.beta_t, "isotropic tachyon speed (fraction of c; aether model)");
    paradox->add_option("--beta", popt.beta, "frame speed beta (fraction of c)")->required();
    paradox->callback([&] { run_paradox(popt); });

    MomentumOptions qopt;
    auto* momentum = app.add_subcommand("momentum", "photon/tachyon 4-momentum algebra");
    momentum->add_option("--type", qopt.type, "photon | tachyon")->required();
    momentum->add_option("--omega", qopt.omega, "photon angular frequency (natural units, h = c = 1)")
        ->capture_default_str();
    momentum->add_option("--k", qopt.k_mag, "tachyon wavenumber magnitude (natural units)")
        ->capture_default_str();
    momentum->add_option("--beta-t", qopt.beta_t, "tachyon speed beta_t (fraction of c, > 1)");
    momentum->add_option("--dir", qopt.direction, "propagation direction x,y,z (normalized internally)")
        ->capture_default_str();
    momentum->add_option("--boost", qopt.boost_vec, "boost velocity bx,by,bz (fractions of c, |b| < 1)");
    momentum->add_option("--hbar-tach", qopt.hbar, "tachyon action constant (arbitrary positive units)")
        ->capture_default_str();
    momentum->callback([&] { run_momentum(qopt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
