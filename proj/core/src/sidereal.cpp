#include "tachyon/sidereal.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <thread>
#include <vector>

#include "tachyon/aberration.hpp"
#include "tachyon/format.hpp"

namespace tachyon {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

double clamp_cos(double c) { return std::min(1.0, std::max(-1.0, c)); }

double instantaneous_width(double theta, const SiderealConfig& config) {
    return window_3d(theta, config.beta(), config.beta_t()).width;
}

}  // namespace

double theta_of_time(double t, const SiderealConfig& config) {
    const double a = config.axis_angle();
    const double d = config.aether_tilt();
    const double phase = kTwoPi * t / config.period() + config.phase();
    const double c = std::cos(a) * std::cos(d) + std::sin(a) * std::sin(d) * std::cos(phase);
    return std::acos(clamp_cos(c));
}

DriftSeries drift_series(const SiderealConfig& config, std::size_t n_samples) {
    if (n_samples < 2) throw std::invalid_argument("drift_series requires n_samples >= 2");

    DriftSeries series;
    series.samples.reserve(n_samples);
    const double beta = config.beta().value();
    double lo = 1.0;
    double hi = -1.0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double t = config.period() * static_cast<double>(i) /
                         static_cast<double>(n_samples - 1);
        const double theta = theta_of_time(t, config);
        const double delta_bar = -beta * std::cos(theta);
        series.samples.push_back({t, theta, delta_bar, instantaneous_width(theta, config)});
        lo = std::min(lo, delta_bar);
        hi = std::max(hi, delta_bar);
    }
    series.delta_bar_peak_to_peak = hi - lo;
    return series;
}

double occupancy_fraction(const SiderealConfig& config, double delta_obs,
                          std::size_t n_samples, unsigned threads) {
    if (n_samples < 2) throw std::invalid_argument("occupancy_fraction requires n_samples >= 2");
    if (threads == 0) threads = 1;

    const double period = config.period();
    const std::size_t n_intervals = n_samples - 1;
    const double dt = period / static_cast<double>(n_intervals);

    // Negative inside the drifting window, positive outside.
    const auto excess = [&](double t) {
        const double theta = theta_of_time(t, config);
        const double delta_bar = -config.beta().value() * std::cos(theta);
        return std::fabs(delta_obs - delta_bar) - 0.5 * instantaneous_width(theta, config);
    };

    // Crossing refinement: bisect the sign change, then credit the inside
    // part of the interval.
    const auto refined_inside = [&](double t0, double t1, double g0) {
        double lo = t0, hi = t1, g_lo = g0;
        for (int i = 0; i < 60 && hi - lo > 0.0; ++i) {
            const double mid = 0.5 * (lo + hi);
            const double g_mid = excess(mid);
            if ((g_mid < 0.0) == (g_lo < 0.0)) {
                lo = mid;
                g_lo = g_mid;
            } else {
                hi = mid;
            }
        }
        const double cross = 0.5 * (lo + hi);
        return (g0 < 0.0) ? cross - t0 : t1 - cross;
    };

    // Fixed-size blocks make the partial sums independent of the thread
    // count; the final reduction runs in block order.
    constexpr std::size_t kBlock = 4096;
    const std::size_t n_blocks = (n_intervals + kBlock - 1) / kBlock;
    std::vector<double> partials(n_blocks, 0.0);

    const auto run_block = [&](std::size_t block) {
        const std::size_t begin = block * kBlock;
        const std::size_t end = std::min(begin + kBlock, n_intervals);
        double acc = 0.0;
        double t0 = dt * static_cast<double>(begin);
        double g0 = excess(t0);
        for (std::size_t i = begin; i < end; ++i) {
            const double t1 = (i + 1 == n_intervals) ? period : dt * static_cast<double>(i + 1);
            const double g1 = excess(t1);
            const bool in0 = g0 < 0.0;
            const bool in1 = g1 < 0.0;
            if (in0 && in1)
                acc += t1 - t0;
            else if (in0 != in1)
                acc += refined_inside(t0, t1, g0);
            t0 = t1;
            g0 = g1;
        }
        partials[block] = acc;
    };

    if (threads == 1 || n_blocks == 1) {
        for (std::size_t b = 0; b < n_blocks; ++b) run_block(b);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const unsigned n_workers = std::min<std::size_t>(threads, n_blocks);
        pool.reserve(n_workers);
        for (unsigned w = 0; w < n_workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t b = next.fetch_add(1); b < n_blocks; b = next.fetch_add(1))
                    run_block(b);
            });
        for (std::thread& th : pool) th.join();
    }

    double inside = 0.0;
    for (double p : partials) inside += p;
    return inside / period;
}

FaraciBetaEstimate faraci_beta(double delta_obs, double theta_c, double delta) {
    if (!(delta_obs >= 0.0 && delta_obs < 1.0))
        detail::fail_invariant("faraci_beta requires 0 <= delta_obs < 1");
    if (!(theta_c >= 0.0 && theta_c < kPi / 2.0))
        detail::fail_invariant("faraci_beta requires 0 <= theta_C < pi/2");
    if (!(delta >= 0.0)) detail::fail_invariant("faraci_beta requires delta >= 0");
    const double center = delta_obs / std::cos(theta_c);
    if (center >= 1.0)
        throw std::domain_error("faraci_beta: inferred aether speed is superluminal");
    return {center, delta * std::tan(theta_c)};
}

double faraci_beta_t(double delta, SubluminalBeta beta, double theta_c) {
    if (delta == 0.0)
        throw std::domain_error("faraci_beta_t: delta = 0 leaves beta_t unconstrained");
    if (!(delta > 0.0)) detail::fail_invariant("faraci_beta_t requires delta > 0");
    if (!(beta.value() > 0.0)) detail::fail_invariant("faraci_beta_t requires beta > 0");
    if (!(theta_c > 0.0 && theta_c <= kPi / 2.0))
        detail::fail_invariant("faraci_beta_t requires 0 < theta_C <= pi/2");
    const double gamma = beta.gamma();
    const double beta_star = beta.value() * std::cos(theta_c);
    const double gamma_star = lorentz_gamma(beta_star);
    return 3.0 * gamma /
           (delta * beta.value() * std::sin(theta_c) * gamma_star * gamma_star * gamma_star);
}

void export_drift_csv(const DriftSeries& series, std::ostream& out) {
    out << "t_seconds,theta_rad,delta_bar,d_delta_window\n";
    for (const DriftSample& s : series.samples)
        out << format_sig(s.t) << ',' << format_sig(s.theta) << ',' << format_sig(s.delta_bar)
            << ',' << format_sig(s.window_width) << '\n';
}

}  // namespace tachyon
