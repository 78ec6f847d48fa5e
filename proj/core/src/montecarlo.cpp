#include "tachyon/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <sstream>
#include <thread>

#include "tachyon/aberration.hpp"
#include "tachyon/format.hpp"

namespace tachyon {

namespace {

struct Counts {
    std::uint64_t pp = 0, pm = 0, mp = 0, mm = 0, uncorrelated = 0;

    Counts& operator+=(const Counts& o) {
        pp += o.pp;
        pm += o.pm;
        mp += o.mp;
        mm += o.mm;
        uncorrelated += o.uncorrelated;
        return *this;
    }
};

UncorrelationWindow resolve_window(const WindowSource& source) {
    if (const auto* params = std::get_if<WindowParams>(&source))
        return compute_window(params->beta1, params->beta_t, params->beta);
    return std::get<UncorrelationWindow>(source);
}

UncorrelationWindow sidereal_window(const SiderealConfig& config, double t) {
    const EffectiveParams ep =
        effective_params(theta_of_time(t, config), config.beta(), config.beta_t());
    if (!(ep.beta_t_star > 1.0))
        throw std::domain_error(
            "simulate: sidereal drive left the beta_t* > 1 validity regime");
    return compute_window(ParticleBeta(1.0), TachyonBeta(ep.beta_t_star),
                          SubluminalBeta(ep.beta_star));
}

}  // namespace

CorrelationStats simulate(const ExperimentConfig& config, unsigned threads,
                          std::vector<TrialRecord>* trial_log) {
    if (config.n_pairs < 1) throw std::invalid_argument("simulate requires n_pairs >= 1");
    if (threads == 0) threads = 1;
    const std::uint64_t n = config.n_pairs;
    const std::uint64_t seed = config.rng_seed;

    // Resolve everything that is trial-independent up front.
    std::optional<UncorrelationWindow> fixed_window;
    const auto* sidereal = std::get_if<SiderealDrive>(&config.delta_source);
    if (!sidereal) fixed_window = resolve_window(config.window_source);

    double schedule_in = 0.0, schedule_out = 0.0, schedule_fraction = 0.0;
    if (const auto* sched = std::get_if<OccupancySchedule>(&config.delta_source)) {
        if (!(sched->fraction >= 0.0 && sched->fraction <= 1.0))
            throw std::invalid_argument("occupancy schedule fraction must lie in [0, 1]");
        schedule_fraction = sched->fraction;
        schedule_in = fixed_window->center();
        schedule_out = 0.5 * (-1.0 + fixed_window->delta_m());
    }
    if (const auto* jitter = std::get_if<UniformDelta>(&config.delta_source)) {
        if (!(jitter->lo > -1.0 && jitter->hi < 1.0 && jitter->lo <= jitter->hi))
            throw std::invalid_argument("delta jitter range must satisfy -1 < lo <= hi < 1");
    }
    if (const auto* fixed = std::get_if<FixedDelta>(&config.delta_source)) {
        if (!(fixed->delta > -1.0 && fixed->delta < 1.0))
            throw std::invalid_argument("fixed delta must lie in (-1, 1)");
    }
    if (sidereal && !(sidereal->delta_obs > -1.0 && sidereal->delta_obs < 1.0))
        throw std::invalid_argument("sidereal delta_obs must lie in (-1, 1)");

    if (trial_log) trial_log->resize(n);

    const auto run_trial = [&](std::uint64_t i) -> TrialRecord {
        SplitMix64 rng = SplitMix64::trial_stream(seed, i);

        double delta;
        RegimeLabel regime;
        if (sidereal) {
            const double t = sidereal->config.period() * (static_cast<double>(i) + 0.5) /
                             static_cast<double>(n);
            delta = sidereal->delta_obs;
            regime = classify_delta(delta, sidereal_window(sidereal->config, t));
        } else {
            if (const auto* fixed = std::get_if<FixedDelta>(&config.delta_source)) {
                delta = fixed->delta;
            } else if (const auto* jitter = std::get_if<UniformDelta>(&config.delta_source)) {
                delta = jitter->lo + (jitter->hi - jitter->lo) * rng.next_unit();
            } else {
                const double f = schedule_fraction;
                const bool inside = std::floor(static_cast<double>(i + 1) * f) >
                                    std::floor(static_cast<double>(i) * f);
                delta = inside ? schedule_in : schedule_out;
            }
            regime = classify_delta(delta, *fixed_window);
        }

        const std::uint64_t r = rng.next();
        int left, right;
        if (regime == RegimeLabel::Uncorrelated) {
            left = (r & 1u) ? 1 : -1;
            right = (r & 2u) ? 1 : -1;
        } else {
            left = (r & 1u) ? 1 : -1;
            right = -left;
        }
        return {delta, regime, left, right};
    };

    constexpr std::uint64_t kBlock = 4096;
    const std::uint64_t n_blocks = (n + kBlock - 1) / kBlock;
    std::vector<Counts> partials(n_blocks);

    const auto run_block = [&](std::uint64_t block) {
        Counts c;
        const std::uint64_t begin = block * kBlock;
        const std::uint64_t end = std::min(begin + kBlock, n);
        for (std::uint64_t i = begin; i < end; ++i) {
            const TrialRecord rec = run_trial(i);
            if (rec.regime == RegimeLabel::Uncorrelated) ++c.uncorrelated;
            if (rec.left > 0)
                ++(rec.right > 0 ? c.pp : c.pm);
            else
                ++(rec.right > 0 ? c.mp : c.mm);
            if (trial_log) (*trial_log)[i] = rec;
        }
        partials[block] = c;
    };

    if (threads == 1 || n_blocks == 1) {
        for (std::uint64_t b = 0; b < n_blocks; ++b) run_block(b);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        const unsigned n_workers =
            static_cast<unsigned>(std::min<std::uint64_t>(threads, n_blocks));
        pool.reserve(n_workers);
        for (unsigned w = 0; w < n_workers; ++w)
            pool.emplace_back([&] {
                for (std::uint64_t b = next.fetch_add(1); b < n_blocks; b = next.fetch_add(1))
                    run_block(b);
            });
        for (std::thread& th : pool) th.join();
    }

    Counts total;
    for (const Counts& c : partials) total += c;

    CorrelationStats stats;
    stats.n = n;
    stats.seed = seed;
    const double dn = static_cast<double>(n);
    const std::uint64_t same = total.pp + total.mm;
    const std::uint64_t diff = total.pm + total.mp;
    stats.coincidence_rate = static_cast<double>(diff) / dn;
    stats.correlation =
        (static_cast<double>(same) - static_cast<double>(diff)) / dn;
    stats.occupancy = static_cast<double>(total.uncorrelated) / dn;
    if (n > 1) {
        // Sample standard error of the mean of +-1 products.
        const double var =
            (dn / (dn - 1.0)) * (1.0 - stats.correlation * stats.correlation);
        stats.stderr_correlation = std::sqrt(var / dn);
        stats.stderr_occupancy =
            std::sqrt(stats.occupancy * (1.0 - stats.occupancy) / (dn - 1.0));
    }
    return stats;
}

double expected_correlation(double occupancy) {
    if (!(occupancy >= 0.0 && occupancy <= 1.0))
        throw std::invalid_argument("expected_correlation requires occupancy in [0, 1]");
    return -(1.0 - occupancy);
}

double infer_occupancy(double observed_correlation) {
    if (!(observed_correlation >= -1.0 && observed_correlation <= 0.0))
        throw std::invalid_argument(
            "infer_occupancy: observed correlation outside [-1, 0] violates the mixing model");
    return 1.0 - std::fabs(observed_correlation);
}

void write_trial_log_csv(const std::vector<TrialRecord>& log, std::ostream& out) {
    out << "trial,delta,regime,left,right\n";
    for (std::size_t i = 0; i < log.size(); ++i) {
        const TrialRecord& r = log[i];
        out << i << ',' << format_sig(r.delta) << ',' << to_string(r.regime) << ',' << r.left
            << ',' << r.right << '\n';
    }
}

std::string stats_json(const CorrelationStats& stats) {
    std::ostringstream out;
    out << "{\"n\":" << stats.n << ",\"correlation\":" << format_sig(stats.correlation)
        << ",\"occupancy\":" << format_sig(stats.occupancy)
        << ",\"stderr_correlation\":" << format_sig(stats.stderr_correlation)
        << ",\"seed\":" << stats.seed << ",\"rng_algorithm\":\"" << stats.rng_algorithm
        << "\"}";
    return out.str();
}

}  // namespace tachyon
