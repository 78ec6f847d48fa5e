#include "tachyon/window.hpp"

#include <cmath>

namespace tachyon {

UncorrelationWindow compute_window(ParticleBeta beta1, TachyonBeta beta_t, SubluminalBeta beta) {
    const double b1 = beta1.value();
    const double bt = beta_t.value();
    const double b = beta.value();
    // beta_t +- beta > 0 by the type invariants.
    const double delta_m = -b1 * (1.0 + bt * b) / (bt + b);
    const double delta_M = b1 * (1.0 - bt * b) / (bt - b);
    return {delta_m, delta_M};
}

double window_width(ParticleBeta beta1, TachyonBeta beta_t, SubluminalBeta beta) noexcept {
    const double b1 = beta1.value();
    const double bt = beta_t.value();
    const double b = beta.value();
    return 2.0 * b1 * bt * (1.0 - b * b) / (bt * bt - b * b);
}

TachyonBeta invert_beta_t(const UncorrelationWindow& window) {
    const double k = (1.0 - window.delta_M() * window.delta_m()) / window.width();
    const double disc = k * k - 1.0;
    if (disc < 0.0)
        throw std::domain_error("invert_beta_t: infeasible window (discriminant < 0)");
    // k > 1 for every valid window; the larger root k + sqrt(k^2-1) is the
    // acceptable one (> 1), the rejected root is its exact reciprocal.
    return TachyonBeta(k + std::sqrt(disc));
}

SubluminalBeta invert_beta(const UncorrelationWindow& window) {
    const double sum = window.delta_M() + window.delta_m();
    if (std::fabs(sum) < kZeroSumEpsilon) return SubluminalBeta(0.0);
    const double l = (1.0 + window.delta_M() * window.delta_m()) / sum;
    // Unit product of roots: the acceptable |beta| < 1 root is the
    // reciprocal of the larger-magnitude one, computed addition-only.
    const double big = std::fabs(l) + std::sqrt(l * l - 1.0);
    const double sign = (sum > 0.0) ? -1.0 : 1.0;
    return SubluminalBeta(sign / big);
}

double approx_beta_t(const UncorrelationWindow& window) {
    if (window.width() < 1e-14)
        throw std::domain_error("approx_beta_t: degenerate window (width < 1e-14)");
    return 2.0 * (1.0 - window.delta_M() * window.delta_m()) / window.width();
}

double approx_beta(const UncorrelationWindow& window) noexcept {
    return -0.5 * (window.delta_M() + window.delta_m());
}

}  // namespace tachyon
