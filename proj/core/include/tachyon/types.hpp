#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

// Shared domain types. Internal unit convention throughout the library:
// c = 1 and d = 1 (detector half-separation), so speeds are dimensionless
// fractions of c, positions are in units of d and clock readings in units
// of d/c. SI conversion happens only at the CLI boundary.

namespace tachyon {

namespace detail {

[[noreturn]] inline void fail_invariant(const std::string& what) {
    throw std::invalid_argument(what);
}

}  // namespace detail

/// Speed of a subluminal frame or signal, -1 < value < 1.
class SubluminalBeta {
public:
    explicit SubluminalBeta(double value) : value_(value) {
        if (!(value > -1.0 && value < 1.0))
            detail::fail_invariant("subluminal beta requires -1 < value < 1, got " +
                                   std::to_string(value));
    }

    double value() const noexcept { return value_; }

    /// Lorentz factor 1/sqrt(1 - beta^2).
    double gamma() const noexcept { return 1.0 / std::sqrt(1.0 - value_ * value_); }

private:
    double value_;
};

/// Isotropic tachyon speed in the preferred frame, value > 1.
class TachyonBeta {
public:
    explicit TachyonBeta(double value) : value_(value) {
        if (!(value > 1.0))
            detail::fail_invariant("tachyon beta requires value > 1, got " +
                                   std::to_string(value));
    }

    double value() const noexcept { return value_; }

private:
    double value_;
};

/// Speed of the entangled particles in the lab frame, 0 < value <= 1
/// (1 means photons).
class ParticleBeta {
public:
    explicit ParticleBeta(double value) : value_(value) {
        if (!(value > 0.0 && value <= 1.0))
            detail::fail_invariant("particle beta requires 0 < value <= 1, got " +
                                   std::to_string(value));
    }

    double value() const noexcept { return value_; }

private:
    double value_;
};

/// Signed coordinate speed along the x axis, in fractions of c.
///
/// The sign encodes the clock-reading gradient along the propagation path
/// under standard synchronization, not the propagation direction (which is
/// carried explicitly elsewhere: the momentum direction, or the from/to
/// arguments of an arrival-time computation). The value is unbounded and a
/// dedicated marker represents the 1 + beta*beta_t = 0 pole, where the
/// coordinate speed is infinite.
class CoordinateSpeed {
public:
    static CoordinateSpeed finite(double value) noexcept { return {value, true}; }
    static CoordinateSpeed infinite() noexcept { return {0.0, false}; }

    bool is_infinite() const noexcept { return !finite_; }

    /// Signed value; throws for the infinite marker.
    double value() const {
        if (!finite_) throw std::domain_error("coordinate speed is infinite at the pole");
        return value_;
    }

    /// 1/V, with the pole mapped to exactly 0. This is the quantity all
    /// arrival-time arithmetic is linear in, so it is always usable.
    double reciprocal() const noexcept { return finite_ ? 1.0 / value_ : 0.0; }

private:
    CoordinateSpeed(double value, bool finite) : value_(value), finite_(finite) {}

    double value_;
    bool finite_;
};

/// Lorentz factor for a plain dimensionless speed (|beta| < 1 expected).
inline double lorentz_gamma(double beta) noexcept {
    return 1.0 / std::sqrt(1.0 - beta * beta);
}

}  // namespace tachyon
