#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tachyon/types.hpp"
#include "tachyon/window.hpp"

// Single entangled-pair runs as events on worldlines: detection times,
// tachyon arrivals, the three-regime classification, and the Minkowski
// diagram export.

namespace tachyon {

/// One entangled-pair creation. Positions are in units of the detector
/// half-separation d (detectors at x = -1 and x = +1; d == 1 internally,
/// SI scaling only at the CLI boundary); times in units of d/c.
class Geometry1D {
public:
    Geometry1D(double x_bar, ParticleBeta beta1, double t_bar = 0.0)
        : x_bar_(x_bar), beta1_(beta1), t_bar_(t_bar) {
        if (!(x_bar > -1.0 && x_bar < 1.0))
            detail::fail_invariant("source position requires -1 < x_bar/d < 1, got " +
                                   std::to_string(x_bar));
    }

    double x_bar() const noexcept { return x_bar_; }
    ParticleBeta beta1() const noexcept { return beta1_; }
    double t_bar() const noexcept { return t_bar_; }

private:
    double x_bar_;
    ParticleBeta beta1_;
    double t_bar_;
};

enum class EventLabel {
    Creation,
    LeftDetection,
    RightDetection,
    LeftTachyonArrival,   ///< Ltachyon reaches the right detector position
    RightTachyonArrival,  ///< Rtachyon reaches the left detector position
    TachyonInterception,  ///< correlating tachyon meets the in-flight particle
};

const char* to_string(EventLabel label) noexcept;

struct Event {
    double x;  ///< units of d
    double t;  ///< lab clock reading, units of d/c
    EventLabel label;
};

enum class RegimeLabel {
    CorrelatedViaLeftTachyon,   ///< x_bar < Delta_m d: Ltachyon reaches Rparticle first
    Uncorrelated,               ///< Delta_m d < x_bar < Delta_M d
    CorrelatedViaRightTachyon,  ///< x_bar > Delta_M d: Rtachyon reaches Lparticle first
};

const char* to_string(RegimeLabel label) noexcept;

/// Completed run: events ordered by lab clock reading (synchronization
/// order, not causal order -- a backward-in-time interception sorts before
/// the detection that launched the tachyon), one regime label, and the
/// window the classification was made against.
struct TimelineRun {
    double x_bar;
    double beta1;
    double t_bar;
    double recip_plus;   ///< 1/V+ toward +x (0 at the pole)
    double recip_minus;  ///< 1/V- toward -x (0 at the pole)
    UncorrelationWindow window;
    RegimeLabel regime;
    std::vector<Event> events;
};

/// Simulate one pair with the 1D composition speeds of the (beta_t, beta)
/// aether model. Conditions (a) t+ < t- + 2d/V+ and (b) t- < t+ + 2d/V-
/// are evaluated through pole-safe aether-frame arithmetic; uncorrelated
/// iff both hold, and the failing condition names the correlating tachyon.
TimelineRun run_timeline(const Geometry1D& geometry, TachyonBeta beta_t, SubluminalBeta beta);

/// Same run with the exact 3D aberration speeds for a flight axis at angle
/// theta to the aether velocity (numeric inversion of the lab angle, no
/// large-beta_t approximation).
TimelineRun run_timeline_3d(const Geometry1D& geometry, double theta, TachyonBeta beta_t,
                            SubluminalBeta beta);

/// Pure threshold classification of delta = x_bar/d against a window.
/// Boundary values classify as the adjacent correlated regime (the
/// uncorrelation inequalities are strict). Throws std::invalid_argument
/// unless -1 < delta < 1.
RegimeLabel classify_delta(double delta, const UncorrelationWindow& window);

/// Minkowski worldline table: metadata comment lines, then the header
/// `worldline,label,x_over_d,ct_over_d`, one row per polyline vertex, 12
/// significant digits, worldlines in fixed order (Lparticle, Rparticle,
/// Ldetector, Rdetector, tachyon(s)). Correlated runs draw the correlating
/// tachyon to its interception (or to the detector when the interception
/// degenerates onto it); uncorrelated runs draw both tachyons truncated at
/// the later detection time.
void export_minkowski(const TimelineRun& run, std::ostream& out);

/// Convenience string form of export_minkowski.
std::string minkowski_csv(const TimelineRun& run);

}  // namespace tachyon
