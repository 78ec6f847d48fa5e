#include "tachyon/timeline.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "tachyon/aberration.hpp"
#include "tachyon/format.hpp"
#include "tachyon/kinematics.hpp"

namespace tachyon {

const char* to_string(EventLabel label) noexcept {
    switch (label) {
        case EventLabel::Creation: return "Creation";
        case EventLabel::LeftDetection: return "LeftDetection";
        case EventLabel::RightDetection: return "RightDetection";
        case EventLabel::LeftTachyonArrival: return "LeftTachyonArrival";
        case EventLabel::RightTachyonArrival: return "RightTachyonArrival";
        case EventLabel::TachyonInterception: return "TachyonInterception";
    }
    return "?";
}

const char* to_string(RegimeLabel label) noexcept {
    switch (label) {
        case RegimeLabel::CorrelatedViaLeftTachyon: return "CorrelatedViaLeftTachyon";
        case RegimeLabel::Uncorrelated: return "Uncorrelated";
        case RegimeLabel::CorrelatedViaRightTachyon: return "CorrelatedViaRightTachyon";
    }
    return "?";
}

namespace {

// Detector clock readings at the two correlating-tachyon arrivals, given
// the signed reciprocal speeds (pole -> 0, so no branch anywhere).
TimelineRun run_with_reciprocals(const Geometry1D& geometry, double recip_plus,
                                 double recip_minus) {
    const double b1 = geometry.beta1().value();
    const double x_bar = geometry.x_bar();
    const double t_bar = geometry.t_bar();

    const double t_plus = t_bar + (1.0 - x_bar) / b1;   // Rparticle detection
    const double t_minus = t_bar + (1.0 + x_bar) / b1;  // Lparticle detection

    const double arr_left = t_minus + 2.0 * recip_plus;   // Ltachyon at x=+1
    const double arr_right = t_plus + 2.0 * recip_minus;  // Rtachyon at x=-1

    const bool cond_a = t_plus < arr_left;
    const bool cond_b = t_minus < arr_right;

    UncorrelationWindow window(-b1 * recip_plus, b1 * recip_minus);

    RegimeLabel regime;
    if (cond_a && cond_b) {
        regime = RegimeLabel::Uncorrelated;
    } else if (!cond_a && cond_b) {
        regime = RegimeLabel::CorrelatedViaLeftTachyon;
    } else if (cond_a && !cond_b) {
        regime = RegimeLabel::CorrelatedViaRightTachyon;
    } else {
        // Regime trichotomy is a runtime invariant: both conditions can
        // only fail if Delta_M <= Delta_m.
        throw std::logic_error("timeline: conditions (a) and (b) both failed");
    }

    std::vector<Event> events;
    events.push_back({x_bar, t_bar, EventLabel::Creation});
    events.push_back({-1.0, t_minus, EventLabel::LeftDetection});
    events.push_back({1.0, t_plus, EventLabel::RightDetection});

    if (regime == RegimeLabel::Uncorrelated) {
        events.push_back({1.0, arr_left, EventLabel::LeftTachyonArrival});
        events.push_back({-1.0, arr_right, EventLabel::RightTachyonArrival});
    } else if (regime == RegimeLabel::CorrelatedViaLeftTachyon) {
        // Ltachyon worldline t(x) = t_minus + (x+1) recip_plus meets the
        // Rparticle worldline t(x) = t_bar + (x - x_bar)/beta1; the slopes
        // differ because |V| > 1 >= beta1.
        const double x_int =
            (t_bar - x_bar / b1 - t_minus - recip_plus) / (recip_plus - 1.0 / b1);
        if (x_int < 1.0) {
            const double t_int = t_bar + (x_int - x_bar) / b1;
            events.push_back({x_int, t_int, EventLabel::TachyonInterception});
        } else {
            // Boundary case: the interception degenerates onto the detector.
            events.push_back({1.0, arr_left, EventLabel::LeftTachyonArrival});
        }
    } else {
        // Rtachyon t(x) = t_plus + (1 - x) recip_minus meets the Lparticle
        // worldline t(x) = t_bar + (x_bar - x)/beta1.
        const double x_int =
            (t_bar + x_bar / b1 - t_plus - recip_minus) / (1.0 / b1 - recip_minus);
        if (x_int > -1.0) {
            const double t_int = t_bar + (x_bar - x_int) / b1;
            events.push_back({x_int, t_int, EventLabel::TachyonInterception});
        } else {
            events.push_back({-1.0, arr_right, EventLabel::RightTachyonArrival});
        }
    }

    // Ordered by lab clock reading; backward-in-time tachyon events sort
    // before their causes, which is the point of the diagrams.
    std::stable_sort(events.begin(), events.end(),
                     [](const Event& a, const Event& b) { return a.t < b.t; });

    return {x_bar, b1, t_bar, recip_plus, recip_minus, window, regime, std::move(events)};
}

}  // namespace

TimelineRun run_timeline(const Geometry1D& geometry, TachyonBeta beta_t, SubluminalBeta beta) {
    // Arrival clock readings come from the aether-frame transform; the
    // reciprocals recovered from them stay finite through the poles.
    const double arr_left = tachyon_arrival_time(0.0, -1.0, 1.0, beta_t, beta);
    const double arr_right = tachyon_arrival_time(0.0, 1.0, -1.0, beta_t, beta);
    return run_with_reciprocals(geometry, 0.5 * arr_left, 0.5 * arr_right);
}

TimelineRun run_timeline_3d(const Geometry1D& geometry, double theta, TachyonBeta beta_t,
                            SubluminalBeta beta) {
    constexpr double kPi = 3.141592653589793238462643383279502884;
    const double tp_plus = invert_angle_exact(theta, beta_t, beta);
    const double tp_minus = invert_angle_exact(kPi - theta, beta_t, beta);
    const double recip_plus = tachyon_speed_3d(tp_plus, beta_t, beta).reciprocal();
    const double recip_minus = tachyon_speed_3d(tp_minus, beta_t, beta).reciprocal();
    return run_with_reciprocals(geometry, recip_plus, recip_minus);
}

RegimeLabel classify_delta(double delta, const UncorrelationWindow& window) {
    if (!(delta > -1.0 && delta < 1.0))
        detail::fail_invariant("classify_delta requires -1 < delta < 1");
    if (delta <= window.delta_m()) return RegimeLabel::CorrelatedViaLeftTachyon;
    if (delta >= window.delta_M()) return RegimeLabel::CorrelatedViaRightTachyon;
    return RegimeLabel::Uncorrelated;
}

namespace {

struct Vertex {
    double x;
    double t;
    std::string label;
};

struct Polyline {
    std::string name;
    Vertex a;
    Vertex b;
};

void emit(std::ostream& out, const Polyline& line) {
    out << line.name << ',' << line.a.label << ',' << format_sig(line.a.x) << ','
        << format_sig(line.a.t) << '\n';
    out << line.name << ',' << line.b.label << ',' << format_sig(line.b.x) << ','
        << format_sig(line.b.t) << '\n';
}

const Event* find_event(const TimelineRun& run, EventLabel label) {
    for (const Event& e : run.events)
        if (e.label == label) return &e;
    return nullptr;
}

}  // namespace

void export_minkowski(const TimelineRun& run, std::ostream& out) {
    const double t_plus = run.t_bar + (1.0 - run.x_bar) / run.beta1;
    const double t_minus = run.t_bar + (1.0 + run.x_bar) / run.beta1;
    const double t_det_hi = std::max(t_plus, t_minus);

    std::vector<Polyline> tachyons;
    std::vector<std::string> endpoint_notes;

    auto add_tachyon = [&](const char* name, Vertex dep, const Event* end_event,
                           EventLabel arrival_label, double arrival_t) {
        if (end_event && end_event->label == EventLabel::TachyonInterception) {
            tachyons.push_back({name, dep,
                                {end_event->x, end_event->t, to_string(end_event->label)}});
            endpoint_notes.push_back(std::string(name) + "_endpoint=interception");
            return;
        }
        // Detector arrival; truncate at the later detection time when the
        // arrival clock reading lies beyond it (plotting window).
        const double x_arr = (arrival_label == EventLabel::LeftTachyonArrival) ? 1.0 : -1.0;
        if (arrival_t > t_det_hi && arrival_t != dep.t) {
            const double frac = (t_det_hi - dep.t) / (arrival_t - dep.t);
            const double x_cut = dep.x + frac * (x_arr - dep.x);
            tachyons.push_back({name, dep, {x_cut, t_det_hi, "truncated"}});
            endpoint_notes.push_back(std::string(name) +
                                     "_endpoint=truncated_at_later_detection");
        } else {
            tachyons.push_back({name, dep, {x_arr, arrival_t, to_string(arrival_label)}});
            endpoint_notes.push_back(std::string(name) + "_endpoint=detector_arrival");
        }
    };

    const double arr_left = t_minus + 2.0 * run.recip_plus;
    const double arr_right = t_plus + 2.0 * run.recip_minus;
    const Vertex dep_left{-1.0, t_minus, to_string(EventLabel::LeftDetection)};
    const Vertex dep_right{1.0, t_plus, to_string(EventLabel::RightDetection)};

    switch (run.regime) {
        case RegimeLabel::CorrelatedViaLeftTachyon:
            add_tachyon("Ltachyon", dep_left, find_event(run, EventLabel::TachyonInterception),
                        EventLabel::LeftTachyonArrival, arr_left);
            break;
        case RegimeLabel::CorrelatedViaRightTachyon:
            add_tachyon("Rtachyon", dep_right, find_event(run, EventLabel::TachyonInterception),
                        EventLabel::RightTachyonArrival, arr_right);
            break;
        case RegimeLabel::Uncorrelated:
            add_tachyon("Ltachyon", dep_left, nullptr, EventLabel::LeftTachyonArrival, arr_left);
            add_tachyon("Rtachyon", dep_right, nullptr, EventLabel::RightTachyonArrival,
                        arr_right);
            break;
    }

    double t_lo = std::min(run.t_bar, std::min(t_plus, t_minus));
    double t_hi = std::max(run.t_bar, t_det_hi);
    for (const Polyline& p : tachyons) {
        t_lo = std::min({t_lo, p.a.t, p.b.t});
        t_hi = std::max({t_hi, p.a.t, p.b.t});
    }

    out << "# minkowski worldlines (positions in d, clock readings in d/c)\n";
    out << "# regime=" << to_string(run.regime) << "\n";
    out << "# x_bar=" << format_sig(run.x_bar) << " beta1=" << format_sig(run.beta1)
        << " t_bar=" << format_sig(run.t_bar) << " delta_m=" << format_sig(run.window.delta_m())
        << " delta_M=" << format_sig(run.window.delta_M()) << "\n";
    for (const std::string& note : endpoint_notes) out << "# " << note << "\n";
    out << "worldline,label,x_over_d,ct_over_d\n";

    emit(out, {"Lparticle", {run.x_bar, run.t_bar, to_string(EventLabel::Creation)},
               {-1.0, t_minus, to_string(EventLabel::LeftDetection)}});
    emit(out, {"Rparticle", {run.x_bar, run.t_bar, to_string(EventLabel::Creation)},
               {1.0, t_plus, to_string(EventLabel::RightDetection)}});
    emit(out, {"Ldetector", {-1.0, t_lo, "start"}, {-1.0, t_hi, "end"}});
    emit(out, {"Rdetector", {1.0, t_lo, "start"}, {1.0, t_hi, "end"}});
    for (const Polyline& p : tachyons) emit(out, p);
}

std::string minkowski_csv(const TimelineRun& run) {
    std::ostringstream out;
    export_minkowski(run, out);
    return out.str();
}

}  // namespace tachyon
