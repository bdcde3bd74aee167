#include "gesture/engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gesture/errors.hpp"

namespace gesture {

void Thresholds::validate() const {
    if (!(tau_down > 0.0 && tau_down < tau_up)) {
        throw ThresholdError("require 0 < tau_down < tau_up");
    }
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw ThresholdError("require 0 < alpha <= 1");
    }
    if (!(margin >= 0.0 && margin < 0.5)) {
        throw ThresholdError("require 0 <= margin < 0.5");
    }
    if (double_window_ms < 0) {
        throw ThresholdError("double_window_ms must be non-negative");
    }
    if (!std::isfinite(scroll_gain)) {
        throw ThresholdError("scroll_gain must be finite");
    }
    if (!(extension_ratio > 0.0) || !std::isfinite(extension_ratio)) {
        throw ThresholdError("extension_ratio must be positive");
    }
}

std::string_view to_string(PoseClass p) noexcept {
    switch (p) {
        case PoseClass::Neutral: return "Neutral";
        case PoseClass::Point: return "Point";
        case PoseClass::ClickReady: return "ClickReady";
        case PoseClass::ScrollPose: return "ScrollPose";
    }
    return "Neutral";
}

std::string_view to_string(Mode m) noexcept { return m == Mode::Mouse ? "mouse" : "keyboard"; }

std::optional<Mode> parse_mode(std::string_view s) noexcept {
    if (s == "mouse" || s == "MouseMode") return Mode::Mouse;
    if (s == "keyboard" || s == "KeyboardMode") return Mode::Keyboard;
    return std::nullopt;
}

std::string_view to_string(EventKind k) noexcept {
    switch (k) {
        case EventKind::CursorMove: return "CursorMove";
        case EventKind::LeftClick: return "LeftClick";
        case EventKind::RightClick: return "RightClick";
        case EventKind::DoubleClick: return "DoubleClick";
        case EventKind::Scroll: return "Scroll";
        case EventKind::KeyTap: return "KeyTap";
    }
    return "CursorMove";
}

std::optional<EventKind> parse_event_kind(std::string_view s) noexcept {
    for (auto k : {EventKind::CursorMove, EventKind::LeftClick, EventKind::RightClick, EventKind::DoubleClick,
                   EventKind::Scroll, EventKind::KeyTap}) {
        if (to_string(k) == s) return k;
    }
    return std::nullopt;
}

GestureState initial_state(Mode mode) {
    GestureState s;
    s.mode = mode;
    return s;
}

PoseClass classify_pose(const HandFrame& frame, const Thresholds& th) {
    const bool index = finger_extended(frame, FingerId::Index, th.extension_ratio);
    const bool middle = finger_extended(frame, FingerId::Middle, th.extension_ratio);
    const bool ring = finger_extended(frame, FingerId::Ring, th.extension_ratio);

    if (index && middle && ring) return PoseClass::ScrollPose;
    if (index && middle) return PoseClass::ClickReady;
    if (index) return PoseClass::Point;
    return PoseClass::Neutral;
}

ChannelStep step_channel(const PinchChannel& ch, double distance, std::int64_t t, const Thresholds& th) {
    ChannelStep out{ch, false};
    if (ch.state == ChannelState::Open && distance < th.tau_down) {
        out.channel.state = ChannelState::Closed;
        out.channel.t_closed = t;
    } else if (ch.state == ChannelState::Closed && distance > th.tau_up) {
        out.channel.state = ChannelState::Open;
        out.cycle_completed = true;
    }
    return out;
}

Point2 map_to_screen(Point2 p, const Thresholds& th) {
    const double span = 1.0 - 2.0 * th.margin;
    const double u = std::clamp((p.x - th.margin) / span, 0.0, 1.0);
    const double v = std::clamp((p.y - th.margin) / span, 0.0, 1.0);
    return {1.0 - u, v};
}

Point2 smooth(const std::optional<Point2>& prev, Point2 p, double alpha) {
    if (!prev) return p;
    return {alpha * p.x + (1.0 - alpha) * prev->x, alpha * p.y + (1.0 - alpha) * prev->y};
}

int round_lines(double v) noexcept { return static_cast<int>(std::lround(v)); }

namespace {

Point2 index_tip(const HandFrame& f) { return {f[lm::kIndexTip].x, f[lm::kIndexTip].y}; }

}  // namespace

StepResult step(const GestureState& state, const HandFrame& frame, const Thresholds& th) {
    if (state.prev_frame && frame.t <= state.prev_frame->t) {
        throw OutOfOrderFrameError("frame t=" + std::to_string(frame.t) + " not after t=" +
                                   std::to_string(state.prev_frame->t));
    }

    const PoseClass pose = classify_pose(frame, th);
    const double d_ti = pinch_distance(frame, FingerId::Thumb, FingerId::Index);
    const double d_im = pinch_distance(frame, FingerId::Index, FingerId::Middle);

    StepResult out{state, {}};
    GestureState& next = out.state;
    auto& events = out.events;

    const ChannelStep ti = step_channel(state.thumb_index, d_ti, frame.t, th);
    const ChannelStep im = step_channel(state.index_middle, d_im, frame.t, th);
    next.thumb_index = ti.channel;
    next.index_middle = im.channel;

    const Point2 tip = index_tip(frame);

    if (state.mode == Mode::Keyboard) {
        // Anchor in mirrored camera space so it lines up with the mirrored preview.
        if (state.thumb_index.state == ChannelState::Open && ti.channel.state == ChannelState::Closed) {
            next.tap_anchor = Point2{1.0 - tip.x, tip.y};
        }
        if (ti.cycle_completed) {
            const Point2 at = next.tap_anchor.value_or(Point2{1.0 - tip.x, tip.y});
            events.push_back({EventKind::KeyTap, frame.t, at, 0});
            next.tap_anchor.reset();
        }
    } else {
        if (pose == PoseClass::Point || pose == PoseClass::ClickReady) {
            next.cursor = smooth(state.cursor, map_to_screen(tip, th), th.alpha);
            events.push_back({EventKind::CursorMove, frame.t, *next.cursor, 0});
        }
        if (pose == PoseClass::ClickReady) {
            if (im.cycle_completed) {
                events.push_back({EventKind::LeftClick, frame.t, {}, 0});
                const std::int64_t press_t = im.channel.t_closed;
                if (state.last_left_release_t && press_t - *state.last_left_release_t <= th.double_window_ms) {
                    events.push_back({EventKind::DoubleClick, frame.t, {}, 0});
                    next.last_left_release_t.reset();
                } else {
                    next.last_left_release_t = frame.t;
                }
            }
            if (ti.cycle_completed) {
                events.push_back({EventKind::RightClick, frame.t, {}, 0});
            }
        }
        if (pose == PoseClass::ScrollPose && state.prev_frame) {
            const double dy = (*state.prev_frame)[lm::kIndexTip].y - tip.y;
            const int lines = round_lines(th.scroll_gain * dy);
            if (lines != 0) {
                events.push_back({EventKind::Scroll, frame.t, {}, lines});
            }
        }
    }

    next.prev_frame = frame;
    return out;
}

}  // namespace gesture
