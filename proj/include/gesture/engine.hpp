#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gesture/landmark.hpp"

namespace gesture {

/// Tunable engine constants. All distances are in hand_scale units.
struct Thresholds {
    double tau_down = 0.35;         ///< pinch closes below this
    double tau_up = 0.45;           ///< pinch opens above this
    std::int64_t double_window_ms = 400;
    double scroll_gain = 40.0;      ///< lines per unit of normalized vertical motion
    double margin = 0.15;           ///< camera border excluded from the active region
    double alpha = 0.35;            ///< cursor smoothing coefficient
    double extension_ratio = kDefaultExtensionRatio;

    /// Throws ThresholdError when an invariant is violated.
    void validate() const;

    friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

enum class PoseClass : std::uint8_t { Neutral, Point, ClickReady, ScrollPose };

std::string_view to_string(PoseClass p) noexcept;

enum class Mode : std::uint8_t { Mouse, Keyboard };

std::string_view to_string(Mode m) noexcept;
std::optional<Mode> parse_mode(std::string_view s) noexcept;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

enum class ChannelState : std::uint8_t { Open, Closed };

struct PinchChannel {
    FingerId a = FingerId::Thumb;
    FingerId b = FingerId::Index;
    ChannelState state = ChannelState::Open;
    std::int64_t t_closed = 0;  ///< time of the last Open->Closed transition

    friend bool operator==(const PinchChannel&, const PinchChannel&) = default;
};

struct ChannelStep {
    PinchChannel channel;
    bool cycle_completed = false;
};

enum class EventKind : std::uint8_t { CursorMove, LeftClick, RightClick, DoubleClick, Scroll, KeyTap };

std::string_view to_string(EventKind k) noexcept;
std::optional<EventKind> parse_event_kind(std::string_view s) noexcept;

/// Engine output. `pos` is meaningful for CursorMove and KeyTap, `scroll` for Scroll.
struct GestureEvent {
    EventKind kind = EventKind::CursorMove;
    std::int64_t t = 0;
    Point2 pos{};
    int scroll = 0;

    friend bool operator==(const GestureEvent&, const GestureEvent&) = default;
};

struct GestureState {
    Mode mode = Mode::Mouse;
    PinchChannel thumb_index{FingerId::Thumb, FingerId::Index};
    PinchChannel index_middle{FingerId::Index, FingerId::Middle};
    std::optional<Point2> cursor;
    std::optional<std::int64_t> last_left_release_t;
    std::optional<Point2> tap_anchor;  ///< index tip captured when the thumb-index pinch closed
    std::optional<HandFrame> prev_frame;

    friend bool operator==(const GestureState&, const GestureState&) = default;
};

GestureState initial_state(Mode mode);

PoseClass classify_pose(const HandFrame& frame, const Thresholds& th);

/// Hysteresis transition for one pinch channel; a close-then-open cycle completes on release.
ChannelStep step_channel(const PinchChannel& ch, double distance, std::int64_t t, const Thresholds& th);

/// Camera point to screen point: active region stretched to the unit square, x mirrored, clamped.
Point2 map_to_screen(Point2 p, const Thresholds& th);

/// Exponential moving average; returns `p` when there is no previous value.
Point2 smooth(const std::optional<Point2>& prev, Point2 p, double alpha);

struct StepResult {
    GestureState state;
    std::vector<GestureEvent> events;
};

/// Advances the state machine by one frame. Throws OutOfOrderFrameError if
/// frame.t does not exceed the previous frame's time.
StepResult step(const GestureState& state, const HandFrame& frame, const Thresholds& th);

/// Rounds half away from zero.
int round_lines(double v) noexcept;

}  // namespace gesture
