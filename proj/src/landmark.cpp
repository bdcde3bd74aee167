#include "gesture/landmark.hpp"

#include <cmath>
#include <string>

#include "gesture/errors.hpp"

namespace gesture {

namespace {

constexpr double kDegenerateEpsilon = 1e-6;

double clamp_coordinate(double v, const char* axis, std::size_t index) {
    if (!std::isfinite(v) || v < -kRangeSlack || v > 1.0 + kRangeSlack) {
        throw RangeError("landmark " + std::to_string(index) + " " + axis + "=" + std::to_string(v) +
                         " outside [-0.05, 1.05]");
    }
    if (v < 0.0) return 0.0;
    if (v > 1.0) return 1.0;
    return v;
}

}  // namespace

std::string_view to_string(Handedness h) noexcept { return h == Handedness::Left ? "left" : "right"; }

std::optional<Handedness> parse_handedness(std::string_view s) noexcept {
    if (s == "left" || s == "Left") return Handedness::Left;
    if (s == "right" || s == "Right") return Handedness::Right;
    return std::nullopt;
}

HandFrame validate_frame(const RawFrame& raw, std::optional<std::int64_t> prev_t) {
    if (raw.landmarks.size() != kLandmarkCount) {
        throw LandmarkCountError("expected 21 landmarks, got " + std::to_string(raw.landmarks.size()));
    }
    if (raw.t < 0) {
        throw TimestampError("negative timestamp " + std::to_string(raw.t));
    }
    if (prev_t && raw.t <= *prev_t) {
        throw TimestampError("timestamp " + std::to_string(raw.t) + " not after " + std::to_string(*prev_t));
    }

    HandFrame frame;
    frame.t = raw.t;
    frame.handedness = raw.handedness;
    for (std::size_t i = 0; i < kLandmarkCount; ++i) {
        const Landmark& in = raw.landmarks[i];
        if (!std::isfinite(in.z)) {
            throw RangeError("landmark " + std::to_string(i) + " has non-finite z");
        }
        frame.landmarks[i] = {clamp_coordinate(in.x, "x", i), clamp_coordinate(in.y, "y", i), in.z};
    }
    return frame;
}

HandFrame validate_frame(const HandFrame& frame, std::optional<std::int64_t> prev_t) {
    RawFrame raw{frame.t, frame.handedness, {frame.landmarks.begin(), frame.landmarks.end()}};
    return validate_frame(raw, prev_t);
}

double planar_distance(const Landmark& a, const Landmark& b) noexcept { return std::hypot(a.x - b.x, a.y - b.y); }

double hand_scale(const HandFrame& frame) {
    const double d = planar_distance(frame[lm::kWrist], frame[lm::kMiddleMcp]);
    if (d < kDegenerateEpsilon) {
        throw DegenerateHandError("wrist and middle MCP coincide");
    }
    return d;
}

double pinch_distance(const HandFrame& frame, FingerId a, FingerId b) {
    const double scale = hand_scale(frame);
    return planar_distance(frame[tip_index(a)], frame[tip_index(b)]) / scale;
}

bool finger_extended(const HandFrame& frame, FingerId finger, double ratio) {
    const Landmark& wrist = frame[lm::kWrist];
    const double to_pip = planar_distance(wrist, frame[pip_index(finger)]);
    if (to_pip < kDegenerateEpsilon) {
        throw DegenerateHandError("wrist and PIP coincide");
    }
    return planar_distance(wrist, frame[tip_index(finger)]) > ratio * to_pip;
}

}  // namespace gesture
