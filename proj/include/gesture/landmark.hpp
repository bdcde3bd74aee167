#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace gesture {

inline constexpr std::size_t kLandmarkCount = 21;

/// Clamp slack applied to x and y before a coordinate is rejected.
inline constexpr double kRangeSlack = 0.05;

/// Default tip-vs-PIP distance ratio above which a finger counts as extended.
inline constexpr double kDefaultExtensionRatio = 1.1;

struct Landmark {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;  ///< relative depth, carried but unused by 2-D geometry

    friend bool operator==(const Landmark&, const Landmark&) = default;
};

enum class Handedness : std::uint8_t { Left, Right };

std::string_view to_string(Handedness h) noexcept;
std::optional<Handedness> parse_handedness(std::string_view s) noexcept;

enum class FingerId : std::uint8_t { Thumb, Index, Middle, Ring, Pinky };

/// Indices into the 21-point hand topology.
namespace lm {
inline constexpr int kWrist = 0;
inline constexpr int kThumbCmc = 1;
inline constexpr int kThumbMcp = 2;
inline constexpr int kThumbIp = 3;
inline constexpr int kThumbTip = 4;
inline constexpr int kIndexMcp = 5;
inline constexpr int kIndexPip = 6;
inline constexpr int kIndexDip = 7;
inline constexpr int kIndexTip = 8;
inline constexpr int kMiddleMcp = 9;
inline constexpr int kMiddlePip = 10;
inline constexpr int kMiddleDip = 11;
inline constexpr int kMiddleTip = 12;
inline constexpr int kRingMcp = 13;
inline constexpr int kRingPip = 14;
inline constexpr int kRingDip = 15;
inline constexpr int kRingTip = 16;
inline constexpr int kPinkyMcp = 17;
inline constexpr int kPinkyPip = 18;
inline constexpr int kPinkyDip = 19;
inline constexpr int kPinkyTip = 20;
}  // namespace lm

constexpr int tip_index(FingerId f) noexcept {
    switch (f) {
        case FingerId::Thumb: return lm::kThumbTip;
        case FingerId::Index: return lm::kIndexTip;
        case FingerId::Middle: return lm::kMiddleTip;
        case FingerId::Ring: return lm::kRingTip;
        case FingerId::Pinky: return lm::kPinkyTip;
    }
    return lm::kIndexTip;
}

// The thumb has no PIP joint; its MCP sits at the same chain depth (tip - 2).
constexpr int pip_index(FingerId f) noexcept {
    switch (f) {
        case FingerId::Thumb: return lm::kThumbMcp;
        case FingerId::Index: return lm::kIndexPip;
        case FingerId::Middle: return lm::kMiddlePip;
        case FingerId::Ring: return lm::kRingPip;
        case FingerId::Pinky: return lm::kPinkyPip;
    }
    return lm::kIndexPip;
}

/// A validated observation of one hand. Construct through validate_frame.
struct HandFrame {
    std::int64_t t = 0;  ///< session-relative milliseconds
    Handedness handedness = Handedness::Right;
    std::array<Landmark, kLandmarkCount> landmarks{};

    [[nodiscard]] const Landmark& operator[](int i) const { return landmarks[static_cast<std::size_t>(i)]; }

    friend bool operator==(const HandFrame&, const HandFrame&) = default;
};

/// Unvalidated frame as it arrives from a trace line or a wire message.
struct RawFrame {
    std::int64_t t = 0;
    Handedness handedness = Handedness::Right;
    std::vector<Landmark> landmarks;
};

/// Checks count, range and ordering; clamps x,y that fall within the slack band.
/// `prev_t` is the previous frame's timestamp in the same session, if any.
HandFrame validate_frame(const RawFrame& raw, std::optional<std::int64_t> prev_t = std::nullopt);

/// Re-validates an already constructed frame (idempotent on valid frames).
HandFrame validate_frame(const HandFrame& frame, std::optional<std::int64_t> prev_t = std::nullopt);

/// Planar distance between two landmarks.
double planar_distance(const Landmark& a, const Landmark& b) noexcept;

/// Wrist to middle-finger MCP distance. Throws DegenerateHandError below 1e-6.
double hand_scale(const HandFrame& frame);

/// Tip-to-tip distance divided by hand_scale.
double pinch_distance(const HandFrame& frame, FingerId a, FingerId b);

bool finger_extended(const HandFrame& frame, FingerId finger, double ratio = kDefaultExtensionRatio);

}  // namespace gesture
