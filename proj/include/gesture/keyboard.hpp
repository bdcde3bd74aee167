#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gesture/engine.hpp"

namespace gesture {

struct Rect {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;

    [[nodiscard]] bool contains(Point2 p) const noexcept {
        return p.x >= x && p.x <= x + w && p.y >= y && p.y <= y + h;
    }
    [[nodiscard]] Point2 center() const noexcept { return {x + w / 2.0, y + h / 2.0}; }

    friend bool operator==(const Rect&, const Rect&) = default;
};

enum class KeyActionKind : std::uint8_t { Char, Backspace, Space, Enter };

struct KeyAction {
    KeyActionKind kind = KeyActionKind::Char;
    char ch = '\0';  ///< only for Char

    friend bool operator==(const KeyAction&, const KeyAction&) = default;
};

struct Key {
    std::string label;
    KeyAction action;
    Rect rect;

    friend bool operator==(const Key&, const Key&) = default;
};

struct KeyboardLayout {
    std::string name;
    std::vector<Key> keys;

    [[nodiscard]] const Key* find(std::string_view label) const noexcept;

    friend bool operator==(const KeyboardLayout&, const KeyboardLayout&) = default;
};

/// Default geometry constants.
namespace default_layout_geometry {
inline constexpr double kKeySize = 0.09;
inline constexpr double kGap = 0.005;
inline constexpr double kBandTop = 0.55;
inline constexpr double kBandBottom = 0.95;
}  // namespace default_layout_geometry

/// Throws LayoutSpecError naming the offending labels on overlap, duplicate
/// label or out-of-range rect. Shared edges are allowed.
KeyboardLayout build_layout(std::string name, std::vector<Key> keys);

/// Four-row QWERTY letters plus Space and Backspace: 28 keys.
const KeyboardLayout& default_layout();

/// Parses the JSON layout document; "default" as the whole text yields default_layout().
KeyboardLayout parse_layout(std::string_view text);
std::string write_layout(const KeyboardLayout& layout);

/// Containing key; on shared boundaries the nearest center wins, ties to the lower index.
const Key* hit_test(const KeyboardLayout& layout, Point2 p) noexcept;

struct TextBuffer {
    std::string content;

    friend bool operator==(const TextBuffer&, const TextBuffer&) = default;
};

TextBuffer apply_key(TextBuffer buf, const Key& key);

inline constexpr std::size_t kPaletteSize = 8;
inline constexpr std::int64_t kHighlightLifetimeMs = 250;

struct HighlightEntry {
    std::string label;
    std::uint32_t color = 0;
    std::int64_t expiry = 0;

    friend bool operator==(const HighlightEntry&, const HighlightEntry&) = default;
};

struct HighlightState {
    std::vector<HighlightEntry> entries;

    friend bool operator==(const HighlightState&, const HighlightState&) = default;
};

/// Seeded palette picker; identical seeds give identical color sequences.
class PaletteRng {
public:
    explicit PaletteRng(std::uint64_t seed = 0) : engine_(seed) {}

    std::uint32_t next() { return static_cast<std::uint32_t>(engine_() % kPaletteSize); }

private:
    std::mt19937_64 engine_;
};

/// Drops entries whose expiry is at or before t_now.
HighlightState prune_highlights(HighlightState hs, std::int64_t t_now);

HighlightState mark_highlight(HighlightState hs, const Key& key, std::int64_t t_now, PaletteRng& rng);

}  // namespace gesture
