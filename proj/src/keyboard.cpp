#include "gesture/keyboard.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include <json.hpp>

#include "gesture/errors.hpp"

namespace gesture {

namespace {

using nlohmann::ordered_json;

bool interiors_overlap(const Rect& a, const Rect& b) noexcept {
    return a.x < b.x + b.w && b.x < a.x + a.w && a.y < b.y + b.h && b.y < a.y + a.h;
}

bool rect_in_range(const Rect& r) noexcept {
    const auto finite = std::isfinite(r.x) && std::isfinite(r.y) && std::isfinite(r.w) && std::isfinite(r.h);
    return finite && r.x >= 0.0 && r.y >= 0.0 && r.w > 0.0 && r.h > 0.0 && r.x + r.w <= 1.0 && r.y + r.h <= 1.0;
}

std::string_view action_name(KeyActionKind k) {
    switch (k) {
        case KeyActionKind::Char: return "char";
        case KeyActionKind::Backspace: return "backspace";
        case KeyActionKind::Space: return "space";
        case KeyActionKind::Enter: return "enter";
    }
    return "char";
}

KeyboardLayout make_default_layout() {
    using namespace default_layout_geometry;
    const std::vector<std::string> rows = {"QWERTYUIOP", "ASDFGHJKL", "ZXCVBNM"};

    std::vector<Key> keys;
    auto place_row = [&](std::size_t row, std::size_t count, auto&& make_key) {
        const double width = static_cast<double>(count) * kKeySize + static_cast<double>(count - 1) * kGap;
        const double x0 = (1.0 - width) / 2.0;
        const double y = kBandTop + static_cast<double>(row) * (kKeySize + kGap);
        for (std::size_t i = 0; i < count; ++i) {
            Key k = make_key(i);
            k.rect = {x0 + static_cast<double>(i) * (kKeySize + kGap), y, kKeySize, kKeySize};
            keys.push_back(std::move(k));
        }
    };

    for (std::size_t r = 0; r < rows.size(); ++r) {
        place_row(r, rows[r].size(), [&](std::size_t i) {
            const char c = rows[r][i];
            return Key{std::string(1, c), {KeyActionKind::Char, c}, {}};
        });
    }
    place_row(3, 2, [](std::size_t i) {
        return i == 0 ? Key{"Space", {KeyActionKind::Space, '\0'}, {}}
                      : Key{"Backspace", {KeyActionKind::Backspace, '\0'}, {}};
    });
    return build_layout("default", std::move(keys));
}

}  // namespace

const Key* KeyboardLayout::find(std::string_view label) const noexcept {
    for (const auto& k : keys) {
        if (k.label == label) return &k;
    }
    return nullptr;
}

KeyboardLayout build_layout(std::string name, std::vector<Key> keys) {
    std::set<std::string> seen;
    for (const auto& k : keys) {
        if (k.label.empty()) {
            throw LayoutSpecError("key with empty label");
        }
        if (!seen.insert(k.label).second) {
            throw LayoutSpecError("duplicate label: " + k.label);
        }
        if (!rect_in_range(k.rect)) {
            throw LayoutSpecError("rect out of range: " + k.label);
        }
    }
    for (std::size_t i = 0; i < keys.size(); ++i) {
        for (std::size_t j = i + 1; j < keys.size(); ++j) {
            if (interiors_overlap(keys[i].rect, keys[j].rect)) {
                throw LayoutSpecError("overlapping keys: " + keys[i].label + ", " + keys[j].label);
            }
        }
    }
    return KeyboardLayout{std::move(name), std::move(keys)};
}

const KeyboardLayout& default_layout() {
    static const KeyboardLayout layout = make_default_layout();
    return layout;
}

KeyboardLayout parse_layout(std::string_view text) {
    std::string trimmed(text);
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
    trimmed.erase(trimmed.find_last_not_of(" \t\r\n") + 1);
    if (trimmed == "default") return default_layout();

    ordered_json doc;
    try {
        doc = ordered_json::parse(trimmed);
    } catch (const ordered_json::parse_error& e) {
        throw LayoutSpecError(std::string("malformed layout document: ") + e.what());
    }

    try {
        std::vector<Key> keys;
        for (const auto& entry : doc.at("keys")) {
            Key k;
            k.label = entry.at("label").get<std::string>();
            const auto action = entry.value("action", std::string("char"));
            if (action == "char") {
                const auto ch = entry.contains("char") ? entry.at("char").get<std::string>() : k.label;
                if (ch.size() != 1) {
                    throw LayoutSpecError("char action needs a single character: " + k.label);
                }
                k.action = {KeyActionKind::Char, ch[0]};
            } else if (action == "backspace") {
                k.action = {KeyActionKind::Backspace, '\0'};
            } else if (action == "space") {
                k.action = {KeyActionKind::Space, '\0'};
            } else if (action == "enter") {
                k.action = {KeyActionKind::Enter, '\0'};
            } else {
                throw LayoutSpecError("unknown action '" + action + "' for key " + k.label);
            }
            const auto& r = entry.at("rect");
            if (!r.is_array() || r.size() != 4) {
                throw LayoutSpecError("rect must be [x, y, w, h]: " + k.label);
            }
            k.rect = {r[0].get<double>(), r[1].get<double>(), r[2].get<double>(), r[3].get<double>()};
            keys.push_back(std::move(k));
        }
        return build_layout(doc.value("name", std::string("custom")), std::move(keys));
    } catch (const ordered_json::exception& e) {
        throw LayoutSpecError(std::string("bad layout entry: ") + e.what());
    }
}

std::string write_layout(const KeyboardLayout& layout) {
    ordered_json doc;
    doc["name"] = layout.name;
    doc["keys"] = ordered_json::array();
    for (const auto& k : layout.keys) {
        ordered_json entry;
        entry["label"] = k.label;
        entry["action"] = action_name(k.action.kind);
        if (k.action.kind == KeyActionKind::Char) entry["char"] = std::string(1, k.action.ch);
        entry["rect"] = {k.rect.x, k.rect.y, k.rect.w, k.rect.h};
        doc["keys"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

const Key* hit_test(const KeyboardLayout& layout, Point2 p) noexcept {
    const Key* best = nullptr;
    double best_d = std::numeric_limits<double>::infinity();
    for (const auto& k : layout.keys) {
        if (!k.rect.contains(p)) continue;
        const Point2 c = k.rect.center();
        const double d = std::hypot(p.x - c.x, p.y - c.y);
        if (d < best_d) {
            best = &k;
            best_d = d;
        }
    }
    return best;
}

TextBuffer apply_key(TextBuffer buf, const Key& key) {
    switch (key.action.kind) {
        case KeyActionKind::Char: buf.content.push_back(key.action.ch); break;
        case KeyActionKind::Space: buf.content.push_back(' '); break;
        case KeyActionKind::Enter: buf.content.push_back('\n'); break;
        case KeyActionKind::Backspace:
            if (!buf.content.empty()) buf.content.pop_back();
            break;
    }
    return buf;
}

HighlightState prune_highlights(HighlightState hs, std::int64_t t_now) {
    std::erase_if(hs.entries, [t_now](const HighlightEntry& e) { return e.expiry <= t_now; });
    return hs;
}

HighlightState mark_highlight(HighlightState hs, const Key& key, std::int64_t t_now, PaletteRng& rng) {
    hs = prune_highlights(std::move(hs), t_now);
    hs.entries.push_back({key.label, rng.next(), t_now + kHighlightLifetimeMs});
    return hs;
}

}  // namespace gesture
