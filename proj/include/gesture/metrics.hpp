#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gesture/engine.hpp"

namespace gesture {

/// Action rows of the evaluation table, in display order.
enum class Action : std::uint8_t { LeftClick, RightClick, DoubleClick, Scroll, Keypress, Point };

inline constexpr Action kAllActions[] = {Action::LeftClick, Action::RightClick, Action::DoubleClick,
                                         Action::Scroll,    Action::Keypress,   Action::Point};

std::string_view to_string(Action a) noexcept;        ///< identifier, e.g. "LeftClick"
std::string_view display_name(Action a) noexcept;     ///< table label, e.g. "Left Click"
std::optional<Action> parse_action(std::string_view s) noexcept;

/// Engine event kind that counts as a correct observation of `a`.
EventKind expected_kind(Action a) noexcept;

struct ScriptEntry {
    std::int64_t t = 0;
    Action action = Action::Point;

    friend bool operator==(const ScriptEntry&, const ScriptEntry&) = default;
};

struct GroundTruthScript {
    std::vector<ScriptEntry> entries;
};

GroundTruthScript parse_script(std::string_view bytes);
std::string write_script(const GroundTruthScript& script);

struct AttemptRecord {
    Action action = Action::Point;
    bool detected = false;
    bool correct = false;
    std::string session_id;
    std::string machine_id;

    friend bool operator==(const AttemptRecord&, const AttemptRecord&) = default;
};

std::vector<AttemptRecord> parse_records(std::string_view bytes);
std::string write_records(std::span<const AttemptRecord> records);

inline constexpr std::int64_t kDefaultMatchWindowMs = 500;

/// Greedy matching in script order. Each entry takes an unconsumed event
/// within +-window_ms, preferring the earliest of the expected kind and
/// otherwise the earliest of any kind. Each event is consumed at most once.
std::vector<AttemptRecord> score(std::span<const GestureEvent> events, const GroundTruthScript& script,
                                 std::int64_t window_ms = kDefaultMatchWindowMs, std::string_view session_id = "",
                                 std::string_view machine_id = "");

/// Percentages are kept as integer hundredths of a percent (9587 == 95.87%).
struct ReportRow {
    Action action = Action::Point;
    std::int64_t detection_rate = 0;
    std::optional<std::int64_t> accuracy;  ///< absent when no session detected anything

    friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct Report {
    std::vector<ReportRow> rows;  ///< display order, only actions present in the log

    [[nodiscard]] const ReportRow* find(Action a) const noexcept;
};

/// Per-session rates averaged with equal session weight, rounded half-up to
/// two decimals. Sessions are keyed by (session_id, machine_id).
Report compute_report(std::span<const AttemptRecord> records);

/// "95.87" for 9587.
std::string format_percent(std::int64_t hundredths);

/// Aligned text table with the Action / Average Detection Rate / Average Accuracy columns.
std::string render_table(const Report& report);
std::string render_json(const Report& report);

}  // namespace gesture
