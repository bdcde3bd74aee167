#include "gesture/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <utility>

#include "gesture/codec.hpp"
#include "gesture/errors.hpp"
#include "text_lines.hpp"

namespace gesture {

namespace {

using codec::Json;

std::int64_t to_hundredths(double fraction) {
    // Half-up; the epsilon absorbs binary representation error of exact halves.
    return static_cast<std::int64_t>(std::floor(fraction * 10000.0 + 0.5 + 1e-9));
}

}  // namespace

std::string_view to_string(Action a) noexcept {
    switch (a) {
        case Action::LeftClick: return "LeftClick";
        case Action::RightClick: return "RightClick";
        case Action::DoubleClick: return "DoubleClick";
        case Action::Scroll: return "Scroll";
        case Action::Keypress: return "Keypress";
        case Action::Point: return "Point";
    }
    return "Point";
}

std::string_view display_name(Action a) noexcept {
    switch (a) {
        case Action::LeftClick: return "Left Click";
        case Action::RightClick: return "Right Click";
        case Action::DoubleClick: return "Double Click";
        case Action::Scroll: return "Scroll";
        case Action::Keypress: return "Keypress";
        case Action::Point: return "Point";
    }
    return "Point";
}

std::optional<Action> parse_action(std::string_view s) noexcept {
    for (Action a : kAllActions) {
        if (to_string(a) == s || display_name(a) == s) return a;
    }
    return std::nullopt;
}

EventKind expected_kind(Action a) noexcept {
    switch (a) {
        case Action::LeftClick: return EventKind::LeftClick;
        case Action::RightClick: return EventKind::RightClick;
        case Action::DoubleClick: return EventKind::DoubleClick;
        case Action::Scroll: return EventKind::Scroll;
        case Action::Keypress: return EventKind::KeyTap;
        case Action::Point: return EventKind::CursorMove;
    }
    return EventKind::CursorMove;
}

GroundTruthScript parse_script(std::string_view bytes) {
    GroundTruthScript script;
    detail::for_each_line(bytes, [&](std::size_t line_no, std::string_view line) {
        if (line.empty()) return;
        try {
            const Json j = Json::parse(line);
            ScriptEntry e;
            e.t = j.at("t").get<std::int64_t>();
            const auto a = parse_action(j.at("action").get<std::string>());
            if (!a) throw Error("unknown action");
            e.action = *a;
            if (!script.entries.empty() && e.t < script.entries.back().t) {
                throw Error("script timestamps must be non-decreasing");
            }
            script.entries.push_back(e);
        } catch (const std::exception& ex) {
            throw ParseError(line_no, ex.what());
        }
    });
    return script;
}

std::string write_script(const GroundTruthScript& script) {
    std::string out;
    for (const auto& e : script.entries) {
        Json j;
        j["t"] = e.t;
        j["action"] = to_string(e.action);
        out += j.dump();
        out.push_back('\n');
    }
    return out;
}

std::vector<AttemptRecord> parse_records(std::string_view bytes) {
    std::vector<AttemptRecord> records;
    detail::for_each_line(bytes, [&](std::size_t line_no, std::string_view line) {
        if (line.empty()) return;
        try {
            const Json j = Json::parse(line);
            AttemptRecord r;
            const auto a = parse_action(j.at("action").get<std::string>());
            if (!a) throw Error("unknown action");
            r.action = *a;
            r.detected = j.at("detected").get<bool>();
            r.correct = j.at("correct").get<bool>();
            if (r.correct && !r.detected) throw Error("record is correct but not detected");
            r.session_id = j.at("session").get<std::string>();
            r.machine_id = j.value("machine", std::string());
            records.push_back(std::move(r));
        } catch (const std::exception& ex) {
            throw ParseError(line_no, ex.what());
        }
    });
    return records;
}

std::string write_records(std::span<const AttemptRecord> records) {
    std::string out;
    for (const auto& r : records) {
        Json j;
        j["session"] = r.session_id;
        j["machine"] = r.machine_id;
        j["action"] = to_string(r.action);
        j["detected"] = r.detected;
        j["correct"] = r.correct;
        out += j.dump();
        out.push_back('\n');
    }
    return out;
}

std::vector<AttemptRecord> score(std::span<const GestureEvent> events, const GroundTruthScript& script,
                                 std::int64_t window_ms, std::string_view session_id, std::string_view machine_id) {
    std::vector<bool> consumed(events.size(), false);
    std::vector<AttemptRecord> out;
    out.reserve(script.entries.size());

    for (const auto& entry : script.entries) {
        const EventKind want = expected_kind(entry.action);
        std::optional<std::size_t> any;
        std::optional<std::size_t> match;
        for (std::size_t i = 0; i < events.size(); ++i) {
            if (consumed[i]) continue;
            const auto dt = events[i].t - entry.t;
            if (dt < -window_ms || dt > window_ms) continue;
            if (!any || events[i].t < events[*any].t) any = i;
            if (events[i].kind == want && (!match || events[i].t < events[*match].t)) match = i;
        }
        AttemptRecord r{entry.action, false, false, std::string(session_id), std::string(machine_id)};
        if (const auto chosen = match ? match : any) {
            consumed[*chosen] = true;
            r.detected = true;
            r.correct = events[*chosen].kind == want;
        }
        out.push_back(std::move(r));
    }
    return out;
}

const ReportRow* Report::find(Action a) const noexcept {
    for (const auto& r : rows) {
        if (r.action == a) return &r;
    }
    return nullptr;
}

Report compute_report(std::span<const AttemptRecord> records) {
    if (records.empty()) throw EmptyLogError("no attempt records");

    struct Tally {
        std::size_t attempts = 0;
        std::size_t detected = 0;
        std::size_t correct = 0;
    };
    // action -> session -> tally
    std::map<Action, std::map<std::pair<std::string, std::string>, Tally>> tallies;
    for (const auto& r : records) {
        auto& t = tallies[r.action][{r.session_id, r.machine_id}];
        ++t.attempts;
        if (r.detected) ++t.detected;
        if (r.correct) ++t.correct;
    }

    Report report;
    for (Action a : kAllActions) {
        const auto it = tallies.find(a);
        if (it == tallies.end()) continue;
        double rate_sum = 0.0;
        double acc_sum = 0.0;
        std::size_t acc_sessions = 0;
        for (const auto& [key, t] : it->second) {
            rate_sum += static_cast<double>(t.detected) / static_cast<double>(t.attempts);
            if (t.detected > 0) {
                acc_sum += static_cast<double>(t.correct) / static_cast<double>(t.detected);
                ++acc_sessions;
            }
        }
        ReportRow row;
        row.action = a;
        row.detection_rate = to_hundredths(rate_sum / static_cast<double>(it->second.size()));
        if (acc_sessions > 0) row.accuracy = to_hundredths(acc_sum / static_cast<double>(acc_sessions));
        report.rows.push_back(row);
    }
    return report;
}

std::string format_percent(std::int64_t hundredths) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld.%02lld", static_cast<long long>(hundredths / 100),
                  static_cast<long long>(hundredths % 100));
    return buf;
}

std::string render_table(const Report& report) {
    std::string out;
    char line[128];
    std::snprintf(line, sizeof line, "%-14s%-24s%s\n", "Action", "Average Detection Rate", "Average Accuracy");
    out += line;
    for (const auto& r : report.rows) {
        const std::string rate = format_percent(r.detection_rate) + "%";
        const std::string acc = r.accuracy ? format_percent(*r.accuracy) + "%" : "n/a";
        std::snprintf(line, sizeof line, "%-14s%-24s%s\n", std::string(display_name(r.action)).c_str(),
                      rate.c_str(), acc.c_str());
        out += line;
    }
    return out;
}

std::string render_json(const Report& report) {
    Json doc;
    doc["rows"] = Json::array();
    for (const auto& r : report.rows) {
        Json row;
        row["action"] = display_name(r.action);
        row["detection_rate"] = format_percent(r.detection_rate);
        row["accuracy"] = r.accuracy ? Json(format_percent(*r.accuracy)) : Json(nullptr);
        doc["rows"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

}  // namespace gesture
