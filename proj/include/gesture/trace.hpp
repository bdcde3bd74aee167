#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gesture/engine.hpp"
#include "gesture/landmark.hpp"

namespace gesture {

inline constexpr std::string_view kTraceVersion = "gesture-trace/1";

struct TraceHeader {
    std::string version{kTraceVersion};
    std::string session_id;
    Mode mode = Mode::Mouse;
    Handedness handedness = Handedness::Right;
    std::optional<Thresholds> thresholds;

    friend bool operator==(const TraceHeader&, const TraceHeader&) = default;
};

struct TraceFile {
    TraceHeader header;
    std::vector<HandFrame> frames;

    friend bool operator==(const TraceFile&, const TraceFile&) = default;
};

/// Line 1 is the header, every following non-empty line one frame.
/// Throws ParseError (1-based line) or VersionError.
TraceFile parse_trace(std::string_view bytes);
std::string write_trace(const TraceFile& trace);

/// Event log: one JSON object per line.
std::string write_events(const std::vector<GestureEvent>& events);
std::vector<GestureEvent> parse_events(std::string_view bytes);

}  // namespace gesture
