#include "gesture/trace.hpp"

#include <string>

#include "gesture/codec.hpp"
#include "gesture/errors.hpp"
#include "text_lines.hpp"

namespace gesture {

namespace {

using codec::Json;

TraceHeader decode_header(const Json& j) {
    if (!j.is_object()) throw Error("header must be an object");
    TraceHeader h;
    h.version = j.at("version").get<std::string>();
    if (h.version != kTraceVersion) {
        throw VersionError("unsupported trace version '" + h.version + "'");
    }
    h.session_id = j.at("session").get<std::string>();
    const auto mode = parse_mode(j.at("mode").get<std::string>());
    if (!mode) throw Error("unknown mode");
    h.mode = *mode;
    const auto hand = parse_handedness(j.at("handedness").get<std::string>());
    if (!hand) throw Error("unknown handedness");
    h.handedness = *hand;
    if (j.contains("thresholds")) h.thresholds = codec::decode_thresholds(j.at("thresholds"));
    return h;
}

Json encode_header(const TraceHeader& h) {
    Json j;
    j["version"] = h.version;
    j["session"] = h.session_id;
    j["mode"] = to_string(h.mode);
    j["handedness"] = to_string(h.handedness);
    if (h.thresholds) j["thresholds"] = codec::encode(*h.thresholds);
    return j;
}

}  // namespace

TraceFile parse_trace(std::string_view bytes) {
    TraceFile trace;
    bool have_header = false;
    std::optional<std::int64_t> prev_t;

    detail::for_each_line(bytes, [&](std::size_t line_no, std::string_view line) {
        if (line.empty()) return;
        Json j;
        try {
            j = Json::parse(line);
        } catch (const Json::exception& e) {
            throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
        }
        try {
            if (!have_header) {
                trace.header = decode_header(j);
                have_header = true;
                return;
            }
            HandFrame f = validate_frame(codec::decode_raw_frame(j), prev_t);
            prev_t = f.t;
            trace.frames.push_back(f);
        } catch (const VersionError&) {
            throw;
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(line_no, e.what());
        }
    });
    if (!have_header) throw ParseError(1, "missing header");
    return trace;
}

std::string write_trace(const TraceFile& trace) {
    std::string out = encode_header(trace.header).dump();
    out.push_back('\n');
    for (const auto& f : trace.frames) {
        out += codec::encode(f).dump();
        out.push_back('\n');
    }
    return out;
}

std::string write_events(const std::vector<GestureEvent>& events) {
    std::string out;
    for (const auto& e : events) {
        out += codec::encode(e).dump();
        out.push_back('\n');
    }
    return out;
}

std::vector<GestureEvent> parse_events(std::string_view bytes) {
    std::vector<GestureEvent> events;
    detail::for_each_line(bytes, [&](std::size_t line_no, std::string_view line) {
        if (line.empty()) return;
        try {
            events.push_back(codec::decode_event(Json::parse(line)));
        } catch (const std::exception& e) {
            throw ParseError(line_no, e.what());
        }
    });
    return events;
}

}  // namespace gesture
