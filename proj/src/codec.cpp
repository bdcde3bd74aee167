#include "gesture/codec.hpp"

#include <string>

#include "gesture/errors.hpp"

namespace gesture::codec {

namespace {

template <typename Landmarks>
Json encode_frame(std::int64_t t, Handedness hand, const Landmarks& landmarks) {
    Json j;
    j["t"] = t;
    j["hand"] = to_string(hand);
    Json lms = Json::array();
    for (const auto& l : landmarks) lms.push_back(Json::array({l.x, l.y, l.z}));
    j["lm"] = std::move(lms);
    return j;
}

}  // namespace

Json encode(const HandFrame& f) { return encode_frame(f.t, f.handedness, f.landmarks); }

Json encode_raw(const RawFrame& f) { return encode_frame(f.t, f.handedness, f.landmarks); }

RawFrame decode_raw_frame(const Json& j) {
    if (!j.is_object()) throw Error("frame must be an object");
    RawFrame f;
    const auto& t = j.at("t");
    if (!t.is_number_integer()) throw Error("t must be an integer");
    f.t = t.get<std::int64_t>();
    const auto hand = parse_handedness(j.at("hand").get<std::string>());
    if (!hand) throw Error("hand must be 'left' or 'right'");
    f.handedness = *hand;
    const auto& lms = j.at("lm");
    if (!lms.is_array()) throw Error("lm must be an array");
    f.landmarks.reserve(lms.size());
    for (const auto& p : lms) {
        if (!p.is_array() || (p.size() != 2 && p.size() != 3)) throw Error("landmark must be [x, y, z]");
        for (const auto& v : p) {
            if (!v.is_number()) throw Error("landmark coordinates must be numbers");
        }
        f.landmarks.push_back({p[0].get<double>(), p[1].get<double>(), p.size() == 3 ? p[2].get<double>() : 0.0});
    }
    return f;
}

Json encode(const GestureEvent& e) {
    Json j;
    j["t"] = e.t;
    j["type"] = to_string(e.kind);
    switch (e.kind) {
        case EventKind::CursorMove:
        case EventKind::KeyTap:
            j["x"] = e.pos.x;
            j["y"] = e.pos.y;
            break;
        case EventKind::Scroll: j["delta"] = e.scroll; break;
        default: break;
    }
    return j;
}

GestureEvent decode_event(const Json& j) {
    GestureEvent e;
    e.t = j.at("t").get<std::int64_t>();
    const auto kind = parse_event_kind(j.at("type").get<std::string>());
    if (!kind) throw Error("unknown event type");
    e.kind = *kind;
    if (e.kind == EventKind::CursorMove || e.kind == EventKind::KeyTap) {
        e.pos = {j.at("x").get<double>(), j.at("y").get<double>()};
    } else if (e.kind == EventKind::Scroll) {
        e.scroll = j.at("delta").get<int>();
    }
    return e;
}

Json encode(const Thresholds& th) {
    Json j;
    j["tau_down"] = th.tau_down;
    j["tau_up"] = th.tau_up;
    j["double_window_ms"] = th.double_window_ms;
    j["scroll_gain"] = th.scroll_gain;
    j["margin"] = th.margin;
    j["alpha"] = th.alpha;
    j["extension_ratio"] = th.extension_ratio;
    return j;
}

Thresholds decode_thresholds(const Json& j, const Thresholds& base) {
    if (!j.is_object()) throw Error("thresholds must be an object");
    Thresholds th = base;
    th.tau_down = j.value("tau_down", th.tau_down);
    th.tau_up = j.value("tau_up", th.tau_up);
    th.double_window_ms = j.value("double_window_ms", th.double_window_ms);
    th.scroll_gain = j.value("scroll_gain", th.scroll_gain);
    th.margin = j.value("margin", th.margin);
    th.alpha = j.value("alpha", th.alpha);
    th.extension_ratio = j.value("extension_ratio", th.extension_ratio);
    th.validate();
    return th;
}

}  // namespace gesture::codec
