#pragma once

#include <json.hpp>

#include "gesture/engine.hpp"
#include "gesture/landmark.hpp"

// JSON encodings shared by trace files, event logs and the wire protocol.
// Encoders emit fields in a fixed order so output is canonical.
namespace gesture::codec {

using Json = nlohmann::ordered_json;

Json encode(const HandFrame& f);
Json encode_raw(const RawFrame& f);
/// Structural decode only; range and ordering checks belong to validate_frame.
RawFrame decode_raw_frame(const Json& j);

Json encode(const GestureEvent& e);
GestureEvent decode_event(const Json& j);

Json encode(const Thresholds& th);
/// Missing keys keep the values from `base`.
Thresholds decode_thresholds(const Json& j, const Thresholds& base = {});

}  // namespace gesture::codec
