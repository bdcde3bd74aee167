#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "gesture/config.hpp"
#include "gesture/engine.hpp"
#include "gesture/errors.hpp"
#include "gesture/injector.hpp"
#include "gesture/keyboard.hpp"
#include "gesture/landmark.hpp"

// Session protocol carried as one JSON document per websocket text message.
//
//   client -> server
//     {"type":"hello","version":1,"config":{...SessionConfig...}}
//     {"type":"frame","frame":{"t":33,"hand":"right","lm":[[x,y,z], ... 21]}}
//     {"type":"bye"}
//   server -> client
//     {"type":"welcome","session":"s-1","layout":{...layout document...}}
//     {"type":"event","event":{"t":33,"type":"CursorMove","x":0.5,"y":0.5}}
//     {"type":"key","label":"Y","buffer":"Y"}
//     {"type":"highlight","label":"Y","color":3,"expiry":1250}
//     {"type":"error","code":"MALFORMED","message":"..."}
namespace gesture::protocol {

inline constexpr int kProtocolVersion = 1;

struct Hello {
    int version = kProtocolVersion;
    codec::Json config = codec::Json::object();  ///< decoded against the server's base config
};

struct Frame {
    RawFrame frame;
};

struct Bye {};

using ClientMessage = std::variant<Hello, Frame, Bye>;

struct Welcome {
    std::string session_id;
    std::shared_ptr<const KeyboardLayout> layout;
};

struct Event {
    GestureEvent event;
};

struct Key {
    KeyEvent key;
};

struct Highlight {
    std::string label;
    std::uint32_t color = 0;
    std::int64_t expiry = 0;
};

namespace code {
inline constexpr std::string_view kMalformed = "MALFORMED";
inline constexpr std::string_view kInvalidFrame = "INVALID_FRAME";
inline constexpr std::string_view kNotReady = "NOT_READY";
inline constexpr std::string_view kUnsupportedVersion = "UNSUPPORTED_VERSION";
inline constexpr std::string_view kBadConfig = "BAD_CONFIG";
inline constexpr std::string_view kDuplicateHello = "DUPLICATE_HELLO";
inline constexpr std::string_view kInjectFailed = "INJECT_FAILED";
}  // namespace code

struct ErrorReply {
    std::string code;
    std::string message;
};

using ServerMessage = std::variant<Welcome, Event, Key, Highlight, ErrorReply>;

class MalformedMessage : public Error {
public:
    using Error::Error;
};

ClientMessage decode_client(std::string_view text);
std::string encode(const ClientMessage& msg);

ServerMessage decode_server(std::string_view text);
std::string encode(const ServerMessage& msg);

}  // namespace gesture::protocol
