#include "gesture/protocol.hpp"

#include <string>

#include "gesture/errors.hpp"

namespace gesture::protocol {

namespace {

using codec::Json;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Json parse_object(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw MalformedMessage(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
        throw MalformedMessage("message must be an object with a string 'type'");
    }
    return j;
}

}  // namespace

ClientMessage decode_client(std::string_view text) {
    const Json j = parse_object(text);
    const auto type = j.at("type").get<std::string>();
    try {
        if (type == "hello") {
            Hello h;
            h.version = j.at("version").get<int>();
            if (j.contains("config")) {
                if (!j.at("config").is_object()) throw MalformedMessage("config must be an object");
                h.config = j.at("config");
            }
            return h;
        }
        if (type == "frame") return Frame{codec::decode_raw_frame(j.at("frame"))};
        if (type == "bye") return Bye{};
    } catch (const MalformedMessage&) {
        throw;
    } catch (const std::exception& e) {
        throw MalformedMessage("bad " + type + " payload: " + e.what());
    }
    throw MalformedMessage("unknown message type '" + type + "'");
}

std::string encode(const ClientMessage& msg) {
    Json j;
    std::visit(overloaded{
                   [&](const Hello& h) {
                       j["type"] = "hello";
                       j["version"] = h.version;
                       j["config"] = h.config;
                   },
                   [&](const Frame& f) {
                       j["type"] = "frame";
                       j["frame"] = codec::encode_raw(f.frame);
                   },
                   [&](const Bye&) { j["type"] = "bye"; },
               },
               msg);
    return j.dump();
}

ServerMessage decode_server(std::string_view text) {
    const Json j = parse_object(text);
    const auto type = j.at("type").get<std::string>();
    try {
        if (type == "welcome") {
            return Welcome{j.at("session").get<std::string>(),
                           std::make_shared<const KeyboardLayout>(parse_layout(j.at("layout").dump()))};
        }
        if (type == "event") return Event{codec::decode_event(j.at("event"))};
        if (type == "key") return Key{{j.at("label").get<std::string>(), j.at("buffer").get<std::string>()}};
        if (type == "highlight") {
            return Highlight{j.at("label").get<std::string>(), j.at("color").get<std::uint32_t>(),
                             j.at("expiry").get<std::int64_t>()};
        }
        if (type == "error") return ErrorReply{j.at("code").get<std::string>(), j.at("message").get<std::string>()};
    } catch (const std::exception& e) {
        throw MalformedMessage("bad " + type + " payload: " + e.what());
    }
    throw MalformedMessage("unknown message type '" + type + "'");
}

std::string encode(const ServerMessage& msg) {
    Json j;
    std::visit(overloaded{
                   [&](const Welcome& w) {
                       j["type"] = "welcome";
                       j["session"] = w.session_id;
                       j["layout"] = Json::parse(write_layout(w.layout ? *w.layout : default_layout()));
                   },
                   [&](const Event& e) {
                       j["type"] = "event";
                       j["event"] = codec::encode(e.event);
                   },
                   [&](const Key& k) {
                       j["type"] = "key";
                       j["label"] = k.key.label;
                       j["buffer"] = k.key.buffer;
                   },
                   [&](const Highlight& h) {
                       j["type"] = "highlight";
                       j["label"] = h.label;
                       j["color"] = h.color;
                       j["expiry"] = h.expiry;
                   },
                   [&](const ErrorReply& e) {
                       j["type"] = "error";
                       j["code"] = e.code;
                       j["message"] = e.message;
                   },
               },
               msg);
    return j.dump();
}

}  // namespace gesture::protocol
