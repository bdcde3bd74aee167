#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gesture/config.hpp"
#include "gesture/engine.hpp"
#include "gesture/injector.hpp"
#include "gesture/keyboard.hpp"
#include "gesture/protocol.hpp"

namespace gesture {

enum class SessionStatus { AwaitingHello, Ready, Closed };

/// Everything one connection owns. Mutated only by handle_message, in
/// arrival order.
struct SessionState {
    std::string session_id;
    SessionConfig base;  ///< server defaults that Hello overrides
    SessionStatus status = SessionStatus::AwaitingHello;
    SessionConfig config;
    GestureState engine;
    TextBuffer text;
    HighlightState highlights;
    PaletteRng rng;

    SessionState(std::string id, SessionConfig defaults)
        : session_id(std::move(id)), base(defaults), config(std::move(defaults)) {}
};

/// Applies one client message. `injector` is used only when the session was
/// configured with inject=true; it may be null otherwise.
std::vector<protocol::ServerMessage> handle_message(SessionState& s, const protocol::ClientMessage& msg,
                                                    InputInjector* injector = nullptr);

/// Decodes and applies a raw text message; undecodable input yields MALFORMED
/// (or NOT_READY before the handshake, which closes the session).
std::vector<protocol::ServerMessage> handle_text(SessionState& s, std::string_view text,
                                                 InputInjector* injector = nullptr);

}  // namespace gesture
