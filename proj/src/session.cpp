#include "gesture/session.hpp"

#include <string>

#include "gesture/errors.hpp"

namespace gesture {

namespace {

using namespace protocol;

ErrorReply error_reply(std::string_view code, std::string message) {
    return ErrorReply{std::string(code), std::move(message)};
}

void on_hello(SessionState& s, const Hello& h, std::vector<ServerMessage>& out) {
    if (s.status == SessionStatus::Ready) {
        out.emplace_back(error_reply(code::kDuplicateHello, "session already established"));
        return;
    }
    if (h.version != kProtocolVersion) {
        out.emplace_back(error_reply(code::kUnsupportedVersion,
                                     "protocol version " + std::to_string(h.version) + " is not supported"));
        s.status = SessionStatus::Closed;
        return;
    }
    try {
        s.config = decode_config(h.config, s.base);
    } catch (const Error& e) {
        out.emplace_back(error_reply(code::kBadConfig, e.what()));
        s.status = SessionStatus::Closed;
        return;
    }
    s.engine = initial_state(s.config.mode);
    s.text = {};
    s.highlights = {};
    s.rng = PaletteRng(s.config.seed);
    s.status = SessionStatus::Ready;
    out.emplace_back(Welcome{s.session_id, s.config.layout});
}

bool forward(SessionState& s, InputInjector* injector, const InjectedInput& input, std::vector<ServerMessage>& out) {
    if (!s.config.inject || injector == nullptr) return true;
    if (injector->inject(input)) return true;
    out.emplace_back(error_reply(code::kInjectFailed, "input injection failed"));
    return false;
}

void on_frame(SessionState& s, const Frame& msg, InputInjector* injector, std::vector<ServerMessage>& out) {
    if (msg.frame.handedness != s.config.handedness) return;

    std::optional<std::int64_t> prev_t;
    if (s.engine.prev_frame) prev_t = s.engine.prev_frame->t;

    HandFrame frame;
    StepResult result;
    try {
        frame = validate_frame(msg.frame, prev_t);
        result = step(s.engine, frame, s.config.thresholds);
    } catch (const Error& e) {
        out.emplace_back(error_reply(code::kInvalidFrame, e.what()));
        return;
    }
    s.engine = std::move(result.state);
    s.highlights = prune_highlights(std::move(s.highlights), frame.t);

    for (const auto& ev : result.events) {
        out.emplace_back(Event{ev});
        forward(s, injector, ev, out);

        if (ev.kind != EventKind::KeyTap || s.config.mode != Mode::Keyboard) continue;
        const gesture::Key* key = hit_test(*s.config.layout, ev.pos);
        if (key == nullptr) continue;
        s.text = apply_key(std::move(s.text), *key);
        KeyEvent ke{key->label, s.text.content};
        out.emplace_back(protocol::Key{ke});
        forward(s, injector, ke, out);
        s.highlights = mark_highlight(std::move(s.highlights), *key, frame.t, s.rng);
        const auto& h = s.highlights.entries.back();
        out.emplace_back(Highlight{h.label, h.color, h.expiry});
    }
}

}  // namespace

std::vector<ServerMessage> handle_message(SessionState& s, const ClientMessage& msg, InputInjector* injector) {
    std::vector<ServerMessage> out;
    if (s.status == SessionStatus::Closed) return out;

    if (const auto* hello = std::get_if<Hello>(&msg)) {
        on_hello(s, *hello, out);
        return out;
    }
    if (s.status != SessionStatus::Ready) {
        out.emplace_back(error_reply(code::kNotReady, "first message must be hello"));
        s.status = SessionStatus::Closed;
        return out;
    }
    if (const auto* frame = std::get_if<Frame>(&msg)) {
        on_frame(s, *frame, injector, out);
    } else {
        s.status = SessionStatus::Closed;
    }
    return out;
}

std::vector<ServerMessage> handle_text(SessionState& s, std::string_view text, InputInjector* injector) {
    if (s.status == SessionStatus::Closed) return {};
    ClientMessage msg;
    try {
        msg = decode_client(text);
    } catch (const MalformedMessage& e) {
        if (s.status != SessionStatus::Ready) {
            s.status = SessionStatus::Closed;
            return {error_reply(code::kNotReady, std::string("handshake failed: ") + e.what())};
        }
        return {error_reply(code::kMalformed, e.what())};
    }
    return handle_message(s, msg, injector);
}

}  // namespace gesture
