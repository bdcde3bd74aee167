#include "gesture/replay.hpp"

#include <exception>

#include "gesture/errors.hpp"

namespace gesture {

std::vector<GestureEvent> replay(const TraceFile& trace, const Thresholds& th) {
    th.validate();
    std::vector<GestureEvent> events;
    GestureState state = initial_state(trace.header.mode);
    for (std::size_t i = 0; i < trace.frames.size(); ++i) {
        const HandFrame& f = trace.frames[i];
        if (f.handedness != trace.header.handedness) continue;
        try {
            auto result = step(state, f, th);
            state = std::move(result.state);
            events.insert(events.end(), result.events.begin(), result.events.end());
        } catch (const Error& e) {
            throw ReplayError(i, e.what());
        }
    }
    return events;
}

Thresholds trace_thresholds(const TraceFile& trace, const Thresholds& base) {
    return trace.header.thresholds.value_or(base);
}

std::vector<std::vector<GestureEvent>> replay_batch(std::span<const TraceFile> traces, const Thresholds& base) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(traces.size());
    std::vector<std::vector<GestureEvent>> out(traces.size());
    std::vector<std::exception_ptr> errors(traces.size());

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            out[i] = replay(traces[i], trace_thresholds(traces[i], base));
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

namespace reference {

std::vector<std::vector<GestureEvent>> replay_batch(std::span<const TraceFile> traces, const Thresholds& base) {
    std::vector<std::vector<GestureEvent>> out;
    out.reserve(traces.size());
    for (const auto& t : traces) out.push_back(replay(t, trace_thresholds(t, base)));
    return out;
}

}  // namespace reference

TypingResult resolve_key_taps(std::span<const GestureEvent> events, const KeyboardLayout& layout) {
    TypingResult r;
    for (const auto& e : events) {
        if (e.kind != EventKind::KeyTap) continue;
        if (const Key* k = hit_test(layout, e.pos)) {
            r.keys.push_back(k->label);
            r.buffer = apply_key(std::move(r.buffer), *k);
        }
    }
    return r;
}

}  // namespace gesture
