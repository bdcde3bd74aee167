#pragma once

#include <span>
#include <string>
#include <vector>

#include "gesture/engine.hpp"
#include "gesture/keyboard.hpp"
#include "gesture/trace.hpp"

namespace gesture {

/// Folds step over the trace from initial_state(trace mode). Frames of the
/// other hand are skipped. Failures raise ReplayError with the frame index.
std::vector<GestureEvent> replay(const TraceFile& trace, const Thresholds& th);

/// Header override when present, otherwise `base`.
Thresholds trace_thresholds(const TraceFile& trace, const Thresholds& base = {});

/// Replays independent traces in parallel (OpenMP), each with its own
/// trace_thresholds(trace, base). Rethrows the first failure by trace index.
std::vector<std::vector<GestureEvent>> replay_batch(std::span<const TraceFile> traces, const Thresholds& base = {});

namespace reference {
std::vector<std::vector<GestureEvent>> replay_batch(std::span<const TraceFile> traces, const Thresholds& base = {});
}  // namespace reference

struct TypingResult {
    std::vector<std::string> keys;  ///< labels of the keys hit, in order
    TextBuffer buffer;
};

/// Resolves KeyTap events against a layout and types them into a buffer.
TypingResult resolve_key_taps(std::span<const GestureEvent> events, const KeyboardLayout& layout);

}  // namespace gesture
