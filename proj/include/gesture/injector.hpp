#pragma once

#include <mutex>
#include <string>
#include <variant>
#include <vector>

#include "gesture/engine.hpp"

namespace gesture {

/// A resolved keystroke together with the text buffer after applying it.
struct KeyEvent {
    std::string label;
    std::string buffer;

    friend bool operator==(const KeyEvent&, const KeyEvent&) = default;
};

using InjectedInput = std::variant<GestureEvent, KeyEvent>;

/// Forwards recognized input to the host. Implementations decide what
/// "native" means; the recording one just keeps the calls.
class InputInjector {
public:
    virtual ~InputInjector() = default;
    virtual bool inject(const InjectedInput& input) = 0;
};

class RecordingInjector final : public InputInjector {
public:
    bool inject(const InjectedInput& input) override {
        std::lock_guard lock(mu_);
        calls_.push_back(input);
        return true;
    }

    [[nodiscard]] std::vector<InjectedInput> calls() const {
        std::lock_guard lock(mu_);
        return calls_;
    }

private:
    mutable std::mutex mu_;
    std::vector<InjectedInput> calls_;
};

}  // namespace gesture
