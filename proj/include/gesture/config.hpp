#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>

#include "gesture/codec.hpp"
#include "gesture/engine.hpp"
#include "gesture/keyboard.hpp"
#include "gesture/landmark.hpp"

namespace gesture {

struct SessionConfig {
    Mode mode = Mode::Mouse;
    Handedness handedness = Handedness::Right;
    Thresholds thresholds{};
    std::shared_ptr<const KeyboardLayout> layout = default_layout_ptr();
    bool inject = false;
    std::uint64_t seed = 0;  ///< highlight palette seed

    static std::shared_ptr<const KeyboardLayout> default_layout_ptr();
};

/// Overlays the keys present in `j` onto `base`. A "layout" value may be
/// "default", an inline layout object, or (only when `base_dir` is given) a
/// path to a layout file relative to it. Throws gesture::Error on bad values.
SessionConfig decode_config(const codec::Json& j, const SessionConfig& base,
                            const std::filesystem::path* base_dir = nullptr);

codec::Json encode_config(const SessionConfig& cfg);

SessionConfig load_config_file(const std::filesystem::path& path, const SessionConfig& base = {});

std::string read_text_file(const std::filesystem::path& path);

}  // namespace gesture
