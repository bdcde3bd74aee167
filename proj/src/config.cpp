#include "gesture/config.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "gesture/errors.hpp"

namespace gesture {

std::shared_ptr<const KeyboardLayout> SessionConfig::default_layout_ptr() {
    static const auto shared = std::make_shared<const KeyboardLayout>(default_layout());
    return shared;
}

SessionConfig decode_config(const codec::Json& j, const SessionConfig& base, const std::filesystem::path* base_dir) {
    if (!j.is_object()) throw Error("config must be an object");
    SessionConfig cfg = base;
    try {
        if (j.contains("mode")) {
            const auto m = parse_mode(j.at("mode").get<std::string>());
            if (!m) throw Error("unknown mode");
            cfg.mode = *m;
        }
        if (j.contains("handedness")) {
            const auto h = parse_handedness(j.at("handedness").get<std::string>());
            if (!h) throw Error("unknown handedness");
            cfg.handedness = *h;
        }
        if (j.contains("thresholds")) cfg.thresholds = codec::decode_thresholds(j.at("thresholds"), cfg.thresholds);
        if (j.contains("inject")) cfg.inject = j.at("inject").get<bool>();
        if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("layout")) {
            const auto& l = j.at("layout");
            if (l.is_string() && l.get<std::string>() == "default") {
                cfg.layout = SessionConfig::default_layout_ptr();
            } else if (l.is_object()) {
                cfg.layout = std::make_shared<const KeyboardLayout>(parse_layout(l.dump()));
            } else if (l.is_string() && base_dir) {
                const auto path = *base_dir / l.get<std::string>();
                cfg.layout = std::make_shared<const KeyboardLayout>(parse_layout(read_text_file(path)));
            } else {
                throw Error("layout must be \"default\" or an inline layout object");
            }
        }
    } catch (const codec::Json::exception& e) {
        throw Error(std::string("bad config value: ") + e.what());
    }
    return cfg;
}

codec::Json encode_config(const SessionConfig& cfg) {
    codec::Json j;
    j["mode"] = to_string(cfg.mode);
    j["handedness"] = to_string(cfg.handedness);
    j["thresholds"] = codec::encode(cfg.thresholds);
    if (cfg.layout && *cfg.layout == default_layout()) {
        j["layout"] = "default";
    } else if (cfg.layout) {
        j["layout"] = codec::Json::parse(write_layout(*cfg.layout));
    }
    j["inject"] = cfg.inject;
    j["seed"] = cfg.seed;
    return j;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SessionConfig load_config_file(const std::filesystem::path& path, const SessionConfig& base) {
    const std::string text = read_text_file(path);
    codec::Json j;
    try {
        j = codec::Json::parse(text);
    } catch (const codec::Json::exception& e) {
        throw Error("malformed config " + path.string() + ": " + e.what());
    }
    const auto dir = path.parent_path();
    return decode_config(j, base, &dir);
}

}  // namespace gesture
