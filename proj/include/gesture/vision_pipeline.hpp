#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gesture/vision.hpp"

namespace gesture::vision {

struct PipelineConfig {
    double theta = 25.0;  ///< subtraction threshold, intensity levels
    double rho = kDefaultRho;
    double min_depth = kDefaultMinDepth;
    double max_angle = kDefaultMaxAngle;
    double gap_threshold = 20.0;  ///< pixels
};

struct FrameReport {
    std::string name;
    std::size_t index = 0;
    std::size_t contours = 0;
    int fingers = 0;
    bool touch = false;
};

/// Runs the classical pipeline frame by frame. The first frame seeds the
/// background; every frame is subtracted before the model absorbs it.
class Pipeline {
public:
    explicit Pipeline(PipelineConfig cfg = {}) : cfg_(cfg) {}

    FrameReport process(const GrayFrame& f, std::string name = {});

    [[nodiscard]] const std::optional<BackgroundModel>& background() const noexcept { return bg_; }
    [[nodiscard]] const BinaryMask& last_mask() const noexcept { return mask_; }

private:
    PipelineConfig cfg_;
    std::optional<BackgroundModel> bg_;
    BinaryMask mask_;
    std::size_t index_ = 0;
};

/// Serializes one report as a single JSON line (no trailing newline).
std::string to_json_line(const FrameReport& r);

}  // namespace gesture::vision
