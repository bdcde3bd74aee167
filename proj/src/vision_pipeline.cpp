#include "gesture/vision_pipeline.hpp"

#include <algorithm>

#include <json.hpp>

namespace gesture::vision {

FrameReport Pipeline::process(const GrayFrame& f, std::string name) {
    if (!bg_) bg_ = BackgroundModel::from_frame(f);

    FrameReport report;
    report.name = std::move(name);
    report.index = index_++;

    mask_ = subtract(*bg_, f, cfg_.theta);
    const auto contours = extract_contours(mask_);
    report.contours = contours.size();

    if (!contours.empty()) {
        const auto largest = std::max_element(contours.begin(), contours.end(), [](const Contour& a, const Contour& b) {
            return a.points.size() < b.points.size();
        });
        const auto hull = convex_hull(largest->points);
        const auto defects = convexity_defects(*largest, hull, cfg_.min_depth);
        report.fingers = count_fingers(defects, *largest, cfg_.min_depth, cfg_.max_angle);
        for (const auto& d : defects) {
            if (defect_angle(d, *largest) > cfg_.max_angle) continue;
            if (fingertip_touch(largest->points[d.start_idx], largest->points[d.end_idx], cfg_.gap_threshold)) {
                report.touch = true;
                break;
            }
        }
    }

    *bg_ = update_background(*bg_, f, cfg_.rho);
    return report;
}

std::string to_json_line(const FrameReport& r) {
    nlohmann::ordered_json j;
    j["frame"] = r.name;
    j["index"] = r.index;
    j["contours"] = r.contours;
    j["fingers"] = r.fingers;
    j["touch"] = r.touch;
    return j.dump();
}

}  // namespace gesture::vision
