#pragma once

#include <string>

#include "gesture/errors.hpp"
#include "gesture/vision.hpp"

namespace gesture::vision::detail {

inline void check_same_dims(const BackgroundModel& bg, const GrayFrame& f) {
    if (bg.width != f.width || bg.height != f.height) {
        throw DimensionMismatchError("background is " + std::to_string(bg.width) + "x" + std::to_string(bg.height) +
                                     ", frame is " + std::to_string(f.width) + "x" + std::to_string(f.height));
    }
}

inline void check_update_args(const BackgroundModel& bg, const GrayFrame& f, double rho) {
    check_same_dims(bg, f);
    if (!(rho >= 0.0 && rho <= 1.0)) throw Error("learning rate must lie in [0, 1]");
}

inline void check_subtract_args(const BackgroundModel& bg, const GrayFrame& f, double theta) {
    check_same_dims(bg, f);
    if (!(theta >= 0.0)) throw Error("threshold must be non-negative");
}

}  // namespace gesture::vision::detail
