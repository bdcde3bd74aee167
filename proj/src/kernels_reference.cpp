#include <cmath>

#include "gesture/vision.hpp"
#include "kernels_common.hpp"

namespace gesture::vision::reference {

BackgroundModel update_background(const BackgroundModel& bg, const GrayFrame& f, double rho) {
    detail::check_update_args(bg, f, rho);
    BackgroundModel out(bg.width, bg.height);
    for (int y = 0; y < bg.height; ++y) {
        for (int x = 0; x < bg.width; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * bg.width + x;
            out.accum[i] = (1.0 - rho) * bg.accum[i] + rho * f.at(x, y);
        }
    }
    return out;
}

BinaryMask subtract(const BackgroundModel& bg, const GrayFrame& f, double theta) {
    detail::check_subtract_args(bg, f, theta);
    BinaryMask out(bg.width, bg.height);
    for (int y = 0; y < bg.height; ++y) {
        for (int x = 0; x < bg.width; ++x) {
            const double diff = f.at(x, y) - bg.accum[static_cast<std::size_t>(y) * bg.width + x];
            out.set(x, y, std::fabs(diff) > theta);
        }
    }
    return out;
}

}  // namespace gesture::vision::reference
