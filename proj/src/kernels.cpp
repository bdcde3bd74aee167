#include <cmath>

#include "gesture/errors.hpp"
#include "gesture/vision.hpp"
#include "kernels_common.hpp"

namespace gesture::vision {

BackgroundModel update_background(const BackgroundModel& bg, const GrayFrame& f, double rho) {
    detail::check_update_args(bg, f, rho);
    BackgroundModel out(bg.width, bg.height);
    const double keep = 1.0 - rho;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(bg.accum.size());
    const double* src = bg.accum.data();
    const std::uint8_t* px = f.pixels.data();
    double* dst = out.accum.data();

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        dst[i] = keep * src[i] + rho * px[i];
    }
    return out;
}

BinaryMask subtract(const BackgroundModel& bg, const GrayFrame& f, double theta) {
    detail::check_subtract_args(bg, f, theta);
    BinaryMask out(bg.width, bg.height);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(bg.accum.size());
    const double* acc = bg.accum.data();
    const std::uint8_t* px = f.pixels.data();
    std::uint8_t* bits = out.bits.data();

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        bits[i] = std::fabs(px[i] - acc[i]) > theta ? 1 : 0;
    }
    return out;
}

}  // namespace gesture::vision
