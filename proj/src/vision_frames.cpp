#include <string>

#include "gesture/errors.hpp"
#include "gesture/vision.hpp"

namespace gesture::vision {

namespace {

void check_dims(int w, int h) {
    if (w < 1 || h < 1) {
        throw DimensionMismatchError("image dimensions must be positive, got " + std::to_string(w) + "x" +
                                     std::to_string(h));
    }
}

}  // namespace

GrayFrame::GrayFrame(int w, int h, std::uint8_t fill) : width(w), height(h) {
    check_dims(w, h);
    pixels.assign(static_cast<std::size_t>(w) * h, fill);
}

GrayFrame::GrayFrame(int w, int h, std::vector<std::uint8_t> px) : width(w), height(h), pixels(std::move(px)) {
    check_dims(w, h);
    if (pixels.size() != static_cast<std::size_t>(w) * h) {
        throw DimensionMismatchError("pixel count does not match " + std::to_string(w) + "x" + std::to_string(h));
    }
}

BackgroundModel::BackgroundModel(int w, int h, double fill) : width(w), height(h) {
    check_dims(w, h);
    accum.assign(static_cast<std::size_t>(w) * h, fill);
}

BackgroundModel BackgroundModel::from_frame(const GrayFrame& f) {
    BackgroundModel bg(f.width, f.height);
    for (std::size_t i = 0; i < f.pixels.size(); ++i) bg.accum[i] = f.pixels[i];
    return bg;
}

BinaryMask::BinaryMask(int w, int h) : width(w), height(h) {
    check_dims(w, h);
    bits.assign(static_cast<std::size_t>(w) * h, 0);
}

}  // namespace gesture::vision
