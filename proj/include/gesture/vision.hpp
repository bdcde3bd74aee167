#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gesture::vision {

struct GrayFrame {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  ///< row-major

    GrayFrame() = default;
    GrayFrame(int w, int h, std::uint8_t fill = 0);
    GrayFrame(int w, int h, std::vector<std::uint8_t> px);

    [[nodiscard]] std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }

    friend bool operator==(const GrayFrame&, const GrayFrame&) = default;
};

struct BackgroundModel {
    int width = 0;
    int height = 0;
    std::vector<double> accum;

    BackgroundModel() = default;
    BackgroundModel(int w, int h, double fill = 0.0);
    static BackgroundModel from_frame(const GrayFrame& f);

    friend bool operator==(const BackgroundModel&, const BackgroundModel&) = default;
};

struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;  ///< 0 or 1, row-major

    BinaryMask() = default;
    BinaryMask(int w, int h);

    [[nodiscard]] bool at(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool v = true) { bits[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }
    [[nodiscard]] bool inside(int x, int y) const noexcept { return x >= 0 && y >= 0 && x < width && y < height; }

    friend bool operator==(const BinaryMask&, const BinaryMask&) = default;
};

struct PixelPoint {
    int x = 0;
    int y = 0;

    friend bool operator==(const PixelPoint&, const PixelPoint&) = default;
    friend auto operator<=>(const PixelPoint&, const PixelPoint&) = default;
};

struct Contour {
    std::vector<PixelPoint> points;

    friend bool operator==(const Contour&, const Contour&) = default;
};

struct Defect {
    std::size_t start_idx = 0;  ///< contour index of the hull vertex opening the arc
    std::size_t end_idx = 0;    ///< contour index of the hull vertex closing the arc
    std::size_t far_idx = 0;
    PixelPoint far_point{};
    double depth = 0.0;

    friend bool operator==(const Defect&, const Defect&) = default;
};

inline constexpr double kDefaultRho = 0.05;
inline constexpr double kDefaultMinDepth = 10.0;
inline constexpr double kDefaultMaxAngle = 90.0;

// Pixel kernels. These run OpenMP-parallel over pixels; vision::reference holds
// the serial versions they are tested against.
BackgroundModel update_background(const BackgroundModel& bg, const GrayFrame& f, double rho);
BinaryMask subtract(const BackgroundModel& bg, const GrayFrame& f, double theta);

namespace reference {
BackgroundModel update_background(const BackgroundModel& bg, const GrayFrame& f, double rho);
BinaryMask subtract(const BackgroundModel& bg, const GrayFrame& f, double theta);
}  // namespace reference

/// Outer borders of the 8-connected components, traced clockwise (image axes,
/// y down) from each component's first pixel in raster order.
std::vector<Contour> extract_contours(const BinaryMask& m);

/// Monotone chain. Counter-clockwise in (x, y) with positive cross products,
/// starting at the lowest-y then lowest-x vertex; collinear points dropped.
std::vector<PixelPoint> convex_hull(std::span<const PixelPoint> points);

/// Distance from p to the segment [a, b].
double segment_distance(PixelPoint p, PixelPoint a, PixelPoint b) noexcept;

std::vector<Defect> convexity_defects(const Contour& c, std::span<const PixelPoint> hull, double min_depth);

/// Angle in degrees at the defect's far point between its start and end hull vertices.
double defect_angle(const Defect& d, const Contour& c);

int count_fingers(std::span<const Defect> defects, const Contour& c, double min_depth = kDefaultMinDepth,
                  double max_angle = kDefaultMaxAngle);

bool fingertip_touch(PixelPoint a, PixelPoint b, double gap_threshold);

}  // namespace gesture::vision
