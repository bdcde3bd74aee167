#include <algorithm>
#include <cmath>
#include <numbers>

#include "gesture/vision.hpp"

namespace gesture::vision {

namespace {

std::int64_t cross(PixelPoint o, PixelPoint a, PixelPoint b) noexcept {
    return static_cast<std::int64_t>(a.x - o.x) * (b.y - o.y) - static_cast<std::int64_t>(a.y - o.y) * (b.x - o.x);
}

}  // namespace

std::vector<PixelPoint> convex_hull(std::span<const PixelPoint> points) {
    std::vector<PixelPoint> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](PixelPoint a, PixelPoint b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) {
        std::sort(pts.begin(), pts.end(), [](PixelPoint a, PixelPoint b) { return a.y != b.y ? a.y < b.y : a.x < b.x; });
        return pts;
    }

    std::vector<PixelPoint> hull;
    hull.reserve(2 * pts.size());
    for (const auto& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }
    const std::size_t lower = hull.size() + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (hull.size() >= lower && cross(hull[hull.size() - 2], hull.back(), *it) <= 0) hull.pop_back();
        hull.push_back(*it);
    }
    hull.pop_back();

    const auto first = std::min_element(hull.begin(), hull.end(), [](PixelPoint a, PixelPoint b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    });
    std::rotate(hull.begin(), first, hull.end());
    return hull;
}

double segment_distance(PixelPoint p, PixelPoint a, PixelPoint b) noexcept {
    const double abx = b.x - a.x;
    const double aby = b.y - a.y;
    const double apx = p.x - a.x;
    const double apy = p.y - a.y;
    const double len2 = abx * abx + aby * aby;
    if (len2 == 0.0) return std::hypot(apx, apy);
    const double dot = apx * abx + apy * aby;
    if (dot <= 0.0) return std::hypot(apx, apy);
    if (dot >= len2) return std::hypot(p.x - b.x, p.y - b.y);
    return std::fabs(abx * apy - aby * apx) / std::sqrt(len2);
}

std::vector<Defect> convexity_defects(const Contour& c, std::span<const PixelPoint> hull, double min_depth) {
    std::vector<Defect> out;
    const std::size_t n = c.points.size();
    if (hull.size() < 3 || n < 3) return out;

    // Locate hull vertices along the contour, in traversal order.
    std::vector<std::size_t> at;
    at.reserve(hull.size());
    const auto first = std::find(c.points.begin(), c.points.end(), hull[0]);
    if (first == c.points.end()) return out;
    const std::size_t base = static_cast<std::size_t>(first - c.points.begin());
    at.push_back(base);
    std::size_t h = 1;
    for (std::size_t k = 1; k < n && h < hull.size(); ++k) {
        const std::size_t i = (base + k) % n;
        if (c.points[i] == hull[h]) {
            at.push_back(i);
            ++h;
        }
    }
    if (at.size() != hull.size()) return out;

    for (std::size_t e = 0; e < at.size(); ++e) {
        const std::size_t s = at[e];
        const std::size_t t = at[(e + 1) % at.size()];
        const PixelPoint a = c.points[s];
        const PixelPoint b = c.points[t];
        Defect best{s, t, s, a, -1.0};
        for (std::size_t i = (s + 1) % n; i != t; i = (i + 1) % n) {
            const double dist = segment_distance(c.points[i], a, b);
            if (dist > best.depth) {
                best.depth = dist;
                best.far_idx = i;
                best.far_point = c.points[i];
            }
        }
        if (best.depth >= 0.0 && best.depth >= min_depth) out.push_back(best);
    }
    return out;
}

double defect_angle(const Defect& d, const Contour& c) {
    const PixelPoint s = c.points[d.start_idx];
    const PixelPoint e = c.points[d.end_idx];
    const PixelPoint f = d.far_point;
    const double ax = s.x - f.x;
    const double ay = s.y - f.y;
    const double bx = e.x - f.x;
    const double by = e.y - f.y;
    const double na = std::hypot(ax, ay);
    const double nb = std::hypot(bx, by);
    if (na == 0.0 || nb == 0.0) return 180.0;
    const double cosv = std::clamp((ax * bx + ay * by) / (na * nb), -1.0, 1.0);
    return std::acos(cosv) * 180.0 / std::numbers::pi;
}

int count_fingers(std::span<const Defect> defects, const Contour& c, double min_depth, double max_angle) {
    int qualifying = 0;
    for (const auto& d : defects) {
        if (d.depth >= min_depth && defect_angle(d, c) <= max_angle) ++qualifying;
    }
    return qualifying == 0 ? 0 : std::min(qualifying + 1, 5);
}

bool fingertip_touch(PixelPoint a, PixelPoint b, double gap_threshold) {
    return std::hypot(static_cast<double>(a.x - b.x), static_cast<double>(a.y - b.y)) < gap_threshold;
}

}  // namespace gesture::vision
