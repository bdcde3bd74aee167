#include <array>
#include <vector>

#include "gesture/vision.hpp"

namespace gesture::vision {

namespace {

// Clockwise on screen (y down): E, SE, S, SW, W, NW, N, NE.
constexpr std::array<PixelPoint, 8> kDirs{{{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};
constexpr int kWest = 4;

int dir_of(int dx, int dy) {
    for (int i = 0; i < 8; ++i) {
        if (kDirs[i].x == dx && kDirs[i].y == dy) return i;
    }
    return -1;
}

bool fg(const BinaryMask& m, int x, int y) { return m.inside(x, y) && m.at(x, y); }

// Moore-neighbour tracing. `backtrack` is the direction from p to the last
// background pixel examined. Returns the direction of the next boundary pixel,
// or -1 for an isolated pixel.
int next_dir(const BinaryMask& m, PixelPoint p, int backtrack) {
    for (int k = 1; k <= 8; ++k) {
        const int d = (backtrack + k) % 8;
        if (fg(m, p.x + kDirs[d].x, p.y + kDirs[d].y)) return d;
    }
    return -1;
}

Contour trace(const BinaryMask& m, PixelPoint start) {
    Contour c;
    c.points.push_back(start);

    int d = next_dir(m, start, kWest);
    if (d < 0) return c;

    const PixelPoint second{start.x + kDirs[d].x, start.y + kDirs[d].y};
    PixelPoint p = start;
    for (;;) {
        const PixelPoint q{p.x + kDirs[d].x, p.y + kDirs[d].y};
        const PixelPoint b{p.x + kDirs[(d + 7) % 8].x, p.y + kDirs[(d + 7) % 8].y};
        const int backtrack = dir_of(b.x - q.x, b.y - q.y);
        const int nd = next_dir(m, q, backtrack);
        if (q == start) {
            const PixelPoint after{q.x + kDirs[nd].x, q.y + kDirs[nd].y};
            if (after == second) break;
        }
        c.points.push_back(q);
        p = q;
        d = nd;
    }
    return c;
}

// Marks every pixel 8-connected to `seed`.
void flood(const BinaryMask& m, std::vector<std::uint8_t>& seen, PixelPoint seed) {
    std::vector<PixelPoint> stack{seed};
    seen[static_cast<std::size_t>(seed.y) * m.width + seed.x] = 1;
    while (!stack.empty()) {
        const PixelPoint p = stack.back();
        stack.pop_back();
        for (const auto& dv : kDirs) {
            const int nx = p.x + dv.x;
            const int ny = p.y + dv.y;
            if (!fg(m, nx, ny)) continue;
            auto& s = seen[static_cast<std::size_t>(ny) * m.width + nx];
            if (s) continue;
            s = 1;
            stack.push_back({nx, ny});
        }
    }
}

}  // namespace

std::vector<Contour> extract_contours(const BinaryMask& m) {
    std::vector<Contour> out;
    std::vector<std::uint8_t> seen(m.bits.size(), 0);
    for (int y = 0; y < m.height; ++y) {
        for (int x = 0; x < m.width; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * m.width + x;
            if (!m.bits[i] || seen[i]) continue;
            out.push_back(trace(m, {x, y}));
            flood(m, seen, {x, y});
        }
    }
    return out;
}

}  // namespace gesture::vision
