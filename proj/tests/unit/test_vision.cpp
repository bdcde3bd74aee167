#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "gesture/errors.hpp"
#include "gesture/pgm.hpp"
#include "gesture/vision.hpp"
#include "gesture/vision_pipeline.hpp"
#include "oracles.hpp"
#include "synth.hpp"

using namespace gesture;
using namespace gesture::vision;

namespace {

GrayFrame random_frame(std::mt19937_64& rng, int w, int h) {
    std::uniform_int_distribution<int> u(0, 255);
    GrayFrame f(w, h);
    for (auto& p : f.pixels) p = static_cast<std::uint8_t>(u(rng));
    return f;
}

bool has_background_4neighbour(const BinaryMask& m, PixelPoint p) {
    const int d[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (const auto& v : d) {
        const int x = p.x + v[0], y = p.y + v[1];
        if (!m.inside(x, y) || !m.at(x, y)) return true;
    }
    return false;
}

long ones(const BinaryMask& m) { return std::count(m.bits.begin(), m.bits.end(), 1); }

Contour largest(const std::vector<Contour>& cs) {
    return *std::max_element(cs.begin(), cs.end(),
                             [](const Contour& a, const Contour& b) { return a.points.size() < b.points.size(); });
}

}  // namespace

TEST_CASE("update_background closed forms") {
    GrayFrame f(4, 3, 200);
    BackgroundModel bg(4, 3, 17.0);
    CHECK(update_background(bg, f, 1.0).accum == std::vector<double>(12, 200.0));
    CHECK(update_background(bg, f, 0.0).accum == bg.accum);

    BackgroundModel z(4, 3, 0.0);
    for (int i = 0; i < 50; ++i) z = update_background(z, f, 0.1);
    const double want = 200.0 * (1.0 - std::pow(0.9, 50));
    for (double v : z.accum) CHECK(std::fabs(v - want) < 1e-9);

    CHECK_THROWS_AS(update_background(bg, GrayFrame(3, 3), 0.5), DimensionMismatchError);
}

TEST_CASE("update_background stays between model and frame") {
    std::mt19937_64 rng(1);
    BackgroundModel bg = BackgroundModel::from_frame(random_frame(rng, 31, 17));
    for (int k = 0; k < 10; ++k) {
        const GrayFrame f = random_frame(rng, 31, 17);
        const BackgroundModel next = update_background(bg, f, 0.05 * k);
        for (std::size_t i = 0; i < f.pixels.size(); ++i) {
            CHECK(next.accum[i] >= std::min(bg.accum[i], double(f.pixels[i])) - 1e-12);
            CHECK(next.accum[i] <= std::max(bg.accum[i], double(f.pixels[i])) + 1e-12);
        }
        bg = next;
    }
}

TEST_CASE("subtract") {
    GrayFrame f(5, 5, 100);
    const BackgroundModel bg = BackgroundModel::from_frame(f);
    CHECK(ones(subtract(bg, f, 10)) == 0);
    f.at(2, 3) = 111;
    const BinaryMask m = subtract(bg, f, 10);
    CHECK(ones(m) == 1);
    CHECK(m.at(2, 3));
    f.at(2, 3) = 110;  // exactly theta is not foreground
    CHECK(ones(subtract(bg, f, 10)) == 0);
    CHECK_THROWS_AS(subtract(bg, GrayFrame(4, 5), 10), DimensionMismatchError);
}

TEST_CASE("parallel kernels equal the serial reference and a per-pixel oracle") {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 10; ++k) {
        const int w = 1 + static_cast<int>(rng() % 300), h = 1 + static_cast<int>(rng() % 200);
        const GrayFrame a = random_frame(rng, w, h), b = random_frame(rng, w, h);
        const BackgroundModel bg = BackgroundModel::from_frame(a);
        const double rho = (rng() % 100) / 100.0;
        const double theta = static_cast<double>(rng() % 80);
        CHECK(update_background(bg, b, rho) == reference::update_background(bg, b, rho));
        const BinaryMask m = subtract(bg, b, theta);
        CHECK(m == reference::subtract(bg, b, theta));
        for (std::size_t i = 0; i < b.pixels.size(); ++i) {
            CHECK((m.bits[i] != 0) == (std::fabs(double(b.pixels[i]) - bg.accum[i]) > theta));
        }
    }
}

TEST_CASE("contours of simple masks") {
    CHECK(extract_contours(BinaryMask(6, 6)).empty());

    BinaryMask m(6, 6);
    for (int y = 1; y <= 3; ++y)
        for (int x = 2; x <= 4; ++x) m.set(x, y);
    const auto cs = extract_contours(m);
    REQUIRE(cs.size() == 1);
    const std::vector<PixelPoint> want{{2, 1}, {3, 1}, {4, 1}, {4, 2}, {4, 3}, {3, 3}, {2, 3}, {2, 2}};
    CHECK(cs[0].points == want);

    BinaryMask one(3, 3);
    one.set(1, 1);
    REQUIRE(extract_contours(one).size() == 1);
    CHECK(extract_contours(one)[0].points == std::vector<PixelPoint>{{1, 1}});

    BinaryMask two(12, 10);
    for (int y = 6; y <= 8; ++y)
        for (int x = 1; x <= 3; ++x) two.set(x, y);
    for (int y = 2; y <= 3; ++y)
        for (int x = 7; x <= 9; ++x) two.set(x, y);
    const auto cs2 = extract_contours(two);
    REQUIRE(cs2.size() == 2);
    CHECK(cs2[0].points.front() == PixelPoint{7, 2});
    CHECK(cs2[1].points.front() == PixelPoint{1, 6});

    // Diagonal neighbours join under 8-connectivity.
    BinaryMask diag(4, 4);
    diag.set(0, 0);
    diag.set(1, 1);
    diag.set(2, 2);
    CHECK(extract_contours(diag).size() == 1);
}

TEST_CASE("contour tracing invariants on random blobs") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k) {
        const BinaryMask m = testing::random_blob(rng, 80, 60);
        for (const auto& c : extract_contours(m)) {
            REQUIRE_FALSE(c.points.empty());
            for (std::size_t i = 0; i < c.points.size(); ++i) {
                const PixelPoint p = c.points[i];
                const PixelPoint q = c.points[(i + 1) % c.points.size()];
                CHECK(m.at(p.x, p.y));
                CHECK(has_background_4neighbour(m, p));
                if (c.points.size() > 1) {
                    CHECK(std::max(std::abs(p.x - q.x), std::abs(p.y - q.y)) == 1);
                }
            }
        }
    }
}

TEST_CASE("convex hull basics") {
    const std::vector<PixelPoint> sq{{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}};
    CHECK(convex_hull(sq) == std::vector<PixelPoint>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    const std::vector<PixelPoint> line{{0, 0}, {1, 1}, {2, 2}};
    CHECK(convex_hull(line) == std::vector<PixelPoint>{{0, 0}, {2, 2}});
    const std::vector<PixelPoint> dup{{3, 3}, {3, 3}};
    CHECK(convex_hull(dup) == std::vector<PixelPoint>{{3, 3}});
}

TEST_CASE("hull is convex and contains its input") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> c(0, 255), n(1, 32);
    for (int k = 0; k < 300; ++k) {
        std::vector<PixelPoint> pts(static_cast<std::size_t>(n(rng)));
        for (auto& p : pts) p = {c(rng), c(rng)};
        const auto hull = convex_hull(pts);
        CHECK(hull == oracle::brute_force_hull(pts));
        const std::set<PixelPoint> input(pts.begin(), pts.end());
        for (const auto& v : hull) CHECK(input.count(v) == 1);
        if (hull.size() < 3) continue;
        for (std::size_t i = 0; i < hull.size(); ++i) {
            CHECK(oracle::orient(hull[i], hull[(i + 1) % hull.size()], hull[(i + 2) % hull.size()]) > 0);
        }
        for (const auto& p : pts) {
            for (std::size_t i = 0; i < hull.size(); ++i) CHECK(oracle::orient(hull[i], hull[(i + 1) % hull.size()], p) >= 0);
        }
    }
}

TEST_CASE("segment distance") {
    CHECK(segment_distance({0, 5}, {-3, 0}, {3, 0}) == doctest::Approx(5.0));
    CHECK(segment_distance({6, 4}, {-3, 0}, {3, 0}) == doctest::Approx(5.0));
    CHECK(segment_distance({2, 2}, {2, 2}, {2, 2}) == 0.0);
}

TEST_CASE("convexity defects") {
    BinaryMask block(20, 20);
    for (int y = 3; y < 15; ++y)
        for (int x = 4; x < 12; ++x) block.set(x, y);
    const auto c = extract_contours(block)[0];
    CHECK(convexity_defects(c, convex_hull(c.points), 0.5).empty());

    // Two peaks over a base: a W with one valley.
    const BinaryMask w = testing::v_sign_mask();
    const Contour vc = largest(extract_contours(w));
    const auto hull = convex_hull(vc.points);
    const auto defects = convexity_defects(vc, hull, kDefaultMinDepth);
    REQUIRE(defects.size() == 1);
    CHECK(defects[0].depth == doctest::Approx(oracle::max_arc_deviation(vc, defects[0].start_idx, defects[0].end_idx)).epsilon(1e-9));
    CHECK(vc.points[defects[0].far_idx] == defects[0].far_point);
}

TEST_CASE("defect depths match the brute-force scan on random blobs") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
        const BinaryMask m = testing::random_blob(rng, 96, 72);
        const Contour c = largest(extract_contours(m));
        const auto hull = convex_hull(c.points);
        for (const auto& d : convexity_defects(c, hull, 0.0)) {
            CHECK(std::fabs(d.depth - oracle::max_arc_deviation(c, d.start_idx, d.end_idx)) < 1e-6);
            CHECK(d.depth >= 0.0);
            CHECK(d.depth <= std::hypot(96.0, 72.0));
        }
        for (const auto& d : convexity_defects(c, hull, kDefaultMinDepth)) CHECK(d.depth >= kDefaultMinDepth);
    }
}

TEST_CASE("finger counts on synthetic silhouettes") {
    auto count = [](const BinaryMask& m) {
        const Contour c = largest(extract_contours(m));
        const auto hull = convex_hull(c.points);
        return count_fingers(convexity_defects(c, hull, kDefaultMinDepth), c);
    };
    CHECK(count(testing::open_hand_mask()) == 5);
    CHECK(count(testing::v_sign_mask()) == 2);
    CHECK(count(testing::fist_mask()) == 0);
    CHECK(count_fingers({}, Contour{}) == 0);
}

TEST_CASE("fingertip touch is strict") {
    CHECK(fingertip_touch({4, 4}, {4, 4}, 1.0));
    CHECK(fingertip_touch({0, 0}, {3, 4}, 6.0));
    CHECK_FALSE(fingertip_touch({0, 0}, {3, 4}, 5.0));
}

TEST_CASE("pgm round trip") {
    std::mt19937_64 rng(6);
    const GrayFrame f = random_frame(rng, 13, 7);
    CHECK(parse_pgm(write_pgm(f)) == f);
    CHECK(write_pgm(f).rfind("P5\n13 7\n255\n", 0) == 0);
    CHECK_THROWS(parse_pgm("P2\n1 1\n255\n0"));
    CHECK_THROWS(parse_pgm("P5\n4 4\n255\nab"));
    BinaryMask m(2, 1);
    m.set(1, 0);
    CHECK(parse_pgm(write_pgm(m)).pixels == std::vector<std::uint8_t>{0, 255});
}

TEST_CASE("pipeline over a sequence is deterministic") {
    const GrayFrame bg = testing::paint(BinaryMask(160, 120), 0, 40);
    const std::vector<GrayFrame> frames{bg, testing::paint(testing::open_hand_mask(), 220, 40),
                                        testing::paint(testing::v_sign_mask(160, 120, 2), 220, 40),
                                        testing::paint(testing::fist_mask(), 220, 40)};
    auto run = [&] {
        Pipeline p({25, kDefaultRho, kDefaultMinDepth, kDefaultMaxAngle, 12});
        std::vector<std::string> lines;
        std::vector<BinaryMask> masks;
        for (const auto& f : frames) {
            lines.push_back(to_json_line(p.process(f, "f")));
            masks.push_back(p.last_mask());
        }
        return std::make_pair(lines, masks);
    };
    const auto a = run();
    CHECK(a == run());
    CHECK(a.first[0] == R"({"frame":"f","index":0,"contours":0,"fingers":0,"touch":false})");
    CHECK(a.first[1] == R"({"frame":"f","index":1,"contours":1,"fingers":5,"touch":false})");
    CHECK(a.first[2] == R"({"frame":"f","index":2,"contours":1,"fingers":2,"touch":true})");
    CHECK(a.first[3] == R"({"frame":"f","index":3,"contours":1,"fingers":0,"touch":false})");
}
