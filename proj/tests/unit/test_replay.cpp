#include <doctest.h>

#include <random>

#include "gesture/config.hpp"
#include "gesture/errors.hpp"
#include "gesture/replay.hpp"
#include "gesture/trace.hpp"
#include "random_trace.hpp"
#include "synth.hpp"

using namespace gesture;

namespace {

std::string fixture(const char* rel) { return read_text_file(std::string(GESTURE_FIXTURES) + "/" + rel); }

std::string frame_line(std::int64_t t, int landmarks = 21) {
    std::string s = "{\"t\":" + std::to_string(t) + ",\"hand\":\"right\",\"lm\":[";
    for (int i = 0; i < landmarks; ++i) s += std::string(i ? "," : "") + "[0.5,0.5,0.0]";
    return s + "]}";
}

}  // namespace

TEST_CASE("trace round trip over random traces") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        const TraceFile tr = testing::random_trace(rng);
        const std::string bytes = write_trace(tr);
        CHECK(parse_trace(bytes) == tr);
        CHECK(write_trace(parse_trace(bytes)) == bytes);
    }
}

TEST_CASE("trace parse errors carry the line number") {
    std::string text = R"({"version":"gesture-trace/1","session":"s","mode":"mouse","handedness":"right"})"
                       "\n";
    for (int i = 0; i < 5; ++i) text += frame_line(i * 10) + "\n";
    CHECK(parse_trace(text).frames.size() == 5);

    std::string bad_count = text + frame_line(100, 20) + "\n";
    try {
        parse_trace(bad_count);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 7);
    }

    std::string order = text;
    for (int i = 0; i < 5; ++i) order += frame_line(100 + i) + "\n";
    order += frame_line(50) + "\n";
    try {
        parse_trace(order);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 12);
    }

    CHECK_THROWS_AS(parse_trace(R"({"version":"gesture-trace/9","session":"s","mode":"mouse","handedness":"right"})"),
                    VersionError);
    CHECK_THROWS_AS(parse_trace(""), ParseError);
    CHECK_THROWS_AS(parse_trace("{\"version\":"), ParseError);
}

TEST_CASE("event logs round trip") {
    const std::vector<GestureEvent> ev{{EventKind::CursorMove, 1, {0.25, 0.125}, 0},
                                       {EventKind::Scroll, 2, {}, -3},
                                       {EventKind::KeyTap, 3, {0.5, 0.75}, 0},
                                       {EventKind::DoubleClick, 3, {}, 0}};
    CHECK(parse_events(write_events(ev)) == ev);
    CHECK(write_events(ev).find("{\"t\":2,\"type\":\"Scroll\",\"delta\":-3}") != std::string::npos);
}

TEST_CASE("replay") {
    TraceFile empty;
    CHECK(replay(empty, {}).empty());

    const TraceFile hello = parse_trace(fixture("type_hello.trace"));
    const auto ev = replay(hello, {});
    const std::string log = write_events(ev);
    for (int i = 0; i < 3; ++i) CHECK(write_events(replay(hello, {})) == log);

    const TypingResult typed = resolve_key_taps(ev, default_layout());
    CHECK(typed.keys == std::vector<std::string>{"H", "E", "L", "L", "O"});
    CHECK(typed.buffer.content == "HELLO");
}

TEST_CASE("replay skips the other hand and reports the failing frame") {
    TraceFile tr;
    tr.frames.push_back(testing::make_frame(0, {0.5, 0.5}, 0.1, testing::click_pose(0.8, 0.6)));
    tr.frames.push_back(testing::make_frame(10, {0.5, 0.5}, 0.1, testing::click_pose(0.8, 0.2), Handedness::Left));
    tr.frames.push_back(testing::make_frame(20, {0.5, 0.5}, 0.1, testing::click_pose(0.8, 0.6)));
    for (const auto& e : replay(tr, {})) CHECK(e.kind == EventKind::CursorMove);
    CHECK(replay(tr, {}).size() == 2);

    HandFrame degenerate = testing::make_frame(30, {0.5, 0.5}, 0.1, testing::click_pose());
    degenerate.landmarks[lm::kMiddleMcp] = degenerate.landmarks[lm::kWrist];
    tr.frames.push_back(degenerate);
    try {
        replay(tr, {});
        FAIL("expected ReplayError");
    } catch (const ReplayError& e) {
        CHECK(e.frame_index() == 3);
    }
}

TEST_CASE("header thresholds override the defaults") {
    TraceFile tr;
    for (int i = 0; i < 6; ++i) {
        tr.frames.push_back(testing::make_frame(40 * i, {0.5, 0.5}, 0.1, testing::click_pose(0.8, i % 2 ? 0.4 : 0.6)));
    }
    CHECK(replay(tr, trace_thresholds(tr)).size() == 6);  // 0.4 is inside the band
    Thresholds wide;
    wide.tau_down = 0.42;
    wide.tau_up = 0.5;
    tr.header.thresholds = wide;
    CHECK(trace_thresholds(tr) == wide);
    std::size_t clicks = 0;
    for (const auto& e : replay(tr, trace_thresholds(tr))) clicks += e.kind == EventKind::LeftClick;
    CHECK(clicks == 2);
}

TEST_CASE("parallel batch replay equals the serial reference") {
    std::vector<TraceFile> traces;
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 16; ++k) {
        TraceFile tr;
        tr.header.mode = k % 3 ? Mode::Mouse : Mode::Keyboard;
        for (int i = 0; i < 300; ++i) {
            tr.frames.push_back(testing::make_frame(33 * i, {0.3 + 0.4 * u(rng), 0.3 + 0.3 * u(rng)}, 0.08,
                                                    testing::click_pose(u(rng), u(rng))));
        }
        traces.push_back(std::move(tr));
    }
    const auto par = replay_batch(traces);
    CHECK(par == reference::replay_batch(traces));
    for (std::size_t i = 0; i < traces.size(); ++i) CHECK(par[i] == replay(traces[i], {}));

    HandFrame bad = traces[5].frames[0];
    bad.t = traces[5].frames.back().t;
    traces[5].frames.push_back(bad);
    CHECK_THROWS_AS(replay_batch(traces), ReplayError);
}
