#include "fixtures.hpp"

#include <algorithm>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "gesture/keyboard.hpp"
#include "gesture/metrics.hpp"
#include "gesture/pgm.hpp"
#include "gesture/trace.hpp"
#include "synth.hpp"

namespace gesture::testing {

namespace {

constexpr std::int64_t kFrameMs = 33;

class TraceBuilder {
public:
    TraceBuilder(std::string session, Mode mode, double scale) : scale_(scale) {
        trace_.header.session_id = std::move(session);
        trace_.header.mode = mode;
    }

    /// Emits one frame and returns its timestamp.
    std::int64_t frame(Point2 tip, const HandPose& pose) {
        const std::int64_t t = next_t_;
        trace_.frames.push_back(make_frame(t, tip, scale_, pose));
        next_t_ += kFrameMs;
        tip_ = tip;
        return t;
    }

    std::int64_t hold(int n, const HandPose& pose) {
        std::int64_t t = 0;
        for (int i = 0; i < n; ++i) t = frame(tip_, pose);
        return t;
    }

    std::int64_t move_to(Point2 target, int n, const HandPose& pose) {
        const Point2 from = tip_;
        std::int64_t t = 0;
        for (int i = 1; i <= n; ++i) {
            const double a = static_cast<double>(i) / n;
            t = frame({from.x + a * (target.x - from.x), from.y + a * (target.y - from.y)}, pose);
        }
        return t;
    }

    void set_tip(Point2 p) { tip_ = p; }
    TraceFile& trace() { return trace_; }

private:
    TraceFile trace_;
    double scale_;
    std::int64_t next_t_ = 0;
    Point2 tip_{0.5, 0.5};
};

std::string type_hello() {
    // Keyboard taps land in mirrored camera space, so the hand sits at (1 - cx, cy).
    TraceBuilder b("type_hello", Mode::Keyboard, 0.07);
    const HandPose open = click_pose(0.8, 0.6);
    const HandPose pinched = click_pose(0.15, 0.6);
    bool first = true;
    for (const char* label : {"H", "E", "L", "L", "O"}) {
        const Point2 c = default_layout().find(label)->rect.center();
        const Point2 target{1.0 - c.x, c.y};
        if (first) {
            b.set_tip(target);
            b.hold(4, open);
            first = false;
        } else {
            b.move_to(target, 6, open);
        }
        b.hold(2, open);
        b.hold(3, pinched);
        b.hold(3, open);
    }
    return write_trace(b.trace());
}

struct MouseFixture {
    std::string trace;
    std::string script;
};

MouseFixture mouse_session() {
    TraceBuilder b("mouse_session", Mode::Mouse, 0.1);
    GroundTruthScript script;
    b.set_tip({0.4, 0.5});

    b.hold(1, point_pose());
    const std::int64_t point_t = b.move_to({0.5, 0.5}, 10, point_pose());
    script.entries.push_back({point_t, Action::Point});
    b.move_to({0.6, 0.5}, 10, point_pose());

    const HandPose ready = click_pose(0.8, 0.6);
    b.hold(5, ready);
    b.hold(3, click_pose(0.8, 0.2));
    script.entries.push_back({b.hold(1, ready), Action::LeftClick});
    b.hold(20, ready);

    b.hold(3, click_pose(0.15, 0.6));
    script.entries.push_back({b.hold(1, ready), Action::RightClick});
    b.hold(20, ready);

    b.hold(2, click_pose(0.8, 0.2));
    b.hold(2, ready);
    b.hold(2, click_pose(0.8, 0.2));
    script.entries.push_back({b.hold(1, ready), Action::DoubleClick});
    b.hold(20, ready);

    b.hold(2, scroll_pose());
    b.move_to({0.6, 0.35}, 5, scroll_pose());
    script.entries.push_back({b.move_to({0.6, 0.2}, 5, scroll_pose()), Action::Scroll});
    b.hold(5, fist_pose());

    return {write_trace(b.trace()), write_script(script)};
}

// Half-up hundredths of a percent of num/den, in integers.
long long hundredths(long long num, long long den) { return (num * 20000 + den) / (2 * den); }

std::string study_records() {
    std::vector<AttemptRecord> all;
    std::mt19937 rng(2024);
    for (const auto& row : kStudyTable) {
        const Action action = *parse_action(row.action);
        // Smallest attempt count for which integer counts hit both targets.
        long long attempts = 0, detected = 0, correct = 0;
        for (long long n = 1; n <= 10000 && attempts == 0; ++n) {
            for (long long d = (row.detection * n) / 10000; d <= n && attempts == 0; ++d) {
                if (hundredths(d, n) > row.detection) break;
                if (hundredths(d, n) != row.detection || d == 0) continue;
                for (long long c = (row.accuracy * d) / 10000; c <= d; ++c) {
                    if (hundredths(c, d) > row.accuracy) break;
                    if (hundredths(c, d) == row.accuracy) {
                        attempts = n;
                        detected = d;
                        correct = c;
                        break;
                    }
                }
            }
        }
        if (attempts == 0) throw std::logic_error("no integer counts for table row");

        std::vector<AttemptRecord> rows;
        for (long long i = 0; i < attempts; ++i) {
            rows.push_back({action, i < detected, i < correct, "study", "machine-1"});
        }
        std::shuffle(rows.begin(), rows.end(), rng);
        all.insert(all.end(), rows.begin(), rows.end());
    }
    return write_records(all);
}

std::string bad_layout() {
    return R"({"name":"bad","keys":[)"
           R"({"label":"A","action":"char","char":"A","rect":[0.1,0.1,0.2,0.2]},)"
           R"({"label":"B","action":"char","char":"B","rect":[0.25,0.15,0.2,0.2]},)"
           R"({"label":"C","action":"char","char":"C","rect":[0.6,0.1,0.2,0.2]}]})"
           "\n";
}

std::string compact_layout() {
    std::vector<Key> keys{
        {"A", {KeyActionKind::Char, 'A'}, {0.0, 0.625, 0.25, 0.25}},
        {"B", {KeyActionKind::Char, 'B'}, {0.25, 0.625, 0.25, 0.25}},
        {"Enter", {KeyActionKind::Enter, '\0'}, {0.5, 0.625, 0.25, 0.25}},
        {"Backspace", {KeyActionKind::Backspace, '\0'}, {0.75, 0.625, 0.25, 0.25}},
    };
    return write_layout(build_layout("compact", std::move(keys)));
}

std::string keyboard_config() {
    return R"({"mode":"keyboard","handedness":"right","layout":"default","inject":false,"seed":7})"
           "\n";
}

vision::GrayFrame backdrop() {
    vision::GrayFrame f(160, 120);
    for (int y = 0; y < f.height; ++y) {
        for (int x = 0; x < f.width; ++x) f.at(x, y) = static_cast<std::uint8_t>(30 + x / 4 + y / 8);
    }
    return f;
}

vision::GrayFrame over_backdrop(const vision::BinaryMask& m) {
    vision::GrayFrame f = backdrop();
    for (std::size_t i = 0; i < m.bits.size(); ++i) {
        if (m.bits[i]) f.pixels[i] = 220;
    }
    return f;
}

}  // namespace

std::map<std::string, std::string> generate_fixtures() {
    std::map<std::string, std::string> files;
    files["type_hello.trace"] = type_hello();
    auto mouse = mouse_session();
    files["mouse_session.trace"] = std::move(mouse.trace);
    files["mouse_session.script"] = std::move(mouse.script);
    files["study_records.jsonl"] = study_records();
    files["layouts/bad_overlap.json"] = bad_layout();
    files["layouts/compact.json"] = compact_layout();
    files["config/keyboard.json"] = keyboard_config();

    const vision::GrayFrame frames[] = {
        backdrop(),
        over_backdrop(open_hand_mask()),
        over_backdrop(v_sign_mask()),
        over_backdrop(fist_mask()),
        over_backdrop(v_sign_mask(160, 120, 2)),
    };
    for (std::size_t i = 0; i < std::size(frames); ++i) {
        std::ostringstream name;
        name << "vision/frame_" << std::setw(3) << std::setfill('0') << i << ".pgm";
        files[name.str()] = vision::write_pgm(frames[i]);
    }
    return files;
}

}  // namespace gesture::testing
