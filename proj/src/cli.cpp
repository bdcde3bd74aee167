#include "gesture/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <boost/asio/io_context.hpp>
#include <boost/asio/signal_set.hpp>

#include "gesture/config.hpp"
#include "gesture/errors.hpp"
#include "gesture/keyboard.hpp"
#include "gesture/metrics.hpp"
#include "gesture/pgm.hpp"
#include "gesture/replay.hpp"
#include "gesture/server.hpp"
#include "gesture/trace.hpp"
#include "gesture/vision_pipeline.hpp"

namespace gesture::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
    // serve
    int port = 0;
    std::string config;
    unsigned threads = 2;
    // replay
    std::string trace;
    std::string out;
    // score
    std::string events;
    std::string script;
    std::int64_t window_ms = kDefaultMatchWindowMs;
    std::string session = "session-1";
    std::string machine = "machine-1";
    // report
    std::vector<std::string> records;
    std::string json_out;
    // layout
    std::string layout_spec;
    bool check = false;
    // vision
    std::string frames_dir;
    std::string masks_dir;
    vision::PipelineConfig vision{};
};

int cmd_serve(const Options& o, std::ostream& out) {
    ServerOptions so;
    so.port = o.port > 0 ? static_cast<std::uint16_t>(o.port) : default_port();
    if (!o.config.empty()) so.defaults = load_config_file(o.config);
    so.threads = o.threads;
    so.log = &std::cerr;
    so.injector_factory = [] { return std::make_unique<RecordingInjector>(); };

    Server server(std::move(so));
    server.start();
    out << "listening on port " << server.port() << std::endl;

    boost::asio::io_context signals_ctx;
    boost::asio::signal_set signals(signals_ctx, SIGINT, SIGTERM);
    signals.async_wait([&](const boost::system::error_code&, int) { server.stop(); });
    signals_ctx.run();
    server.wait();
    return kExitOk;
}

int cmd_replay(const Options& o, std::ostream& out) {
    const TraceFile trace = parse_trace(read_text_file(o.trace));
    SessionConfig cfg;
    cfg.thresholds = trace_thresholds(trace);
    cfg.mode = trace.header.mode;
    cfg.handedness = trace.header.handedness;
    if (!o.config.empty()) cfg = load_config_file(o.config, cfg);

    TraceFile effective = trace;
    effective.header.mode = cfg.mode;
    effective.header.handedness = cfg.handedness;
    const auto events = replay(effective, cfg.thresholds);
    vision::write_file(o.out, write_events(events));

    out << events.size() << " events written to " << o.out << "\n";
    if (cfg.mode == Mode::Keyboard) {
        const auto typed = resolve_key_taps(events, *cfg.layout);
        out << "keys:";
        for (const auto& k : typed.keys) out << ' ' << k;
        out << "\ntext: " << typed.buffer.content << "\n";
    }
    return kExitOk;
}

int cmd_score(const Options& o, std::ostream& out) {
    const auto events = parse_events(read_text_file(o.events));
    const auto script = parse_script(read_text_file(o.script));
    const auto records = score(events, script, o.window_ms, o.session, o.machine);
    vision::write_file(o.out, write_records(records));
    const auto detected = std::count_if(records.begin(), records.end(), [](const auto& r) { return r.detected; });
    out << records.size() << " attempts, " << detected << " detected\n";
    return kExitOk;
}

int cmd_report(const Options& o, std::ostream& out) {
    std::vector<AttemptRecord> all;
    for (const auto& path : o.records) {
        auto part = parse_records(read_text_file(path));
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    const Report report = compute_report(all);
    out << render_table(report);
    if (!o.json_out.empty()) vision::write_file(o.json_out, render_json(report));
    return kExitOk;
}

int cmd_layout(const Options& o, std::ostream& out, std::ostream& err) {
    try {
        const KeyboardLayout layout =
            o.layout_spec == "default" ? default_layout() : parse_layout(read_text_file(o.layout_spec));
        if (o.check) {
            out << "ok: layout '" << layout.name << "' with " << layout.keys.size() << " keys\n";
        } else {
            out << write_layout(layout);
        }
    } catch (const LayoutSpecError& e) {
        err << "invalid layout: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_vision(const Options& o, std::ostream& out) {
    if (!fs::is_directory(o.frames_dir)) throw Error("not a directory: " + o.frames_dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(o.frames_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".pgm") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (!o.masks_dir.empty()) fs::create_directories(o.masks_dir);

    vision::Pipeline pipeline(o.vision);
    std::string report;
    for (const auto& f : files) {
        const auto r = pipeline.process(vision::read_pgm_file(f), f.filename().string());
        report += vision::to_json_line(r);
        report.push_back('\n');
        if (!o.masks_dir.empty()) {
            vision::write_file(fs::path(o.masks_dir) / f.filename(), vision::write_pgm(pipeline.last_mask()));
        }
    }
    vision::write_file(o.out, report);
    out << files.size() << " frames processed\n";
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gesture input engine: live sessions, trace replay, scoring and the contour pipeline", "gesturectl"};
    app.require_subcommand(1);
    Options o;

    auto* serve = app.add_subcommand("serve", "Run the websocket session server");
    serve->add_option("--port", o.port, "Listening port (default: $GESTURE_PORT or 8765)")->check(CLI::Range(1, 65535));
    serve->add_option("--config", o.config, "Session config file")->check(CLI::ExistingFile);
    serve->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* replay_cmd = app.add_subcommand("replay", "Replay a trace through the engine");
    replay_cmd->add_option("--trace", o.trace, "Trace file")->required();
    replay_cmd->add_option("--config", o.config, "Session config file");
    replay_cmd->add_option("--out", o.out, "Event log to write")->required();

    auto* score_cmd = app.add_subcommand("score", "Score an event log against a ground-truth script");
    score_cmd->add_option("--events", o.events, "Event log")->required();
    score_cmd->add_option("--script", o.script, "Ground-truth script")->required();
    score_cmd->add_option("--out", o.out, "Attempt records to write")->required();
    score_cmd->add_option("--window-ms", o.window_ms, "Matching window (+-ms)")->check(CLI::NonNegativeNumber);
    score_cmd->add_option("--session", o.session, "Session id stored in the records");
    score_cmd->add_option("--machine", o.machine, "Machine id stored in the records");

    auto* report_cmd = app.add_subcommand("report", "Summarize attempt records");
    report_cmd->add_option("--records", o.records, "Attempt record files")->required()->expected(1, -1);
    report_cmd->add_option("--json", o.json_out, "Also write the report as JSON");

    auto* layout_cmd = app.add_subcommand("layout", "Validate or print a keyboard layout");
    layout_cmd->add_option("--spec", o.layout_spec, "Layout file, or 'default'")->required();
    layout_cmd->add_flag("--check", o.check, "Only validate");

    auto* vision_cmd = app.add_subcommand("vision", "Run the contour pipeline over a directory of PGM frames");
    vision_cmd->add_option("--frames", o.frames_dir, "Directory of .pgm frames")->required();
    vision_cmd->add_option("--out", o.out, "Per-frame report to write")->required();
    vision_cmd->add_option("--masks", o.masks_dir, "Optional directory for foreground masks");
    vision_cmd->add_option("--theta", o.vision.theta, "Subtraction threshold");
    vision_cmd->add_option("--rho", o.vision.rho, "Background learning rate")->check(CLI::Range(0.0, 1.0));
    vision_cmd->add_option("--min-depth", o.vision.min_depth, "Minimum defect depth (px)");
    vision_cmd->add_option("--max-angle", o.vision.max_angle, "Maximum defect angle (deg)");
    vision_cmd->add_option("--gap", o.vision.gap_threshold, "Fingertip touch gap (px)")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n";
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return kExitUsage;
    }

    try {
        if (serve->parsed()) return cmd_serve(o, out);
        if (replay_cmd->parsed()) return cmd_replay(o, out);
        if (score_cmd->parsed()) return cmd_score(o, out);
        if (report_cmd->parsed()) return cmd_report(o, out);
        if (layout_cmd->parsed()) return cmd_layout(o, out, err);
        if (vision_cmd->parsed()) return cmd_vision(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace gesture::cli
