#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pats/config_grid.hpp"
#include "pats/errors.hpp"
#include "pats/eval.hpp"
#include "pats/jsonfmt.hpp"
#include "pats/log.hpp"
#include "pats/manifest.hpp"
#include "pats/multiview.hpp"
#include "pats/sampling.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;
constexpr int kExitUsage = 2;

struct ParamFlags {
    std::int64_t n_target = 0;
    std::int64_t n_segments = 0;
    double segment_duration_s = 0.0;

    pats::SamplingParams to_params() const { return {n_target, n_segments, segment_duration_s}; }
};

void add_param_flags(CLI::App* cmd, ParamFlags& flags) {
    cmd->add_option("--target", flags.n_target, "Total frames to extract (N_target)")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--segments", flags.n_segments, "Number of temporal segments (N_s)")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--segment-duration", flags.segment_duration_s,
                    "Requested segment duration in seconds (d_s)")
        ->required()
        ->check(CLI::PositiveNumber);
}

// n_segments <= n_target is a cross-flag constraint CLI11 cannot express.
bool check_param_flags(const ParamFlags& flags) {
    if (flags.n_segments > flags.n_target) {
        std::cerr << "error: --segments (" << flags.n_segments << ") must not exceed --target ("
                  << flags.n_target << ")\n";
        return false;
    }
    return true;
}

int run_plan(const std::string& video_id, const pats::VideoMeta& meta,
             const ParamFlags& flags) {
    if (!check_param_flags(flags)) return kExitUsage;
    if (!pats::frame_count_consistent(meta))
        pats::log::warn("total_frames disagrees with duration_s * fps by more than one frame");
    try {
        const auto plan = pats::pats_plan(meta, flags.to_params());
        std::cout << pats::to_json(pats::make_plan_record(video_id, plan)) << "\n";
    } catch (const pats::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

int run_batch(const std::string& manifest_path, const std::string& out_path,
              const ParamFlags& flags, bool multiview) {
    if (!check_param_flags(flags)) return kExitUsage;
    const auto params = flags.to_params();

    std::vector<pats::ManifestEntry> entries;
    try {
        entries = pats::read_manifest(manifest_path);
    } catch (const pats::ManifestError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    // Reject duplicate ids up front so grouping stays unambiguous.
    std::map<std::string, std::size_t> seen;
    for (auto& entry : entries) {
        if (!entry.record) continue;
        const auto [it, inserted] = seen.emplace(entry.record->video_id, entry.line);
        if (!inserted) {
            entry.error = "duplicate video_id '" + entry.record->video_id + "' (first at line " +
                          std::to_string(it->second) + ")";
            entry.record.reset();
        }
    }

    // Under --multiview, records sharing a group_id are planned together on
    // the shared clock; everything else degenerates to a single-view group.
    std::map<std::string, pats::SamplingPlan> group_plans;
    std::map<std::string, std::string> group_errors;
    if (multiview) {
        std::map<std::string, std::vector<const pats::ManifestRecord*>> groups;
        std::vector<std::string> group_order;
        for (const auto& entry : entries) {
            if (!entry.record || !entry.record->group_id) continue;
            auto& members = groups[*entry.record->group_id];
            if (members.empty()) group_order.push_back(*entry.record->group_id);
            members.push_back(&*entry.record);
        }
        for (const auto& group : group_order) {
            std::vector<pats::ViewMeta> views;
            for (const auto* rec : groups[group]) {
                views.push_back(pats::ViewMeta{
                    rec->video_id, rec->view_role.value_or(pats::ViewRole::exo),
                    pats::VideoMeta{rec->duration_s, rec->total_frames, rec->fps}, 0.0});
            }
            try {
                auto synced = pats::sync_plans(views, params);
                for (auto& [view_id, plan] : synced.per_view)
                    group_plans.emplace(view_id, std::move(plan));
            } catch (const std::exception& e) {
                for (const auto* rec : groups[group]) group_errors[rec->video_id] = e.what();
            }
        }
    }

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << out_path << "'\n";
        return kExitUsage;
    }

    std::size_t failed = 0;
    std::size_t written = 0;
    for (const auto& entry : entries) {
        if (!entry.record) {
            std::cerr << "error: line " << entry.line << ": " << entry.error << "\n";
            ++failed;
            continue;
        }
        const auto& rec = *entry.record;
        const pats::VideoMeta meta{rec.duration_s, rec.total_frames, rec.fps};
        if (!pats::frame_count_consistent(meta))
            pats::log::warn(rec.video_id + ": total_frames disagrees with duration_s * fps");
        try {
            if (const auto it = group_errors.find(rec.video_id); it != group_errors.end())
                throw pats::ParameterError(it->second);
            const auto it = group_plans.find(rec.video_id);
            const pats::SamplingPlan plan =
                it != group_plans.end() && multiview ? it->second : pats::pats_plan(meta, params);
            out << pats::to_json(pats::make_plan_record(rec.video_id, plan)) << "\n";
            ++written;
        } catch (const std::exception& e) {
            std::cerr << "error: line " << entry.line << " (video_id=" << rec.video_id
                      << "): " << e.what() << "\n";
            ++failed;
        }
    }
    pats::log::info("batch: wrote " + std::to_string(written) + " plan records, " +
                    std::to_string(failed) + " failures");
    return failed > 0 ? kExitPartial : kExitOk;
}

int run_grid(const pats::GridSpec& spec) {
    std::vector<pats::SamplingParams> grid;
    try {
        grid = pats::enumerate_grid(spec);
    } catch (const pats::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cout << "frames,segments,duration_s,effective_fps\n";
    for (const auto& params : grid) {
        char duration[32];
        std::snprintf(duration, sizeof(duration), "%g", params.segment_duration_s);
        std::cout << params.n_target << "," << params.n_segments << "," << duration << ","
                  << pats::detail::fmt_fixed(pats::effective_fps(params), 2) << "\n";
    }
    return kExitOk;
}

struct EvalFlags {
    std::uint64_t seed = 0;
    std::int64_t n_videos = 0;
    double max_gap_s = 0.5;
    double fps = 30.0;
    double duration_min = 60.0;
    double duration_max = 300.0;
    double movement_min = 1.0;
    double movement_max = 2.0;
    std::int64_t movements_per_video = 5;
};

int run_eval(const EvalFlags& eval, const ParamFlags& flags) {
    if (!check_param_flags(flags)) return kExitUsage;
    try {
        const auto corpus = pats::generate_corpus(
            eval.n_videos, {eval.duration_min, eval.duration_max},
            {eval.movement_min, eval.movement_max}, eval.movements_per_video, eval.fps,
            eval.seed);
        const auto reports =
            pats::compare_strategies(corpus, flags.to_params(), eval.max_gap_s, eval.seed);
        std::cout << pats::eval_report_json(reports, flags.to_params(), eval.max_gap_s,
                                            eval.seed, eval.n_videos);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PATS temporal-sampling planner"};
    app.require_subcommand(1);

    // plan
    auto* plan_cmd = app.add_subcommand("plan", "Plan one video and print a JSON plan record");
    pats::VideoMeta plan_meta;
    ParamFlags plan_params;
    std::string plan_id;
    plan_cmd->add_option("--duration", plan_meta.duration_s, "Video duration in seconds")
        ->required();
    plan_cmd->add_option("--fps", plan_meta.fps, "Frame rate")->required()->check(
        CLI::PositiveNumber);
    plan_cmd->add_option("--total-frames", plan_meta.total_frames, "Total frame count")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_param_flags(plan_cmd, plan_params);
    plan_cmd->add_option("--id", plan_id, "video_id for the emitted record");

    // batch
    auto* batch_cmd = app.add_subcommand("batch", "Plan every record of a metadata manifest");
    std::string manifest_path;
    std::string out_path;
    ParamFlags batch_params;
    bool multiview = false;
    batch_cmd->add_option("--manifest", manifest_path, "CSV or JSON-lines metadata manifest")
        ->required();
    batch_cmd->add_option("--out", out_path, "Output path for JSON-lines plan records")
        ->required();
    add_param_flags(batch_cmd, batch_params);
    batch_cmd->add_flag("--multiview", multiview,
                        "Synchronize records sharing a group_id on one clock");

    // grid
    auto* grid_cmd = app.add_subcommand("grid", "Print the parameter grid as CSV");
    pats::GridSpec spec;
    grid_cmd->add_option("--frames", spec.frame_counts, "Frame-count axis")->expected(-1);
    grid_cmd->add_option("--segments", spec.segment_counts, "Segment-count axis")->expected(-1);
    grid_cmd->add_option("--durations", spec.durations_s, "Segment-duration axis (seconds)")
        ->expected(-1);

    // eval
    auto* eval_cmd =
        app.add_subcommand("eval", "Compare pats/uniform/random coverage on a synthetic corpus");
    EvalFlags eval;
    ParamFlags eval_params;
    eval_cmd->add_option("--seed", eval.seed, "Corpus and baseline RNG seed")->required();
    eval_cmd->add_option("--n-videos", eval.n_videos, "Corpus size")->required()->check(
        CLI::PositiveNumber);
    add_param_flags(eval_cmd, eval_params);
    eval_cmd->add_option("--max-gap", eval.max_gap_s, "Capture gap threshold in seconds")
        ->check(CLI::PositiveNumber);
    eval_cmd->add_option("--fps", eval.fps, "Corpus frame rate")->check(CLI::PositiveNumber);
    eval_cmd->add_option("--duration-min", eval.duration_min, "Minimum video duration (s)")
        ->check(CLI::PositiveNumber);
    eval_cmd->add_option("--duration-max", eval.duration_max, "Maximum video duration (s)")
        ->check(CLI::PositiveNumber);
    eval_cmd->add_option("--movement-min", eval.movement_min, "Minimum movement duration (s)")
        ->check(CLI::PositiveNumber);
    eval_cmd->add_option("--movement-max", eval.movement_max, "Maximum movement duration (s)")
        ->check(CLI::PositiveNumber);
    eval_cmd->add_option("--movements-per-video", eval.movements_per_video,
                         "Movements per synthetic video")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (plan_cmd->parsed()) return run_plan(plan_id, plan_meta, plan_params);
    if (batch_cmd->parsed()) return run_batch(manifest_path, out_path, batch_params, multiview);
    if (grid_cmd->parsed()) return run_grid(spec);
    if (eval_cmd->parsed()) return run_eval(eval, eval_params);
    return kExitUsage;
}
