#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pats/eval.hpp"
#include "pats/multiview.hpp"
#include "pats/types.hpp"

namespace pats {

// One row of an input metadata manifest (CSV or JSON-lines).
struct ManifestRecord {
    std::string video_id;
    double duration_s = 0.0;
    double fps = 0.0;
    std::int64_t total_frames = 0;
    std::optional<ViewRole> view_role;
    std::optional<std::string> group_id;
};

// A manifest row either parsed into a record or rejected with a message;
// batch processing keeps going either way.
struct ManifestEntry {
    std::size_t line = 0;  // 1-based position in the source file
    std::optional<ManifestRecord> record;
    std::string error;
};

// Serialized form of a SamplingPlan, rounded to microsecond time resolution
// so a record survives a serialize/parse round trip unchanged.
struct PlanRecord {
    std::string video_id;
    std::vector<std::int64_t> frame_indices;
    std::string fallback;
    SamplingParams params;
    std::vector<std::pair<double, double>> segments;  // (start_s, duration_s)
};

bool operator==(const PlanRecord& a, const PlanRecord& b);

// Reads a manifest, auto-detecting CSV vs JSON-lines by file extension
// (.csv vs anything else). Throws ManifestError if the file is unreadable
// or a CSV header is missing/unusable; row-level problems land in entries.
std::vector<ManifestEntry> read_manifest(const std::string& path);

std::vector<ManifestEntry> parse_manifest_csv(const std::string& text);
std::vector<ManifestEntry> parse_manifest_jsonl(const std::string& text);

PlanRecord make_plan_record(const std::string& video_id, const SamplingPlan& plan);

// One-line JSON object with stable key order and 6-decimal times.
std::string to_json(const PlanRecord& record);
PlanRecord parse_plan_record(const std::string& json_text);

// Coverage reports as a JSON document keyed by the run settings.
std::string eval_report_json(const std::vector<CoverageReport>& reports,
                             const SamplingParams& params, double max_gap_s,
                             std::uint64_t seed, std::int64_t n_videos);

// Coverage reports as CSV rows (strategy, video_id, captured, movements)
// with one TOTAL row per strategy.
std::string eval_report_csv(const std::vector<CoverageReport>& reports);

// Synthetic corpus as a JSON document for archival.
std::string corpus_json(const std::vector<SyntheticVideo>& corpus);

}  // namespace pats
