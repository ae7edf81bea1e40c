#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pats/types.hpp"

namespace pats {

// Which camera streams a configuration consumes.
enum class ViewGroup { ego, exos, ego_exos, all };

const char* to_string(ViewGroup group);

// The parameter sweep axes. Defaults reproduce the published grid.
struct GridSpec {
    std::vector<std::int64_t> frame_counts = {24, 32};
    std::vector<std::int64_t> segment_counts = {2, 6, 8, 12};
    std::vector<double> durations_s = {1.0, 3.0};
};

// One row of the embedded configuration tables.
struct GridConfigRow {
    ViewGroup views;
    SamplingParams params;
    double effective_fps = 0.0;
    std::string note;
};

// Per-scenario best configuration. Soccer carries no single winning
// parameter set, so params/effective_fps stay empty there.
struct ScenarioConfig {
    std::string scenario;
    ViewGroup views = ViewGroup::all;
    std::optional<SamplingParams> params;
    std::optional<double> effective_fps;
    std::string note;
};

// Frames of real time observed per second inside segments:
// n_target / (n_segments * segment_duration_s).
double effective_fps(const SamplingParams& params);

// Cartesian product of the spec axes, filtered to n_segments <= n_target,
// ordered by frames, then segments, then duration, each ascending.
std::vector<SamplingParams> enumerate_grid(const GridSpec& spec);

// Embedded sweep-configuration rows (12 entries, one per published run).
const std::vector<GridConfigRow>& grid_reference_rows();

// Embedded per-scenario optima. Keys: basketball, cooking, dancing, music,
// bouldering, soccer.
const std::vector<ScenarioConfig>& scenario_reference_rows();

// Looks up a scenario's best configuration, case-insensitively. Throws
// LookupError naming the valid keys for anything else.
ScenarioConfig best_config(const std::string& scenario);

// Both reference tables as a JSON document (the copy shipped in data/).
std::string reference_tables_json();

}  // namespace pats
