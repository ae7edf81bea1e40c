#include "pats/config_grid.hpp"

#include <algorithm>
#include <cctype>

#include "pats/errors.hpp"
#include "pats/jsonfmt.hpp"
#include "pats/sampling.hpp"

namespace pats {

const char* to_string(ViewGroup group) {
    switch (group) {
        case ViewGroup::ego: return "ego";
        case ViewGroup::exos: return "exos";
        case ViewGroup::ego_exos: return "ego_exos";
        case ViewGroup::all: return "all";
    }
    return "all";
}

double effective_fps(const SamplingParams& params) {
    validate(params);
    return static_cast<double>(params.n_target) /
           (static_cast<double>(params.n_segments) * params.segment_duration_s);
}

std::vector<SamplingParams> enumerate_grid(const GridSpec& spec) {
    for (const auto frames : spec.frame_counts)
        if (frames < 1) throw ParameterError("grid frame counts must be positive");
    for (const auto segments : spec.segment_counts)
        if (segments < 1) throw ParameterError("grid segment counts must be positive");
    for (const auto duration : spec.durations_s)
        if (!(duration > 0.0)) throw ParameterError("grid durations must be positive");

    auto frames = spec.frame_counts;
    auto segments = spec.segment_counts;
    auto durations = spec.durations_s;
    std::sort(frames.begin(), frames.end());
    frames.erase(std::unique(frames.begin(), frames.end()), frames.end());
    std::sort(segments.begin(), segments.end());
    segments.erase(std::unique(segments.begin(), segments.end()), segments.end());
    std::sort(durations.begin(), durations.end());
    durations.erase(std::unique(durations.begin(), durations.end()), durations.end());

    std::vector<SamplingParams> grid;
    for (const auto n_target : frames)
        for (const auto n_segments : segments)
            for (const auto duration : durations)
                if (n_segments <= n_target)
                    grid.push_back(SamplingParams{n_target, n_segments, duration});
    return grid;
}

const std::vector<GridConfigRow>& grid_reference_rows() {
    static const std::vector<GridConfigRow> rows = {
        {ViewGroup::ego, {24, 6, 3.0}, 1.33, ""},
        {ViewGroup::ego, {32, 2, 3.0}, 5.33, "Bouldering specialist"},
        {ViewGroup::ego, {32, 8, 1.0}, 4.00, ""},
        {ViewGroup::ego, {32, 12, 3.0}, 0.89, "Music specialist"},
        {ViewGroup::exos, {24, 6, 3.0}, 1.33, ""},
        {ViewGroup::exos, {32, 2, 3.0}, 5.33, ""},
        {ViewGroup::exos, {32, 8, 1.0}, 4.00, "Cooking specialist"},
        {ViewGroup::exos, {32, 12, 3.0}, 0.89, ""},
        {ViewGroup::ego_exos, {24, 6, 3.0}, 1.33, ""},
        {ViewGroup::ego_exos, {32, 2, 3.0}, 5.33, "Basketball specialist"},
        {ViewGroup::ego_exos, {32, 8, 1.0}, 4.00, "Dancing specialist"},
        {ViewGroup::ego_exos, {32, 12, 3.0}, 0.89, ""},
    };
    return rows;
}

const std::vector<ScenarioConfig>& scenario_reference_rows() {
    static const std::vector<ScenarioConfig> rows = {
        {"basketball", ViewGroup::ego_exos, SamplingParams{32, 2, 3.0}, 5.33,
         "Rapid sampling, minimal fragmentation"},
        {"cooking", ViewGroup::exos, SamplingParams{32, 8, 1.0}, 4.00,
         "High-frequency, external views"},
        {"dancing", ViewGroup::ego_exos, SamplingParams{32, 8, 1.0}, 4.00, "High-frequency"},
        {"music", ViewGroup::ego, SamplingParams{32, 12, 3.0}, 0.89,
         "Fine-grained, egocentric capture"},
        {"bouldering", ViewGroup::ego, SamplingParams{32, 2, 3.0}, 5.33,
         "Rapid sampling, proprioceptive focus"},
        {"soccer", ViewGroup::all, std::nullopt, std::nullopt, "Consistent across configs"},
    };
    return rows;
}

ScenarioConfig best_config(const std::string& scenario) {
    std::string key = scenario;
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (const auto& row : scenario_reference_rows()) {
        if (row.scenario == key) return row;
    }
    std::string valid;
    for (const auto& row : scenario_reference_rows()) {
        if (!valid.empty()) valid += ", ";
        valid += row.scenario;
    }
    throw LookupError("unknown scenario '" + scenario + "' (valid: " + valid + ")");
}

std::string reference_tables_json() {
    using detail::fmt_fixed;
    using detail::json_escape;

    std::string out = "{\n  \"grid_configurations\": [\n";
    const auto& grid = grid_reference_rows();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& row = grid[i];
        out += "    {\"views\": \"" + std::string(to_string(row.views)) + "\", ";
        out += "\"frames\": " + std::to_string(row.params.n_target) + ", ";
        out += "\"segments\": " + std::to_string(row.params.n_segments) + ", ";
        out += "\"duration_s\": " + fmt_fixed(row.params.segment_duration_s, 1) + ", ";
        out += "\"effective_fps\": " + fmt_fixed(row.effective_fps, 2) + ", ";
        out += "\"note\": \"" + json_escape(row.note) + "\"}";
        out += (i + 1 < grid.size()) ? ",\n" : "\n";
    }
    out += "  ],\n  \"best_configurations\": [\n";
    const auto& best = scenario_reference_rows();
    for (std::size_t i = 0; i < best.size(); ++i) {
        const auto& row = best[i];
        out += "    {\"scenario\": \"" + json_escape(row.scenario) + "\", ";
        out += "\"views\": \"" + std::string(to_string(row.views)) + "\", ";
        if (row.params) {
            out += "\"frames\": " + std::to_string(row.params->n_target) + ", ";
            out += "\"segments\": " + std::to_string(row.params->n_segments) + ", ";
            out += "\"duration_s\": " + fmt_fixed(row.params->segment_duration_s, 1) + ", ";
        } else {
            out += "\"frames\": null, \"segments\": null, \"duration_s\": null, ";
        }
        out += row.effective_fps ? "\"effective_fps\": " + fmt_fixed(*row.effective_fps, 2) + ", "
                                 : "\"effective_fps\": null, ";
        out += "\"note\": \"" + json_escape(row.note) + "\"}";
        out += (i + 1 < best.size()) ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

}  // namespace pats
