#pragma once

#include <map>
#include <string>
#include <vector>

#include "pats/types.hpp"

namespace pats {

enum class ViewRole { ego, exo };

const char* to_string(ViewRole role);

// One camera stream of a performance. time_offset_s maps local stream time
// onto the shared clock: shared = local + offset.
struct ViewMeta {
    std::string view_id;
    ViewRole role = ViewRole::exo;
    VideoMeta meta;
    double time_offset_s = 0.0;
};

// Synchronized plans for all views of one performance. Segment windows are
// chosen once on the shared clock; per-view plans map them to frame indices.
struct MultiViewPlan {
    double reference_duration_s = 0.0;
    std::vector<SegmentWindow> shared_windows;  // time fields authoritative
    std::map<std::string, SamplingPlan> per_view;
};

// Plans every view against shared segment windows so all views observe the
// same wall-clock intervals. Windows live on the shortest effective view
// timeline; if the shared pipeline (or any single view) would fall back,
// every view falls back together to keep the set coherent.
MultiViewPlan sync_plans(const std::vector<ViewMeta>& views, const SamplingParams& params);

}  // namespace pats
