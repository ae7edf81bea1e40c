#include "pats/multiview.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "pats/errors.hpp"
#include "pats/sampling.hpp"

namespace pats {

const char* to_string(ViewRole role) { return role == ViewRole::ego ? "ego" : "exo"; }

namespace {

SamplingPlan fallback_all(const ViewMeta& view, const SamplingParams& params, Fallback reason) {
    SamplingPlan plan = uniform_plan(view.meta, params.n_target);
    plan.params = params;
    plan.fallback = reason;
    return plan;
}

}  // namespace

MultiViewPlan sync_plans(const std::vector<ViewMeta>& views, const SamplingParams& params) {
    validate(params);
    if (views.empty()) throw ParameterError("sync_plans: no views given");

    std::set<std::string> ids;
    for (const auto& view : views) {
        if (view.view_id.empty()) throw ParameterError("sync_plans: empty view_id");
        if (!ids.insert(view.view_id).second)
            throw ParameterError("sync_plans: duplicate view_id '" + view.view_id + "'");
        validate(view.meta);
    }

    MultiViewPlan result;

    // The shared timeline is the shortest stretch observable in every view.
    double reference_duration = std::numeric_limits<double>::infinity();
    std::int64_t min_total_frames = std::numeric_limits<std::int64_t>::max();
    for (const auto& view : views) {
        reference_duration =
            std::min(reference_duration, std::max(0.0, view.meta.duration_s - view.time_offset_s));
        min_total_frames = std::min(min_total_frames, view.meta.total_frames);
    }
    result.reference_duration_s = reference_duration;

    // Fallback is all-or-none: one view short on duration or frames pulls
    // the whole set down to uniform sampling.
    Fallback reason = Fallback::none;
    double d_eff = 0.0;
    if (reference_duration <= 0.0) {
        reason = Fallback::insufficient_duration;
    } else if (min_total_frames < params.n_target) {
        reason = Fallback::insufficient_frames;
    } else {
        d_eff = effective_segment_duration(params.segment_duration_s, reference_duration,
                                           params.n_segments);
        if (d_eff < 0.5) reason = Fallback::minimal_segment_duration;
    }
    if (reason != Fallback::none) {
        for (const auto& view : views)
            result.per_view.emplace(view.view_id, fallback_all(view, params, reason));
        return result;
    }

    const double t_max = max_start_time(reference_duration, d_eff);
    const std::vector<double> starts = segment_start_times(t_max, params.n_segments);
    const std::vector<std::int64_t> quota = allocate_frames(params.n_target, params.n_segments);

    result.shared_windows.reserve(starts.size());
    for (std::int64_t i = 0; i < params.n_segments; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        result.shared_windows.push_back(SegmentWindow{i, starts[idx], d_eff, 0, 0, quota[idx]});
    }

    for (const auto& view : views) {
        SamplingPlan plan;
        plan.meta = view.meta;
        plan.params = params;
        plan.fallback = Fallback::none;
        plan.segments.reserve(starts.size());

        std::vector<std::int64_t> indices;
        indices.reserve(static_cast<std::size_t>(params.n_target));
        for (std::int64_t i = 0; i < params.n_segments; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            const double local_start = starts[idx] - view.time_offset_s;
            const auto [f_s, f_e] = segment_frame_bounds(std::max(0.0, local_start), d_eff,
                                                         view.meta.fps, view.meta.total_frames);
            const std::vector<std::int64_t> frames = sample_segment(f_s, f_e, quota[idx]);
            indices.insert(indices.end(), frames.begin(), frames.end());
            plan.segments.push_back(SegmentWindow{i, local_start, d_eff, f_s, f_e, quota[idx]});
        }

        const std::int64_t max_index = std::max<std::int64_t>(view.meta.total_frames - 1, 0);
        for (auto& index : indices) index = std::clamp<std::int64_t>(index, 0, max_index);
        plan.frame_indices = adjust_count(indices, params.n_target);

        result.per_view.emplace(view.view_id, std::move(plan));
    }
    return result;
}

}  // namespace pats
