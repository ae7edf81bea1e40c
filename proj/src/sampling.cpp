#include "pats/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pats/errors.hpp"

namespace pats {

const char* to_string(Fallback f) {
    switch (f) {
        case Fallback::none: return "none";
        case Fallback::insufficient_duration: return "insufficient_duration";
        case Fallback::insufficient_frames: return "insufficient_frames";
        case Fallback::minimal_segment_duration: return "minimal_segment_duration";
    }
    return "none";
}

Fallback fallback_from_string(const std::string& s) {
    if (s == "none") return Fallback::none;
    if (s == "insufficient_duration") return Fallback::insufficient_duration;
    if (s == "insufficient_frames") return Fallback::insufficient_frames;
    if (s == "minimal_segment_duration") return Fallback::minimal_segment_duration;
    throw ParameterError("unknown fallback value: " + s);
}

void validate(const SamplingParams& params) {
    if (params.n_target < 1)
        throw ParameterError("n_target must be >= 1, got " + std::to_string(params.n_target));
    if (params.n_segments < 1)
        throw ParameterError("n_segments must be >= 1, got " + std::to_string(params.n_segments));
    if (params.n_segments > params.n_target)
        throw ParameterError("n_segments (" + std::to_string(params.n_segments) +
                             ") must not exceed n_target (" + std::to_string(params.n_target) +
                             ")");
    if (!(params.segment_duration_s > 0.0) || !std::isfinite(params.segment_duration_s))
        throw ParameterError("segment_duration_s must be a positive finite number");
}

void validate(const VideoMeta& meta) {
    if (!(meta.fps > 0.0) || !std::isfinite(meta.fps))
        throw ParameterError("fps must be a positive finite number");
    if (meta.total_frames < 0)
        throw ParameterError("total_frames must be >= 0, got " +
                             std::to_string(meta.total_frames));
    if (!std::isfinite(meta.duration_s))
        throw ParameterError("duration_s must be finite");
}

bool frame_count_consistent(const VideoMeta& meta) {
    return std::abs(meta.duration_s * meta.fps - static_cast<double>(meta.total_frames)) <=
           meta.fps;
}

double effective_segment_duration(double segment_duration_s, double total_duration_s,
                                  std::int64_t n_segments) {
    return std::min(segment_duration_s,
                    0.8 * total_duration_s / static_cast<double>(n_segments));
}

double max_start_time(double total_duration_s, double effective_duration_s) {
    return std::max(0.0, total_duration_s - effective_duration_s);
}

std::vector<double> segment_start_times(double max_start_s, std::int64_t n_segments) {
    std::vector<double> starts;
    starts.reserve(static_cast<std::size_t>(n_segments));
    if (n_segments == 1) {
        starts.push_back(0.0);
        return starts;
    }
    for (std::int64_t i = 0; i < n_segments; ++i) {
        starts.push_back(static_cast<double>(i) * max_start_s /
                         static_cast<double>(n_segments - 1));
    }
    return starts;
}

std::vector<std::int64_t> allocate_frames(std::int64_t n_target, std::int64_t n_segments) {
    const std::int64_t base = n_target / n_segments;
    const std::int64_t remainder = n_target % n_segments;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n_segments), base);
    for (std::int64_t i = 0; i < remainder; ++i) counts[static_cast<std::size_t>(i)] += 1;
    return counts;
}

std::pair<std::int64_t, std::int64_t> segment_frame_bounds(double start_s,
                                                           double effective_duration_s,
                                                           double fps,
                                                           std::int64_t n_total) {
    std::int64_t f_s = static_cast<std::int64_t>(std::floor(start_s * fps));
    std::int64_t f_e = std::min(
        static_cast<std::int64_t>(std::floor((start_s + effective_duration_s) * fps)), n_total);
    if (f_e <= f_s) {
        // Degenerate window: keep one frame, inside [0, n_total].
        f_s = std::min(f_s, n_total - 1);
        f_e = std::min(f_s + 1, n_total);
    }
    return {f_s, f_e};
}

namespace {

// Floor of n evenly spaced reals over [first, last] with both endpoints
// pinned exactly. Interior values use an exact integer product before the
// divide so that grid-aligned points floor without rounding wobble.
std::vector<std::int64_t> floor_linspace(std::int64_t first, std::int64_t last,
                                         std::int64_t n) {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(n));
    if (n == 1) {
        out.push_back(first);
        return out;
    }
    const std::int64_t span = last - first;
    for (std::int64_t j = 0; j < n; ++j) {
        if (j == 0) {
            out.push_back(first);
        } else if (j == n - 1) {
            out.push_back(last);
        } else {
            const double value = static_cast<double>(first) +
                                 static_cast<double>(j * span) / static_cast<double>(n - 1);
            out.push_back(static_cast<std::int64_t>(std::floor(value)));
        }
    }
    return out;
}

}  // namespace

std::vector<std::int64_t> sample_segment(std::int64_t frame_start, std::int64_t frame_end,
                                         std::int64_t n) {
    if (n == 1) return {(frame_start + frame_end) / 2};
    return floor_linspace(frame_start, frame_end - 1, n);
}

std::vector<std::int64_t> adjust_count(const std::vector<std::int64_t>& indices,
                                       std::int64_t n_target) {
    if (indices.empty()) throw ParameterError("adjust_count: empty index list");

    const std::int64_t len = static_cast<std::int64_t>(indices.size());
    if (len == n_target) {
        std::vector<std::int64_t> out = indices;
        std::sort(out.begin(), out.end());
        return out;
    }

    if (len > n_target) {
        std::vector<std::int64_t> sorted = indices;
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::int64_t> out;
        out.reserve(static_cast<std::size_t>(n_target));
        if (n_target == 1) {
            out.push_back(sorted[0]);
            return out;
        }
        for (std::int64_t j = 0; j < n_target; ++j) {
            const std::int64_t pos = j * (len - 1) / (n_target - 1);
            out.push_back(sorted[static_cast<std::size_t>(pos)]);
        }
        return out;
    }

    // Too few: keep cycling through the raw list, then sort once.
    std::vector<std::int64_t> out = indices;
    out.reserve(static_cast<std::size_t>(n_target));
    for (std::int64_t k = 0; static_cast<std::int64_t>(out.size()) < n_target; ++k) {
        out.push_back(indices[static_cast<std::size_t>((len + k) % len)]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SamplingPlan uniform_plan(const VideoMeta& meta, std::int64_t n_target) {
    SamplingPlan plan;
    plan.meta = meta;
    plan.params = SamplingParams{n_target, 1, 0.0};

    const std::int64_t total = meta.total_frames;
    if (total == 0) {
        plan.frame_indices.assign(static_cast<std::size_t>(n_target), 0);
    } else if (total >= n_target) {
        plan.frame_indices = floor_linspace(0, total - 1, n_target);
    } else {
        std::vector<std::int64_t> all(static_cast<std::size_t>(total));
        for (std::int64_t i = 0; i < total; ++i) all[static_cast<std::size_t>(i)] = i;
        plan.frame_indices = adjust_count(all, n_target);
    }
    return plan;
}

SamplingPlan pats_plan(const VideoMeta& meta, const SamplingParams& params) {
    validate(params);
    validate(meta);

    const double total_duration = meta.duration_s;

    if (total_duration <= 0.0) {
        SamplingPlan plan = uniform_plan(meta, params.n_target);
        plan.params = params;
        plan.fallback = Fallback::insufficient_duration;
        return plan;
    }
    if (meta.total_frames < params.n_target) {
        SamplingPlan plan = uniform_plan(meta, params.n_target);
        plan.params = params;
        plan.fallback = Fallback::insufficient_frames;
        return plan;
    }

    const double d_eff =
        effective_segment_duration(params.segment_duration_s, total_duration, params.n_segments);
    if (d_eff < 0.5) {
        SamplingPlan plan = uniform_plan(meta, params.n_target);
        plan.params = params;
        plan.fallback = Fallback::minimal_segment_duration;
        return plan;
    }

    const double t_max = max_start_time(total_duration, d_eff);
    const std::vector<double> starts = segment_start_times(t_max, params.n_segments);
    const std::vector<std::int64_t> quota = allocate_frames(params.n_target, params.n_segments);

    SamplingPlan plan;
    plan.meta = meta;
    plan.params = params;
    plan.fallback = Fallback::none;
    plan.segments.reserve(starts.size());

    std::vector<std::int64_t> indices;
    indices.reserve(static_cast<std::size_t>(params.n_target));
    for (std::int64_t i = 0; i < params.n_segments; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const auto [f_s, f_e] =
            segment_frame_bounds(starts[idx], d_eff, meta.fps, meta.total_frames);
        const std::vector<std::int64_t> frames = sample_segment(f_s, f_e, quota[idx]);
        indices.insert(indices.end(), frames.begin(), frames.end());
        plan.segments.push_back(SegmentWindow{i, starts[idx], d_eff, f_s, f_e, quota[idx]});
    }

    const std::int64_t max_index = std::max<std::int64_t>(meta.total_frames - 1, 0);
    for (auto& index : indices) index = std::clamp<std::int64_t>(index, 0, max_index);

    plan.frame_indices = adjust_count(indices, params.n_target);
    return plan;
}

}  // namespace pats
