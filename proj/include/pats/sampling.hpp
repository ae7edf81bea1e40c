#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pats/types.hpp"

namespace pats {

// Effective per-segment duration: the requested d_s capped at 0.8*T/n so the
// n segments always leave buffer space between each other.
double effective_segment_duration(double segment_duration_s, double total_duration_s,
                                  std::int64_t n_segments);

// Latest time a segment of length d_eff may start without leaving the video.
double max_start_time(double total_duration_s, double effective_duration_s);

// Segment start times spread evenly over [0, t_max]; a single segment starts
// at 0.
std::vector<double> segment_start_times(double max_start_s, std::int64_t n_segments);

// Per-segment frame quota: floor(n_target/n_segments) each, remainder handed
// to the lowest-indexed segments. Sums to n_target.
std::vector<std::int64_t> allocate_frames(std::int64_t n_target, std::int64_t n_segments);

// Frame-index window [f_s, f_e) of a segment, upper bound clipped to
// n_total. A degenerate result (f_e <= f_s, possible at very low fps) is
// widened to one frame inside [0, n_total].
std::pair<std::int64_t, std::int64_t> segment_frame_bounds(double start_s,
                                                           double effective_duration_s,
                                                           double fps,
                                                           std::int64_t n_total);

// n frame indices continuously sampled from [f_s, f_e): the floor of n
// evenly spaced reals from f_s to f_e - 1, or the window midpoint for n = 1.
std::vector<std::int64_t> sample_segment(std::int64_t frame_start, std::int64_t frame_end,
                                         std::int64_t n);

// Repairs the index count to exactly n_target: evenly spaced positional
// subsampling when too long, cyclic repetition when too short. Output is
// sorted. Throws ParameterError on empty input.
std::vector<std::int64_t> adjust_count(const std::vector<std::int64_t>& indices,
                                       std::int64_t n_target);

// Evenly spaced whole-video sampling. Always returns exactly n_target
// indices; repeats cyclically when the video has fewer frames than that and
// emits zeros for an empty video. The fallback flag is left to the caller.
SamplingPlan uniform_plan(const VideoMeta& meta, std::int64_t n_target);

// The full PATS pipeline: adaptive segment positioning, frame allocation,
// continuous intra-segment sampling, and the documented uniform fallbacks.
SamplingPlan pats_plan(const VideoMeta& meta, const SamplingParams& params);

}  // namespace pats
