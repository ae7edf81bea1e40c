#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pats {

// Metadata of one video stream. Durations are seconds, counts are frames.
struct VideoMeta {
    double duration_s = 0.0;
    std::int64_t total_frames = 0;
    double fps = 0.0;
};

// The PATS parameter triple: total frames to extract, number of temporal
// segments, and the requested per-segment duration.
struct SamplingParams {
    std::int64_t n_target = 0;
    std::int64_t n_segments = 0;
    double segment_duration_s = 0.0;
};

// One temporal segment with its frame-index window [frame_start, frame_end).
struct SegmentWindow {
    std::int64_t index = 0;
    double start_s = 0.0;
    double duration_s = 0.0;
    std::int64_t frame_start = 0;
    std::int64_t frame_end = 0;
    std::int64_t n_frames = 0;
};

enum class Fallback {
    none,
    insufficient_duration,
    insufficient_frames,
    minimal_segment_duration,
};

const char* to_string(Fallback f);
Fallback fallback_from_string(const std::string& s);

// Final output of the planner: exactly n_target sorted frame indices, the
// segment windows that produced them (empty under fallback), and the inputs.
struct SamplingPlan {
    std::vector<std::int64_t> frame_indices;
    std::vector<SegmentWindow> segments;
    Fallback fallback = Fallback::none;
    SamplingParams params;
    VideoMeta meta;
};

// Throws ParameterError unless n_target >= 1, n_segments >= 1,
// n_segments <= n_target and segment_duration_s > 0 (finite).
void validate(const SamplingParams& params);

// Throws ParameterError unless fps > 0, total_frames >= 0 and duration is
// finite. Duration <= 0 is legal input; the planner answers it with a
// uniform fallback.
void validate(const VideoMeta& meta);

// Soft consistency check: |duration_s * fps - total_frames| <= fps.
// Real containers disagree with their headers, so this only gates warnings.
bool frame_count_consistent(const VideoMeta& meta);

}  // namespace pats
