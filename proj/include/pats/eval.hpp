#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pats/types.hpp"

namespace pats {

// A labeled fundamental-movement interval inside a synthetic performance.
struct Movement {
    double start_s = 0.0;
    double duration_s = 0.0;
};

struct SyntheticVideo {
    VideoMeta meta;
    std::vector<Movement> movements;  // disjoint, sorted by start
};

struct PerVideoCapture {
    std::string video_id;
    std::int64_t captured = 0;
    std::int64_t movements = 0;
};

struct CoverageReport {
    std::string strategy;
    double capture_rate = 0.0;
    double mean_max_gap_s = 0.0;
    std::vector<PerVideoCapture> per_video;
};

// Deterministic synthetic corpus: n videos with durations drawn from
// duration_range_s, each holding movements_per_video disjoint movements with
// lengths from movement_duration_range_s, placed by rejection sampling.
// Throws GenerationError if the movements cannot fit (total movement time
// above 80% of the video) or packing keeps colliding.
std::vector<SyntheticVideo> generate_corpus(std::int64_t n_videos,
                                            std::pair<double, double> duration_range_s,
                                            std::pair<double, double> movement_duration_range_s,
                                            std::int64_t movements_per_video, double fps,
                                            std::uint64_t seed);

// Seeded random baseline: n_target indices drawn without replacement when
// the video has enough frames, with replacement otherwise. Sorted.
SamplingPlan random_plan(const VideoMeta& meta, std::int64_t n_target, std::uint64_t seed);

// Counts movements continuously covered by the plan: a movement is captured
// when samples bracket it and no consecutive-sample gap inside the bracket
// exceeds max_gap_s. Sample timestamps are index / fps. Returns
// (captured, total movements).
std::pair<std::int64_t, std::int64_t> capture_rate(const SamplingPlan& plan,
                                                   const SyntheticVideo& video,
                                                   double max_gap_s);

// Runs pats, uniform, and random over the corpus with identical n_target and
// returns one report per strategy, corpus order preserved.
std::vector<CoverageReport> compare_strategies(const std::vector<SyntheticVideo>& corpus,
                                               const SamplingParams& params, double max_gap_s,
                                               std::uint64_t seed);

// Corpus-order video ids used in reports ("v000", "v001", ...).
std::string corpus_video_id(std::size_t index);

}  // namespace pats
