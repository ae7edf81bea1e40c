#include "pats/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "pats/errors.hpp"
#include "pats/rng.hpp"
#include "pats/sampling.hpp"

namespace pats {

std::string corpus_video_id(std::size_t index) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "v%03zu", index);
    return buf;
}

std::vector<SyntheticVideo> generate_corpus(std::int64_t n_videos,
                                            std::pair<double, double> duration_range_s,
                                            std::pair<double, double> movement_duration_range_s,
                                            std::int64_t movements_per_video, double fps,
                                            std::uint64_t seed) {
    if (n_videos < 1) throw ParameterError("generate_corpus: n_videos must be >= 1");
    if (!(duration_range_s.first > 0.0) || duration_range_s.second < duration_range_s.first)
        throw ParameterError("generate_corpus: bad duration range");
    if (!(movement_duration_range_s.first > 0.0) ||
        movement_duration_range_s.second < movement_duration_range_s.first)
        throw ParameterError("generate_corpus: bad movement duration range");
    if (movements_per_video < 0)
        throw ParameterError("generate_corpus: movements_per_video must be >= 0");
    if (!(fps > 0.0)) throw ParameterError("generate_corpus: fps must be > 0");

    SplitMix64 rng(seed);
    std::vector<SyntheticVideo> corpus;
    corpus.reserve(static_cast<std::size_t>(n_videos));

    constexpr int kMaxPlacementAttempts = 100000;

    for (std::int64_t v = 0; v < n_videos; ++v) {
        SyntheticVideo video;
        const double duration = rng.next_double(duration_range_s.first, duration_range_s.second);
        video.meta.duration_s = duration;
        video.meta.fps = fps;
        video.meta.total_frames = static_cast<std::int64_t>(std::floor(duration * fps));

        std::vector<double> lengths(static_cast<std::size_t>(movements_per_video));
        for (auto& len : lengths)
            len = rng.next_double(movement_duration_range_s.first,
                                  movement_duration_range_s.second);

        const double total_movement = std::accumulate(lengths.begin(), lengths.end(), 0.0);
        if (total_movement > 0.8 * duration) {
            throw GenerationError("movement time " + std::to_string(total_movement) +
                                  "s exceeds 80% of a " + std::to_string(duration) + "s video");
        }

        for (const double len : lengths) {
            bool placed = false;
            for (int attempt = 0; attempt < kMaxPlacementAttempts; ++attempt) {
                const double start = rng.next_double(0.0, duration - len);
                const bool overlaps = std::any_of(
                    video.movements.begin(), video.movements.end(), [&](const Movement& m) {
                        return start < m.start_s + m.duration_s && m.start_s < start + len;
                    });
                if (!overlaps) {
                    video.movements.push_back(Movement{start, len});
                    placed = true;
                    break;
                }
            }
            if (!placed)
                throw GenerationError("rejection sampling failed to place a movement");
        }

        std::sort(video.movements.begin(), video.movements.end(),
                  [](const Movement& a, const Movement& b) { return a.start_s < b.start_s; });
        corpus.push_back(std::move(video));
    }
    return corpus;
}

SamplingPlan random_plan(const VideoMeta& meta, std::int64_t n_target, std::uint64_t seed) {
    if (n_target < 1) throw ParameterError("random_plan: n_target must be >= 1");
    if (meta.total_frames < 1) throw ParameterError("random_plan: video has no frames");

    SplitMix64 rng(seed);
    SamplingPlan plan;
    plan.meta = meta;
    plan.params = SamplingParams{n_target, 1, 0.0};

    const std::int64_t total = meta.total_frames;
    if (total >= n_target) {
        // Partial Fisher-Yates over [0, total); the first n_target slots end
        // up holding a uniform sample without replacement.
        std::vector<std::int64_t> pool(static_cast<std::size_t>(total));
        std::iota(pool.begin(), pool.end(), std::int64_t{0});
        for (std::int64_t i = 0; i < n_target; ++i) {
            const auto j = i + static_cast<std::int64_t>(
                                   rng.next_below(static_cast<std::uint64_t>(total - i)));
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
        }
        plan.frame_indices.assign(pool.begin(), pool.begin() + n_target);
    } else {
        plan.frame_indices.reserve(static_cast<std::size_t>(n_target));
        for (std::int64_t i = 0; i < n_target; ++i)
            plan.frame_indices.push_back(rng.next_int(0, total - 1));
    }
    std::sort(plan.frame_indices.begin(), plan.frame_indices.end());
    return plan;
}

std::pair<std::int64_t, std::int64_t> capture_rate(const SamplingPlan& plan,
                                                   const SyntheticVideo& video,
                                                   double max_gap_s) {
    if (!(max_gap_s > 0.0)) throw ParameterError("capture_rate: max_gap_s must be > 0");

    const double fps = video.meta.fps;
    std::vector<double> times;
    times.reserve(plan.frame_indices.size());
    for (const auto index : plan.frame_indices)
        times.push_back(static_cast<double>(index) / fps);

    std::int64_t captured = 0;
    for (const auto& movement : video.movements) {
        const double a = movement.start_s;
        const double b = movement.start_s + movement.duration_s;

        // Tightest bracket: last sample at or before a, first at or after b.
        // Wider brackets only add gaps, so this one decides capture.
        const auto upper =
            std::upper_bound(times.begin(), times.end(), a);  // first time > a
        const auto lower = std::lower_bound(times.begin(), times.end(), b);
        if (upper == times.begin() || lower == times.end()) continue;
        const auto first = upper - 1;

        bool covered = true;
        for (auto it = first; it != lower; ++it) {
            if (*(it + 1) - *it > max_gap_s) {
                covered = false;
                break;
            }
        }
        if (covered) ++captured;
    }
    return {captured, static_cast<std::int64_t>(video.movements.size())};
}

namespace {

double max_sample_gap(const SamplingPlan& plan) {
    const auto& indices = plan.frame_indices;
    if (indices.size() < 2) return 0.0;
    std::int64_t max_gap = 0;
    for (std::size_t i = 1; i < indices.size(); ++i)
        max_gap = std::max(max_gap, indices[i] - indices[i - 1]);
    return static_cast<double>(max_gap) / plan.meta.fps;
}

CoverageReport evaluate(const std::string& strategy, const std::vector<SyntheticVideo>& corpus,
                        const std::vector<SamplingPlan>& plans, double max_gap_s) {
    CoverageReport report;
    report.strategy = strategy;
    std::int64_t captured_total = 0;
    std::int64_t movement_total = 0;
    double gap_sum = 0.0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto [captured, total] = capture_rate(plans[i], corpus[i], max_gap_s);
        report.per_video.push_back(PerVideoCapture{corpus_video_id(i), captured, total});
        captured_total += captured;
        movement_total += total;
        gap_sum += max_sample_gap(plans[i]);
    }
    report.capture_rate = movement_total > 0
                              ? static_cast<double>(captured_total) /
                                    static_cast<double>(movement_total)
                              : 0.0;
    report.mean_max_gap_s = corpus.empty() ? 0.0 : gap_sum / static_cast<double>(corpus.size());
    return report;
}

}  // namespace

std::vector<CoverageReport> compare_strategies(const std::vector<SyntheticVideo>& corpus,
                                               const SamplingParams& params, double max_gap_s,
                                               std::uint64_t seed) {
    if (corpus.empty()) throw ParameterError("compare_strategies: empty corpus");
    validate(params);

    std::vector<SamplingPlan> pats_plans;
    std::vector<SamplingPlan> uniform_plans;
    std::vector<SamplingPlan> random_plans;
    pats_plans.reserve(corpus.size());
    uniform_plans.reserve(corpus.size());
    random_plans.reserve(corpus.size());

    // One per-video seed stream so the random baseline stays reproducible
    // regardless of how the corpus was built.
    SplitMix64 seeder(seed);
    for (const auto& video : corpus) {
        pats_plans.push_back(pats_plan(video.meta, params));
        uniform_plans.push_back(uniform_plan(video.meta, params.n_target));
        random_plans.push_back(random_plan(video.meta, params.n_target, seeder.next_u64()));
    }

    return {
        evaluate("pats", corpus, pats_plans, max_gap_s),
        evaluate("uniform", corpus, uniform_plans, max_gap_s),
        evaluate("random", corpus, random_plans, max_gap_s),
    };
}

}  // namespace pats
