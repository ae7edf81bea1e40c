#include "pats/manifest.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "pats/errors.hpp"
#include "pats/jsonfmt.hpp"
#include "pats/sampling.hpp"

namespace pats {

using detail::fmt_fixed;
using detail::json_escape;
using detail::round_decimals;

bool operator==(const PlanRecord& a, const PlanRecord& b) {
    return a.video_id == b.video_id && a.frame_indices == b.frame_indices &&
           a.fallback == b.fallback && a.params.n_target == b.params.n_target &&
           a.params.n_segments == b.params.n_segments &&
           a.params.segment_duration_s == b.params.segment_duration_s &&
           a.segments == b.segments;
}

namespace {

// Splits RFC-4180-style CSV text into rows of fields. Quoted fields may
// contain commas, escaped quotes ("") and newlines.
std::vector<std::vector<std::string>> split_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool row_started = false;

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        switch (c) {
            case '"':
                in_quotes = true;
                row_started = true;
                break;
            case ',':
                row.push_back(field);
                field.clear();
                row_started = true;
                break;
            case '\r':
                break;
            case '\n':
                if (row_started || !field.empty() || !row.empty()) {
                    row.push_back(field);
                    rows.push_back(row);
                }
                field.clear();
                row.clear();
                row_started = false;
                break;
            default:
                field += c;
                row_started = true;
        }
    }
    if (row_started || !field.empty() || !row.empty()) {
        row.push_back(field);
        rows.push_back(row);
    }
    return rows;
}

bool parse_double(const std::string& s, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(s, &pos);
        return pos == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_int(const std::string& s, std::int64_t& out) {
    try {
        std::size_t pos = 0;
        out = std::stoll(s, &pos);
        return pos == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

std::string validate_record(const ManifestRecord& rec) {
    if (rec.video_id.empty()) return "video_id is empty";
    if (!std::isfinite(rec.duration_s)) return "duration_s is not finite";
    if (!(rec.fps > 0.0) || !std::isfinite(rec.fps)) return "fps must be > 0";
    if (rec.total_frames < 0) return "total_frames must be >= 0";
    return "";
}

std::optional<ViewRole> parse_role(const std::string& s, std::string& error) {
    if (s.empty()) return std::nullopt;
    if (s == "ego") return ViewRole::ego;
    if (s == "exo") return ViewRole::exo;
    error = "view_role must be 'ego' or 'exo', got '" + s + "'";
    return std::nullopt;
}

}  // namespace

std::vector<ManifestEntry> parse_manifest_csv(const std::string& text) {
    const auto rows = split_csv(text);
    if (rows.empty()) throw ManifestError("CSV manifest has no header row");

    std::map<std::string, std::size_t> columns;
    for (std::size_t i = 0; i < rows[0].size(); ++i) columns[rows[0][i]] = i;
    for (const char* required : {"video_id", "duration_s", "fps", "total_frames"}) {
        if (columns.find(required) == columns.end())
            throw ManifestError(std::string("CSV manifest missing column '") + required + "'");
    }

    auto cell = [&](const std::vector<std::string>& row, const char* name) -> std::string {
        const auto it = columns.find(name);
        if (it == columns.end() || it->second >= row.size()) return "";
        return row[it->second];
    };

    std::vector<ManifestEntry> entries;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        ManifestEntry entry;
        entry.line = r + 1;
        ManifestRecord rec;
        rec.video_id = cell(rows[r], "video_id");

        std::string error;
        if (!parse_double(cell(rows[r], "duration_s"), rec.duration_s))
            error = "duration_s is not a number";
        else if (!parse_double(cell(rows[r], "fps"), rec.fps))
            error = "fps is not a number";
        else if (!parse_int(cell(rows[r], "total_frames"), rec.total_frames))
            error = "total_frames is not an integer";

        if (error.empty()) {
            rec.view_role = parse_role(cell(rows[r], "view_role"), error);
            const std::string group = cell(rows[r], "group_id");
            if (!group.empty()) rec.group_id = group;
        }
        if (error.empty()) error = validate_record(rec);

        if (error.empty())
            entry.record = std::move(rec);
        else
            entry.error = error;
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<ManifestEntry> parse_manifest_jsonl(const std::string& text) {
    std::vector<ManifestEntry> entries;
    std::istringstream stream(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;

        ManifestEntry entry;
        entry.line = line_no;
        try {
            const auto obj = nlohmann::json::parse(line);
            ManifestRecord rec;
            rec.video_id = obj.at("video_id").get<std::string>();
            rec.duration_s = obj.at("duration_s").get<double>();
            rec.fps = obj.at("fps").get<double>();
            rec.total_frames = obj.at("total_frames").get<std::int64_t>();
            if (obj.contains("view_role") && !obj["view_role"].is_null()) {
                std::string error;
                rec.view_role = parse_role(obj["view_role"].get<std::string>(), error);
                if (!error.empty()) throw ManifestError(error);
            }
            if (obj.contains("group_id") && !obj["group_id"].is_null()) {
                const auto group = obj["group_id"].get<std::string>();
                if (!group.empty()) rec.group_id = group;
            }
            const std::string error = validate_record(rec);
            if (!error.empty()) throw ManifestError(error);
            entry.record = std::move(rec);
        } catch (const std::exception& e) {
            entry.error = e.what();
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<ManifestEntry> read_manifest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ManifestError("cannot open manifest '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();

    const auto dot = path.find_last_of('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "csv") return parse_manifest_csv(buffer.str());
    return parse_manifest_jsonl(buffer.str());
}

PlanRecord make_plan_record(const std::string& video_id, const SamplingPlan& plan) {
    PlanRecord record;
    record.video_id = video_id;
    record.frame_indices = plan.frame_indices;
    record.fallback = to_string(plan.fallback);
    record.params = plan.params;
    record.params.segment_duration_s = round_decimals(plan.params.segment_duration_s, 6);
    record.segments.reserve(plan.segments.size());
    for (const auto& window : plan.segments)
        record.segments.emplace_back(round_decimals(window.start_s, 6),
                                     round_decimals(window.duration_s, 6));
    return record;
}

std::string to_json(const PlanRecord& record) {
    std::string out = "{\"video_id\": \"" + json_escape(record.video_id) + "\", ";
    out += "\"frame_indices\": [";
    for (std::size_t i = 0; i < record.frame_indices.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(record.frame_indices[i]);
    }
    out += "], \"fallback\": \"" + record.fallback + "\", ";
    out += "\"params\": {\"n_target\": " + std::to_string(record.params.n_target) +
           ", \"n_segments\": " + std::to_string(record.params.n_segments) +
           ", \"segment_duration_s\": " + fmt_fixed(record.params.segment_duration_s, 6) + "}, ";
    out += "\"segments\": [";
    for (std::size_t i = 0; i < record.segments.size(); ++i) {
        if (i > 0) out += ", ";
        out += "{\"start_s\": " + fmt_fixed(record.segments[i].first, 6) +
               ", \"duration_s\": " + fmt_fixed(record.segments[i].second, 6) + "}";
    }
    out += "]}";
    return out;
}

PlanRecord parse_plan_record(const std::string& json_text) {
    const auto obj = nlohmann::json::parse(json_text);
    PlanRecord record;
    record.video_id = obj.at("video_id").get<std::string>();
    record.frame_indices = obj.at("frame_indices").get<std::vector<std::int64_t>>();
    record.fallback = obj.at("fallback").get<std::string>();
    fallback_from_string(record.fallback);  // reject unknown values
    const auto& params = obj.at("params");
    record.params.n_target = params.at("n_target").get<std::int64_t>();
    record.params.n_segments = params.at("n_segments").get<std::int64_t>();
    record.params.segment_duration_s = params.at("segment_duration_s").get<double>();
    for (const auto& segment : obj.at("segments"))
        record.segments.emplace_back(segment.at("start_s").get<double>(),
                                     segment.at("duration_s").get<double>());
    return record;
}

std::string eval_report_json(const std::vector<CoverageReport>& reports,
                             const SamplingParams& params, double max_gap_s,
                             std::uint64_t seed, std::int64_t n_videos) {
    std::string out = "{\n";
    out += "  \"params\": {\"n_target\": " + std::to_string(params.n_target) +
           ", \"n_segments\": " + std::to_string(params.n_segments) +
           ", \"segment_duration_s\": " + fmt_fixed(params.segment_duration_s, 6) + "},\n";
    out += "  \"max_gap_s\": " + fmt_fixed(max_gap_s, 6) + ",\n";
    out += "  \"seed\": " + std::to_string(seed) + ",\n";
    out += "  \"n_videos\": " + std::to_string(n_videos) + ",\n";
    out += "  \"strategies\": [\n";
    for (std::size_t s = 0; s < reports.size(); ++s) {
        const auto& report = reports[s];
        std::int64_t captured = 0;
        std::int64_t movements = 0;
        for (const auto& pv : report.per_video) {
            captured += pv.captured;
            movements += pv.movements;
        }
        out += "    {\n      \"strategy\": \"" + json_escape(report.strategy) + "\",\n";
        out += "      \"capture_rate\": " + fmt_fixed(report.capture_rate, 6) + ",\n";
        out += "      \"mean_max_gap_s\": " + fmt_fixed(report.mean_max_gap_s, 6) + ",\n";
        out += "      \"captured\": " + std::to_string(captured) + ",\n";
        out += "      \"movements\": " + std::to_string(movements) + ",\n";
        out += "      \"per_video\": [\n";
        for (std::size_t i = 0; i < report.per_video.size(); ++i) {
            const auto& pv = report.per_video[i];
            out += "        {\"video_id\": \"" + json_escape(pv.video_id) +
                   "\", \"captured\": " + std::to_string(pv.captured) +
                   ", \"movements\": " + std::to_string(pv.movements) + "}";
            out += (i + 1 < report.per_video.size()) ? ",\n" : "\n";
        }
        out += "      ]\n    }";
        out += (s + 1 < reports.size()) ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

std::string eval_report_csv(const std::vector<CoverageReport>& reports) {
    std::string out = "strategy,video_id,captured,movements\n";
    for (const auto& report : reports) {
        std::int64_t captured = 0;
        std::int64_t movements = 0;
        for (const auto& pv : report.per_video) {
            out += report.strategy + "," + pv.video_id + "," + std::to_string(pv.captured) +
                   "," + std::to_string(pv.movements) + "\n";
            captured += pv.captured;
            movements += pv.movements;
        }
        out += report.strategy + ",TOTAL," + std::to_string(captured) + "," +
               std::to_string(movements) + "\n";
    }
    return out;
}

std::string corpus_json(const std::vector<SyntheticVideo>& corpus) {
    std::string out = "{\n  \"videos\": [\n";
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& video = corpus[i];
        out += "    {\"id\": \"" + corpus_video_id(i) + "\", ";
        out += "\"duration_s\": " + fmt_fixed(video.meta.duration_s, 6) + ", ";
        out += "\"fps\": " + fmt_fixed(video.meta.fps, 6) + ", ";
        out += "\"total_frames\": " + std::to_string(video.meta.total_frames) + ", ";
        out += "\"movements\": [";
        for (std::size_t m = 0; m < video.movements.size(); ++m) {
            if (m > 0) out += ", ";
            out += "{\"start_s\": " + fmt_fixed(video.movements[m].start_s, 6) +
                   ", \"duration_s\": " + fmt_fixed(video.movements[m].duration_s, 6) + "}";
        }
        out += "]}";
        out += (i + 1 < corpus.size()) ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

}  // namespace pats
