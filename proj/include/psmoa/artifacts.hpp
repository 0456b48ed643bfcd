// Result artifact emission: front CSV (f1..f4 column convention), trace
// JSON-lines, content hashing for manifests, and atomic file writes.
//
// CSV columns follow the f1..f4 labeling used in the result tables:
// f1 = cost, f2 = time, f3 = negated popularity, f4 = load variance, which
// reorders the internal (time, cost, -popularity, load) representation.

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "psmoa/metrics.hpp"
#include "psmoa/optimizer.hpp"
#include "psmoa/scenario_io.hpp"

namespace psmoa {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFrontCsvHeader = "f1_cost,f2_time,f3_neg_popularity,f4_load";

// Internal objective index -> CSV column order (cost, time, -pop, load).
inline constexpr int kCsvColumnOrder[kObjectiveCount] = {kObjCost, kObjTime, kObjPopularity,
                                                         kObjLoad};

inline std::string front_csv(const FrontArchive& archive) {
    std::ostringstream oss;
    oss << kFrontCsvHeader << "\n";
    for (const auto& p : archive.points) {
        for (int c = 0; c < kObjectiveCount; ++c)
            oss << (c ? "," : "") << ioutil::format_double(p[kCsvColumnOrder[c]]);
        oss << "\n";
    }
    return oss.str();
}

inline Json front_json(const FrontArchive& archive) {
    Json rows = Json::array();
    for (const auto& p : archive.points) {
        Json row;
        row["f1_cost"] = p[kObjCost];
        row["f2_time"] = p[kObjTime];
        row["f3_neg_popularity"] = p[kObjPopularity];
        row["f4_load"] = p[kObjLoad];
        rows.push_back(std::move(row));
    }
    Json out;
    out["label"] = archive.label;
    out["points"] = std::move(rows);
    return out;
}

inline Json trace_record_json(const GenerationTrace& rec, Algorithm algorithm) {
    Json j;
    j["generation"] = rec.generation;
    if (algorithm == Algorithm::psmoa) {
        j["policy_epoch"] = rec.policy_epoch;
        j["alpha"] = rec.alpha;
        j["adjusted_weights"] = rec.adjusted_weights;
    }
    if (rec.reference_point_count >= 0) j["reference_points"] = rec.reference_point_count;
    j["front0_size"] = rec.front0_size;
    j["feasible_fraction"] = rec.feasible_fraction;
    static constexpr const char* kKeys[kObjectiveCount] = {"time", "cost", "neg_popularity",
                                                           "load_variance"};
    Json best, median;
    for (int k = 0; k < kObjectiveCount; ++k) {
        best[kKeys[k]] = rec.best[k];
        median[kKeys[k]] = rec.median[k];
    }
    j["best"] = std::move(best);
    j["median"] = std::move(median);
    return j;
}

inline std::string trace_jsonl(const std::vector<GenerationTrace>& trace, Algorithm algorithm) {
    std::ostringstream oss;
    for (const auto& rec : trace) oss << trace_record_json(rec, algorithm).dump() << "\n";
    return oss.str();
}

// FNV-1a 64-bit content hash, hex-encoded; manifests record input identity.
inline std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

// Write-then-rename so partially written files never land under their
// final name.
inline void atomic_write(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    fs::rename(tmp, path);
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream oss;
    oss << in.rdbuf();
    return oss.str();
}

// Two-column (x, value) plot-data series.
inline std::string series_csv(const std::string& x_name, const std::string& value_name,
                              const std::vector<std::pair<double, double>>& rows) {
    std::ostringstream oss;
    oss << x_name << "," << value_name << "\n";
    for (const auto& [x, v] : rows)
        oss << ioutil::format_double(x) << ',' << ioutil::format_double(v) << "\n";
    return oss.str();
}

}  // namespace psmoa
