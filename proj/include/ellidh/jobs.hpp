#pragma once

// Batch jobs: a JSON configuration names a field, a curve, an evaluation set
// and a task; running it yields a JSON report. A k_range turns the job into a
// sweep producing one table row per k.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ellidh/coset_analysis.hpp"
#include "ellidh/deep_holes.hpp"
#include "ellidh/error.hpp"
#include "ellidh/io.hpp"

namespace ellidh {

inline constexpr const char* kSchema = "ellidh/1";
inline constexpr const char* kToolVersion = "0.1.0";

struct JobConfig {
    Json raw;
    std::string task;
    FieldPtr field;
    std::optional<Curve> curve;
    std::optional<std::vector<CurvePoint>> eval_points;  // nullopt: E \ {O}
    std::optional<int> k;
    std::optional<std::pair<int, int>> k_range;          // inclusive
    Side side = Side::Functional;
    std::optional<CurvePoint> point;
    Budget budget;
    std::vector<Elem> rs_support;
    std::uint64_t seed = 1;
    int samples = 20;

    EvalSet eval_set() const;
    const Curve& require_curve() const;
    int require_k() const;
};

/// Throws InvalidConfig for structural problems; field and curve errors keep
/// their own codes.
JobConfig parse_config(const Json& j);

/// The task's results object.
Json run_job(const JobConfig& config);

/// {"schema", "tool_version", "config", "results", "timing_ms"}.
Json make_report(const JobConfig& config, Json results, double timing_ms);

Json error_report(ErrorCode code, const std::string& message);

struct SweepRow {
    int k = 0;
    std::optional<int> min_distance;
    std::optional<int> covering_radius;
    std::optional<std::uint64_t> deep_hole_cosets;
    std::optional<std::string> error;  // error code name when the row failed
};

/// One row per k in the range; failures are recorded per row. An empty
/// range gives an empty table.
std::vector<SweepRow> sweep(const JobConfig& config);

std::string sweep_csv(const std::vector<SweepRow>& rows);
Json sweep_json(const std::vector<SweepRow>& rows);

}  // namespace ellidh
