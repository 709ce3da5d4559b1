#pragma once

// CSV and JSON emitters for the verification artifacts. Every number is
// written as an exact "p/q" string or a {center, radius} pair of them.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "smoothram/coefficients.hpp"
#include "smoothram/correlations.hpp"
#include "smoothram/orthogonality.hpp"
#include "smoothram/reef_experiments.hpp"

namespace smoothram {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& value);
Json to_json(const BoundedValue& value);
Json to_json(const ReefReport& report);
Json to_json(const Conjecture1Point& point);
Json to_json(const SweepResult& sweep);
Json to_json(const ResidualTable& table);
Json to_json(const Corollary2Report& report);

/// Header `ell,win_center,win_radius,car_center,car_radius,method`.
std::string coefficients_csv(const std::vector<CoefficientRecord>& records);

/// Header `q,<l1>,<l2>,...`; one row per smooth q.
std::string orthogonality_csv(const OrthogonalityMatrix& matrix);

/// Header `a,value` for a = 1..max_shift.
std::string correlation_csv(const CorrelationTable& table, u64 max_shift);

/// One failed or undecided check in the failure manifest.
struct Failure {
  std::string check;
  std::string status;  // "failed" or "undecided"
  std::string detail;
};

Json failures_json(const std::vector<Failure>& failures);

/// $SMOOTHRAM_OUTPUT_DIR when set and non-empty, otherwise `fallback`.
std::filesystem::path output_directory(const std::filesystem::path& fallback);

/// Creates parent directories; throws std::runtime_error on I/O failure.
void write_text(const std::filesystem::path& path, const std::string& content);

}  // namespace smoothram
