#pragma once

#include "qagg/report.hpp"
#include "qagg/types.hpp"

#include <optional>
#include <string>

namespace qagg {

// CSV with header f_1,...,f_M,y and one observation per row. Values are
// written with 17 significant digits so a round trip is exact.
// When a bound is given, out-of-range cells are errors naming row and column.
LabeledSample load_sample(const std::string& path, std::optional<double> bound = std::nullopt);
void save_sample(const LabeledSample& sample, const std::string& path);

// Report serialization: a JSON document with top-level fields
// config, calibration, replications, aggregates.
std::string report_to_json(const ExperimentReport& report);
void save_report(const ExperimentReport& report, const std::string& path);

std::string format_double(double value);  // 17 significant digits

}  // namespace qagg
