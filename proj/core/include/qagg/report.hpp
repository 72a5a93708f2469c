#pragma once

#include "qagg/calibration.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qagg {

enum class Method { q_aggregation, erm, convex_erm, exponential_weights };

std::string to_string(Method method);
Method method_from_name(const std::string& name);

struct ReplicationRecord {
  int index = 0;
  std::string method;
  int n = 0;
  double empirical_risk = 0.0;
  double population_risk = 0.0;
  double excess_risk = 0.0;         // over the best dictionary element
  double excess_vs_mixture = 0.0;   // over the best population aggregate
  double bound_value = 0.0;         // min_j [R(f_j) + (beta/n) log(1/pi_j)]
  std::vector<int> exceeded;        // per x: population risk above bound_value + 2 beta x / n
  int solver_iterations = 0;
  double solver_certificate = 0.0;
};

struct MethodAggregate {
  std::string method;
  int n = 0;
  int replications = 0;
  double mean_excess = 0.0;
  double se_excess = 0.0;
  double mean_excess_vs_mixture = 0.0;
  double se_excess_vs_mixture = 0.0;
  double mean_population_risk = 0.0;
  double theorem_bound_excess = 0.0;  // bound_value - min_j R(f_j)
  std::vector<double> tail_frequency;
  std::vector<double> tail_standard_error;
  bool mean_within_bound = false;           // mean excess <= theorem_bound_excess
  std::vector<int> tail_within_bound;       // per x: frequency <= exp(-x) + 3 SE
};

struct RateSlope {
  std::string method;
  double slope = 0.0;  // least-squares log-log slope of mean excess_vs_mixture against n
};

// Full replication-level output of an experiment; aggregate statistics are
// recomputable from the per-replication records.
struct ExperimentReport {
  std::map<std::string, std::string> config;
  CalibrationReport calibration;
  std::vector<double> x_grid;
  std::vector<ReplicationRecord> replications;
  std::vector<MethodAggregate> aggregates;
  std::vector<RateSlope> slopes;
};

// Recomputes the aggregates (in first-appearance order of (method, n)) from
// the records; used both to build reports and to check them.
std::vector<MethodAggregate> aggregate_records(const std::vector<ReplicationRecord>& records,
                                               const std::vector<double>& x_grid);

// Least-squares slope of log(mean) against log(n); NaN if any mean is not positive.
double loglog_slope(const std::vector<double>& ns, const std::vector<double>& means);

}  // namespace qagg
