#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "marp/instance.hpp"
#include "marp/metrics.hpp"
#include "marp/qubo.hpp"

namespace marp {

// A lambda grid entry: symbolic soft/hard (resolved per instance) or a
// fixed custom value.
struct LambdaSpec {
  LambdaRegime regime = LambdaRegime::custom;
  double value = 0.0;  // used only for custom

  static LambdaSpec soft() { return {LambdaRegime::soft, 0.0}; }
  static LambdaSpec hard() { return {LambdaRegime::hard, 0.0}; }
  static LambdaSpec custom(double v) { return {LambdaRegime::custom, v}; }
};

enum class SolverChoice { exact, sa, greedy };

const char* solver_name(SolverChoice choice);
SolverChoice solver_from_name(const std::string& name);

// Inclusive fleet-size range.
struct Bin {
  int lo = 0;
  int hi = 0;

  bool contains(int fleet) const { return fleet >= lo && fleet <= hi; }
  std::string label() const;
};

struct SweepConfig {
  NetworkKind kind = NetworkKind::grid;
  int size_param = 10;
  std::vector<int> fleet_sizes;
  std::vector<std::uint64_t> seeds;
  std::vector<LambdaSpec> lambdas;
  SolverChoice solver = SolverChoice::exact;
  int num_reads = 100;  // SA only
  int sweeps = 1000;    // SA only
  std::vector<Bin> bins;
};

struct SweepRecord {
  int fleet_size = 0;
  std::uint64_t seed = 0;
  double lambda = 0.0;
  LambdaRegime regime = LambdaRegime::custom;
  std::string solver;
  double energy = 0.0;
  MetricsReport metrics;
  double wall_time_s = 0.0;
};

struct ParetoPoint {
  double pct_cov = 0.0;  // maximized
  double pct_ov = 0.0;   // minimized
  double lambda = 0.0;
  LambdaRegime regime = LambdaRegime::custom;
  int fleet_size = 0;
  int source_row_id = -1;
};

using InstanceGenerator =
    std::function<MarpInstance(int fleet_size, std::uint64_t seed)>;

// Bins must be pairwise disjoint and cover every fleet size.
void validate_sweep_config(const SweepConfig& config);

// One row per (fleet_size, seed, lambda), in exactly that loop order.
// The instance for a (fleet_size, seed) cell is built once and shared
// across the lambda grid.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);
std::vector<SweepRecord> run_sweep(const SweepConfig& config,
                                   const InstanceGenerator& generator);

// Weak dominance: a point is dropped only if some other point is at least as
// good on both objectives and strictly better on one. Result sorted by
// ascending pct_ov.
std::vector<ParetoPoint> pareto_frontier(std::vector<ParetoPoint> points);

std::vector<std::vector<ParetoPoint>> binned_frontiers(
    const std::vector<SweepRecord>& rows, const std::vector<Bin>& bins);

// Interior point with the greatest perpendicular distance to the chord
// joining the frontier endpoints in min-max-normalized objective space;
// ties toward lower pct_ov. Requires at least 3 points.
ParetoPoint knee_point(const std::vector<ParetoPoint>& frontier);

std::string sweep_csv(const std::vector<SweepRecord>& rows);
std::vector<SweepRecord> sweep_rows_from_csv(const std::string& text);

// bin,pct_cov,pct_ov,lambda,regime,fleet_size,is_knee
std::string pareto_csv(const std::vector<Bin>& bins,
                       const std::vector<std::vector<ParetoPoint>>& frontiers);

// {"network": {"kind": str, "size": int}, "fleet_sizes": [...], "seeds": [...],
//  "lambdas": ["soft"|"hard"|num,...], "solver": str, "num_reads": int,
//  "sweeps": int, "bins": [[lo,hi],...]}
SweepConfig sweep_config_from_json(const std::string& text);
SweepConfig load_sweep_config(const std::string& path);

}  // namespace marp
