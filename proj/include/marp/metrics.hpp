#pragma once

#include <string>
#include <utility>
#include <vector>

#include "marp/coverage.hpp"
#include "marp/qubo.hpp"
#include "marp/solvers.hpp"

namespace marp {

struct MetricsReport {
  double avg_node_overlap = 0.0;  // mean vehicles per covered node, >= 1
  double top10_share = 0.0;       // usage share of the top ceil(10%) nodes
  double density = 0.0;           // overlap graph density
  double avg_degree = 0.0;        // overlap graph mean degree
  double entropy_norm = 0.0;      // normalized Shannon entropy of node usage
  double hhi = 0.0;               // Herfindahl-Hirschman concentration index
  double pct_coverage = 0.0;      // covered nodes vs the full-fleet baseline
  double pct_overlap = 0.0;       // selected overlap vs the full-fleet baseline
  double pct_vehicles = 0.0;      // selected vehicles vs fleet size
  double objective_energy = 0.0;
};

// Vehicles-through-node counts restricted to the selection; indexed by node
// id, zero for nodes outside the selected union.
std::vector<int> node_usage_selected(const MarpInstance& instance, const BitVec& x);

// Throws Error(empty_selection) when no node has positive usage.
double avg_node_overlap(const std::vector<int>& usage);

// Nodes ranked by descending usage, ties by ascending node id; share of the
// top ceil(0.1 * |N|).
double top10_share(const std::vector<int>& usage);

struct OverlapGraphStats {
  int n_vertices = 0;
  long long m_edges = 0;
  double density = 0.0;     // 0 by convention when n <= 1
  double avg_degree = 0.0;  // 0 when n == 0
};

OverlapGraphStats overlap_graph(const MarpInstance& instance,
                                const CoverageStats& stats, const BitVec& x);

// (H_norm, HHI); H_norm is defined as 1 for a single-node support.
std::pair<double, double> entropy_and_hhi(const std::vector<int>& usage);

struct PctMetrics {
  double coverage = 0.0;
  double overlap = 0.0;
  double vehicles = 0.0;
};

// Baseline is the all-vehicles selection; pct_overlap is 0 when the baseline
// has no overlap at all.
PctMetrics percentage_metrics(const MarpInstance& instance,
                              const CoverageStats& stats, const BitVec& x);

// Empty selections yield an all-zero report rather than an error.
MetricsReport full_report(const MarpInstance& instance, const CoverageStats& stats,
                          const QuboModel& model, const Solution& solution);

// Fixed-header CSV row per (instance, lambda, solver).
std::string metrics_csv_header();
std::string metrics_csv_row(int n_vehicles, double lambda, LambdaRegime regime,
                            const std::string& solver, double solver_energy,
                            const MetricsReport& report, double wall_time_s);

}  // namespace marp
