#pragma once

#include <optional>
#include <string>
#include <vector>

#include "marp/coverage.hpp"

namespace marp {

enum class LambdaRegime { soft, hard, custom };

const char* regime_name(LambdaRegime regime);
LambdaRegime regime_from_name(const std::string& name);

struct PenaltyConfig {
  LambdaRegime regime = LambdaRegime::soft;
  std::optional<double> custom_value;

  static PenaltyConfig soft() { return {LambdaRegime::soft, std::nullopt}; }
  static PenaltyConfig hard() { return {LambdaRegime::hard, std::nullopt}; }
  static PenaltyConfig custom(double value) { return {LambdaRegime::custom, value}; }
};

struct QuadraticEntry {
  int i = 0;
  int j = 0;  // i < j
  double value = 0.0;
};

// Upper-triangular QUBO: minimize sum_i linear[i] x_i + sum_{i<j} Q_ij x_i x_j.
// The stored Q_ij is the full pair coefficient, not half of a symmetric
// matrix entry.
struct QuboModel {
  int n = 0;
  std::vector<double> linear;
  std::vector<QuadraticEntry> quadratic;  // sorted by (i, j)
  double lambda_used = 0.0;
  LambdaRegime lambda_regime = LambdaRegime::custom;
};

// lambda_hard = 1 + sum_i u_i: strong enough that dropping either member of
// any overlapping pair always pays off.
double lambda_hard(const CoverageStats& stats);
double lambda_hard(const std::vector<double>& rewards);

// lambda_soft = median_i s_i / max(1, median_i u_i) with s_i = sum_{j!=i} c_ij.
// The median of an even-length list is the mean of the two middle values.
double lambda_soft(const CoverageStats& stats);
double lambda_soft(const std::vector<double>& rewards,
                   const std::vector<OverlapEntry>& overlaps);

double resolve_lambda(const CoverageStats& stats, const PenaltyConfig& penalty);

// Diagonal -u_i, off-diagonal lambda * c_ij on overlap support.
QuboModel build_qubo(const CoverageStats& stats, const PenaltyConfig& penalty);
QuboModel build_qubo(const std::vector<double>& rewards,
                     const std::vector<OverlapEntry>& overlaps,
                     double lambda, LambdaRegime regime = LambdaRegime::custom);

double energy(const QuboModel& model, const BitVec& x);

// Adds `penalty` to Q_ij for every pair inside each group. Groups must be
// disjoint. A sensible default penalty is lambda_hard of the stats the model
// was built from.
QuboModel add_one_hot_groups(const QuboModel& model,
                             const std::vector<std::vector<int>>& groups,
                             double penalty);

// Coordinate-list text format:
//   c marp lambda=<v> regime=<soft|hard|custom>
//   p qubo 0 <n> <n_diag> <n_offdiag>
//   <i> <i> <Q_ii>
//   <i> <j> <Q_ij>        (i < j)
// Indices 0-based, floats with 12 significant digits. Files without the
// comment line import with regime=custom, lambda_used=0.
void export_qubo(const QuboModel& model, const std::string& path);
std::string qubo_to_text(const QuboModel& model);
QuboModel import_qubo(const std::string& path);
QuboModel qubo_from_text(const std::string& text);

}  // namespace marp
