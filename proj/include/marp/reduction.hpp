#pragma once

#include <string>
#include <vector>

#include "marp/coverage.hpp"
#include "marp/qubo.hpp"

namespace marp {

// Weighted set packing: pick pairwise-disjoint sets of maximum total weight.
struct WspInstance {
  int universe_size = 0;
  std::vector<std::vector<int>> sets;  // element ids in [0, universe_size)
  std::vector<double> weights;         // w_i >= 0

  int set_count() const { return static_cast<int>(sets.size()); }
};

struct WspSolution {
  std::vector<int> selected;  // ascending set indices
  double weight = 0.0;
};

// Vehicle-selection data equivalent to the packing instance: one variable
// per set, reward u_i = w_i, overlap c_ij = |S_i intersect S_j|, and a
// penalty lambda = 1 + sum_k w_k large enough to forbid overlapping picks.
struct WspReduction {
  std::vector<double> rewards;
  std::vector<OverlapEntry> overlaps;
  double lambda = 0.0;
};

void validate_wsp(const WspInstance& wsp);

WspReduction reduce_wsp_to_marp(const WspInstance& wsp);

// reduce -> build_qubo -> solve_exact; the packing weight is the negated
// optimal energy. Throws Error(size_limit) for more than 20 sets.
WspSolution solve_wsp_via_marp(const WspInstance& wsp);

// Independent oracle: checks all 2^m subsets for pairwise disjointness.
// Ties break toward the lexicographically smallest indicator vector.
WspSolution wsp_brute_force(const WspInstance& wsp);

inline constexpr int kWspSizeLimit = 20;

// {"universe_size": int, "sets": [[int,...],...], "weights": [num,...]}
WspInstance load_wsp(const std::string& path);
WspInstance wsp_from_json(const std::string& text);

}  // namespace marp
