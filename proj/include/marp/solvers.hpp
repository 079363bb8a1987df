#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "marp/qubo.hpp"

namespace marp {

struct Solution {
  BitVec x;
  double energy = 0.0;
  std::string solver;  // "exact" | "sa" | "greedy"
  std::optional<std::uint64_t> seed;
  double wall_time_s = 0.0;
  int n_restarts_used = 0;
};

struct SaParams {
  int num_reads = 100;
  int sweeps = 1000;
  double beta_initial = 0.1;
  double beta_final = 10.0;
  std::uint64_t seed = 0;
};

// Incremental single-flip state shared by the local-search solvers.
// h[i] = Q_ii + sum_{j: x_j = 1} Q_ij, so the energy change of flipping i is
// +h[i] when turning on and -h[i] when turning off. A flip costs O(deg(i)).
class FlipField {
 public:
  explicit FlipField(const QuboModel& model);

  void reset(const BitVec& x0);
  double flip_delta(int i) const { return x_[i] ? -h_[i] : h_[i]; }
  void flip(int i);
  double tracked_energy() const { return energy_; }
  double recompute_energy() const;
  const BitVec& x() const { return x_; }
  int n() const { return n_; }
  int degree(int i) const { return offsets_[i + 1] - offsets_[i]; }

 private:
  int n_;
  std::vector<double> diag_;
  std::vector<int> offsets_;       // CSR over the symmetric coupling pattern
  std::vector<int> neighbors_;
  std::vector<double> weights_;
  std::vector<double> h_;
  BitVec x_;
  double energy_ = 0.0;
};

// Global minimum by exhaustive Gray-code enumeration (n <= 20) or
// depth-first branch and bound (n <= 30). Ties break toward the
// lexicographically smallest x. Throws Error(size_limit) above the budget.
Solution solve_exact(const QuboModel& model);

inline constexpr int kExactEnumerationLimit = 20;
inline constexpr int kExactSizeLimit = 30;

// Best-of-num_reads single-flip Metropolis annealing. Each read starts from
// a density-0.5 random state and performs `sweeps` sequential passes with
// the inverse temperature geometrically interpolated from beta_initial to
// beta_final. Deterministic given params.seed; reads merge by
// (energy, lexicographic x) so concurrent execution cannot change the result.
Solution solve_sa(const QuboModel& model, const SaParams& params);

// From all-zeros, repeatedly turns on the variable with the most negative
// energy change (ties toward the smallest index) until none improves.
Solution solve_greedy(const QuboModel& model);

// num_reads=100, sweeps=1000; beta endpoints derived from the coefficient
// scale: beta_initial = ln(2)/dE_max accepts the worst uphill move with
// probability 1/2, beta_final = ln(100)/dE_min_nonzero accepts the smallest
// with probability 1/100.
SaParams default_sa_params(const QuboModel& model, std::uint64_t seed = 0);

// {"x": [...], "energy": f, "solver": s, "seed": int|null, "wall_time_s": f}
std::string solution_to_json(const Solution& solution);
void save_solution(const Solution& solution, const std::string& path);
Solution solution_from_json(const std::string& text);
Solution load_solution(const std::string& path);

// Thread cap from MARP_THREADS (0 or unset = hardware concurrency).
int thread_budget();

}  // namespace marp
