#pragma once

#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "marp/instance.hpp"

namespace marp {

using BitVec = std::vector<std::uint8_t>;

// One pairwise overlap c_ij = |S_i intersect S_j|, stored once with i < j.
struct OverlapEntry {
  int i = 0;
  int j = 0;
  int count = 0;
};

// Per-vehicle unique-coverage rewards plus the sparse overlap structure.
// unique_counts[i] is the number of nodes covered by vehicle i and nobody
// else in the full fleet; node_usage[n] counts fleet routes through node n.
struct CoverageStats {
  std::vector<int> unique_counts;
  std::vector<OverlapEntry> overlaps;  // sorted by (i, j), counts > 0 only
  std::vector<int> node_usage;         // indexed by node id

  int vehicle_count() const { return static_cast<int>(unique_counts.size()); }
};

CoverageStats compute_coverage(const MarpInstance& instance);

// covered = |union of selected route sets|, overlap = sum of c_ij over
// selected pairs.
std::pair<int, long long> coverage_of_selection(const MarpInstance& instance,
                                                const CoverageStats& stats,
                                                const BitVec& x);

// Optional CSV dump: an "i,u_i" section followed by an "i,j,c_ij" section.
void write_stats_csv(const CoverageStats& stats, std::ostream& out);

}  // namespace marp
