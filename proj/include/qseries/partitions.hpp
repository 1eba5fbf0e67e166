#pragma once

#include <string>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

/// Yields the partitions of n in descending lexicographic order, starting
/// with (n) and ending with (1,...,1). n = 0 yields the empty partition once.
class PartitionGenerator {
 public:
  explicit PartitionGenerator(int n);
  /// Writes the next partition into `out`; false when exhausted.
  bool next(Partition& out);

 private:
  int n_;
  bool started_ = false;
  bool done_ = false;
  Partition cur_;
};

std::vector<Partition> enumerate(int n);

/// p(n) by Euler's pentagonal recurrence.
Integer p_count(int n);

/// Largest part minus number of parts; 0 for the empty partition.
int rank(const Partition& p);
/// Largest part when there are no ones, otherwise (parts larger than the
/// number of ones) minus (number of ones); 0 for the empty partition.
int crank(const Partition& p);
int ones(const Partition& p);

enum class Stat { N, NT, Mw };

Stat parse_stat(const std::string& s);
std::string stat_name(Stat s);

/// Per-residue tallies for one n and modulus k.
struct StatTable {
  int n = 0;
  int k = 0;
  Stat which = Stat::N;
  std::vector<long> counts;

  long total() const;
  long at(int residue) const;
};

/// Raw per-n profile from one enumeration pass: indexed by statistic + n.
struct PartitionProfile {
  int n = 0;
  long partitions = 0;
  long total_parts = 0;
  long total_ones = 0;
  std::vector<long> rank_count;
  std::vector<long> rank_parts;
  std::vector<long> crank_ones;
};

PartitionProfile profile_serial(int n);

namespace kernels {
/// Profiles for 0..n_max, one n at a time.
std::vector<PartitionProfile> tally_serial(int n_max);
/// Same result; the n values are spread over OpenMP threads.
std::vector<PartitionProfile> tally_omp(int n_max);
}  // namespace kernels

/// Memoized profiles for 0..n_max (thread safe).
const std::vector<PartitionProfile>& profiles(int n_max);

StatTable stats(int n, int k, Stat which);

/// sum_n stat(b, k, n) q^n for 0 <= n <= order, by enumeration.
Series series_from_stats(int k, int b, Stat which, int order);

}  // namespace qseries
