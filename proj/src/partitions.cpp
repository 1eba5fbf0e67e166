#include "qseries/partitions.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace qseries {

PartitionGenerator::PartitionGenerator(int n) : n_(n) {
  if (n < 0) {
    throw InvalidConstruction("cannot partition a negative integer");
  }
}

bool PartitionGenerator::next(Partition& out) {
  if (done_) {
    return false;
  }
  if (!started_) {
    started_ = true;
    if (n_ > 0) {
      cur_.assign(1, n_);
    }
    out = cur_;
    done_ = n_ <= 1;
    return true;
  }
  // Strip trailing ones, decrement the last larger part, refill greedily.
  int remainder = 0;
  while (!cur_.empty() && cur_.back() == 1) {
    cur_.pop_back();
    ++remainder;
  }
  const int part = --cur_.back();
  ++remainder;
  if (part == 0) {
    cur_.pop_back();
  }
  const int cap = std::max(part, 1);
  while (remainder > 0) {
    const int take = std::min(cap, remainder);
    cur_.push_back(take);
    remainder -= take;
  }
  done_ = cur_.front() == 1;
  out = cur_;
  return true;
}

std::vector<Partition> enumerate(int n) {
  std::vector<Partition> all;
  PartitionGenerator gen(n);
  Partition p;
  while (gen.next(p)) {
    all.push_back(p);
  }
  return all;
}

Integer p_count(int n) {
  if (n < 0) {
    return 0;
  }
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Integer acc = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      if (g1 > m) {
        break;
      }
      const int g2 = j * (3 * j + 1) / 2;
      const Integer term = p[static_cast<std::size_t>(m - g1)] + (g2 <= m ? p[static_cast<std::size_t>(m - g2)] : 0);
      if (j % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  return p[static_cast<std::size_t>(n)];
}

int rank(const Partition& p) {
  if (p.empty()) {
    return 0;
  }
  return p.front() - static_cast<int>(p.size());
}

int ones(const Partition& p) { return static_cast<int>(std::count(p.begin(), p.end(), 1)); }

int crank(const Partition& p) {
  if (p.empty()) {
    return 0;
  }
  const int w = ones(p);
  if (w == 0) {
    return p.front();
  }
  const int mu = static_cast<int>(std::count_if(p.begin(), p.end(), [w](int x) { return x > w; }));
  return mu - w;
}

Stat parse_stat(const std::string& s) {
  if (s == "N" || s == "rank") {
    return Stat::N;
  }
  if (s == "NT" || s == "parts") {
    return Stat::NT;
  }
  if (s == "Mw" || s == "crank" || s == "ones") {
    return Stat::Mw;
  }
  throw UsageError("unknown statistic '" + s + "' (expected N, NT or Mw)");
}

std::string stat_name(Stat s) {
  switch (s) {
    case Stat::N: return "N";
    case Stat::NT: return "NT";
    case Stat::Mw: return "Mw";
  }
  return "?";
}

long StatTable::total() const {
  long t = 0;
  for (long c : counts) {
    t += c;
  }
  return t;
}

long StatTable::at(int residue) const { return counts[static_cast<std::size_t>(((residue % k) + k) % k)]; }

PartitionProfile profile_serial(int n) {
  PartitionProfile pr;
  pr.n = n;
  const auto width = static_cast<std::size_t>(2 * n + 1);
  pr.rank_count.assign(width, 0);
  pr.rank_parts.assign(width, 0);
  pr.crank_ones.assign(width, 0);
  PartitionGenerator gen(n);
  Partition p;
  while (gen.next(p)) {
    const auto r = static_cast<std::size_t>(rank(p) + n);
    const auto c = static_cast<std::size_t>(crank(p) + n);
    const long parts = static_cast<long>(p.size());
    const long w = ones(p);
    ++pr.partitions;
    pr.total_parts += parts;
    pr.total_ones += w;
    ++pr.rank_count[r];
    pr.rank_parts[r] += parts;
    pr.crank_ones[c] += w;
  }
  return pr;
}

namespace kernels {

std::vector<PartitionProfile> tally_serial(int n_max) {
  std::vector<PartitionProfile> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    out.push_back(profile_serial(n));
  }
  return out;
}

std::vector<PartitionProfile> tally_omp(int n_max) {
  std::vector<PartitionProfile> out(static_cast<std::size_t>(n_max) + 1);
  // Largest n first: p(n) grows fast, so this balances the dynamic queue.
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i <= n_max; ++i) {
    const int n = n_max - i;
    out[static_cast<std::size_t>(n)] = profile_serial(n);
  }
  return out;
}

}  // namespace kernels

const std::vector<PartitionProfile>& profiles(int n_max) {
  static std::mutex mu;
  // Superseded tables stay alive so references handed out earlier remain valid.
  static std::vector<std::unique_ptr<const std::vector<PartitionProfile>>> tables;
  std::lock_guard lock(mu);
  if (tables.empty() || static_cast<int>(tables.back()->size()) <= n_max) {
    tables.push_back(std::make_unique<const std::vector<PartitionProfile>>(kernels::tally_omp(std::max(n_max, 30))));
  }
  return *tables.back();
}

StatTable stats(int n, int k, Stat which) {
  if (k < 2) {
    throw InvalidConstruction("modulus must be at least 2");
  }
  if (n < 0) {
    throw InvalidConstruction("n must be non-negative");
  }
  const auto& pr = profiles(n)[static_cast<std::size_t>(n)];
  StatTable t{n, k, which, std::vector<long>(static_cast<std::size_t>(k), 0)};
  const auto& src = which == Stat::N ? pr.rank_count : (which == Stat::NT ? pr.rank_parts : pr.crank_ones);
  for (std::size_t i = 0; i < src.size(); ++i) {
    const int stat = static_cast<int>(i) - n;
    t.counts[static_cast<std::size_t>(((stat % k) + k) % k)] += src[i];
  }
  return t;
}

Series series_from_stats(int k, int b, Stat which, int order) {
  profiles(order);
  std::vector<Rational> coefs;
  for (int n = 0; n <= order; ++n) {
    coefs.emplace_back(stats(n, k, which).at(b));
  }
  return Series::from_coefficients(0, std::move(coefs), order);
}

}  // namespace qseries
