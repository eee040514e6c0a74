#include "overrank/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace overrank {

std::string_view to_string(Statistic s) {
  switch (s) {
    case Statistic::dyson: return "dyson";
    case Statistic::d_rank: return "d-rank";
    case Statistic::m2_rank: return "m2-rank";
  }
  return "?";
}

std::string_view to_string(M2Convention c) { return c == M2Convention::floor ? "floor" : "ceiling"; }

Statistic parse_statistic(std::string_view name) {
  if (name == "dyson") return Statistic::dyson;
  if (name == "d-rank" || name == "d_rank") return Statistic::d_rank;
  if (name == "m2-rank" || name == "m2_rank") return Statistic::m2_rank;
  throw std::invalid_argument("unknown statistic: " + std::string(name));
}

M2Convention parse_m2_convention(std::string_view name) {
  if (name == "floor") return M2Convention::floor;
  if (name == "ceiling") return M2Convention::ceiling;
  throw std::invalid_argument("unknown M2 convention: " + std::string(name));
}

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int OverPartition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool OverPartition::is_overlined(int size) const {
  return std::find(overlined.begin(), overlined.end(), size) != overlined.end();
}

void OverPartition::validate() const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("parts must be weakly decreasing");
  }
  for (std::size_t i = 0; i < overlined.size(); ++i) {
    if (i > 0 && overlined[i] >= overlined[i - 1]) throw std::invalid_argument("overlined sizes must be distinct, descending");
    if (std::find(parts.begin(), parts.end(), overlined[i]) == parts.end())
      throw std::invalid_argument("overlined size " + std::to_string(overlined[i]) + " is not a part");
  }
}

void enumerate_partitions(int n, const std::function<void(const Partition&)>& visit) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  Partition p;
  if (n == 0) {
    visit(p);
    return;
  }
  p.parts.push_back(n);
  while (true) {
    visit(p);
    // Strip trailing ones, decrement the last part > 1, refill greedily.
    int ones = 0;
    while (!p.parts.empty() && p.parts.back() == 1) {
      p.parts.pop_back();
      ++ones;
    }
    if (p.parts.empty()) return;
    const int x = --p.parts.back();
    int rest = ones + 1;
    while (rest > 0) {
      const int part = std::min(x, rest);
      p.parts.push_back(part);
      rest -= part;
    }
  }
}

void enumerate_overpartitions(int n, const std::function<void(const OverPartition&)>& visit) {
  OverPartition o;
  std::vector<int> distinct;
  enumerate_partitions(n, [&](const Partition& p) {
    distinct.clear();
    for (int part : p.parts)
      if (distinct.empty() || distinct.back() != part) distinct.push_back(part);
    o.parts = p.parts;
    const std::size_t subsets = std::size_t{1} << distinct.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      o.overlined.clear();
      for (std::size_t i = 0; i < distinct.size(); ++i)
        if (mask & (std::size_t{1} << i)) o.overlined.push_back(distinct[i]);
      visit(o);
    }
  });
}

long count_partitions(int n) {
  long count = 0;
  enumerate_partitions(n, [&](const Partition&) { ++count; });
  return count;
}

long count_overpartitions(int n) {
  long count = 0;
  enumerate_overpartitions(n, [&](const OverPartition&) { ++count; });
  return count;
}

int dyson_rank(const Partition& p) { return p.largest() - p.length(); }

int d_rank(const OverPartition& o) { return o.largest() - o.length(); }

int m2_rank(const OverPartition& o, M2Convention convention) {
  if (o.parts.empty()) return 0;
  const int top = o.largest();
  const int half = convention == M2Convention::floor ? top / 2 : (top + 1) / 2;
  // Only the first occurrence of a size can carry the overline.
  int odd_plain = 0;
  for (std::size_t i = 0; i < o.parts.size(); ++i) {
    const int part = o.parts[i];
    if (part % 2 == 0) continue;
    const bool first = i == 0 || o.parts[i - 1] != part;
    if (!(first && o.is_overlined(part))) ++odd_plain;
  }
  const int chi = (top % 2 == 1 && !o.is_overlined(top)) ? 1 : 0;
  return half - o.length() + odd_plain - chi;
}

RankTable oracle_rank_table(Statistic statistic, int max_n, M2Convention convention) {
  std::string label = "oracle:" + std::string(to_string(statistic));
  if (statistic == Statistic::m2_rank) label += ":" + std::string(to_string(convention));
  RankTable t(std::move(label), max_n);
  for (int n = 0; n <= max_n; ++n) {
    if (statistic == Statistic::dyson) {
      enumerate_partitions(n, [&](const Partition& p) { ++t.ref(dyson_rank(p), n); });
    } else if (statistic == Statistic::d_rank) {
      enumerate_overpartitions(n, [&](const OverPartition& o) { ++t.ref(d_rank(o), n); });
    } else {
      enumerate_overpartitions(n, [&](const OverPartition& o) { ++t.ref(m2_rank(o, convention), n); });
    }
  }
  return t;
}

}  // namespace overrank
