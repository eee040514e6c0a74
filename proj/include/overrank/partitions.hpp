#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "overrank/bivariate.hpp"

namespace overrank {

enum class Statistic { dyson, d_rank, m2_rank };

/// Rounding of lambda_1 / 2 in the M2-rank.
enum class M2Convention { floor, ceiling };

std::string_view to_string(Statistic s);
std::string_view to_string(M2Convention c);
Statistic parse_statistic(std::string_view name);
M2Convention parse_m2_convention(std::string_view name);

/// Weakly decreasing sequence of positive parts.
struct Partition {
  std::vector<int> parts;

  int weight() const;
  int largest() const { return parts.empty() ? 0 : parts.front(); }
  int length() const { return static_cast<int>(parts.size()); }
};

/**
 * Overpartition in canonical form: the parts as a weakly decreasing
 * sequence, plus the set of part sizes whose first occurrence is overlined.
 * `overlined` is sorted descending and is a subset of the distinct sizes.
 */
struct OverPartition {
  std::vector<int> parts;
  std::vector<int> overlined;

  int weight() const;
  int largest() const { return parts.empty() ? 0 : parts.front(); }
  int length() const { return static_cast<int>(parts.size()); }
  bool is_overlined(int size) const;
  /// Throws std::invalid_argument when the canonical-form invariants fail.
  void validate() const;
};

/// Calls `visit` once per partition of n, in reverse lexicographic order.
void enumerate_partitions(int n, const std::function<void(const Partition&)>& visit);

/// Calls `visit` once per overpartition of n: partitions in reverse
/// lexicographic order, overlines by subset iteration over the distinct sizes.
void enumerate_overpartitions(int n, const std::function<void(const OverPartition&)>& visit);

long count_partitions(int n);
long count_overpartitions(int n);

/// Largest part minus number of parts; 0 for the empty partition.
int dyson_rank(const Partition& p);
int d_rank(const OverPartition& o);
/// round(lambda_1 / 2) - l(lambda) + l(lambda_o) - chi(lambda), rounding per `convention`.
int m2_rank(const OverPartition& o, M2Convention convention);

/// Counts objects of each size n <= max_n by statistic value.
RankTable oracle_rank_table(Statistic statistic, int max_n, M2Convention convention = M2Convention::ceiling);

}  // namespace overrank
