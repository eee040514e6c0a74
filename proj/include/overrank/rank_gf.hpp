#pragma once

#include <stdexcept>
#include <vector>

#include "overrank/bivariate.hpp"
#include "overrank/partitions.hpp"
#include "overrank/series.hpp"

namespace overrank {

class UnsupportedLevel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * The family f_{m,k}(q), -T <= m <= T, at one level k: the z^m coefficients
 * of (1 - q) / ((zq;q)_k (q/z;q)_k).
 */
class FmkTable {
 public:
  FmkTable(int k, std::vector<QSeries> rows);

  int level() const { return k_; }
  int trunc_order() const { return trunc_; }
  /// f_{m,k}; throws IndexOutOfRange for |m| > trunc_order().
  const QSeries& row(int m) const;

  friend bool operator==(const FmkTable&, const FmkTable&) = default;

 private:
  int k_;
  int trunc_;
  std::vector<QSeries> rows_;
};

/// Largest summation index k whose summand can reach q^max_n.
int gf_summation_cutoff(Statistic statistic, int max_n);

/// Rank counts read off the generating function: the D-rank and M2-rank
/// series for overpartitions, and sum_k q^{k^2}/((zq;q)_k (q/z;q)_k) for Dyson.
RankTable gf_rank_table(Statistic statistic, int max_n);

/// (1 - q) times each z-row of the rank kernel.
FmkTable fmk_by_definition(int k, int trunc);

/// Level k+1 from level k: f_{m,k+1} = sum_n f_{n,k} q^{(k+1)|m-n|} / (1 - q^{2k+2}).
FmkTable fmk_by_recurrence(const FmkTable& base);

/// Level 0 computed directly, then lifted by the recurrence up to `k`.
FmkTable fmk_by_recurrence_from_zero(int k, int trunc);

/// Levels 0..k_max by repeated recurrence.
std::vector<FmkTable> fmk_levels(int k_max, int trunc);

/// Closed forms for k in {0, 1, 2}; UnsupportedLevel otherwise.
QSeries fmk_closed_form(int m, int k, int trunc);

/**
 * sum_{n>=0} (c(m,n) - c(m,n-1)) q^n with c(m,-1) = 0, built from the f_{m,k}:
 *   d-rank:  sum_k (-1;q)_k q^{k(k+1)/2} f_{m,k}(q)
 *   m2-rank: [m=0](1-q) + 2 sum_{k>=1} (-q^2;q)_{2k-2} q^k f_{m,k}(q^2)
 *   dyson:   sum_k q^{k^2} f_{m,k}(q)
 * At n = 0 this is the constant 1 for m = 0 and zero otherwise.
 */
QSeries first_difference_series(Statistic statistic, int m, int trunc);
/// As above with precomputed levels; `levels` must reach the summation cutoff
/// and have order >= trunc (>= ceil(trunc/2) for m2-rank).
QSeries first_difference_series(Statistic statistic, int m, int trunc, const std::vector<FmkTable>& levels);

/// The same series read directly from a rank table row.
QSeries row_difference(const RankTable& t, int m);

}  // namespace overrank
