#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "overrank/series.hpp"

namespace overrank {

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/**
 * Dense coefficient table for a bivariate series sum c(m,n) z^m q^n with
 * 0 <= n <= max_n and m_lo <= m <= m_hi.
 *
 * Entries outside the stored m-window read as zero; every table built here
 * has support |m| <= n, so the window [-max_n, max_n] loses nothing.
 * Storage is row-major by n, then m ascending.
 */
class RankTable {
 public:
  RankTable(std::string label, int max_n);
  RankTable(std::string label, int max_n, int m_lo, int m_hi);

  const std::string& label() const { return label_; }
  int max_n() const { return max_n_; }
  int m_lo() const { return m_lo_; }
  int m_hi() const { return m_hi_; }

  /// Zero for m outside [m_lo, m_hi]; throws IndexOutOfRange for n outside [0, max_n].
  Coeff at(int m, int n) const;
  /// Mutable access; m must lie in the stored window.
  Coeff& ref(int m, int n);

  /// Sum over m of the entries at n.
  Coeff column_sum(int n) const;

  /// Equality of entries; labels are metadata and ignored.
  bool same_entries(const RankTable& other) const;

 private:
  std::size_t index(int m, int n) const;

  std::string label_;
  int max_n_;
  int m_lo_;
  int m_hi_;
  std::vector<Coeff> entries_;
};

/// Coefficients of 1/((z q^s; q^s)_k (q^s/z; q^s)_k), built factor by factor.
RankTable expand_rank_kernel(int k, int step, int max_n);

/// a_{k,m}(n) tables for k = 0..k_max, each level built from the previous one
/// by the double-sum recurrence over the two new geometric factors.
std::vector<RankTable> akm_tables_by_recurrence(int k_max, int max_n);

/// b_{k,m}(n) = a_{k,m}(n) - a_{k,m+2}(n) for -max_n-2 <= m <= max_n.
RankTable bkm_table(const RankTable& a_table);

/// b_{k+1} from b_k through the same double sum that lifts a_k to a_{k+1}.
RankTable bkm_next_by_recurrence(const RankTable& b_table, int k);

/// The row sum_n t(m,n) q^n; throws IndexOutOfRange if |m| > max_n.
QSeries extract_z_coefficient(const RankTable& t, int m);

/// t * (1 + c z^z_exp q^q_exp), truncated to t.max_n(); the m-window is kept.
RankTable multiply_by_binomial(const RankTable& t, Coeff c, int z_exp, int q_exp);

/// Each z-row of t multiplied by the univariate series s.
RankTable multiply_rows(const RankTable& t, const QSeries& s);

}  // namespace overrank
