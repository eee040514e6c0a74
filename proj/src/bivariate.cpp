#include "overrank/bivariate.hpp"

#include <algorithm>

namespace overrank {

RankTable::RankTable(std::string label, int max_n) : RankTable(std::move(label), max_n, -max_n, max_n) {}

RankTable::RankTable(std::string label, int max_n, int m_lo, int m_hi)
    : label_(std::move(label)), max_n_(max_n), m_lo_(m_lo), m_hi_(m_hi) {
  if (max_n < 0 || m_hi < m_lo) throw std::invalid_argument("bad RankTable bounds");
  entries_.assign(static_cast<std::size_t>(max_n + 1) * static_cast<std::size_t>(m_hi - m_lo + 1), 0);
}

std::size_t RankTable::index(int m, int n) const {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(m_hi_ - m_lo_ + 1) +
         static_cast<std::size_t>(m - m_lo_);
}

Coeff RankTable::at(int m, int n) const {
  if (n < 0 || n > max_n_) throw IndexOutOfRange("n=" + std::to_string(n) + " outside table");
  if (m < m_lo_ || m > m_hi_) return 0;
  return entries_[index(m, n)];
}

Coeff& RankTable::ref(int m, int n) {
  if (n < 0 || n > max_n_ || m < m_lo_ || m > m_hi_)
    throw IndexOutOfRange("(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ") outside table");
  return entries_[index(m, n)];
}

Coeff RankTable::column_sum(int n) const {
  Coeff s = 0;
  for (int m = m_lo_; m <= m_hi_; ++m) s = checked_add(s, at(m, n));
  return s;
}

bool RankTable::same_entries(const RankTable& other) const {
  if (max_n_ != other.max_n_) return false;
  const int lo = std::min(m_lo_, other.m_lo_);
  const int hi = std::max(m_hi_, other.m_hi_);
  for (int n = 0; n <= max_n_; ++n)
    for (int m = lo; m <= hi; ++m)
      if (at(m, n) != other.at(m, n)) return false;
  return true;
}

namespace {

// In-place division by (1 - z^z_exp q^q_exp): new(m,n) = old(m,n) + new(m - z_exp, n - q_exp).
void divide_by_binomial(RankTable& t, int z_exp, int q_exp) {
  for (int n = q_exp; n <= t.max_n(); ++n)
    for (int m = t.m_lo(); m <= t.m_hi(); ++m) {
      const Coeff prev = t.at(m - z_exp, n - q_exp);
      if (prev != 0) t.ref(m, n) = checked_add(t.ref(m, n), prev);
    }
}

std::string kernel_label(int k, int step) {
  return "kernel(k=" + std::to_string(k) + ",s=" + std::to_string(step) + ")";
}

// sum_{r} sum_{i=0}^{r} src(m - r + 2i, n - r*d): the coefficient extraction of
// src / ((1 - z q^d)(1 - q^d / z)).
RankTable lift_level(const RankTable& src, int d, std::string label) {
  RankTable out(std::move(label), src.max_n(), src.m_lo(), src.m_hi());
  for (int n = 0; n <= src.max_n(); ++n)
    for (int m = src.m_lo(); m <= src.m_hi(); ++m) {
      Coeff acc = 0;
      for (int r = 0; r * d <= n; ++r)
        for (int i = 0; i <= r; ++i) acc = checked_add(acc, src.at(m - r + 2 * i, n - r * d));
      out.ref(m, n) = acc;
    }
  return out;
}

}  // namespace

RankTable expand_rank_kernel(int k, int step, int max_n) {
  if (k < 0 || step < 1) throw std::invalid_argument("kernel needs k >= 0 and step >= 1");
  RankTable t(kernel_label(k, step), max_n);
  t.ref(0, 0) = 1;
  for (int j = 1; j <= k; ++j) {
    const long d = static_cast<long>(step) * j;
    if (d > max_n) break;
    divide_by_binomial(t, 1, static_cast<int>(d));
    divide_by_binomial(t, -1, static_cast<int>(d));
  }
  return t;
}

std::vector<RankTable> akm_tables_by_recurrence(int k_max, int max_n) {
  if (k_max < 0) throw std::invalid_argument("k_max must be nonnegative");
  std::vector<RankTable> levels;
  levels.reserve(static_cast<std::size_t>(k_max) + 1);
  RankTable base("a(k=0)", max_n);
  base.ref(0, 0) = 1;
  levels.push_back(std::move(base));
  for (int k = 0; k < k_max; ++k)
    levels.push_back(lift_level(levels.back(), k + 1, "a(k=" + std::to_string(k + 1) + ")"));
  return levels;
}

RankTable bkm_table(const RankTable& a_table) {
  const int max_n = a_table.max_n();
  RankTable b("b[" + a_table.label() + "]", max_n, -max_n - 2, max_n);
  for (int n = 0; n <= max_n; ++n)
    for (int m = -max_n - 2; m <= max_n; ++m) b.ref(m, n) = checked_sub(a_table.at(m, n), a_table.at(m + 2, n));
  return b;
}

RankTable bkm_next_by_recurrence(const RankTable& b_table, int k) {
  return lift_level(b_table, k + 1, "b(k=" + std::to_string(k + 1) + ")");
}

QSeries extract_z_coefficient(const RankTable& t, int m) {
  if (m < -t.max_n() || m > t.max_n())
    throw IndexOutOfRange("|m|=" + std::to_string(m < 0 ? -m : m) + " exceeds table order");
  std::vector<Coeff> row(static_cast<std::size_t>(t.max_n()) + 1);
  for (int n = 0; n <= t.max_n(); ++n) row[n] = t.at(m, n);
  return QSeries(std::move(row));
}

RankTable multiply_by_binomial(const RankTable& t, Coeff c, int z_exp, int q_exp) {
  RankTable out = t;
  for (int n = q_exp; n <= t.max_n(); ++n)
    for (int m = t.m_lo(); m <= t.m_hi(); ++m) {
      const Coeff prev = t.at(m - z_exp, n - q_exp);
      if (prev != 0) out.ref(m, n) = checked_add(out.ref(m, n), checked_mul(c, prev));
    }
  return out;
}

RankTable multiply_rows(const RankTable& t, const QSeries& s) {
  const int max_n = std::min(t.max_n(), s.trunc_order());
  RankTable out(t.label(), max_n, t.m_lo(), t.m_hi());
  for (int n1 = 0; n1 <= max_n; ++n1) {
    for (int m = t.m_lo(); m <= t.m_hi(); ++m) {
      const Coeff a = t.at(m, n1);
      if (a == 0) continue;
      for (int n2 = 0; n1 + n2 <= max_n; ++n2) {
        if (s[n2] == 0) continue;
        out.ref(m, n1 + n2) = checked_add(out.ref(m, n1 + n2), checked_mul(a, s[n2]));
      }
    }
  }
  return out;
}

}  // namespace overrank
