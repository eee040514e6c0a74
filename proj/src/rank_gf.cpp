#include "overrank/rank_gf.hpp"

#include <cstdlib>

namespace overrank {

FmkTable::FmkTable(int k, std::vector<QSeries> rows) : k_(k), trunc_(0), rows_(std::move(rows)) {
  if (rows_.empty() || rows_.size() % 2 == 0) throw std::invalid_argument("FmkTable needs rows for m in [-T, T]");
  trunc_ = static_cast<int>(rows_.size() / 2);
  for (const QSeries& r : rows_)
    if (r.trunc_order() != trunc_) throw std::invalid_argument("FmkTable rows must share the truncation order");
}

const QSeries& FmkTable::row(int m) const {
  if (m < -trunc_ || m > trunc_) throw IndexOutOfRange("f_{m,k} row " + std::to_string(m) + " outside table");
  return rows_[static_cast<std::size_t>(m + trunc_)];
}

int gf_summation_cutoff(Statistic statistic, int max_n) {
  int k = 0;
  switch (statistic) {
    case Statistic::d_rank:
      while ((k + 1) * (k + 2) / 2 <= max_n) ++k;
      return k;
    case Statistic::m2_rank:
      return max_n;
    case Statistic::dyson:
      while ((k + 1) * (k + 1) <= max_n) ++k;
      return k;
  }
  return k;
}

namespace {

// Univariate factor in front of the k-th kernel.
QSeries summand_prefactor(Statistic statistic, int k, int trunc) {
  switch (statistic) {
    case Statistic::d_rank:
      return shift(finite_pochhammer(-1, 0, 1, k, trunc), k * (k + 1) / 2);
    case Statistic::m2_rank:
      return shift(finite_pochhammer(-1, 0, 1, 2 * k, trunc), k);
    case Statistic::dyson:
      return QSeries::monomial(1, k * k, trunc);
  }
  throw std::logic_error("unhandled statistic");
}

void divide_kernel_level(RankTable& t, int d) {
  // (1 - z q^d)^{-1} then (1 - q^d / z)^{-1}, in place.
  for (int z_exp : {1, -1})
    for (int n = d; n <= t.max_n(); ++n)
      for (int m = t.m_lo(); m <= t.m_hi(); ++m) {
        const Coeff prev = t.at(m - z_exp, n - d);
        if (prev != 0) t.ref(m, n) = checked_add(t.ref(m, n), prev);
      }
}

}  // namespace

RankTable gf_rank_table(Statistic statistic, int max_n) {
  if (max_n < 0) throw std::invalid_argument("max_n must be nonnegative");
  const int step = statistic == Statistic::m2_rank ? 2 : 1;
  RankTable total("gf:" + std::string(to_string(statistic)), max_n);
  RankTable kernel("kernel", max_n);
  kernel.ref(0, 0) = 1;
  const int cutoff = gf_summation_cutoff(statistic, max_n);
  for (int k = 0; k <= cutoff; ++k) {
    if (k > 0 && step * k <= max_n) divide_kernel_level(kernel, step * k);
    const RankTable term = multiply_rows(kernel, summand_prefactor(statistic, k, max_n));
    for (int n = 0; n <= max_n; ++n)
      for (int m = -max_n; m <= max_n; ++m) {
        const Coeff v = term.at(m, n);
        if (v != 0) total.ref(m, n) = checked_add(total.ref(m, n), v);
      }
  }
  return total;
}

FmkTable fmk_by_definition(int k, int trunc) {
  const RankTable kernel = expand_rank_kernel(k, 1, trunc);
  const QSeries one_minus_q({1, -1}, trunc);
  std::vector<QSeries> rows;
  rows.reserve(2 * static_cast<std::size_t>(trunc) + 1);
  for (int m = -trunc; m <= trunc; ++m) rows.push_back(one_minus_q * extract_z_coefficient(kernel, m));
  return FmkTable(k, std::move(rows));
}

FmkTable fmk_by_recurrence(const FmkTable& base) {
  const int k = base.level();
  const int trunc = base.trunc_order();
  const QSeries denom = geometric(1, 2 * k + 2, trunc);
  std::vector<QSeries> rows;
  rows.reserve(2 * static_cast<std::size_t>(trunc) + 1);
  // Rows |n| > trunc are not stored; for k >= 1 they vanish below q^{|n|}, and
  // at k = 0 only n = 0 is nonzero.
  for (int m = -trunc; m <= trunc; ++m) {
    QSeries acc(trunc);
    for (int n = -trunc; n <= trunc; ++n) {
      const long s = static_cast<long>(k + 1) * std::abs(m - n);
      if (s > trunc) continue;
      const QSeries& f = base.row(n);
      if (f.is_zero()) continue;
      acc += shift(f, static_cast<int>(s));
    }
    rows.push_back(acc * denom);
  }
  return FmkTable(k + 1, std::move(rows));
}

std::vector<FmkTable> fmk_levels(int k_max, int trunc) {
  if (k_max < 0) throw std::invalid_argument("k must be nonnegative");
  std::vector<QSeries> rows(2 * static_cast<std::size_t>(trunc) + 1, QSeries(trunc));
  rows[static_cast<std::size_t>(trunc)] = QSeries({1, -1}, trunc);
  std::vector<FmkTable> levels;
  levels.reserve(static_cast<std::size_t>(k_max) + 1);
  levels.emplace_back(0, std::move(rows));
  for (int k = 0; k < k_max; ++k) levels.push_back(fmk_by_recurrence(levels.back()));
  return levels;
}

FmkTable fmk_by_recurrence_from_zero(int k, int trunc) { return std::move(fmk_levels(k, trunc).back()); }

QSeries fmk_closed_form(int m, int k, int trunc) {
  const int a = std::abs(m);
  switch (k) {
    case 0:
      return m == 0 ? QSeries({1, -1}, trunc) : QSeries(trunc);
    case 1:
      return shift(inverse(QSeries({1, 1}, trunc)), a);
    case 2: {
      const QSeries g3 = geometric(1, 3, trunc);
      const QSeries g4 = geometric(1, 4, trunc);
      if (m == 0) {
        return QSeries::monomial(-1, 1, trunc) + g3 + shift(g4, 2) + shift(g3 * g4, 8);
      }
      const QSeries g2 = geometric(1, 2, trunc);
      const QSeries numer = QSeries::constant(1, trunc) - QSeries::monomial(1, a + 1, trunc);
      return shift(numer * g2 * g3 + shift(g3 * g4, a + 3), a);
    }
    default:
      throw UnsupportedLevel("closed form for f_{m,k} is only available for k <= 2, got k=" + std::to_string(k));
  }
}

QSeries first_difference_series(Statistic statistic, int m, int trunc) {
  const int cutoff = gf_summation_cutoff(statistic, trunc);
  const int order = statistic == Statistic::m2_rank ? (trunc + 1) / 2 : trunc;
  return first_difference_series(statistic, m, trunc, fmk_levels(cutoff, order));
}

QSeries first_difference_series(Statistic statistic, int m, int trunc, const std::vector<FmkTable>& levels) {
  if (m < -trunc || m > trunc) throw IndexOutOfRange("|m| exceeds truncation order");
  const int cutoff = gf_summation_cutoff(statistic, trunc);
  if (static_cast<int>(levels.size()) <= cutoff) throw std::invalid_argument("not enough f_{m,k} levels");
  QSeries total(trunc);
  if (statistic == Statistic::m2_rank) {
    if (m == 0) total += QSeries({1, -1}, trunc);
    for (int k = 1; k <= cutoff; ++k) {
      // f_{m,k}(q^2) starts at q^{2|m|}.
      if (std::abs(m) > levels[static_cast<std::size_t>(k)].trunc_order()) continue;
      const QSeries& f = levels[static_cast<std::size_t>(k)].row(m);
      const QSeries lifted = substitute_power(f, 2, trunc);
      if (lifted.trunc_order() < trunc) throw std::invalid_argument("f_{m,k} levels truncated too low");
      const QSeries pre = shift(finite_pochhammer(-1, 2, 1, 2 * k - 2, trunc), k);
      total += 2 * (pre * lifted);
    }
    return total;
  }
  for (int k = 0; k <= cutoff; ++k) {
    const QSeries& f = levels[static_cast<std::size_t>(k)].row(m);
    if (f.trunc_order() < trunc) throw std::invalid_argument("f_{m,k} levels truncated too low");
    total += summand_prefactor(statistic, k, trunc) * f.truncated(trunc);
  }
  return total;
}

QSeries row_difference(const RankTable& t, int m) {
  std::vector<Coeff> out(static_cast<std::size_t>(t.max_n()) + 1);
  for (int n = 0; n <= t.max_n(); ++n) out[n] = checked_sub(t.at(m, n), n > 0 ? t.at(m, n - 1) : 0);
  return QSeries(std::move(out));
}

}  // namespace overrank
