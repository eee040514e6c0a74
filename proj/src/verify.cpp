#include "overrank/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace overrank {

void VerificationReport::record(Point where, Coeff lhs, Coeff rhs, bool excluded) {
  if (excluded) expected_exceptions.push_back(where);
  violations.push_back(Violation{std::move(where), lhs, rhs, excluded});
}

std::size_t VerificationReport::unexpected_count() const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(), [](const Violation& v) { return !v.excluded; }));
}

bool VerificationReport::has_violation_at(std::string_view claim, std::initializer_list<long> coords) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) {
    if (v.where.claim != claim || v.where.coords.size() != coords.size()) return false;
    return std::equal(coords.begin(), coords.end(), v.where.coords.begin(),
                      [](long c, const auto& named) { return c == named.second; });
  });
}

namespace {

Point at(std::string claim, std::initializer_list<std::pair<std::string, long>> coords) {
  return Point{std::move(claim), std::vector<std::pair<std::string, long>>(coords)};
}

// Records every coefficient of `s` (from `from` on) that is negative.
void require_nonnegative(VerificationReport& report, const QSeries& s, int from, const std::string& claim,
                         std::initializer_list<std::pair<std::string, long>> coords) {
  for (int n = from; n <= s.trunc_order(); ++n) {
    ++report.assertions;
    if (s[n] >= 0) continue;
    Point p{claim, std::vector<std::pair<std::string, long>>(coords)};
    p.coords.emplace_back("n", n);
    report.record(std::move(p), s[n], 0);
  }
}

void check_symmetry(VerificationReport& report, const RankTable& t, const std::string& claim) {
  for (int n = 0; n <= t.max_n(); ++n)
    for (int m = 1; m <= t.max_n(); ++m) {
      ++report.assertions;
      if (t.at(m, n) != t.at(-m, n)) report.record(at(claim, {{"m", m}, {"n", n}}), t.at(m, n), t.at(-m, n));
    }
}

void compare_tables(VerificationReport& report, const RankTable& lhs, const RankTable& rhs, const std::string& claim) {
  const int lo = std::min(lhs.m_lo(), rhs.m_lo());
  const int hi = std::max(lhs.m_hi(), rhs.m_hi());
  for (int n = 0; n <= std::min(lhs.max_n(), rhs.max_n()); ++n)
    for (int m = lo; m <= hi; ++m) {
      ++report.assertions;
      if (lhs.at(m, n) != rhs.at(m, n)) report.record(at(claim, {{"m", m}, {"n", n}}), lhs.at(m, n), rhs.at(m, n));
    }
}

VerificationReport n_monotone(std::string id, const RankTable& t, bool d_rank_exclusions) {
  VerificationReport report;
  report.check_id = std::move(id);
  const int max_n = t.max_n();
  report.bounds = {{"m_min", 0}, {"m_max", max_n}, {"n_min", 1}, {"n_max", max_n}};
  if (d_rank_exclusions) report.exclusion = "n = m + 2 or (m, n) = (0, 4)";
  for (int m = 0; m <= max_n; ++m)
    for (int n = 1; n <= max_n; ++n) {
      ++report.assertions;
      const Coeff lhs = t.at(m, n);
      const Coeff rhs = t.at(m, n - 1);
      if (lhs >= rhs) continue;
      const bool excluded = d_rank_exclusions && (n == m + 2 || (m == 0 && n == 4));
      report.record(at("n-monotone", {{"m", m}, {"n", n}}), lhs, rhs, excluded);
    }
  return report;
}

}  // namespace

VerificationReport check_thm_n_monotone_d(const RankTable& d_table) {
  return n_monotone("thm-d-mono", d_table, true);
}

VerificationReport check_thm_n_monotone_m2(const RankTable& m2_table) {
  return n_monotone("thm-m2-mono", m2_table, false);
}

VerificationReport check_thm_m_monotone(Statistic statistic, const RankTable& t) {
  VerificationReport report;
  report.check_id = "thm-m-mono/" + std::string(to_string(statistic));
  const int max_n = t.max_n();
  report.bounds = {{"m_min", 0}, {"m_max", max_n}, {"n_min", 0}, {"n_max", max_n}};
  for (int m = 0; m <= max_n; ++m)
    for (int n = 0; n <= max_n; ++n) {
      ++report.assertions;
      if (t.at(m, n) < t.at(m + 2, n)) report.record(at("m-monotone", {{"m", m}, {"n", n}}), t.at(m, n), t.at(m + 2, n));
    }
  return report;
}

VerificationReport check_cm_ordinary(const RankTable& dyson) {
  VerificationReport report;
  report.check_id = "cm-ordinary";
  const int max_n = dyson.max_n();
  report.bounds = {{"m_min", 0}, {"m_max", max_n}, {"n_min", 0}, {"n_max", max_n}};
  report.exclusion = "n-monotone: n < 12 or n = m + 2";
  for (int m = 0; m <= max_n; ++m)
    for (int n = 0; n <= max_n; ++n) {
      if (n >= 1) {
        ++report.assertions;
        if (dyson.at(m, n) < dyson.at(m, n - 1))
          report.record(at("n-monotone", {{"m", m}, {"n", n}}), dyson.at(m, n), dyson.at(m, n - 1),
                        n < 12 || n == m + 2);
      }
      ++report.assertions;
      if (dyson.at(m, n) < dyson.at(m + 2, n))
        report.record(at("m-monotone", {{"m", m}, {"n", n}}), dyson.at(m, n), dyson.at(m + 2, n));
    }
  return report;
}

VerificationReport check_fmk_nonneg(int k_lo, int k_hi, int m_max, int trunc) {
  if (k_lo < 2) throw std::invalid_argument("nonnegativity decompositions need k >= 2");
  VerificationReport report;
  report.check_id = "fmk-nonneg";
  m_max = std::min(m_max, trunc);
  report.bounds = {{"k_min", k_lo}, {"k_max", k_hi}, {"m_max", m_max}, {"trunc", trunc}};
  for (int k = k_lo; k <= k_hi; ++k) {
    const FmkTable f = fmk_by_definition(k, trunc);
    const QSeries q_minus_q2({0, 1, -1}, trunc);
    require_nonnegative(report, f.row(0) + q_minus_q2, 0, "f0k+q-q^2>=0", {{"k", k}});
    ++report.assertions;
    if (f.row(0)[0] != 1) report.record(at("f0k(0)=1", {{"k", k}}), f.row(0)[0], 1);
    require_nonnegative(report, f.row(1) - QSeries::monomial(1, k + 2, trunc), 0, "f1k-q^(k+2)>=0", {{"k", k}});
    for (int m = 2; m <= m_max; ++m) require_nonnegative(report, f.row(m), 0, "fmk>=0", {{"k", k}, {"m", m}});
  }
  return report;
}

VerificationReport check_lemma_threshold(int a_max, int b_max, int c_max, int trunc) {
  if (b_max + 6 > trunc) throw std::invalid_argument("threshold lemma needs trunc >= b_max + 6");
  VerificationReport report;
  report.check_id = "lemma-threshold";
  report.bounds = {{"a_max", a_max}, {"b_max", b_max}, {"c_min", 1}, {"c_max", c_max}, {"trunc", trunc}};
  report.exclusion = "n < b + 6";
  const QSeries g34 = geometric(1, 3, trunc) * geometric(1, 4, trunc);
  for (int c = 1; c <= c_max; ++c) {
    const QSeries alternating = geometric(-1, c, trunc);
    for (int a = 0; a <= a_max; ++a)
      for (int b = 0; b <= b_max; ++b) {
        const QSeries s = shift(alternating, a) + shift(g34, b);
        for (int n = 0; n <= trunc; ++n) {
          ++report.assertions;
          if (s[n] < 0) report.record(at("coefficient>=0", {{"a", a}, {"b", b}, {"c", c}, {"n", n}}), s[n], 0, n < b + 6);
        }
      }
  }
  return report;
}

VerificationReport check_lemma_ratio(int m_max, int trunc) {
  VerificationReport report;
  report.check_id = "lemma-ratio";
  report.bounds = {{"m_min", 1}, {"m_max", m_max}, {"trunc", trunc}};
  const QSeries denom = geometric(1, 2, trunc) * geometric(1, 3, trunc);
  for (int m = 1; m <= m_max; ++m) {
    const QSeries numer = QSeries::constant(1, trunc) - QSeries::monomial(1, m + 1, trunc);
    require_nonnegative(report, numer * denom, 0, "coefficient>=0", {{"m", m}});
  }
  return report;
}

VerificationReport check_akm_lemma(int k_max, int trunc) {
  VerificationReport report;
  report.check_id = "lemma-akm";
  report.bounds = {{"k_min", 0}, {"k_max", k_max}, {"trunc", trunc}};
  const std::vector<RankTable> recurrence = akm_tables_by_recurrence(k_max, trunc);
  std::vector<RankTable> b_tables;
  for (int k = 0; k <= k_max; ++k) {
    const RankTable kernel = expand_rank_kernel(k, 1, trunc);
    const RankTable& a = recurrence[static_cast<std::size_t>(k)];
    for (int n = 0; n <= trunc; ++n)
      for (int m = -trunc; m <= trunc; ++m) {
        ++report.assertions;
        if (a.at(m, n) != kernel.at(m, n))
          report.record(at("recurrence=kernel", {{"k", k}, {"m", m}, {"n", n}}), a.at(m, n), kernel.at(m, n));
        ++report.assertions;
        if (a.at(m, n) != a.at(-m, n))
          report.record(at("a-symmetric", {{"k", k}, {"m", m}, {"n", n}}), a.at(m, n), a.at(-m, n));
      }
    b_tables.push_back(bkm_table(a));
    const RankTable& b = b_tables.back();
    for (int n = 0; n <= trunc; ++n)
      for (int m = -trunc - 2; m <= trunc; ++m) {
        if (m >= 0) {
          ++report.assertions;
          if (b.at(m, n) < 0) report.record(at("b-nonneg", {{"k", k}, {"m", m}, {"n", n}}), b.at(m, n), 0);
        }
        ++report.assertions;
        if (b.at(m, n) != -b.at(-m - 2, n))
          report.record(at("b-antisymmetric", {{"k", k}, {"m", m}, {"n", n}}), b.at(m, n), -b.at(-m - 2, n));
      }
    if (k > 0) {
      const RankTable lifted = bkm_next_by_recurrence(b_tables[static_cast<std::size_t>(k - 1)], k - 1);
      for (int n = 0; n <= trunc; ++n)
        for (int m = -trunc - 2; m <= trunc; ++m) {
          ++report.assertions;
          if (lifted.at(m, n) != b.at(m, n))
            report.record(at("b-recurrence", {{"k", k}, {"m", m}, {"n", n}}), lifted.at(m, n), b.at(m, n));
        }
    }
  }
  return report;
}

VerificationReport check_gf_vs_oracle(Statistic statistic, const RankTable& gf, const RankTable& oracle) {
  VerificationReport report;
  report.check_id = "gf-oracle/" + std::string(to_string(statistic));
  report.bounds = {{"n_max", std::min(gf.max_n(), oracle.max_n())}};
  compare_tables(report, gf, oracle, "gf=oracle");
  check_symmetry(report, gf, "gf-symmetric");
  check_symmetry(report, oracle, "oracle-symmetric");
  return report;
}

std::optional<std::pair<int, int>> first_mismatch(const RankTable& a, const RankTable& b) {
  // Within a row, scan outward from the centre: 0, -1, 1, -2, 2, ...
  const int reach = std::max({-a.m_lo(), a.m_hi(), -b.m_lo(), b.m_hi()});
  for (int n = 0; n <= std::min(a.max_n(), b.max_n()); ++n)
    for (int r = 0; r <= reach; ++r)
      for (int m : {-r, r}) {
        if (a.at(m, n) != b.at(m, n)) return std::make_pair(m, n);
        if (r == 0) break;
      }
  return std::nullopt;
}

VerificationReport check_gf_vs_oracle_m2(const RankTable& gf, const RankTable& oracle_floor,
                                         const RankTable& oracle_ceiling, M2Convention expected) {
  VerificationReport report;
  report.check_id = "gf-oracle/m2-rank";
  report.bounds = {{"n_max", gf.max_n()}};
  const auto floor_miss = first_mismatch(oracle_floor, gf);
  const auto ceil_miss = first_mismatch(oracle_ceiling, gf);
  std::string matching = "none";
  if (!floor_miss && !ceil_miss) matching = "both";
  else if (!floor_miss) matching = "floor";
  else if (!ceil_miss) matching = "ceiling";
  report.info.emplace_back("matching_convention", matching);
  report.info.emplace_back("expected_convention", std::string(to_string(expected)));

  for (auto [convention, miss] : {std::pair{M2Convention::floor, floor_miss}, std::pair{M2Convention::ceiling, ceil_miss}}) {
    if (!miss) continue;
    const RankTable& oracle = convention == M2Convention::floor ? oracle_floor : oracle_ceiling;
    const auto [m, n] = *miss;
    report.observations.push_back(Violation{
        at("first-mismatch[" + std::string(to_string(convention)) + "]", {{"m", m}, {"n", n}}), oracle.at(m, n), gf.at(m, n)});
  }

  const RankTable& chosen = expected == M2Convention::floor ? oracle_floor : oracle_ceiling;
  compare_tables(report, chosen, gf, "oracle[" + std::string(to_string(expected)) + "]=gf");
  ++report.assertions;
  if (matching == "both") report.record(at("unique-convention", {}), 2, 1);
  check_symmetry(report, gf, "gf-symmetric");
  check_symmetry(report, chosen, "oracle-symmetric");
  return report;
}

VerificationReport check_diff_identity(Statistic statistic, const RankTable& table, int m_range) {
  VerificationReport report;
  report.check_id = "diff-identity/" + std::string(to_string(statistic));
  const int trunc = table.max_n();
  m_range = std::min(m_range, trunc);
  report.bounds = {{"m_min", -m_range}, {"m_max", m_range}, {"n_max", trunc}};
  const int cutoff = gf_summation_cutoff(statistic, trunc);
  const int order = statistic == Statistic::m2_rank ? (trunc + 1) / 2 : trunc;
  const std::vector<FmkTable> levels = fmk_levels(cutoff, order);
  for (int m = -m_range; m <= m_range; ++m) {
    const QSeries lhs = first_difference_series(statistic, m, trunc, levels);
    const QSeries rhs = row_difference(table, m);
    for (int n = 0; n <= trunc; ++n) {
      ++report.assertions;
      if (lhs[n] != rhs[n]) report.record(at("diff-identity", {{"m", m}, {"n", n}}), lhs[n], rhs[n]);
    }
  }
  return report;
}

const RankTable& Workspace::gf(Statistic statistic) {
  const std::string key = "gf:" + std::string(to_string(statistic));
  auto& slot = tables_[key];
  if (!slot) slot = std::make_unique<RankTable>(gf_rank_table(statistic, max_n_));
  return *slot;
}

const RankTable& Workspace::oracle(Statistic statistic, M2Convention convention) {
  std::string key = "oracle:" + std::string(to_string(statistic));
  if (statistic == Statistic::m2_rank) key += ":" + std::string(to_string(convention));
  auto& slot = tables_[key];
  if (!slot) slot = std::make_unique<RankTable>(oracle_rank_table(statistic, max_n_, convention));
  return *slot;
}

M2Convention Workspace::m2_convention() {
  if (m2_convention_) return *m2_convention_;
  const RankTable& g = gf(Statistic::m2_rank);
  const bool floor_ok = !first_mismatch(oracle(Statistic::m2_rank, M2Convention::floor), g);
  const bool ceil_ok = !first_mismatch(oracle(Statistic::m2_rank, M2Convention::ceiling), g);
  if (floor_ok == ceil_ok)
    throw std::runtime_error("M2 convention is ambiguous at order " + std::to_string(max_n_) +
                             (floor_ok ? ": both conventions match" : ": neither convention matches"));
  m2_convention_ = floor_ok ? M2Convention::floor : M2Convention::ceiling;
  return *m2_convention_;
}

M2Convention Workspace::expected_m2_convention() {
  if (expected_m2_) return *expected_m2_;
  try {
    return m2_convention();
  } catch (const std::runtime_error&) {
    return M2Convention::ceiling;
  }
}

M2Convention resolve_m2_convention(int probe_order) {
  Workspace ws(probe_order);
  return ws.m2_convention();
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "thm-d-mono",  "thm-m2-mono", "thm-m-mono", "cm-ordinary", "fmk-nonneg",
      "lemma-threshold", "lemma-ratio", "lemma-akm", "gf-oracle", "diff-identity"};
  return names;
}

std::vector<VerificationReport> run_check(std::string_view name, Workspace& ws) {
  const int t = ws.max_n();
  if (t < 1) throw std::invalid_argument("verification needs max_n >= 1");
  std::vector<VerificationReport> out;
  if (name == "all") {
    for (const std::string& n : check_names())
      for (VerificationReport& r : run_check(n, ws)) out.push_back(std::move(r));
    return out;
  }
  // Coefficient-level lemmas run at three times the table order.
  const int series_order = 3 * t;
  if (name == "thm-d-mono") {
    out.push_back(check_thm_n_monotone_d(ws.gf(Statistic::d_rank)));
  } else if (name == "thm-m2-mono") {
    out.push_back(check_thm_n_monotone_m2(ws.gf(Statistic::m2_rank)));
  } else if (name == "thm-m-mono") {
    out.push_back(check_thm_m_monotone(Statistic::d_rank, ws.gf(Statistic::d_rank)));
    out.push_back(check_thm_m_monotone(Statistic::m2_rank, ws.gf(Statistic::m2_rank)));
  } else if (name == "cm-ordinary") {
    out.push_back(check_cm_ordinary(ws.gf(Statistic::dyson)));
  } else if (name == "fmk-nonneg") {
    out.push_back(check_fmk_nonneg(2, 8, t, t));
  } else if (name == "lemma-threshold") {
    out.push_back(check_lemma_threshold(8, std::min(12, series_order - 6), 8, series_order));
  } else if (name == "lemma-ratio") {
    out.push_back(check_lemma_ratio(t, series_order));
  } else if (name == "lemma-akm") {
    out.push_back(check_akm_lemma(6, t));
  } else if (name == "gf-oracle") {
    out.push_back(check_gf_vs_oracle(Statistic::dyson, ws.gf(Statistic::dyson), ws.oracle(Statistic::dyson)));
    out.push_back(check_gf_vs_oracle(Statistic::d_rank, ws.gf(Statistic::d_rank), ws.oracle(Statistic::d_rank)));
    out.push_back(check_gf_vs_oracle_m2(ws.gf(Statistic::m2_rank), ws.oracle(Statistic::m2_rank, M2Convention::floor),
                                        ws.oracle(Statistic::m2_rank, M2Convention::ceiling),
                                        ws.expected_m2_convention()));
  } else if (name == "diff-identity") {
    out.push_back(check_diff_identity(Statistic::d_rank, ws.gf(Statistic::d_rank), 10));
    out.push_back(check_diff_identity(Statistic::m2_rank, ws.gf(Statistic::m2_rank), 10));
  } else {
    throw std::invalid_argument("unknown check: " + std::string(name));
  }
  return out;
}

}  // namespace overrank
