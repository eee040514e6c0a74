#include <doctest.h>

#include "overrank/output.hpp"
#include "overrank/verify.hpp"

using namespace overrank;

TEST_CASE("report pass semantics") {
  VerificationReport r;
  CHECK(r.passed());
  r.record(Point{"c", {{"m", 0}}}, 1, 2, true);
  CHECK(r.passed());
  CHECK(r.expected_exceptions.size() == 1);
  r.record(Point{"c", {{"m", 1}}}, 1, 2);
  CHECK_FALSE(r.passed());
  CHECK(r.unexpected_count() == 1);
  CHECK(r.has_violation_at("c", {1}));
  CHECK_FALSE(r.has_violation_at("c", {2}));
}

TEST_CASE("D-rank monotonicity in n") {
  const RankTable d = gf_rank_table(Statistic::d_rank, 10);
  const VerificationReport r = check_thm_n_monotone_d(d);
  CHECK(r.passed());
  CHECK(r.has_violation_at("n-monotone", {0, 4}));
  CHECK(r.has_violation_at("n-monotone", {0, 2}));
  CHECK(r.has_violation_at("n-monotone", {1, 3}));
  for (const Violation& v : r.violations) {
    CHECK(v.excluded);
    const long m = v.where.coords[0].second, n = v.where.coords[1].second;
    CHECK((n == m + 2 || (m == 0 && n == 4)));
    if (m == 0 && n == 4) {
      CHECK(v.lhs == 2);
      CHECK(v.rhs == 4);
    }
    if ((m == 0 && n == 2) || (m == 1 && n == 3)) {
      CHECK(v.lhs == 0);
      CHECK(v.rhs == 2);
    }
  }
}

TEST_CASE("a planted violation outside the excluded set fails the check") {
  RankTable d = gf_rank_table(Statistic::d_rank, 10);
  d.ref(5, 9) = 0;
  const VerificationReport r = check_thm_n_monotone_d(d);
  CHECK_FALSE(r.passed());
  CHECK(r.has_violation_at("n-monotone", {5, 9}));
}

TEST_CASE("M2 monotonicity in n") {
  const RankTable m2 = gf_rank_table(Statistic::m2_rank, 20);
  CHECK(m2.at(0, 1) == 2);
  CHECK(m2.at(0, 0) == 1);
  const VerificationReport r = check_thm_n_monotone_m2(m2);
  CHECK(r.passed());
  CHECK(r.violations.empty());
}

TEST_CASE("monotonicity in m") {
  const RankTable d = gf_rank_table(Statistic::d_rank, 20);
  CHECK(d.at(0, 3) == 4);
  CHECK(d.at(2, 3) == 2);
  CHECK(check_thm_m_monotone(Statistic::d_rank, d).violations.empty());
  CHECK(check_thm_m_monotone(Statistic::m2_rank, gf_rank_table(Statistic::m2_rank, 20)).violations.empty());
}

TEST_CASE("ordinary rank theorems") {
  const VerificationReport r = check_cm_ordinary(gf_rank_table(Statistic::dyson, 30));
  CHECK(r.passed());
  bool small_n = false;
  for (const Violation& v : r.violations) {
    CHECK(v.where.claim == "n-monotone");
    const long m = v.where.coords[0].second, n = v.where.coords[1].second;
    CHECK((n < 12 || n == m + 2));
    small_n = small_n || (n < 12 && n != m + 2);
  }
  CHECK(small_n);
}

TEST_CASE("f_{m,k} nonnegativity") {
  const VerificationReport r = check_fmk_nonneg(2, 4, 20, 30);
  CHECK(r.passed());
  CHECK(r.violations.empty());
  CHECK_THROWS_AS(check_fmk_nonneg(1, 3, 5, 10), std::invalid_argument);
}

TEST_CASE("threshold lemma") {
  const VerificationReport single = check_lemma_threshold(0, 0, 1, 40);
  CHECK(single.passed());
  for (const Violation& v : single.violations) CHECK(v.where.coords[3].second < 6);
  // (a, b, c) = (2, 4, 1): nonnegative from n = 10 on.
  const VerificationReport r = check_lemma_threshold(2, 4, 1, 60);
  CHECK(r.passed());
  for (const Violation& v : r.violations)
    if (v.where.coords[0].second == 2 && v.where.coords[1].second == 4) CHECK(v.where.coords[3].second < 10);
  // Below the threshold there are negative coefficients.
  CHECK(r.has_violation_at("coefficient>=0", {1, 0, 1, 2}));
  CHECK_THROWS_AS(check_lemma_threshold(0, 10, 1, 15), std::invalid_argument);
}

TEST_CASE("ratio lemma") {
  const VerificationReport r = check_lemma_ratio(5, 30);
  CHECK(r.passed());
  CHECK(r.violations.empty());
  // m = 1 collapses to 1/(1 - q^3), m = 2 to 1/(1 - q^2).
  const QSeries one = QSeries::constant(1, 12);
  const QSeries denom = geometric(1, 2, 12) * geometric(1, 3, 12);
  CHECK((one - QSeries::monomial(1, 2, 12)) * denom == geometric(1, 3, 12));
  CHECK((one - QSeries::monomial(1, 3, 12)) * denom == geometric(1, 2, 12));
}

TEST_CASE("a/b lemma suite") {
  const VerificationReport r = check_akm_lemma(4, 14);
  CHECK(r.passed());
  CHECK(r.violations.empty());
  CHECK(r.assertions > 0);
}

TEST_CASE("generating function versus enumeration") {
  const int t = 12;
  CHECK(check_gf_vs_oracle(Statistic::d_rank, gf_rank_table(Statistic::d_rank, t), oracle_rank_table(Statistic::d_rank, t)).passed());
  const VerificationReport m2 = check_gf_vs_oracle_m2(gf_rank_table(Statistic::m2_rank, t),
                                                      oracle_rank_table(Statistic::m2_rank, t, M2Convention::floor),
                                                      oracle_rank_table(Statistic::m2_rank, t, M2Convention::ceiling));
  CHECK(m2.passed());
  REQUIRE(m2.observations.size() == 1);
  CHECK(m2.observations[0].where.claim == "first-mismatch[floor]");
  CHECK(m2.observations[0].where.coords[0].second == 0);
  CHECK(m2.observations[0].where.coords[1].second == 1);
  // Floor sends both overpartitions of 1 to rank -1.
  CHECK(m2.observations[0].lhs == 0);
  CHECK(m2.observations[0].rhs == 2);

  const VerificationReport wrong = check_gf_vs_oracle_m2(gf_rank_table(Statistic::m2_rank, t),
                                                         oracle_rank_table(Statistic::m2_rank, t, M2Convention::floor),
                                                         oracle_rank_table(Statistic::m2_rank, t, M2Convention::ceiling),
                                                         M2Convention::floor);
  CHECK_FALSE(wrong.passed());
}

TEST_CASE("first mismatch scans outward from m = 0") {
  RankTable a("a", 3), b("b", 3);
  a.ref(2, 1) = 1;
  a.ref(-1, 1) = 1;
  CHECK(first_mismatch(a, b) == std::make_pair(-1, 1));
  b.ref(-1, 1) = 1;
  CHECK(first_mismatch(a, b) == std::make_pair(2, 1));
  a.ref(0, 0) = 5;
  CHECK(first_mismatch(a, b) == std::make_pair(0, 0));
  CHECK_FALSE(first_mismatch(b, b));
}

TEST_CASE("convention resolution") {
  CHECK(resolve_m2_convention() == M2Convention::ceiling);
  Workspace ws(8);
  CHECK(ws.m2_convention() == M2Convention::ceiling);
  CHECK(ws.expected_m2_convention() == M2Convention::ceiling);
  ws.expect_m2_convention(M2Convention::floor);
  CHECK(ws.expected_m2_convention() == M2Convention::floor);
}

TEST_CASE("difference identity") {
  const RankTable d = gf_rank_table(Statistic::d_rank, 20);
  const VerificationReport r = check_diff_identity(Statistic::d_rank, d, 5);
  CHECK(r.passed());
  CHECK(r.violations.empty());
  CHECK(check_diff_identity(Statistic::m2_rank, gf_rank_table(Statistic::m2_rank, 20), 3).passed());
}

TEST_CASE("run_check dispatch and determinism") {
  Workspace ws(12);
  const auto first = run_check("all", ws);
  CHECK(first.size() == 14);
  for (const auto& r : first) CHECK(r.passed());
  Workspace again(12);
  const auto second = run_check("all", again);
  REQUIRE(second.size() == first.size());
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(report_to_json(first[i]) == report_to_json(second[i]));
  CHECK_THROWS_AS(run_check("nope", ws), std::invalid_argument);
  Workspace zero(0);
  CHECK_THROWS_AS(run_check("thm-d-mono", zero), std::invalid_argument);
}
