#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "overrank/bivariate.hpp"
#include "overrank/partitions.hpp"
#include "overrank/rank_gf.hpp"

namespace overrank {

/// A tested location: which sub-claim, and its named coordinates in order.
struct Point {
  std::string claim;
  std::vector<std::pair<std::string, long>> coords;

  friend bool operator==(const Point&, const Point&) = default;
};

/// lhs/rhs of the failed relation at `where`; `excluded` marks points outside
/// the claim's hypothesis.
struct Violation {
  Point where;
  Coeff lhs = 0;
  Coeff rhs = 0;
  bool excluded = false;
};

/**
 * Outcome of one executable claim over a finite range.
 *
 * Every failed relation is recorded. Those inside the claim's excluded set
 * (described by `exclusion`) are also listed in `expected_exceptions` and do
 * not affect `passed()`.
 */
struct VerificationReport {
  std::string check_id;
  std::vector<std::pair<std::string, long>> bounds;
  std::string exclusion;
  std::vector<Violation> violations;
  std::vector<Point> expected_exceptions;
  /// Informational findings that are not assertions (e.g. a rejected convention).
  std::vector<Violation> observations;
  std::vector<std::pair<std::string, std::string>> info;
  long assertions = 0;

  void record(Point where, Coeff lhs, Coeff rhs, bool excluded = false);
  std::size_t unexpected_count() const;
  bool passed() const { return unexpected_count() == 0; }
  bool has_violation_at(std::string_view claim, std::initializer_list<long> coords) const;
};

// Monotonicity in n of the D-rank counts for 0 <= m <= T, 1 <= n <= T.
// Excluded: n = m + 2 and (m, n) = (0, 4).
VerificationReport check_thm_n_monotone_d(const RankTable& d_table);
VerificationReport check_thm_n_monotone_m2(const RankTable& m2_table);
/// c(m,n) >= c(m+2,n) for all 0 <= m, n <= T.
VerificationReport check_thm_m_monotone(Statistic statistic, const RankTable& table);
/// Ordinary-rank monotonicity in n (excluded: n < 12 or n = m + 2) and in m.
VerificationReport check_cm_ordinary(const RankTable& dyson_table);

/// For k_lo <= k <= k_hi: f_{0,k} + q - q^2 >= 0, f_{0,k}(0) = 1,
/// f_{1,k} - q^{k+2} >= 0 and f_{m,k} >= 0 for 2 <= m <= m_max.
VerificationReport check_fmk_nonneg(int k_lo, int k_hi, int m_max, int trunc);

/// q^a/(1+q^c) + q^b/((1-q^3)(1-q^4)) coefficientwise >= 0 for n >= b + 6,
/// over 0<=a<=a_max, 0<=b<=b_max, 1<=c<=c_max. Coefficients below b+6 are
/// swept too and land in the excluded set.
VerificationReport check_lemma_threshold(int a_max, int b_max, int c_max, int trunc);

/// (1 - q^{m+1}) / ((1 - q^2)(1 - q^3)) >= 0 for 1 <= m <= m_max.
VerificationReport check_lemma_ratio(int m_max, int trunc);

/// The a_{k,m}(n) / b_{k,m}(n) facts for 0 <= k <= k_max.
VerificationReport check_akm_lemma(int k_max, int trunc);

/// Entrywise equality of the two pipelines, plus m -> -m symmetry of both.
VerificationReport check_gf_vs_oracle(Statistic statistic, const RankTable& gf, const RankTable& oracle);

/// M2 adjudication: compares both conventions against the generating
/// function. Passes iff exactly one convention matches and it is `expected`.
VerificationReport check_gf_vs_oracle_m2(const RankTable& gf, const RankTable& oracle_floor,
                                         const RankTable& oracle_ceiling,
                                         M2Convention expected = M2Convention::ceiling);

/// first_difference_series(statistic, m) against the table's row difference, |m| <= m_range.
VerificationReport check_diff_identity(Statistic statistic, const RankTable& table, int m_range);

/// First location where the tables differ, ordered by n, then |m|, then m.
std::optional<std::pair<int, int>> first_mismatch(const RankTable& a, const RankTable& b);

/**
 * Tables at one truncation order, each built on first use and then shared
 * by every check.
 */
class Workspace {
 public:
  explicit Workspace(int max_n) : max_n_(max_n) {}

  int max_n() const { return max_n_; }
  const RankTable& gf(Statistic statistic);
  const RankTable& oracle(Statistic statistic, M2Convention convention = M2Convention::ceiling);

  /// The convention under which the M2 oracle reproduces the generating
  /// function at this order; throws std::runtime_error if not exactly one does.
  M2Convention m2_convention();

  /// Convention the M2 adjudication check expects to match: the one set
  /// explicitly, else the resolved one, else ceiling.
  M2Convention expected_m2_convention();
  void expect_m2_convention(M2Convention c) { expected_m2_ = c; }

 private:
  int max_n_;
  std::optional<M2Convention> expected_m2_;
  std::map<std::string, std::unique_ptr<RankTable>> tables_;
  std::optional<M2Convention> m2_convention_;
};

/// The convention that makes the M2 oracle match the generating function,
/// probed at a small fixed order.
M2Convention resolve_m2_convention(int probe_order = 10);

/// Check names accepted by run_check, in the order "all" runs them.
const std::vector<std::string>& check_names();

/// Runs one named check (or "all") with the default parameters for the
/// workspace order. Throws std::invalid_argument for unknown names.
std::vector<VerificationReport> run_check(std::string_view name, Workspace& ws);

}  // namespace overrank
