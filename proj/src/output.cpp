#include "overrank/output.hpp"

#include <sstream>

namespace overrank {

namespace {

template <typename Visit>
void for_each_nonzero(const RankTable& t, Visit visit) {
  for (int n = 0; n <= t.max_n(); ++n)
    for (int m = t.m_lo(); m <= t.m_hi(); ++m)
      if (const Coeff c = t.at(m, n); c != 0) visit(m, n, c);
}

Json coords_json(const std::vector<std::pair<std::string, long>>& coords) {
  Json j = Json::object();
  for (const auto& [name, value] : coords) j[name] = value;
  return j;
}

Json violation_json(const Violation& v) {
  return Json{{"claim", v.where.claim},
              {"location", coords_json(v.where.coords)},
              {"lhs", v.lhs},
              {"rhs", v.rhs},
              {"excluded", v.excluded}};
}

}  // namespace

std::string table_to_csv(const RankTable& t) {
  std::ostringstream os;
  os << "m,n,count\n";
  for_each_nonzero(t, [&](int m, int n, Coeff c) { os << m << ',' << n << ',' << c << '\n'; });
  return os.str();
}

Json table_rows_json(const RankTable& t) {
  Json rows = Json::array();
  for_each_nonzero(t, [&](int m, int n, Coeff c) { rows.push_back(Json{{"m", m}, {"n", n}, {"count", c}}); });
  return rows;
}

std::string series_to_csv(const QSeries& s) {
  std::ostringstream os;
  for (int i = 0; i <= s.trunc_order(); ++i) os << (i ? "," : "") << s[i];
  os << '\n';
  return os.str();
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["check_id"] = r.check_id;
  j["range"] = coords_json(r.bounds);
  j["passed"] = r.passed();
  j["assertions"] = r.assertions;
  j["exclusion"] = r.exclusion;
  Json violations = Json::array();
  for (const Violation& v : r.violations) violations.push_back(violation_json(v));
  j["violations"] = std::move(violations);
  Json expected = Json::array();
  for (const Point& p : r.expected_exceptions) expected.push_back(Json{{"claim", p.claim}, {"location", coords_json(p.coords)}});
  j["expected_exceptions"] = std::move(expected);
  Json observations = Json::array();
  for (const Violation& v : r.observations) observations.push_back(violation_json(v));
  j["observations"] = std::move(observations);
  Json info = Json::object();
  for (const auto& [k, v] : r.info) info[k] = v;
  j["info"] = std::move(info);
  return j;
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "check_id,passed,assertions,violations,unexpected\n";
  for (const VerificationReport& r : reports)
    os << r.check_id << ',' << (r.passed() ? "true" : "false") << ',' << r.assertions << ',' << r.violations.size()
       << ',' << r.unexpected_count() << '\n';
  return os.str();
}

Json envelope(const std::string& command, Json parameters, Json results) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"parameters", std::move(parameters)},
              {"results", std::move(results)}};
}

}  // namespace overrank
