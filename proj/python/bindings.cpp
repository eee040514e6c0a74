#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>

#include "overrank/output.hpp"
#include "overrank/partitions.hpp"
#include "overrank/rank_gf.hpp"
#include "overrank/verify.hpp"

namespace py = pybind11;
using namespace overrank;

namespace {

std::vector<Coeff> to_list(const QSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

std::vector<std::tuple<int, int, Coeff>> table_rows(const RankTable& t) {
  std::vector<std::tuple<int, int, Coeff>> rows;
  for (int n = 0; n <= t.max_n(); ++n)
    for (int m = t.m_lo(); m <= t.m_hi(); ++m)
      if (const Coeff c = t.at(m, n); c != 0) rows.emplace_back(m, n, c);
  return rows;
}

OverPartition make_overpartition(std::vector<int> parts, std::vector<int> overlined) {
  std::sort(overlined.begin(), overlined.end(), std::greater<>());
  OverPartition o{std::move(parts), std::move(overlined)};
  o.validate();
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact rank statistics for partitions and overpartitions";

  py::register_exception<NonUnitConstantTerm>(m, "NonUnitConstantTerm", PyExc_ValueError);
  py::register_exception<UnsupportedLevel>(m, "UnsupportedLevel", PyExc_ValueError);
  py::register_exception<IndexOutOfRange>(m, "IndexOutOfRange", PyExc_IndexError);
  py::register_exception<CoefficientOverflow>(m, "CoefficientOverflow", PyExc_OverflowError);

  py::class_<QSeries>(m, "QSeries")
      .def(py::init<std::vector<Coeff>>(), py::arg("coeffs"))
      .def_property_readonly("trunc_order", &QSeries::trunc_order)
      .def_property_readonly("coeffs", &to_list)
      .def("__getitem__", &QSeries::operator[])
      .def("__len__", [](const QSeries& s) { return s.trunc_order() + 1; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const QSeries& s) { return "QSeries(" + to_string(s) + ")"; });

  m.def("inverse", &inverse, py::arg("a"));
  m.def("finite_pochhammer", &finite_pochhammer, py::arg("c"), py::arg("exponent"), py::arg("step"),
        py::arg("count"), py::arg("trunc"));
  m.def("substitute_power", py::overload_cast<const QSeries&, int>(&substitute_power), py::arg("a"), py::arg("d"));
  m.def("shift", &shift, py::arg("a"), py::arg("s"));

  py::class_<RankTable>(m, "RankTable")
      .def_property_readonly("label", &RankTable::label)
      .def_property_readonly("max_n", &RankTable::max_n)
      .def("at", &RankTable::at, py::arg("m"), py::arg("n"))
      .def("column_sum", &RankTable::column_sum, py::arg("n"))
      .def("rows", &table_rows, "Nonzero (m, n, count) triples sorted by n then m")
      .def("to_csv", &table_to_csv)
      .def("__eq__", &RankTable::same_entries);

  m.def("gf_rank_table", [](const std::string& statistic, int max_n) {
    return gf_rank_table(parse_statistic(statistic), max_n);
  }, py::arg("statistic"), py::arg("max_n"));
  m.def("oracle_rank_table", [](const std::string& statistic, int max_n, const std::string& convention) {
    return oracle_rank_table(parse_statistic(statistic), max_n, parse_m2_convention(convention));
  }, py::arg("statistic"), py::arg("max_n"), py::arg("convention") = "ceiling");
  m.def("expand_rank_kernel", &expand_rank_kernel, py::arg("k"), py::arg("step"), py::arg("max_n"));
  m.def("akm_tables_by_recurrence", &akm_tables_by_recurrence, py::arg("k_max"), py::arg("max_n"));
  m.def("bkm_table", &bkm_table, py::arg("a_table"));

  m.def("count_partitions", &count_partitions, py::arg("n"));
  m.def("count_overpartitions", &count_overpartitions, py::arg("n"));
  m.def("overpartitions", [](int n) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    enumerate_overpartitions(n, [&](const OverPartition& o) { out.emplace_back(o.parts, o.overlined); });
    return out;
  }, py::arg("n"), "All overpartitions of n as (parts, overlined sizes) pairs");
  m.def("dyson_rank", [](std::vector<int> parts) { return dyson_rank(Partition{std::move(parts)}); }, py::arg("parts"));
  m.def("d_rank", [](std::vector<int> parts, std::vector<int> overlined) {
    return d_rank(make_overpartition(std::move(parts), std::move(overlined)));
  }, py::arg("parts"), py::arg("overlined") = std::vector<int>{});
  m.def("m2_rank", [](std::vector<int> parts, std::vector<int> overlined, const std::string& convention) {
    return m2_rank(make_overpartition(std::move(parts), std::move(overlined)), parse_m2_convention(convention));
  }, py::arg("parts"), py::arg("overlined") = std::vector<int>{}, py::arg("convention") = "ceiling");

  m.def("fmk", [](int mm, int k, int trunc, const std::string& method) {
    if (method == "definition") return to_list(fmk_by_definition(k, trunc).row(mm));
    if (method == "recurrence") return to_list(fmk_by_recurrence_from_zero(k, trunc).row(mm));
    if (method == "closed-form") return to_list(fmk_closed_form(mm, k, trunc));
    throw std::invalid_argument("unknown method: " + method);
  }, py::arg("m"), py::arg("k"), py::arg("trunc"), py::arg("method") = "definition");
  m.def("first_difference_series", [](const std::string& statistic, int mm, int trunc) {
    return to_list(first_difference_series(parse_statistic(statistic), mm, trunc));
  }, py::arg("statistic"), py::arg("m"), py::arg("trunc"));

  m.def("resolve_m2_convention", [](int probe) { return std::string(to_string(resolve_m2_convention(probe))); },
        py::arg("probe_order") = 10);
  m.def("check_names", &check_names);
  m.def("_verify_json", [](const std::string& check, int max_n) {
    Workspace ws(max_n);
    Json list = Json::array();
    for (const VerificationReport& r : run_check(check, ws)) list.push_back(report_to_json(r));
    return list.dump();
  }, py::arg("check"), py::arg("max_n"));
}
