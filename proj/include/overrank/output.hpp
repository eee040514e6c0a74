#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "overrank/bivariate.hpp"
#include "overrank/series.hpp"
#include "overrank/verify.hpp"

namespace overrank {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// `m,n,count` header, nonzero rows sorted by n then m, LF line endings.
std::string table_to_csv(const RankTable& t);
/// [{"m":..,"n":..,"count":..}, ...] in the same order as the CSV.
Json table_rows_json(const RankTable& t);

/// Comma-separated coefficients of q^0..q^T on one line.
std::string series_to_csv(const QSeries& s);

Json report_to_json(const VerificationReport& r);
/// `check_id,passed,assertions,violations,unexpected` header plus one line per report.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

/// {schema_version, command, parameters, results}.
Json envelope(const std::string& command, Json parameters, Json results);

}  // namespace overrank
