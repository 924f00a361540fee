#pragma once

#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "ladm/oracle.hpp"
#include "ladm/solver.hpp"
#include "ladm/time_series.hpp"

namespace ladm {

/// value formatted with 12 significant digits
std::string format_number(double v);

/// Series tree: list of {power_t, terms: [{k, re, im}]}, powers ascending,
/// k ascending, empty powers skipped.
nlohmann::json series_to_json(const TimeSeries& series);
TimeSeries series_from_json(const nlohmann::json& j);

nlohmann::json run_to_json(const LadmRun& run);
LadmRun run_from_json(const nlohmann::json& j);

enum class TablePart { Real, Imag };

/// Full CSV: x,t,re_ladm,im_ladm,re_exact,im_exact,err_re,err_im,err_abs.
void write_comparison_csv(std::ostream& out, std::span<const ComparisonRow> rows);

/// Restriction to one part: x,t,{re|im}_ladm,{re|im}_exact,err_{re|im}.
void write_comparison_csv(std::ostream& out, std::span<const ComparisonRow> rows,
                          TablePart part);

nlohmann::json comparison_rows_to_json(std::span<const ComparisonRow> rows);

nlohmann::json residual_report_json(const LadmRun& run, const EquationModel& model);

}  // namespace ladm
