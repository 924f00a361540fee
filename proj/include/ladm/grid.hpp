#pragma once

#include <span>
#include <vector>

#include "ladm/oracle.hpp"
#include "ladm/time_series.hpp"

namespace ladm {

std::vector<double> linspace_grid(double start, double step, int count);

// Dense evaluation over the (t, x) product grid, t-major: out[ti*nx + xi].
// The OpenMP kernel computes each element independently, so its output is
// bit-identical to the serial reference.
std::vector<Complex> eval_series_grid_serial(const TimeSeries& series,
                                             std::span<const double> xs,
                                             std::span<const double> ts);
std::vector<Complex> eval_series_grid(const TimeSeries& series,
                                      std::span<const double> xs,
                                      std::span<const double> ts);

std::vector<ComparisonRow> comparison_rows_serial(const LadmRun& run,
                                                  const ExactSolution& sol,
                                                  std::span<const double> xs,
                                                  std::span<const double> ts);
std::vector<ComparisonRow> comparison_rows(const LadmRun& run,
                                           const ExactSolution& sol,
                                           std::span<const double> xs,
                                           std::span<const double> ts);

}  // namespace ladm
