#include "ladm/grid.hpp"

#include <exception>
#include <stdexcept>

namespace ladm {

std::vector<double> linspace_grid(double start, double step, int count) {
    if (count < 1) {
        throw std::invalid_argument("linspace_grid: count must be >= 1");
    }
    if (count > 1 && step == 0.0) {
        throw std::invalid_argument("linspace_grid: step must be nonzero for count > 1");
    }
    std::vector<double> xs(count);
    for (int i = 0; i < count; ++i) {
        xs[i] = start + step * i;
    }
    return xs;
}

std::vector<Complex> eval_series_grid_serial(const TimeSeries& series,
                                             std::span<const double> xs,
                                             std::span<const double> ts) {
    std::vector<Complex> out(xs.size() * ts.size());
    for (std::size_t ti = 0; ti < ts.size(); ++ti) {
        for (std::size_t xi = 0; xi < xs.size(); ++xi) {
            out[ti * xs.size() + xi] = series.eval(xs[xi], ts[ti]);
        }
    }
    return out;
}

std::vector<Complex> eval_series_grid(const TimeSeries& series,
                                      std::span<const double> xs,
                                      std::span<const double> ts) {
    std::vector<Complex> out(xs.size() * ts.size());
    const long total = static_cast<long>(out.size());
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < total; ++idx) {
        const std::size_t ti = static_cast<std::size_t>(idx) / xs.size();
        const std::size_t xi = static_cast<std::size_t>(idx) % xs.size();
        out[idx] = series.eval(xs[xi], ts[ti]);
    }
    return out;
}

std::vector<ComparisonRow> comparison_rows_serial(const LadmRun& run,
                                                  const ExactSolution& sol,
                                                  std::span<const double> xs,
                                                  std::span<const double> ts) {
    if (xs.empty() || ts.empty()) {
        throw std::invalid_argument("comparison_rows: empty grid");
    }
    std::vector<ComparisonRow> rows(xs.size() * ts.size());
    for (std::size_t ti = 0; ti < ts.size(); ++ti) {
        for (std::size_t xi = 0; xi < xs.size(); ++xi) {
            rows[ti * xs.size() + xi] = make_comparison_row(
                xs[xi], ts[ti], run.truncated.eval(xs[xi], ts[ti]),
                exact_eval(sol, xs[xi], ts[ti]));
        }
    }
    return rows;
}

std::vector<ComparisonRow> comparison_rows(const LadmRun& run,
                                           const ExactSolution& sol,
                                           std::span<const double> xs,
                                           std::span<const double> ts) {
    if (xs.empty() || ts.empty()) {
        throw std::invalid_argument("comparison_rows: empty grid");
    }
    std::vector<ComparisonRow> rows(xs.size() * ts.size());
    const long total = static_cast<long>(rows.size());
    std::exception_ptr error;  // exceptions must not escape the omp region
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < total; ++idx) {
        try {
            const std::size_t ti = static_cast<std::size_t>(idx) / xs.size();
            const std::size_t xi = static_cast<std::size_t>(idx) % xs.size();
            rows[idx] = make_comparison_row(xs[xi], ts[ti],
                                            run.truncated.eval(xs[xi], ts[ti]),
                                            exact_eval(sol, xs[xi], ts[ti]));
        } catch (...) {
#pragma omp critical
            if (!error) {
                error = std::current_exception();
            }
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return rows;
}

}  // namespace ladm
