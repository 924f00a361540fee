#pragma once

#include <span>
#include <vector>

#include "ladm/solver.hpp"

namespace ladm {

/// Closed-form plane-wave reference solution
///     u(x,t) = sign * e^{ix} * (1 + (1/amplitude^4 - 1) e^{4it})^{-1/4}
/// with the principal branch of the fourth root.
struct ExactSolution {
    double amplitude;  // u(x,0) = sign * amplitude * e^{ix}
    int sign = +1;

    ExactSolution(double amplitude_, int sign_ = +1);
};

/// Throws std::domain_error when |1/amplitude^4 - 1| >= 1 and the path of
/// w(s) = 1 + (1/amplitude^4 - 1) e^{4is}, s in [0, t], reaches the branch
/// cut of the principal logarithm (first crossing at |t| = pi/4).
Complex exact_eval(const ExactSolution& sol, double x, double t);

/// |i u_t + u_xx + 2(|u|^2)_x u + |u|^4 u| of the closed form, estimated with
/// centered O(h^2) finite differences.
double exact_residual_fd(const ExactSolution& sol, double x, double t, double h);

struct ComparisonRow {
    double x = 0.0;
    double t = 0.0;
    Complex ladm;
    Complex exact;
    double err_re = 0.0;   // |Re exact - Re ladm|
    double err_im = 0.0;   // |Im exact - Im ladm|
    double err_abs = 0.0;  // |exact - ladm|
};

ComparisonRow make_comparison_row(double x, double t, Complex ladm, Complex exact);

/// One row per x at fixed t, in the given order.
std::vector<ComparisonRow> compare_grid(const LadmRun& run, const ExactSolution& sol,
                                        std::span<const double> xs, double t);

}  // namespace ladm
