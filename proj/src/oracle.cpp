#include "ladm/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ladm {

namespace {

Complex branch_base(const ExactSolution& sol, double t) {
    const double a = 1.0 / std::pow(sol.amplitude, 4) - 1.0;
    if (std::abs(a) >= 1.0 && 4.0 * std::abs(t) >= std::numbers::pi) {
        throw std::domain_error(
            "exact_eval: w(t) crosses the branch cut of the principal fourth root; "
            "branch tracking is not supported");
    }
    const Complex w = 1.0 + a * std::exp(4.0 * kImag * t);
    if (w == Complex{}) {
        throw std::domain_error("exact_eval: w(t) = 0");
    }
    return w;
}

}  // namespace

ExactSolution::ExactSolution(double amplitude_, int sign_)
    : amplitude(amplitude_), sign(sign_) {
    if (amplitude == 0.0) {
        throw std::invalid_argument("ExactSolution: amplitude must be nonzero");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("ExactSolution: sign must be +1 or -1");
    }
}

Complex exact_eval(const ExactSolution& sol, double x, double t) {
    const Complex w = branch_base(sol, t);
    const Complex root = std::exp(-0.25 * std::log(w));  // principal branch
    return static_cast<double>(sol.sign) * Complex{std::cos(x), std::sin(x)} * root;
}

double exact_residual_fd(const ExactSolution& sol, double x, double t, double h) {
    if (h <= 0.0) {
        throw std::invalid_argument("exact_residual_fd: h must be positive");
    }
    const auto u = [&](double xx, double tt) { return exact_eval(sol, xx, tt); };
    const Complex u0 = u(x, t);
    const Complex ut = (u(x, t + h) - u(x, t - h)) / (2.0 * h);
    const Complex uxx = (u(x + h, t) - 2.0 * u0 + u(x - h, t)) / (h * h);
    const double sq_x = (std::norm(u(x + h, t)) - std::norm(u(x - h, t))) / (2.0 * h);
    const Complex defect = kImag * ut + uxx + 2.0 * sq_x * u0 + std::norm(u0) * std::norm(u0) * u0;
    return std::abs(defect);
}

ComparisonRow make_comparison_row(double x, double t, Complex ladm, Complex exact) {
    ComparisonRow row;
    row.x = x;
    row.t = t;
    row.ladm = ladm;
    row.exact = exact;
    row.err_re = std::abs(exact.real() - ladm.real());
    row.err_im = std::abs(exact.imag() - ladm.imag());
    row.err_abs = std::abs(exact - ladm);
    return row;
}

std::vector<ComparisonRow> compare_grid(const LadmRun& run, const ExactSolution& sol,
                                        std::span<const double> xs, double t) {
    if (xs.empty()) {
        throw std::invalid_argument("compare_grid: empty grid");
    }
    std::vector<ComparisonRow> rows;
    rows.reserve(xs.size());
    for (double x : xs) {
        rows.push_back(make_comparison_row(x, t, run.truncated.eval(x, t), exact_eval(sol, x, t)));
    }
    return rows;
}

}  // namespace ladm
