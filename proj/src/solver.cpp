#include "ladm/solver.hpp"

#include <stdexcept>

namespace ladm {

EquationModel kundu_eckhaus() {
    return EquationModel{{{2, kImag}}, kundu_eckhaus_nonlinearity()};
}

TimeSeries initial_condition(double beta, int harmonic) {
    if (beta == 0.0) {
        throw std::invalid_argument("initial_condition: beta must be nonzero");
    }
    return TimeSeries::constant(HarmonicPoly::harmonic(harmonic, Complex{beta, 0.0}));
}

TimeSeries apply_linear(const EquationModel& model, const TimeSeries& u) {
    TimeSeries total;
    for (const auto& term : model.linear) {
        TimeSeries derived = u;
        for (int j = 0; j < term.derivative_order; ++j) {
            derived = dx(derived);
        }
        total += derived * term.coeff;
    }
    return total;
}

TimeSeries ladm_step(const EquationModel& model,
                     std::span<const TimeSeries> iterates, int n) {
    if (static_cast<int>(iterates.size()) < n + 1) {
        throw std::invalid_argument("ladm_step: need iterates u_0..u_n");
    }
    const TimeSeries rhs = apply_linear(model, iterates[n]) + adomian_polynomial(model.nonlinear, iterates, n);
    return integrate_time(rhs);
}

LadmRun run(const EquationModel& model, double beta, int harmonic, int correction_terms) {
    if (correction_terms < 0) {
        throw std::invalid_argument("run: correction term count must be >= 0");
    }
    LadmRun result;
    result.beta = beta;
    result.harmonic = harmonic;
    result.correction_terms = correction_terms;
    result.iterates.reserve(correction_terms + 1);
    result.iterates.push_back(initial_condition(beta, harmonic));
    for (int n = 0; n < correction_terms; ++n) {
        result.iterates.push_back(ladm_step(model, result.iterates, n));
    }
    for (const auto& u : result.iterates) {
        result.truncated += u;
    }
    return result;
}

TimeSeries residual(const EquationModel& model, const TimeSeries& u) {
    return differentiate_time(u) - apply_linear(model, u) - apply_nonlinear(model.nonlinear, u);
}

std::vector<double> order_max_abs(const TimeSeries& series) {
    std::vector<double> out(series.degree() + 1, 0.0);
    for (int m = 0; m <= series.degree(); ++m) {
        out[m] = series.coeff(m).max_abs();
    }
    return out;
}

}  // namespace ladm
