#pragma once

#include <span>
#include <vector>

#include "ladm/adomian.hpp"
#include "ladm/time_series.hpp"

namespace ladm {

/// coeff * (d/dx)^derivative_order.
struct LinearTerm {
    int derivative_order;
    Complex coeff;
};

struct EquationModel {
    std::vector<LinearTerm> linear;
    NonlinearOperator nonlinear;
};

/// u_t = i u_xx + i [2(|u|^2)_x + |u|^4] u.
EquationModel kundu_eckhaus();

/// beta * e^{i*harmonic*x} as a t^0 series. Throws std::invalid_argument for
/// beta == 0.
TimeSeries initial_condition(double beta, int harmonic);

TimeSeries apply_linear(const EquationModel& model, const TimeSeries& u);

/// u_{n+1} = integral_0^t (R u_n + A_n(u_0..u_n)). `iterates` must hold
/// u_0..u_n.
TimeSeries ladm_step(const EquationModel& model,
                     std::span<const TimeSeries> iterates, int n);

struct LadmRun {
    double beta = 0.0;
    int harmonic = 1;
    int correction_terms = 0;            // k
    std::vector<TimeSeries> iterates;    // u_0..u_k
    TimeSeries truncated;                // sum of iterates
};

LadmRun run(const EquationModel& model, double beta, int harmonic, int correction_terms);

/// PDE defect d/dt u - R u - N u, with the nonlinearity substituted directly
/// (no Adomian decomposition), so the result is an independent check of the
/// decomposition path.
TimeSeries residual(const EquationModel& model, const TimeSeries& u);

/// Max coefficient magnitude of `series` per power of t (index = t order).
std::vector<double> order_max_abs(const TimeSeries& series);

}  // namespace ladm
