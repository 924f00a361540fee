#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "ladm/time_series.hpp"

namespace ladm {

/// The four factor shapes a monomial nonlinearity may contain. DxConjU is
/// d/dx applied to the conjugate series.
enum class Factor { U, ConjU, DxU, DxConjU };

TimeSeries apply_factor(Factor f, const TimeSeries& u);

/// coeff * product of factors, e.g. 2i * u * u * conj(u)_x.
struct NonlinearMonomial {
    Complex coeff;
    std::vector<Factor> factors;
};

struct NonlinearOperator {
    std::vector<NonlinearMonomial> monomials;
};

/// i u^3 conj(u)^2 + 2i u^2 conj(u)_x + 2i u_x u conj(u), the three-way split
/// of i [2(|u|^2)_x + |u|^4] u.
NonlinearOperator kundu_eckhaus_nonlinearity();

/// Direct substitution of a single series into the operator (no decomposition).
TimeSeries apply_nonlinear(const NonlinearOperator& op, const TimeSeries& u);

// ---------------------------------------------------------------------------
// Adomian polynomials.
//
// For a d-factor monomial, A_n is the coefficient of lambda^n in
// N(sum_i lambda^i u_i): a sum over index tuples (i_1..i_d) with sum n of the
// product of factor_j applied to u_{i_j}. Tuples are enumerated in
// lexicographic order and collected into canonical symbolic terms first.
// ---------------------------------------------------------------------------

/// One collected term: exponent of each (factor, iterate index) pair plus the
/// number of index tuples that produced it.
struct SymbolicTerm {
    std::map<std::pair<Factor, int>, int> powers;
    long multiplicity = 0;
};

/// Canonically ordered collected terms of A_n for one monomial (the monomial
/// coefficient is not folded in).
std::vector<SymbolicTerm> symbolic_adomian_terms(const NonlinearMonomial& mono, int n);

/// Number of enumerated index tuples at order n for d factors: C(n+d-1, d-1).
long index_tuple_count(int factor_count, int n);

/// A_n for a single monomial. Throws std::invalid_argument when fewer than
/// n+1 iterates are supplied.
TimeSeries adomian_polynomial(const NonlinearMonomial& mono,
                              std::span<const TimeSeries> iterates, int n);

/// A_n for a sum of monomials.
TimeSeries adomian_polynomial(const NonlinearOperator& op,
                              std::span<const TimeSeries> iterates, int n);

struct LambdaConsistencyReport {
    int max_order = -1;
    std::vector<double> per_order;  // max coefficient discrepancy at each n
    double max_discrepancy = 0.0;

    bool passed(double tol) const { return max_discrepancy < tol; }
};

/// Expands N(sum_{i<=N} lambda^i u_i) as a polynomial in a formal variable
/// lambda and compares the coefficient of lambda^n against the generated A_n
/// for every n <= N.
LambdaConsistencyReport lambda_consistency_check(const NonlinearOperator& op,
                                                 std::span<const TimeSeries> iterates,
                                                 int max_order);

}  // namespace ladm
