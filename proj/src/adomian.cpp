#include "ladm/adomian.hpp"

#include <stdexcept>

namespace ladm {

TimeSeries apply_factor(Factor f, const TimeSeries& u) {
    switch (f) {
        case Factor::U:
            return u;
        case Factor::ConjU:
            return conj(u);
        case Factor::DxU:
            return dx(u);
        case Factor::DxConjU:
            return dx(conj(u));
    }
    throw std::logic_error("apply_factor: bad factor");
}

NonlinearOperator kundu_eckhaus_nonlinearity() {
    const Complex two_i = 2.0 * kImag;
    return NonlinearOperator{{
        {kImag, {Factor::U, Factor::U, Factor::U, Factor::ConjU, Factor::ConjU}},
        {two_i, {Factor::U, Factor::U, Factor::DxConjU}},
        {two_i, {Factor::DxU, Factor::U, Factor::ConjU}},
    }};
}

TimeSeries apply_nonlinear(const NonlinearOperator& op, const TimeSeries& u) {
    TimeSeries total;
    for (const auto& mono : op.monomials) {
        TimeSeries prod = TimeSeries::one();
        for (Factor f : mono.factors) {
            prod = prod * apply_factor(f, u);
        }
        total += prod * mono.coeff;
    }
    return total;
}

namespace {

// Visits index tuples (i_1..i_d) with sum n in lexicographic order.
template <typename Visit>
void for_each_tuple(int d, int n, std::vector<int>& tuple, const Visit& visit) {
    if (d == 1) {
        tuple.push_back(n);
        visit(tuple);
        tuple.pop_back();
        return;
    }
    for (int first = 0; first <= n; ++first) {
        tuple.push_back(first);
        for_each_tuple(d - 1, n - first, tuple, visit);
        tuple.pop_back();
    }
}

}  // namespace

std::vector<SymbolicTerm> symbolic_adomian_terms(const NonlinearMonomial& mono, int n) {
    const int d = static_cast<int>(mono.factors.size());
    std::map<std::map<std::pair<Factor, int>, int>, long> collected;
    std::vector<int> tuple;
    tuple.reserve(d);
    for_each_tuple(d, n, tuple, [&](const std::vector<int>& idx) {
        std::map<std::pair<Factor, int>, int> key;
        for (int slot = 0; slot < d; ++slot) {
            ++key[{mono.factors[slot], idx[slot]}];
        }
        ++collected[key];
    });
    std::vector<SymbolicTerm> out;
    out.reserve(collected.size());
    for (auto& [powers, mult] : collected) {
        out.push_back(SymbolicTerm{powers, mult});
    }
    return out;
}

long index_tuple_count(int factor_count, int n) {
    // C(n + d - 1, d - 1)
    long c = 1;
    for (int j = 1; j <= factor_count - 1; ++j) {
        c = c * (n + j) / j;
    }
    return c;
}

TimeSeries adomian_polynomial(const NonlinearMonomial& mono,
                              std::span<const TimeSeries> iterates, int n) {
    if (n < 0) {
        throw std::invalid_argument("adomian_polynomial: negative order");
    }
    if (static_cast<int>(iterates.size()) < n + 1) {
        throw std::invalid_argument("adomian_polynomial: need iterates u_0..u_n");
    }
    TimeSeries total;
    for (const auto& term : symbolic_adomian_terms(mono, n)) {
        TimeSeries prod = TimeSeries::one();
        for (const auto& [factor_index, power] : term.powers) {
            const TimeSeries applied = apply_factor(factor_index.first, iterates[factor_index.second]);
            for (int p = 0; p < power; ++p) {
                prod = prod * applied;
            }
        }
        total += prod * (mono.coeff * static_cast<double>(term.multiplicity));
    }
    return total;
}

TimeSeries adomian_polynomial(const NonlinearOperator& op,
                              std::span<const TimeSeries> iterates, int n) {
    TimeSeries total;
    for (const auto& mono : op.monomials) {
        total += adomian_polynomial(mono, iterates, n);
    }
    return total;
}

namespace {

using LambdaPoly = std::vector<TimeSeries>;  // index = power of lambda

LambdaPoly lambda_mul(const LambdaPoly& a, const LambdaPoly& b, int max_order) {
    LambdaPoly out(max_order + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(max_order); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

}  // namespace

LambdaConsistencyReport lambda_consistency_check(const NonlinearOperator& op,
                                                 std::span<const TimeSeries> iterates,
                                                 int max_order) {
    if (max_order < 0) {
        throw std::invalid_argument("lambda_consistency_check: negative order");
    }
    if (static_cast<int>(iterates.size()) < max_order + 1) {
        throw std::invalid_argument("lambda_consistency_check: need iterates u_0..u_N");
    }

    LambdaPoly expansion(max_order + 1);
    for (const auto& mono : op.monomials) {
        LambdaPoly prod(1, TimeSeries::one());
        for (Factor f : mono.factors) {
            LambdaPoly factor_poly(max_order + 1);
            for (int i = 0; i <= max_order; ++i) {
                factor_poly[i] = apply_factor(f, iterates[i]);
            }
            prod = lambda_mul(prod, factor_poly, max_order);
        }
        for (int i = 0; i <= max_order && i < static_cast<int>(prod.size()); ++i) {
            expansion[i] += prod[i] * mono.coeff;
        }
    }

    LambdaConsistencyReport report;
    report.max_order = max_order;
    report.per_order.resize(max_order + 1);
    for (int n = 0; n <= max_order; ++n) {
        const TimeSeries generated = adomian_polynomial(op, iterates, n);
        report.per_order[n] = max_abs_diff(expansion[n], generated);
        report.max_discrepancy = std::max(report.max_discrepancy, report.per_order[n]);
    }
    return report;
}

}  // namespace ladm
