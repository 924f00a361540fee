#pragma once

#include <vector>

#include "ladm/harmonic_poly.hpp"

namespace ladm {

/// Polynomial in t whose coefficients are HarmonicPoly values. Entry m is the
/// coefficient of the plain monomial t^m (not t^m/m!). Trailing zero entries
/// are pruned, so degree() is well-defined.
class TimeSeries {
public:
    TimeSeries() = default;
    explicit TimeSeries(std::vector<HarmonicPoly> coeffs);

    /// t^0 series.
    static TimeSeries constant(HarmonicPoly p);
    /// p * t^power.
    static TimeSeries monomial(int power, HarmonicPoly p);
    /// The multiplicative identity 1 = e^{i0x} t^0.
    static TimeSeries one();

    const std::vector<HarmonicPoly>& coeffs() const { return coeffs_; }
    /// Coefficient of t^m (zero polynomial beyond the stored degree).
    const HarmonicPoly& coeff(int m) const;
    /// Degree in t; -1 for the zero series.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    double max_abs() const;

    Complex eval(double x, double t) const;

    TimeSeries& operator+=(const TimeSeries& rhs);
    TimeSeries& operator-=(const TimeSeries& rhs);
    TimeSeries& operator*=(Complex s);

    friend TimeSeries operator+(TimeSeries a, const TimeSeries& b) { return a += b; }
    friend TimeSeries operator-(TimeSeries a, const TimeSeries& b) { return a -= b; }
    friend TimeSeries operator*(const TimeSeries& a, const TimeSeries& b);
    friend TimeSeries operator*(TimeSeries a, Complex s) { return a *= s; }
    friend TimeSeries operator*(Complex s, TimeSeries a) { return a *= s; }

private:
    void trim();

    std::vector<HarmonicPoly> coeffs_;
};

TimeSeries conj(const TimeSeries& u);
TimeSeries dx(const TimeSeries& u);

/// Term-by-term integral from 0 to t: c t^m -> c t^{m+1}/(m+1). The constant
/// term of the result is zero.
TimeSeries integrate_time(const TimeSeries& u);

/// d/dt: c t^m -> m c t^{m-1}.
TimeSeries differentiate_time(const TimeSeries& u);

bool approx_equal(const TimeSeries& a, const TimeSeries& b, double tol);
double max_abs_diff(const TimeSeries& a, const TimeSeries& b);

}  // namespace ladm
