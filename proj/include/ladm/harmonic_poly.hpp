#pragma once

#include <complex>
#include <map>

namespace ladm {

using Complex = std::complex<double>;

inline constexpr Complex kImag{0.0, 1.0};

/// Finite trigonometric polynomial  sum_k c_k e^{ikx}  with signed integer
/// harmonics k and complex coefficients. Zero coefficients are never stored;
/// after every arithmetic operation, coefficients smaller than 1e-14 times
/// the largest coefficient magnitude of the result are pruned.
class HarmonicPoly {
public:
    static constexpr double kRelativePruneTol = 1e-14;

    HarmonicPoly() = default;
    explicit HarmonicPoly(std::map<int, Complex> terms);

    /// Single term c * e^{ikx}.
    static HarmonicPoly harmonic(int k, Complex c);

    const std::map<int, Complex>& terms() const { return terms_; }
    Complex coeff(int k) const;
    bool is_zero() const { return terms_.empty(); }

    /// Largest coefficient magnitude (0 for the zero polynomial).
    double max_abs() const;

    Complex eval(double x) const;

    HarmonicPoly& operator+=(const HarmonicPoly& rhs);
    HarmonicPoly& operator-=(const HarmonicPoly& rhs);
    HarmonicPoly& operator*=(const HarmonicPoly& rhs);
    HarmonicPoly& operator*=(Complex s);

    friend HarmonicPoly operator+(HarmonicPoly a, const HarmonicPoly& b) { return a += b; }
    friend HarmonicPoly operator-(HarmonicPoly a, const HarmonicPoly& b) { return a -= b; }
    friend HarmonicPoly operator*(const HarmonicPoly& a, const HarmonicPoly& b);
    friend HarmonicPoly operator*(HarmonicPoly a, Complex s) { return a *= s; }
    friend HarmonicPoly operator*(Complex s, HarmonicPoly a) { return a *= s; }

private:
    void normalize();

    std::map<int, Complex> terms_;
};

/// k -> -k with conjugated coefficients; represents conj(p(x)) for real x.
HarmonicPoly conj(const HarmonicPoly& p);

/// d/dx: coefficient of harmonic k is multiplied by ik.
HarmonicPoly dx(const HarmonicPoly& p);

/// Coefficient-wise comparison, absolute tolerance over the union of supports.
bool approx_equal(const HarmonicPoly& a, const HarmonicPoly& b, double tol);

/// Largest coefficient-wise difference.
double max_abs_diff(const HarmonicPoly& a, const HarmonicPoly& b);

}  // namespace ladm
