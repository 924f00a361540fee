#include "ladm/time_series.hpp"

#include <algorithm>
#include <utility>

namespace ladm {

namespace {
const HarmonicPoly kZeroPoly{};
}

TimeSeries::TimeSeries(std::vector<HarmonicPoly> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

TimeSeries TimeSeries::constant(HarmonicPoly p) {
    return TimeSeries{{std::move(p)}};
}

TimeSeries TimeSeries::monomial(int power, HarmonicPoly p) {
    std::vector<HarmonicPoly> coeffs(power + 1);
    coeffs[power] = std::move(p);
    return TimeSeries{std::move(coeffs)};
}

TimeSeries TimeSeries::one() {
    return constant(HarmonicPoly::harmonic(0, Complex{1.0, 0.0}));
}

const HarmonicPoly& TimeSeries::coeff(int m) const {
    if (m < 0 || m >= static_cast<int>(coeffs_.size())) {
        return kZeroPoly;
    }
    return coeffs_[m];
}

double TimeSeries::max_abs() const {
    double top = 0.0;
    for (const auto& p : coeffs_) {
        top = std::max(top, p.max_abs());
    }
    return top;
}

Complex TimeSeries::eval(double x, double t) const {
    // Horner in t; direct complex exponentials in x.
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + it->eval(x);
    }
    return acc;
}

void TimeSeries::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

TimeSeries& TimeSeries::operator+=(const TimeSeries& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t m = 0; m < rhs.coeffs_.size(); ++m) {
        coeffs_[m] += rhs.coeffs_[m];
    }
    trim();
    return *this;
}

TimeSeries& TimeSeries::operator-=(const TimeSeries& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t m = 0; m < rhs.coeffs_.size(); ++m) {
        coeffs_[m] -= rhs.coeffs_[m];
    }
    trim();
    return *this;
}

TimeSeries& TimeSeries::operator*=(Complex s) {
    for (auto& p : coeffs_) {
        p *= s;
    }
    trim();
    return *this;
}

TimeSeries operator*(const TimeSeries& a, const TimeSeries& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<HarmonicPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t m = 0; m < a.coeffs_.size(); ++m) {
        for (std::size_t n = 0; n < b.coeffs_.size(); ++n) {
            out[m + n] += a.coeffs_[m] * b.coeffs_[n];
        }
    }
    return TimeSeries{std::move(out)};
}

TimeSeries conj(const TimeSeries& u) {
    std::vector<HarmonicPoly> out;
    out.reserve(u.coeffs().size());
    for (const auto& p : u.coeffs()) {
        out.push_back(conj(p));
    }
    return TimeSeries{std::move(out)};
}

TimeSeries dx(const TimeSeries& u) {
    std::vector<HarmonicPoly> out;
    out.reserve(u.coeffs().size());
    for (const auto& p : u.coeffs()) {
        out.push_back(dx(p));
    }
    return TimeSeries{std::move(out)};
}

TimeSeries integrate_time(const TimeSeries& u) {
    if (u.is_zero()) {
        return {};
    }
    std::vector<HarmonicPoly> out(u.coeffs().size() + 1);
    for (std::size_t m = 0; m < u.coeffs().size(); ++m) {
        out[m + 1] = u.coeffs()[m] * Complex{1.0 / (m + 1), 0.0};
    }
    return TimeSeries{std::move(out)};
}

TimeSeries differentiate_time(const TimeSeries& u) {
    if (u.degree() < 1) {
        return {};
    }
    std::vector<HarmonicPoly> out(u.coeffs().size() - 1);
    for (std::size_t m = 1; m < u.coeffs().size(); ++m) {
        out[m - 1] = u.coeffs()[m] * Complex{static_cast<double>(m), 0.0};
    }
    return TimeSeries{std::move(out)};
}

double max_abs_diff(const TimeSeries& a, const TimeSeries& b) {
    double worst = 0.0;
    const int top = std::max(a.degree(), b.degree());
    for (int m = 0; m <= top; ++m) {
        worst = std::max(worst, max_abs_diff(a.coeff(m), b.coeff(m)));
    }
    return worst;
}

bool approx_equal(const TimeSeries& a, const TimeSeries& b, double tol) {
    return max_abs_diff(a, b) <= tol;
}

}  // namespace ladm
