#include "ladm/harmonic_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ladm {

namespace {

bool is_finite(Complex c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
}

}  // namespace

HarmonicPoly::HarmonicPoly(std::map<int, Complex> terms) : terms_(std::move(terms)) {
    for (const auto& [k, c] : terms_) {
        if (!is_finite(c)) {
            throw std::invalid_argument("HarmonicPoly: non-finite coefficient");
        }
    }
    normalize();
}

HarmonicPoly HarmonicPoly::harmonic(int k, Complex c) {
    HarmonicPoly p;
    if (!is_finite(c)) {
        throw std::invalid_argument("HarmonicPoly: non-finite coefficient");
    }
    if (c != Complex{}) {
        p.terms_.emplace(k, c);
    }
    return p;
}

Complex HarmonicPoly::coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Complex{} : it->second;
}

double HarmonicPoly::max_abs() const {
    double top = 0.0;
    for (const auto& [k, c] : terms_) {
        top = std::max(top, std::abs(c));
    }
    return top;
}

Complex HarmonicPoly::eval(double x) const {
    Complex acc{};
    for (const auto& [k, c] : terms_) {
        acc += c * Complex{std::cos(k * x), std::sin(k * x)};
    }
    return acc;
}

void HarmonicPoly::normalize() {
    const double cut = max_abs() * kRelativePruneTol;
    std::erase_if(terms_, [cut](const auto& kv) { return std::abs(kv.second) <= cut; });
}

HarmonicPoly& HarmonicPoly::operator+=(const HarmonicPoly& rhs) {
    for (const auto& [k, c] : rhs.terms_) {
        terms_[k] += c;
    }
    normalize();
    return *this;
}

HarmonicPoly& HarmonicPoly::operator-=(const HarmonicPoly& rhs) {
    for (const auto& [k, c] : rhs.terms_) {
        terms_[k] -= c;
    }
    normalize();
    return *this;
}

HarmonicPoly operator*(const HarmonicPoly& a, const HarmonicPoly& b) {
    HarmonicPoly out;
    for (const auto& [j, cj] : a.terms_) {
        for (const auto& [k, ck] : b.terms_) {
            out.terms_[j + k] += cj * ck;
        }
    }
    out.normalize();
    return out;
}

HarmonicPoly& HarmonicPoly::operator*=(const HarmonicPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

HarmonicPoly& HarmonicPoly::operator*=(Complex s) {
    for (auto& [k, c] : terms_) {
        c *= s;
    }
    normalize();
    return *this;
}

HarmonicPoly conj(const HarmonicPoly& p) {
    std::map<int, Complex> out;
    for (const auto& [k, c] : p.terms()) {
        out.emplace(-k, std::conj(c));
    }
    return HarmonicPoly{std::move(out)};
}

HarmonicPoly dx(const HarmonicPoly& p) {
    std::map<int, Complex> out;
    for (const auto& [k, c] : p.terms()) {
        if (k != 0) {
            out.emplace(k, kImag * static_cast<double>(k) * c);
        }
    }
    return HarmonicPoly{std::move(out)};
}

double max_abs_diff(const HarmonicPoly& a, const HarmonicPoly& b) {
    double worst = 0.0;
    for (const auto& [k, c] : a.terms()) {
        worst = std::max(worst, std::abs(c - b.coeff(k)));
    }
    for (const auto& [k, c] : b.terms()) {
        worst = std::max(worst, std::abs(c - a.coeff(k)));
    }
    return worst;
}

bool approx_equal(const HarmonicPoly& a, const HarmonicPoly& b, double tol) {
    return max_abs_diff(a, b) <= tol;
}

}  // namespace ladm
