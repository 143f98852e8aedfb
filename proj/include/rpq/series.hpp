#pragma once

#include <algorithm>
#include <vector>

#include "rpq/common.hpp"

namespace rpq {

// Truncated power series around 0; coef[n] multiplies z^n.  Binary operations
// align to the shorter truncation order, since coefficients beyond it are not
// trustworthy for either operand.
struct PowerSeries {
    std::vector<cplx> coef;

    PowerSeries() = default;
    explicit PowerSeries(std::vector<cplx> c) : coef(std::move(c)) {}

    static PowerSeries zero(int order) {
        return PowerSeries(std::vector<cplx>(order + 1, cplx(0.0)));
    }
    static PowerSeries monomial(int degree, cplx scale = cplx(1.0)) {
        PowerSeries s = zero(degree);
        s.coef[degree] = scale;
        return s;
    }

    int order() const { return static_cast<int>(coef.size()) - 1; }

    cplx operator()(cplx z) const {
        cplx acc(0.0);
        for (auto it = coef.rbegin(); it != coef.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    // f(z) -> f(s z)
    PowerSeries dilated(cplx s) const {
        PowerSeries out = *this;
        cplx sn(1.0);
        for (auto& c : out.coef) {
            c *= sn;
            sn *= s;
        }
        return out;
    }

    // multiplication by z (exact index shift)
    PowerSeries shifted_up() const {
        PowerSeries out = zero(order() + 1);
        for (int n = 0; n <= order(); ++n) out.coef[n + 1] = coef[n];
        return out;
    }

    // zero-extension to a higher truncation order (exact for polynomials)
    PowerSeries padded(int new_order) const {
        if (new_order < order()) throw RangeError("padded() cannot shrink a series");
        PowerSeries out = *this;
        out.coef.resize(new_order + 1, cplx(0.0));
        return out;
    }

    double max_abs_coef() const {
        double m = 0.0;
        for (const auto& c : coef) m = std::max(m, std::abs(c));
        return m;
    }
};

inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries out = PowerSeries::zero(n);
    for (int i = 0; i <= n; ++i) out.coef[i] = a.coef[i] + b.coef[i];
    return out;
}

inline PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries out = PowerSeries::zero(n);
    for (int i = 0; i <= n; ++i) out.coef[i] = a.coef[i] - b.coef[i];
    return out;
}

inline PowerSeries operator*(const PowerSeries& a, cplx s) {
    PowerSeries out = a;
    for (auto& c : out.coef) c *= s;
    return out;
}

inline PowerSeries operator*(cplx s, const PowerSeries& a) { return a * s; }

inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries out = PowerSeries::zero(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n && j <= b.order(); ++j)
            out.coef[i + j] += a.coef[i] * b.coef[j];
    return out;
}

inline double max_abs_diff(const PowerSeries& a, const PowerSeries& b) {
    return (a - b).max_abs_coef();
}

// Per-coefficient relative gap; meaningful even when coefficient magnitudes
// span many decades across orders.  `upto` caps the compared order, so that a
// shift or derivative of a truncated series is judged on the window where the
// operands are both defined.
inline double max_rel_diff(const PowerSeries& a, const PowerSeries& b, int upto = -1) {
    double worst = 0.0;
    const int top = upto >= 0 ? upto : std::max(a.order(), b.order());
    for (int n = 0; n <= top; ++n) {
        const cplx av = n <= a.order() ? a.coef[n] : cplx(0.0);
        const cplx bv = n <= b.order() ? b.coef[n] : cplx(0.0);
        worst = std::max(worst, std::abs(av - bv) / std::max(1.0, std::abs(bv)));
    }
    return worst;
}

} // namespace rpq
