#pragma once

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "rpq/calculus.hpp"
#include "rpq/common.hpp"
#include "rpq/numbers.hpp"
#include "rpq/series.hpp"
#include "rpq/spec.hpp"

namespace rpq {

namespace detail {

// Adaptive term summation: `next(n, t_n)` yields term n+1.  Settles after five
// consecutive negligible terms; sustained growth means the point lies outside
// the domain of convergence.
template <class NextTerm>
cplx sum_adaptive(cplx first, NextTerm next, const SeriesEvalConfig& cfg) {
    cplx acc(0.0), t = first;
    double prev_mag = std::numeric_limits<double>::infinity();
    int calm = 0, growing = 0;
    for (int n = 0; n < cfg.max_terms; ++n) {
        acc += t;
        const double mag = std::abs(t);
        if (mag <= cfg.abs_tol * std::max(1.0, std::abs(acc))) {
            if (++calm >= 5) return acc;
        } else {
            calm = 0;
        }
        if (mag > 1e150)
            throw OutsideRadius("series terms overflow; argument outside convergence domain");
        if (n > 20 && mag >= cfg.ratio_guard * prev_mag) {
            if (++growing >= 10)
                throw OutsideRadius("series terms stopped decaying; argument outside "
                                    "convergence domain");
        } else {
            growing = 0;
        }
        prev_mag = mag;
        t = next(n, t);
    }
    throw NonConvergent("series did not settle within " + std::to_string(cfg.max_terms) +
                        " terms");
}

inline double nonzero_number(const DeformationSpec& spec, int n) {
    const double r = rpq_number(spec, n);
    if (r == 0.0) throw FiniteDimensional(n);
    return r;
}

} // namespace detail

// ---- deformed exponential ---------------------------------------------------

inline PowerSeries rpq_exp_series(const DeformationSpec& spec, int order) {
    PowerSeries s = PowerSeries::zero(order);
    s.coef[0] = 1.0;
    for (int n = 1; n <= order; ++n)
        s.coef[n] = s.coef[n - 1] / detail::nonzero_number(spec, n);
    return s;
}

inline cplx rpq_exp(const DeformationSpec& spec, cplx z,
                    const SeriesEvalConfig& cfg = {}) {
    return detail::sum_adaptive(
        cplx(1.0), [&](int n, cplx t) { return t * z / detail::nonzero_number(spec, n + 1); },
        cfg);
}

// Limit behaviour of the numbers, which sets the radius of convergence of the
// deformed exponential: a finite limit, +inf for unbounded growth, 0 for decay.
inline double radius_estimate(const DeformationSpec& spec, int scan = 400) {
    double prev = std::abs(rpq_number(spec, scan - 1));
    double last = std::abs(rpq_number(spec, scan));
    if (std::abs(last - prev) <= 1e-8 * std::max(1.0, std::abs(last))) return last;
    if (last < 1e-12) return 0.0;
    return std::numeric_limits<double>::infinity();
}

// ---- deformed trigonometric / hyperbolic functions --------------------------

inline PowerSeries rpq_cos_series(const DeformationSpec& spec, int order,
                                  bool hyperbolic = false) {
    PowerSeries s = PowerSeries::zero(order);
    s.coef[0] = 1.0;
    for (int n = 2; n <= order; n += 2)
        s.coef[n] = (hyperbolic ? 1.0 : -1.0) * s.coef[n - 2] /
                    (detail::nonzero_number(spec, n - 1) * detail::nonzero_number(spec, n));
    return s;
}

inline PowerSeries rpq_sin_series(const DeformationSpec& spec, int order,
                                  bool hyperbolic = false) {
    PowerSeries s = PowerSeries::zero(order);
    if (order >= 1) s.coef[1] = 1.0 / detail::nonzero_number(spec, 1);
    for (int n = 3; n <= order; n += 2)
        s.coef[n] = (hyperbolic ? 1.0 : -1.0) * s.coef[n - 2] /
                    (detail::nonzero_number(spec, n - 1) * detail::nonzero_number(spec, n));
    return s;
}

inline cplx rpq_cos(const DeformationSpec& spec, cplx z, const SeriesEvalConfig& cfg = {}) {
    return detail::sum_adaptive(
        cplx(1.0),
        [&](int k, cplx t) {
            return -t * z * z /
                   (detail::nonzero_number(spec, 2 * k + 1) *
                    detail::nonzero_number(spec, 2 * k + 2));
        },
        cfg);
}

inline cplx rpq_sin(const DeformationSpec& spec, cplx z, const SeriesEvalConfig& cfg = {}) {
    return detail::sum_adaptive(
        z / detail::nonzero_number(spec, 1),
        [&](int k, cplx t) {
            return -t * z * z /
                   (detail::nonzero_number(spec, 2 * k + 2) *
                    detail::nonzero_number(spec, 2 * k + 3));
        },
        cfg);
}

inline cplx rpq_cosh(const DeformationSpec& spec, cplx z, const SeriesEvalConfig& cfg = {}) {
    return detail::sum_adaptive(
        cplx(1.0),
        [&](int k, cplx t) {
            return t * z * z /
                   (detail::nonzero_number(spec, 2 * k + 1) *
                    detail::nonzero_number(spec, 2 * k + 2));
        },
        cfg);
}

inline cplx rpq_sinh(const DeformationSpec& spec, cplx z, const SeriesEvalConfig& cfg = {}) {
    return detail::sum_adaptive(
        z / detail::nonzero_number(spec, 1),
        [&](int k, cplx t) {
            return t * z * z /
                   (detail::nonzero_number(spec, 2 * k + 2) *
                    detail::nonzero_number(spec, 2 * k + 3));
        },
        cfg);
}

// ---- structural identities ---------------------------------------------------

// Multiplication by the structure-function operator R(P,Q): z^n -> R(n) z^n.
inline PowerSeries apply_structure_operator(const DeformationSpec& spec,
                                            const PowerSeries& f) {
    PowerSeries out = f;
    for (int n = 0; n <= f.order(); ++n) out.coef[n] *= rpq_number(spec, n);
    return out;
}

// Coefficient-wise residual of R(P,Q) E(z) = z E(z), relative per order so
// kinds with rapidly growing series coefficients are judged uniformly.
inline double exp_difference_residual(const DeformationSpec& spec, int order = 40) {
    const PowerSeries E = rpq_exp_series(spec, order);
    const PowerSeries lhs = apply_structure_operator(spec, E);
    const PowerSeries rhs = E.shifted_up();
    return max_rel_diff(lhs, rhs, order);
}

// Coefficient-wise residual of D E(z) = E(z).
inline double exp_derivative_residual(const DeformationSpec& spec, int order = 40) {
    const PowerSeries E = rpq_exp_series(spec, order);
    return max_rel_diff(rpq_derivative(spec, E), E, order - 1);
}

inline double euler_residual(const DeformationSpec& spec, double theta,
                             const SeriesEvalConfig& cfg = {}) {
    const cplx lhs = rpq_exp(spec, cplx(0.0, theta), cfg);
    const cplx rhs = rpq_cos(spec, theta, cfg) + cplx(0.0, 1.0) * rpq_sin(spec, theta, cfg);
    return rel_residual(lhs, rhs);
}

inline double hyperbolic_split_residual(const DeformationSpec& spec, double z,
                                        const SeriesEvalConfig& cfg = {}) {
    const cplx lhs = rpq_exp(spec, z, cfg);
    const cplx rhs = rpq_cosh(spec, z, cfg) + rpq_sinh(spec, z, cfg);
    return rel_residual(lhs, rhs);
}

// Coefficient-wise residual of D cosh(a z) = a sinh(a z).
inline double cosh_derivative_residual(const DeformationSpec& spec, double a,
                                       int order = 40) {
    const PowerSeries ch = rpq_cos_series(spec, order, true).dilated(a);
    const PowerSeries sh = rpq_sin_series(spec, order, true).dilated(a);
    return max_abs_diff(rpq_derivative(spec, ch), cplx(a) * sh) /
           std::max(1.0, sh.max_abs_coef());
}

// Coefficient-wise residual of the deformed oscillator equation D^2 f + w^2 f = 0
// for f = cos(w z) and f = sin(w z).
inline double oscillator_residual(const DeformationSpec& spec, double omega,
                                  int order = 40) {
    double worst = 0.0;
    for (const bool odd : {false, true}) {
        const PowerSeries f =
            (odd ? rpq_sin_series(spec, order) : rpq_cos_series(spec, order)).dilated(omega);
        const PowerSeries lhs = rpq_derivative(spec, f, 2) + cplx(omega * omega) * f;
        worst = std::max(worst, lhs.max_abs_coef() / std::max(1.0, f.max_abs_coef()));
    }
    return worst;
}

// ---- binomial theorem and the two exponentials -------------------------------

struct BinomialTheoremValues {
    cplx series_value;
    cplx product_value;
};

// Series side: sum_n ((a,b);(p,q))_n z^n / ((p,q);(p,q))_n.
// Product side: prod_n (p^{n+1} - b z q^n) / (p^{n+1} - a z q^n), truncated when
// the factor stays within abs_tol of 1 for five consecutive indices.
inline BinomialTheoremValues pq_binomial_theorem(double p, double q, double a, double b,
                                                 cplx z, const SeriesEvalConfig& cfg = {}) {
    if (q >= p) throw DomainError("binomial theorem product requires q < p");

    cplx series(0.0), term(1.0);
    double pk = 1.0, qk = 1.0; // p^n, q^n
    int calm = 0;
    bool settled = false;
    for (int n = 0; n < cfg.max_terms; ++n) {
        series += term;
        if (std::abs(term) <= cfg.abs_tol * std::max(1.0, std::abs(series))) {
            if (++calm >= 5) {
                settled = true;
                break;
            }
        } else {
            calm = 0;
        }
        term *= (a * pk - b * qk) * z / (p * pk - q * qk);
        pk *= p;
        qk *= q;
    }
    if (!settled) throw NonConvergent("binomial theorem series did not settle");

    cplx product(1.0);
    pk = 1.0;
    qk = 1.0;
    calm = 0;
    settled = false;
    for (int n = 0; n < cfg.max_terms; ++n) {
        const cplx den = p * pk - a * z * qk;
        if (den == cplx(0.0)) throw PoleHit("binomial theorem product factor pole");
        const cplx factor = (p * pk - b * z * qk) / den;
        product *= factor;
        if (std::abs(factor - cplx(1.0)) <= cfg.abs_tol) {
            if (++calm >= 5) {
                settled = true;
                break;
            }
        } else {
            calm = 0;
        }
        pk *= p;
        qk *= q;
    }
    if (!settled) throw NonConvergent("binomial theorem product did not settle");

    return {series, product};
}

// The two mutually inverse deformed exponentials
//   e(z) = sum p^{n(n-1)/2} z^n / ((p,q);(p,q))_n,
//   E(z) = sum q^{n(n-1)/2} z^n / ((p,q);(p,q))_n,  with e(z) E(-z) = 1.
inline cplx rpq_small_exp(double p, double q, cplx z, const SeriesEvalConfig& cfg = {}) {
    return detail::sum_adaptive(
        cplx(1.0),
        [&](int n, cplx t) {
            return t * std::pow(p, n) * z / (std::pow(p, n + 1) - std::pow(q, n + 1));
        },
        cfg);
}

inline cplx rpq_big_exp(double p, double q, cplx z, const SeriesEvalConfig& cfg = {}) {
    return detail::sum_adaptive(
        cplx(1.0),
        [&](int n, cplx t) {
            return t * std::pow(q, n) * z / (std::pow(p, n + 1) - std::pow(q, n + 1));
        },
        cfg);
}

inline double exp_product_residual(double p, double q, cplx z,
                                   const SeriesEvalConfig& cfg = {}) {
    return std::abs(rpq_small_exp(p, q, z, cfg) * rpq_big_exp(p, q, -z, cfg) - cplx(1.0));
}

// ---- twin-basic hypergeometric partial sum ------------------------------------

// sum_n prod_i ((a_i,b_i);(p,q))_n / [((p,q);(p,q))_n prod_j ((c_j,d_j);(p,q))_n]
//       * [(-1)^n (q/p)^{n(n-1)/2}]^{1+s-r} z^n,    r = |upper|, s = |lower|.
inline cplx rphis_partial_sum(double p, double q,
                              const std::vector<std::pair<double, double>>& upper,
                              const std::vector<std::pair<double, double>>& lower,
                              cplx z, int nterms) {
    const int r = static_cast<int>(upper.size()), s = static_cast<int>(lower.size());
    cplx acc(0.0);
    for (int n = 0; n < nterms; ++n) {
        cplx t = std::pow(z, n);
        for (const auto& [a, b] : upper) t *= pq_shifted_factorial(a, b, p, q, n);
        double den = pq_shifted_factorial(p, q, p, q, n);
        for (const auto& [c, d] : lower) den *= pq_shifted_factorial(c, d, p, q, n);
        if (den == 0.0) throw PoleHit("twin-basic series denominator pole at n=" +
                                      std::to_string(n));
        t /= den;
        const double balance =
            ipow(ipow_sign(n) * std::pow(q / p, 0.5 * n * (n - 1)), 1 + s - r);
        acc += balance * t;
    }
    return acc;
}

} // namespace rpq
