#pragma once

#include <cmath>
#include <functional>
#include <utility>

#include "rpq/common.hpp"
#include "rpq/numbers.hpp"
#include "rpq/series.hpp"
#include "rpq/spec.hpp"

namespace rpq {

// Coefficient-wise deformed derivative: z^n -> R(n) z^(n-1).
inline PowerSeries rpq_derivative(const DeformationSpec& spec, const PowerSeries& f) {
    if (f.order() <= 0) return PowerSeries::zero(0);
    PowerSeries out = PowerSeries::zero(f.order() - 1);
    for (int n = 1; n <= f.order(); ++n)
        out.coef[n - 1] = rpq_number(spec, n) * f.coef[n];
    return out;
}

inline PowerSeries rpq_derivative(const DeformationSpec& spec, const PowerSeries& f,
                                  int times) {
    PowerSeries out = f;
    for (int i = 0; i < times; ++i) out = rpq_derivative(spec, out);
    return out;
}

// Coefficient-wise antiderivative vanishing at 0: z^n -> z^(n+1)/R(n+1).
inline PowerSeries rpq_antiderivative(const DeformationSpec& spec, const PowerSeries& f) {
    PowerSeries out = PowerSeries::zero(f.order() + 1);
    for (int n = 0; n <= f.order(); ++n) {
        const double rn = rpq_number(spec, n + 1);
        if (rn == 0.0)
            throw DivisionByZero("antiderivative undefined: structure function vanishes at n=" +
                                 std::to_string(n + 1));
        out.coef[n + 1] = f.coef[n] / rn;
    }
    return out;
}

// Two-point (difference-quotient) realisation of the derivative,
//   (D f)(z) = c (f(u z) - f(v z)) / z,
// available for the kinds whose numbers split as c (u^n - v^n).
struct TwoPointForm {
    double u, v, c;
};

inline TwoPointForm two_point_form(const DeformationSpec& spec) {
    const double p = spec.p, q = spec.q;
    switch (spec.kind) {
        case Kind::heine_q:
        case Kind::arik_coon:
            return {1.0, q, 1.0 / (1.0 - q)};
        case Kind::jagannathan_srinivasa:
            return {p, q, 1.0 / (p - q)};
        case Kind::chakrabarti_jagannathan:
            return {1.0 / p, q, 1.0 / (1.0 / p - q)};
        case Kind::quesne:
            return {p, 1.0 / q, 1.0 / (q - 1.0 / p)};
        case Kind::hounkonnou_ngompe: {
            const double mu = spec.extra("mu", 1.0), nu = spec.extra("nu", 1.0);
            const double h = spec.extra("h", 1.0);
            return {std::pow(q, nu) / std::pow(p, mu - 1.0),
                    std::pow(q, nu - 1.0) / std::pow(p, mu), h / (q - 1.0 / p)};
        }
        case Kind::kalnins: {
            const double l = spec.extra("l", 1.0), lambda = spec.extra("lambda", 0.0);
            return {1.0 / q, 1.0, l * l * std::pow(q, lambda) / (1.0 - q)};
        }
        case Kind::biedenharn_macfarlane:
            return {q, 1.0 / q, 1.0 / (q - 1.0 / q)};
        case Kind::feinsilver:
            return {1.0, 1.0 / (q * q), 1.0 / (1.0 - 1.0 / (q * q))};
        case Kind::chung: {
            const double alpha = spec.extra("alpha", 1.0), beta = spec.extra("beta", 0.0);
            if (alpha == 1.0) break;
            return {q, std::pow(q, alpha),
                    std::pow(q, beta) / (q - std::pow(q, alpha))};
        }
        case Kind::borzov: {
            const double alpha = spec.extra("alpha", 1.0), beta = spec.extra("beta", 0.0);
            const double gamma = spec.extra("gamma", 1.0);
            if (alpha == gamma) break;
            return {std::pow(q, gamma), std::pow(q, alpha),
                    std::pow(q, beta) / (std::pow(q, gamma) - std::pow(q, alpha))};
        }
        default: break;
    }
    throw UnsupportedKind("no two-point derivative form for kind " + kind_name(spec.kind) +
                          " at these parameters");
}

inline cplx two_point_derivative(const DeformationSpec& spec,
                                 const std::function<cplx(cplx)>& f, cplx z) {
    if (z == cplx(0.0))
        throw DomainError("two-point derivative is a difference quotient; z must be nonzero");
    const TwoPointForm tp = two_point_form(spec);
    return tp.c * (f(tp.u * z) - f(tp.v * z)) / z;
}

// Residuals of the two deformed Leibniz rules
//   D(fg) = (Df)(g o u) + (f o v)(Dg)  and  D(fg) = (Df)(g o v) + (f o u)(Dg),
// measured coefficient-wise on the product truncation.
inline std::pair<double, double> leibniz_residuals(const DeformationSpec& spec,
                                                   const PowerSeries& f,
                                                   const PowerSeries& g) {
    const TwoPointForm tp = two_point_form(spec);
    const PowerSeries lhs = rpq_derivative(spec, f * g);
    const PowerSeries df = rpq_derivative(spec, f), dg = rpq_derivative(spec, g);
    const PowerSeries rhs1 = df * g.dilated(tp.u) + f.dilated(tp.v) * dg;
    const PowerSeries rhs2 = df * g.dilated(tp.v) + f.dilated(tp.u) * dg;
    const double scale = std::max(1.0, lhs.max_abs_coef());
    return {max_abs_diff(lhs, rhs1) / scale, max_abs_diff(lhs, rhs2) / scale};
}

// Deformed Jackson-type integral of f over [0, a], as a weighted lattice sum.
inline double jackson_integral(const DeformationSpec& spec,
                               const std::function<double(double)>& f, double a,
                               const SeriesEvalConfig& cfg = {.max_terms = 400}) {
    const double p = spec.p, q = spec.q;

    // node_scale/weight_scale: the j-th node is a*node0*node_scale^j with weight
    // weight0*weight_scale^j; convergence needs the scales inside the unit disc.
    double node0 = 1.0, node_scale = 1.0, weight0 = 1.0, weight_scale = 1.0, front = 1.0;
    switch (spec.kind) {
        case Kind::heine_q:
        case Kind::arik_coon:
            if (q >= 1.0) throw DomainError("lattice integral requires q < 1 for this kind");
            front = a * (1.0 - q);
            node0 = 1.0; node_scale = q; weight0 = 1.0; weight_scale = q;
            break;
        case Kind::jagannathan_srinivasa:
            if (q / p >= 1.0)
                throw DomainError("lattice integral requires q < p for this kind");
            front = a * (p - q);
            node0 = 1.0 / p; node_scale = q / p;   // node_j = q^j / p^(j+1)
            weight0 = 1.0 / p; weight_scale = q / p;
            break;
        case Kind::chakrabarti_jagannathan:
            if (p * q >= 1.0)
                throw DomainError("lattice integral requires p q < 1 for this kind");
            front = a * (1.0 - p * q);
            node0 = p; node_scale = p * q; weight0 = 1.0; weight_scale = p * q;
            break;
        case Kind::quesne:
            if (p * q >= 1.0)
                throw DomainError("lattice integral requires p q < 1 for this kind");
            front = a * (1.0 / p - q);
            node0 = q; node_scale = p * q; weight0 = q; weight_scale = p * q;
            break;
        case Kind::hounkonnou_ngompe: {
            if (p * q >= 1.0)
                throw DomainError("lattice integral requires p q < 1 for this kind");
            const double mu = spec.extra("mu", 1.0), nu = spec.extra("nu", 1.0);
            const double h = spec.extra("h", 1.0);
            front = a * (1.0 / p - q) / h * std::pow(p, mu) * std::pow(q, 1.0 - nu);
            node0 = std::pow(p, mu) * std::pow(q, 1.0 - nu);
            node_scale = p * q;
            weight0 = 1.0; weight_scale = p * q;
            break;
        }
        case Kind::kalnins: {
            if (q <= 1.0)
                throw DomainError("lattice integral requires q > 1 for this kind");
            const double l = spec.extra("l", 1.0), lambda = spec.extra("lambda", 0.0);
            front = a * (q - 1.0) / (l * l * std::pow(q, lambda));
            node0 = 1.0; node_scale = 1.0 / q; weight0 = 1.0; weight_scale = 1.0 / q;
            break;
        }
        default:
            throw UnsupportedKind("no lattice integral for kind " + kind_name(spec.kind));
    }

    double acc = 0.0, node = node0, weight = weight0;
    int calm = 0;
    for (int j = 0; j < cfg.max_terms; ++j) {
        const double term = weight * f(a * node);
        acc += term;
        node *= node_scale;
        weight *= weight_scale;
        if (std::abs(term) <= cfg.abs_tol * std::max(1.0, std::abs(acc))) {
            if (++calm >= 5) return front * acc;
        } else {
            calm = 0;
        }
    }
    throw NonConvergent("lattice integral did not settle within " +
                        std::to_string(cfg.max_terms) + " terms");
}

} // namespace rpq
