#pragma once

#include <cmath>
#include <complex>

#include "rpq/common.hpp"
#include "rpq/numbers.hpp"
#include "rpq/series.hpp"

namespace rpq {

// Deformed Bessel function of order s (first and second kind):
//   J_s(z) = B_K(s+1) (z/2)^s g_s(z),
//   g_s(z) = sum_n (-1)^n w_n (z/2)^{2n} / D_n^{(s)},
//   D_n^{(s)} = ((p,q);(p,q))_n ((p^{s+1},q^{s+1});(p,q))_n,
// with w_n = p^{n(n-1)} (first kind) or q^{n(n-1)} (q/p)^{n(s+1)} (second kind).
// The normalisation B is kept as the K-factor partial product
//   B_K(s) = ((p^s,q^s);(p,q))_K,
// which obeys the exact ladder B_K(s+1)/B_K(s) = (p^{s+K}-q^{s+K})/(p^s-q^s).
// Complex orders use the principal branch p^s = exp(s ln p).
//
// The (z/2)^s prefactor is carried analytically: dilating the argument by c
// multiplies the prefactor by the principal-branch c^s and dilates only the
// power series g_s.  All recurrence checks below reduce to coefficient-wise
// identities on g_s and are independent of K.

struct ReducedBessel {
    double p, q;
    cplx s;
    int variant; // 1 or 2
    PowerSeries g;
};

inline cplx cpow(double base, cplx e) {
    if (base <= 0.0) throw DomainError("principal power requires a positive base");
    return std::exp(e * std::log(base));
}

inline ReducedBessel reduced_bessel(double p, double q, cplx s, int variant,
                                    int half_order = 40) {
    if (variant != 1 && variant != 2)
        throw ConfigError("Bessel variant must be 1 or 2");
    ReducedBessel rb{p, q, s, variant, PowerSeries::zero(2 * half_order)};
    cplx D(1.0), w(1.0);
    cplx ps = cpow(p, s + 1.0), qs = cpow(q, s + 1.0); // p^{s+1+n}, q^{s+1+n}
    const cplx ratio_pref = variant == 2 ? cpow(q / p, s + 1.0) : cplx(1.0);
    double pn = 1.0, qn = 1.0, quarter = 1.0; // p^{2n}, q^{2n}, 4^{-n}
    double sign = 1.0;
    for (int n = 0; n <= half_order; ++n) {
        if (D == cplx(0.0))
            throw PoleHit("Bessel denominator vanishes at term n=" + std::to_string(n));
        rb.g.coef[2 * n] = sign * w * quarter / D;
        D *= (p * std::pow(p, n) - q * std::pow(q, n)) * (ps - qs);
        w *= (variant == 1 ? pn : qn * ratio_pref);
        pn *= p * p;
        qn *= q * q;
        ps *= p;
        qs *= q;
        quarter *= 0.25;
        sign = -sign;
    }
    return rb;
}

// red_s(c z) with the prefactor handled analytically: c^s (z/2)^s g_s(c z).
inline cplx eval_reduced(const ReducedBessel& rb, cplx z, cplx dilation = cplx(1.0)) {
    return std::pow(z / 2.0, rb.s) * std::pow(dilation, rb.s) * rb.g(dilation * z);
}

inline cplx bessel_bk(double p, double q, cplx s, int K) {
    cplx out(1.0);
    cplx ps = cpow(p, s), qs = cpow(q, s);
    for (int k = 0; k < K; ++k) {
        out *= ps - qs;
        ps *= p;
        qs *= q;
    }
    return out;
}

inline cplx bessel_j(double p, double q, cplx s, cplx z, int variant, int K = 20,
                     int half_order = 40) {
    const ReducedBessel rb = reduced_bessel(p, q, s, variant, half_order);
    return bessel_bk(p, q, s + 1.0, K) * eval_reduced(rb, z);
}

// prod_k (1 + (z^2/(4 p^{s+2})) (q/p)^k), truncated once the factor stays
// within abs_tol of 1 for five consecutive indices.
inline cplx bessel_first_to_second_product(double p, double q, cplx s, cplx z,
                                           const SeriesEvalConfig& cfg = {}) {
    if (q >= p) throw DomainError("first/second-kind product requires q < p");
    cplx c = z * z / (4.0 * cpow(p, s + 2.0));
    cplx out(1.0);
    int calm = 0;
    for (int k = 0; k < cfg.max_terms; ++k) {
        const cplx factor = cplx(1.0) + c;
        if (factor == cplx(0.0)) throw PoleHit("first/second-kind product factor zero");
        out *= factor;
        if (std::abs(factor - cplx(1.0)) <= cfg.abs_tol) {
            if (++calm >= 5) return out;
        } else {
            calm = 0;
        }
        c *= q / p;
    }
    throw NonConvergent("first/second-kind product did not settle");
}

inline ResidualMap bessel_identity_suite(double p, double q, cplx s, cplx z,
                                         int half_order = 40,
                                         const SeriesEvalConfig& cfg = {}) {
    if (!(p > 0.0 && q > 0.0 && q < p))
        throw DomainError("Bessel identity suite requires 0 < q < p");
    ResidualMap out;

    const ReducedBessel r1 = reduced_bessel(p, q, s, 1, half_order);
    const ReducedBessel r2 = reduced_bessel(p, q, s, 2, half_order);
    const ReducedBessel r1m = reduced_bessel(p, q, s - 1.0, 1, half_order);
    const ReducedBessel r1p = reduced_bessel(p, q, s + 1.0, 1, half_order);

    const cplx v1 = eval_reduced(r1, z), v2 = eval_reduced(r2, z);
    out["first_second_product"] =
        rel_residual(v2, bessel_first_to_second_product(p, q, s, z, cfg) * v1);

    const cplx ps = cpow(p, s), qs = cpow(q, s);
    const cplx ps1 = ps * p, qs1 = qs * q;
    {
        // p^{s/2} red_s(sqrt(p) z) - q^{s/2} red_s(sqrt(q) z)
        //   = (z/2)(p^s - q^s) red_{s-1}(z), coefficient-wise on g.
        const PowerSeries lhs =
            ps * r1.g.dilated(std::sqrt(p)) - qs * r1.g.dilated(std::sqrt(q));
        const PowerSeries rhs = (ps - qs) * r1m.g;
        out["half_step_ladder"] =
            max_abs_diff(lhs, rhs) / std::max(1.0, rhs.max_abs_coef());
    }
    {
        // red_{s-1}(z) + red_{s+1}(p z)/[p (p^s-q^s)(p^{s+1}-q^{s+1})]
        //   = (2/z) q^{-s/2} red_s(sqrt(q) z), coefficient-wise on g.
        const cplx c3 = ps / ((ps - qs) * (ps1 - qs1));
        const PowerSeries lhs =
            r1m.g + (0.25 * c3) * r1p.g.dilated(p).shifted_up().shifted_up();
        const PowerSeries rhs = r1.g.dilated(std::sqrt(q));
        out["three_term"] = max_abs_diff(lhs, rhs) / std::max(1.0, rhs.max_abs_coef());
    }
    return out;
}

} // namespace rpq
