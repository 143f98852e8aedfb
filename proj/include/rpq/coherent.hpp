#pragma once

#include <cmath>
#include <functional>

#include <Eigen/Dense>

#include "rpq/common.hpp"
#include "rpq/fock.hpp"
#include "rpq/numbers.hpp"
#include "rpq/special.hpp"
#include "rpq/spec.hpp"

namespace rpq {

// Coherent-state machinery for |z> = N(|z|^2)^{-1/2} sum_n z^n/sqrt(phi(n)!) |n>,
// with the normalisation series N(x) = sum_n x^n/phi(n)!.

// d-th derivative of N, summed term-wise (d in {0,1,2}).
inline cplx normalization_derivative(const DeformationSpec& spec, cplx x, int d,
                                     const SeriesEvalConfig& cfg = {}) {
    if (d < 0 || d > 2) throw ConfigError("normalization derivative order must be 0, 1 or 2");
    // first term: n = d, value d!/phi(d)!
    double fact = 1.0;
    for (int i = 2; i <= d; ++i) fact *= i;
    cplx first = fact;
    for (int k = 1; k <= d; ++k) first /= detail::nonzero_number(spec, k);
    return detail::sum_adaptive(
        first,
        [&, d](int m, cplx t) {
            const int n = d + m; // current term index
            return t * x * double(n + 1) / (double(n + 1 - d) *
                                            detail::nonzero_number(spec, n + 1));
        },
        cfg);
}

inline cplx normalization(const DeformationSpec& spec, cplx x,
                          const SeriesEvalConfig& cfg = {}) {
    return normalization_derivative(spec, x, 0, cfg);
}

// Closed product form of the kalnins normalisation for q > 1:
//   N(x) = prod_{k>=0} (1 - (q-1) x q^{-k} / (l^2 q^lambda))^{-1},   x < R.
inline cplx kalnins_normalization_product(const DeformationSpec& spec, cplx x,
                                          const SeriesEvalConfig& cfg = {}) {
    if (spec.kind != Kind::kalnins || spec.q <= 1.0)
        throw UnsupportedKind("product normalisation requires kind kalnins with q > 1");
    const double q = spec.q;
    const double l = spec.extra("l", 1.0), lambda = spec.extra("lambda", 0.0);
    cplx c = (q - 1.0) * x / (l * l * std::pow(q, lambda));
    cplx out(1.0);
    int calm = 0;
    for (int k = 0; k < cfg.max_terms; ++k) {
        const cplx factor = cplx(1.0) - c;
        if (factor == cplx(0.0)) throw PoleHit("normalisation product factor zero");
        out /= factor;
        if (std::abs(factor - cplx(1.0)) <= cfg.abs_tol) {
            if (++calm >= 5) return out;
        } else {
            calm = 0;
        }
        c /= q;
    }
    throw NonConvergent("normalisation product did not settle");
}

inline Eigen::VectorXcd coherent_vector(const DeformationSpec& spec, cplx z, int D) {
    if (D < 2 || D > max_fock_dim) throw RangeError("coherent vector dimension out of range");
    Eigen::VectorXcd v(D);
    cplx amp(1.0);
    v(0) = amp;
    for (int n = 1; n < D; ++n) {
        const double phi = rpq_number(spec, n);
        if (phi <= 0.0)
            throw DomainError("structure function not positive at n=" + std::to_string(n) +
                              "; coherent expansion undefined");
        amp *= z / std::sqrt(phi);
        v(n) = amp;
    }
    return v / v.norm();
}

// || a|z> - z|z> || on a D-dimensional truncation (normalised state).
inline double eigenstate_residual(const DeformationSpec& spec, cplx z, int D) {
    const Eigen::VectorXcd v = coherent_vector(spec, z, D);
    const FockOperators ops = fock_operators(spec, D);
    return (ops.a.cast<cplx>() * v - z * v).norm();
}

inline cplx coherent_overlap(const DeformationSpec& spec, cplx z1, cplx z2,
                             const SeriesEvalConfig& cfg = {}) {
    const cplx num = normalization(spec, std::conj(z1) * z2, cfg);
    const double n1 = std::real(normalization(spec, std::norm(z1), cfg));
    const double n2 = std::real(normalization(spec, std::norm(z2), cfg));
    return num / std::sqrt(n1 * n2);
}

inline double state_distance(const DeformationSpec& spec, cplx z1, cplx z2,
                             const SeriesEvalConfig& cfg = {}) {
    const double d2 = 2.0 * (1.0 - std::real(coherent_overlap(spec, z1, z2, cfg)));
    return std::sqrt(std::max(0.0, d2));
}

// ---- photon statistics -------------------------------------------------------

struct PhotonStatistics {
    double mean;     // <n>(x) = x N'/N
    double mandel_q; // x (N''/N' - N'/N)
    double w;        // d<n>/dx, which is also the Fubini-Study metric factor
};

inline PhotonStatistics photon_statistics(const DeformationSpec& spec, double x,
                                          const SeriesEvalConfig& cfg = {}) {
    const double n0 = std::real(normalization_derivative(spec, x, 0, cfg));
    const double n1 = std::real(normalization_derivative(spec, x, 1, cfg));
    const double n2 = std::real(normalization_derivative(spec, x, 2, cfg));
    if (n0 <= 0.0 || n1 <= 0.0)
        throw DomainError("normalisation series not positive; statistics undefined");
    PhotonStatistics s;
    s.mean = x * n1 / n0;
    s.mandel_q = x * (n2 / n1 - n1 / n0);
    s.w = n1 / n0 + x * (n2 / n0 - (n1 / n0) * (n1 / n0));
    return s;
}

inline double photon_probability(const DeformationSpec& spec, int n, double x,
                                 const SeriesEvalConfig& cfg = {}) {
    if (n < 0) throw DomainError("photon number must be nonnegative");
    const double N = std::real(normalization(spec, x, cfg));
    const double den = rpq_factorial(spec, n) * N;
    if (den == 0.0)
        throw OutsideRadius("factorial underflow: normalisation series has no "
                            "positive radius at this order");
    return std::pow(x, n) / den;
}

// ---- resolution-of-identity moments (kalnins) ---------------------------------
//
// The coherent-state measure must reproduce the factorial moments
//   integral x^n dnu(x) = phi(n)!.
// For q > 1 the measure is discrete on the lattice x_k = R q^{-k}, R = l^2
// q^lambda/(q-1), with weights q^{-k}/N(x_k/q); for q < 1 it is the continuous
// density proportional to 1/N(x/q) on [0, inf).

namespace detail {

template <class F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm, double fb,
                        double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0) return left + right;
    if (std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, 0.5 * tol, depth - 1);
}

template <class F>
double integrate(const F& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    return adaptive_simpson(f, a, b, f(a), f(m), f(b), tol, 40);
}

} // namespace detail

inline double kalnins_moment(const DeformationSpec& spec, int n, double tol = 1e-6,
                             int lattice_terms = 200) {
    if (spec.kind != Kind::kalnins)
        throw UnsupportedKind("identity-resolution moments are defined for kind kalnins");
    const double q = spec.q;
    const double l = spec.extra("l", 1.0), lambda = spec.extra("lambda", 0.0);

    if (q > 1.0) {
        const double R = l * l * std::pow(q, lambda) / (q - 1.0);
        const double Q = 1.0 / q;
        // weight_k = Q^k (Q^{k+1};Q)_inf; the infinite product via (Q;Q)_inf/(Q;Q)_k
        double qq_inf = 1.0, Qj = Q;
        while (Qj > 1e-18) {
            qq_inf *= 1.0 - Qj;
            Qj *= Q;
        }
        double acc = 0.0, Qk = 1.0, pochhammer = 1.0; // (Q;Q)_k
        for (int k = 0; k < lattice_terms; ++k) {
            const double x = R * Qk;
            acc += Qk * (qq_inf / pochhammer) * std::pow(x, n);
            pochhammer *= 1.0 - Q * Qk;
            Qk *= Q;
        }
        return acc;
    }

    // q < 1: ((1-q)/(l^2 q^lambda ln(1/q))) * integral_0^inf x^n / N(x/q) dx,
    // with the upper limit doubled until the added panel is negligible.
    const double front = (1.0 - q) / (l * l * std::pow(q, lambda) * std::log(1.0 / q));
    SeriesEvalConfig cfg;
    cfg.max_terms = 2000;
    auto f = [&](double x) {
        return std::pow(x, n) / std::real(normalization(spec, x / q, cfg));
    };
    double total = detail::integrate(f, 0.0, 1.0, tol * 0.01);
    double lo = 1.0, hi = 2.0;
    int calm = 0;
    for (int it = 0; it < 60; ++it) {
        const double panel = detail::integrate(f, lo, hi, tol * 0.01);
        total += panel;
        if (std::abs(panel) <= tol * 0.01 * std::max(1.0, std::abs(total))) {
            if (++calm >= 2) return front * total;
        } else {
            calm = 0;
        }
        lo = hi;
        hi *= 2.0;
    }
    throw NonConvergent("moment integral tail did not settle");
}

inline double kalnins_moment_residual(const DeformationSpec& spec, int n,
                                      double tol = 1e-6) {
    return rel_residual(kalnins_moment(spec, n, tol), rpq_factorial(spec, n));
}

} // namespace rpq
