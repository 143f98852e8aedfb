#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "rpq/calculus.hpp"
#include "rpq/common.hpp"
#include "rpq/numbers.hpp"
#include "rpq/series.hpp"
#include "rpq/spec.hpp"

namespace rpq {

// Deformed Rogers-Szego polynomials H_n(z) = sum_k C(n,k) z^k and the recursion
//   H_{n+1}(z) = H_n(phi1 z) + z phi2^n H_n(z/phi2) - z phi3 R_n H_{n-1}(z),
// valid exactly when the binomials satisfy the three-term contiguous relation
//   C(n+1,k) = phi1^k C(n,k) + phi2^{n+1-k} C(n,k-1) - phi3 R_n C(n-1,k-1).

struct PhiTriple {
    double phi1, phi2, phi3;
};

inline PhiTriple builtin_phi_triple(const DeformationSpec& spec) {
    const double p = spec.p, q = spec.q;
    switch (spec.kind) {
        case Kind::heine_q:
        case Kind::arik_coon:
            return {1.0, 1.0, 1.0 - q};
        case Kind::jagannathan_srinivasa:
            return {p, p, p - q};
        case Kind::chakrabarti_jagannathan:
            return {1.0 / p, 1.0 / p, 1.0 / p - q};
        case Kind::quesne:
            return {p, p, q - 1.0 / p};
        case Kind::hounkonnou_ngompe: {
            const double mu = spec.extra("mu", 1.0), nu = spec.extra("nu", 1.0);
            const double h = spec.extra("h", 1.0);
            const double phi = std::pow(p, 1.0 - mu) * std::pow(q, nu);
            return {phi, phi, (q - 1.0 / p) / h};
        }
        default:
            throw UnsupportedKind("no recursion triple for kind " + kind_name(spec.kind));
    }
}

inline double phi_condition_residual(const DeformationSpec& spec, const PhiTriple& t,
                                     int n, int k) {
    const double lhs = rpq_binomial(spec, n + 1, k);
    const double rhs = std::pow(t.phi1, k) * rpq_binomial(spec, n, k) +
                       std::pow(t.phi2, n + 1 - k) * rpq_binomial(spec, n, k - 1) -
                       t.phi3 * rpq_number(spec, n) * rpq_binomial(spec, n - 1, k - 1);
    return rel_residual(lhs, rhs);
}

inline void check_phi_condition(const DeformationSpec& spec, const PhiTriple& t, int nmax,
                                double tol = 1e-8) {
    for (int n = 0; n < nmax; ++n)
        for (int k = 0; k <= n + 1; ++k) {
            const double r = phi_condition_residual(spec, t, n, k);
            if (!(r <= tol)) throw PhiConditionViolated(n, k, r);
        }
}

inline PowerSeries rs_polynomial(const DeformationSpec& spec, int n) {
    if (n < 0) throw DomainError("polynomial degree must be nonnegative");
    PowerSeries s = PowerSeries::zero(n);
    for (int k = 0; k <= n; ++k) s.coef[k] = rpq_binomial(spec, n, k);
    return s;
}

inline PowerSeries rs_polynomial_recursive(const DeformationSpec& spec, const PhiTriple& t,
                                           int n, double tol = 1e-8) {
    if (n < 0) throw DomainError("polynomial degree must be nonnegative");
    check_phi_condition(spec, t, n, tol);
    PowerSeries prev = PowerSeries::zero(0);       // H_{-1} := 0
    PowerSeries cur = PowerSeries::monomial(0);    // H_0 = 1
    for (int m = 0; m < n; ++m) {
        PowerSeries next =
            cur.dilated(t.phi1).padded(m + 1) +
            std::pow(t.phi2, m) * cur.dilated(1.0 / t.phi2).shifted_up() -
            (t.phi3 * rpq_number(spec, m)) * prev.shifted_up().padded(m + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

// Normalised polynomial eigenbasis psi_n = H_n / sqrt(R_n!).
inline PowerSeries rs_psi(const DeformationSpec& spec, int n) {
    const double fn = rpq_factorial(spec, n);
    if (fn <= 0.0) throw DomainError("factorial not positive; psi basis undefined");
    return rs_polynomial(spec, n) * cplx(1.0 / std::sqrt(fn));
}

// D psi_n = sqrt(R_n) psi_{n-1}, coefficient-wise.
inline double psi_lowering_residual(const DeformationSpec& spec, int n) {
    const PowerSeries lhs = rpq_derivative(spec, rs_psi(spec, n));
    const PowerSeries rhs =
        (n == 0 ? PowerSeries::zero(0)
                : std::sqrt(rpq_number(spec, n)) * rs_psi(spec, n - 1));
    return max_abs_diff(lhs.padded(std::max(lhs.order(), rhs.order())),
                        rhs.padded(std::max(lhs.order(), rhs.order()))) /
           std::max(1.0, rhs.max_abs_coef());
}

// The raising operator built from the recursion triple:
//   (A+ psi)(z) = psi(phi1 z) + z phi2^n psi(z/phi2) - z phi3 (D psi)(z),
// satisfying A+ psi_n = sqrt(R_{n+1}) psi_{n+1}.
inline double psi_raising_residual(const DeformationSpec& spec, const PhiTriple& t, int n) {
    const PowerSeries psi = rs_psi(spec, n);
    const PowerSeries lhs =
        psi.dilated(t.phi1).padded(n + 1) +
        std::pow(t.phi2, n) * psi.dilated(1.0 / t.phi2).shifted_up() -
        cplx(t.phi3) * rpq_derivative(spec, psi).shifted_up().padded(n + 1);
    const PowerSeries rhs = std::sqrt(rpq_number(spec, n + 1)) * rs_psi(spec, n + 1);
    return max_abs_diff(lhs, rhs) / std::max(1.0, rhs.max_abs_coef());
}

// ---- continuous deformed Hermite polynomials ----------------------------------
//
// Hn(cos t) = sum_k C(n,k) e^{i(n-2k)t}; real by the k <-> n-k symmetry.

inline cplx hermite_kernel(const DeformationSpec& spec, int n, cplx w) {
    cplx acc(0.0);
    for (int k = 0; k <= n; ++k)
        acc += rpq_binomial(spec, n, k) * std::pow(w, cplx(double(n - 2 * k)));
    return acc;
}

inline cplx hermite_value(const DeformationSpec& spec, int n, double theta) {
    return hermite_kernel(spec, n, std::polar(1.0, theta));
}

// Value-level three-term recursion carried over from the Rogers-Szego form, with
// the half-step dilation convention e^{it} -> phi^{-1/2} e^{it}:
//   Hn+1(t) = phi1^{n/2} e^{it} K_n(phi1^{-1/2} e^{it})
//           + phi2^{n/2} e^{-it} K_n(phi2^{1/2} e^{it}) - phi3 R_n K_{n-1}(e^{it}),
// where K_n is the kernel above.
inline double hermite_recursion_residual(const DeformationSpec& spec, const PhiTriple& t,
                                         int n, double theta) {
    if (n < 1) throw DomainError("recursion residual needs n >= 1");
    const cplx eit = std::polar(1.0, theta);
    const cplx lhs = hermite_value(spec, n + 1, theta);
    const cplx rhs =
        std::pow(t.phi1, 0.5 * n) * eit *
            hermite_kernel(spec, n, eit / std::sqrt(t.phi1)) +
        std::pow(t.phi2, 0.5 * n) / eit *
            hermite_kernel(spec, n, eit * std::sqrt(t.phi2)) -
        t.phi3 * rpq_number(spec, n) * hermite_kernel(spec, n - 1, eit);
    return rel_residual(lhs, rhs);
}

} // namespace rpq
