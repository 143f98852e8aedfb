#pragma once

#include <cmath>
#include <functional>

#include "rpq/common.hpp"
#include "rpq/numbers.hpp"
#include "rpq/spec.hpp"

namespace rpq {

// First-order closure of the structure function:
//   phi(k+1) = F(k) phi(k) + G(k),  phi(0) = 0,
// with F, G evaluated on the number-operator eigenvalue k.
struct FGSpec {
    std::function<double(int)> F, G;
};

inline std::function<double(int)> structure_function(const DeformationSpec& spec) {
    return [spec](int n) { return rpq_number(spec, n); };
}

inline FGSpec builtin_fg(const DeformationSpec& spec) {
    const double p = spec.p, q = spec.q;
    auto constant = [](double v) {
        return std::function<double(int)>([v](int) { return v; });
    };
    switch (spec.kind) {
        case Kind::heine_q:
        case Kind::arik_coon:
            return {constant(q), constant(1.0)};
        case Kind::jagannathan_srinivasa:
            return {constant(p), [q](int k) { return std::pow(q, k); }};
        case Kind::chakrabarti_jagannathan:
            return {constant(q), [p](int k) { return std::pow(p, -k); }};
        case Kind::quesne:
            return {constant(p), [p, q](int k) { return p * std::pow(q, -k - 1); }};
        case Kind::hounkonnou_ngompe: {
            const double mu = spec.extra("mu", 1.0), nu = spec.extra("nu", 1.0);
            const double h = spec.extra("h", 1.0);
            const double f = std::pow(q, nu - 1.0) / std::pow(p, mu);
            const double g0 = h * std::pow(q, nu - 1.0) / std::pow(p, mu - 1.0);
            const double gr = std::pow(q, nu) / std::pow(p, mu - 1.0);
            return {constant(f), [g0, gr](int k) { return g0 * std::pow(gr, k); }};
        }
        case Kind::kalnins: {
            const double l = spec.extra("l", 1.0), lambda = spec.extra("lambda", 0.0);
            return {constant(1.0),
                    [l, lambda, q](int k) { return l * l * std::pow(q, lambda - k - 1); }};
        }
        case Kind::tamm_dancoff:
            return {constant(q), [q](int k) { return std::pow(q, k); }};
        case Kind::feinsilver:
            return {constant(1.0), [q](int k) { return std::pow(q, -2 * k); }};
        case Kind::biedenharn_macfarlane:
            return {constant(q), [q](int k) { return std::pow(q, -k); }};
        case Kind::calogero_vasiliev: {
            const double nu = spec.extra("nu", 0.0);
            return {constant(1.0), [nu](int k) { return 1.0 + 2.0 * nu * ipow_sign(k); }};
        }
        case Kind::chung: {
            const double alpha = spec.extra("alpha", 1.0), beta = spec.extra("beta", 0.0);
            return {constant(q),
                    [q, alpha, beta](int k) { return std::pow(q, alpha * k + beta); }};
        }
        case Kind::borzov: {
            const double alpha = spec.extra("alpha", 1.0), beta = spec.extra("beta", 0.0);
            const double gamma = spec.extra("gamma", 1.0);
            return {constant(std::pow(q, gamma)),
                    [q, alpha, beta](int k) { return std::pow(q, alpha * k + beta); }};
        }
        case Kind::brzezinski: {
            const double alpha = spec.extra("alpha", 0.0);
            return {constant(q), [q, alpha](int k) {
                        return std::pow(q, -k) * (1.0 + 2.0 * alpha * ipow_sign(k));
                    }};
        }
        case Kind::burban: {
            const double alpha = spec.extra("alpha", 1.0), beta = spec.extra("beta", 0.0);
            const double gamma = spec.extra("gamma", 1.0), nu = spec.extra("nu", 0.0);
            return {constant(std::pow(q, gamma)), [q, alpha, beta, nu](int k) {
                        return std::pow(q, alpha * k + beta) *
                               (1.0 + 2.0 * nu * ipow_sign(k));
                    }};
        }
        case Kind::baloitcha: {
            const double nu = spec.extra("nu", 1.0), alpha = spec.extra("alpha", 1.0);
            const double beta = spec.extra("beta", 0.0), gamma = spec.extra("gamma", 0.0);
            return {constant(std::pow(p, nu)), [q, alpha, beta, gamma](int k) {
                        return std::pow(q, alpha * k + beta) *
                               (1.0 + 2.0 * gamma * ipow_sign(k));
                    }};
        }
        case Kind::rational_rRs:
            throw UnsupportedKind(
                "rational_rRs has no first-order F/G closure with scalar coefficients");
    }
    throw UnsupportedKind("unknown kind enum value");
}

inline double phi_from_fg(const FGSpec& fg, int n) {
    if (n < 0) throw DomainError("phi_from_fg requires n >= 0");
    double phi = 0.0;
    for (int k = 0; k < n; ++k) phi = fg.F(k) * phi + fg.G(k);
    return phi;
}

// Worst relative mismatch between the recursion-built phi and the closed form.
inline double fg_consistency_check(const DeformationSpec& spec, int nmax = 32) {
    const FGSpec fg = builtin_fg(spec);
    double worst = 0.0;
    double phi = 0.0;
    for (int n = 0; n <= nmax; ++n) {
        worst = std::max(worst, rel_residual(phi, rpq_number(spec, n)));
        phi = fg.F(n) * phi + fg.G(n);
    }
    return worst;
}

// Smallest n in [1, nmax] at which phi vanishes (truncating the Fock space to
// dimension n), or -1 when no such point is found.
inline int finite_dimension_scan(const std::function<double(int)>& phi, int nmax,
                                 double tol = default_abs_tol) {
    for (int n = 1; n <= nmax; ++n)
        if (std::abs(phi(n)) <= tol) return n;
    return -1;
}

} // namespace rpq
