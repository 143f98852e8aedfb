#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rpq/common.hpp"
#include "rpq/linalg.hpp"
#include "rpq/spec.hpp"

namespace rpq {

inline double ipow(double x, int e) {
    if (e < 0) {
        if (x == 0.0) throw DivisionByZero("0 raised to a negative power");
        return 1.0 / ipow(x, -e);
    }
    double r = 1.0;
    while (e-- > 0) r *= x;
    return r;
}

namespace detail {

inline double heine_num(double q, int n) {
    return n == 0 ? 0.0 : (1.0 - std::pow(q, n)) / (1.0 - q);
}

inline double js_num(double p, double q, int n) {
    return n == 0 ? 0.0 : (std::pow(p, n) - std::pow(q, n)) / (p - q);
}

// Unnormalised: the n=1 value is (p - 1/q)/(q - 1/p), not 1.
inline double quesne_num(double p, double q, int n) {
    return n == 0 ? 0.0 : (std::pow(p, n) - std::pow(q, -n)) / (q - 1.0 / p);
}

} // namespace detail

inline double rpq_number(const DeformationSpec& spec, int n) {
    if (n == 0) return 0.0;
    const double p = spec.p, q = spec.q;
    const double sgn = ipow_sign(n); // (-1)^n for the even/odd split kinds

    switch (spec.kind) {
        case Kind::heine_q:
        case Kind::arik_coon:
            return detail::heine_num(q, n);
        case Kind::jagannathan_srinivasa:
            return detail::js_num(p, q, n);
        case Kind::chakrabarti_jagannathan:
            return (std::pow(p, -n) - std::pow(q, n)) / (1.0 / p - q);
        case Kind::quesne:
            return detail::quesne_num(p, q, n);
        case Kind::hounkonnou_ngompe: {
            const double mu = spec.extra("mu", 1.0), nu = spec.extra("nu", 1.0);
            const double h = spec.extra("h", 1.0);
            return h * std::pow(q, nu * n) * std::pow(p, -mu * n) *
                   detail::quesne_num(p, q, n);
        }
        case Kind::kalnins: {
            const double l = spec.extra("l", 1.0), lambda = spec.extra("lambda", 0.0);
            return l * l * std::pow(q, lambda - n) * detail::heine_num(q, n);
        }
        case Kind::tamm_dancoff:
            return n * std::pow(q, n - 1);
        case Kind::feinsilver:
            return detail::heine_num(1.0 / (q * q), n);
        case Kind::biedenharn_macfarlane:
            return (std::pow(q, n) - std::pow(q, -n)) / (q - 1.0 / q);
        case Kind::calogero_vasiliev: {
            const double nu = spec.extra("nu", 0.0);
            return n % 2 == 0 ? double(n) : n + 2.0 * nu;
        }
        case Kind::chung: {
            const double alpha = spec.extra("alpha", 1.0), beta = spec.extra("beta", 0.0);
            if (alpha == 1.0) return n * std::pow(q, n - 1 + beta);
            return std::pow(q, beta) * (std::pow(q, n) - std::pow(q, alpha * n)) /
                   (q - std::pow(q, alpha));
        }
        case Kind::borzov: {
            const double alpha = spec.extra("alpha", 1.0), beta = spec.extra("beta", 0.0);
            const double gamma = spec.extra("gamma", 1.0);
            if (alpha == gamma) return n * std::pow(q, gamma * (n - 1) + beta);
            return std::pow(q, beta) *
                   (std::pow(q, gamma * n) - std::pow(q, alpha * n)) /
                   (std::pow(q, gamma) - std::pow(q, alpha));
        }
        case Kind::brzezinski: {
            const double alpha = spec.extra("alpha", 0.0);
            return (std::pow(q, n) - std::pow(q, -n)) / (q - 1.0 / q) +
                   2.0 * alpha * (std::pow(q, n) - sgn * std::pow(q, -n)) / (q + 1.0 / q);
        }
        case Kind::burban: {
            const double alpha = spec.extra("alpha", 1.0), beta = spec.extra("beta", 0.0);
            const double gamma = spec.extra("gamma", 1.0), nu = spec.extra("nu", 0.0);
            if (alpha == gamma)
                return std::pow(q, gamma * (n - 1) + beta) * (n + nu * (1.0 - sgn));
            return std::pow(q, beta) *
                   ((std::pow(q, gamma * n) - std::pow(q, alpha * n)) /
                        (std::pow(q, gamma) - std::pow(q, alpha)) +
                    2.0 * nu * (std::pow(q, gamma * n) - sgn * std::pow(q, alpha * n)) /
                        (std::pow(q, gamma) + std::pow(q, alpha)));
        }
        case Kind::baloitcha: {
            const double nu = spec.extra("nu", 1.0), alpha = spec.extra("alpha", 1.0);
            const double beta = spec.extra("beta", 0.0), gamma = spec.extra("gamma", 0.0);
            const double pn = std::pow(p, nu), qa = std::pow(q, alpha);
            if (pn == qa)
                return std::pow(q, beta + alpha * (n - 1)) * (n + gamma * (1.0 - sgn));
            return std::pow(q, beta) *
                   ((std::pow(p, nu * n) - std::pow(q, alpha * n)) / (pn - qa) +
                    2.0 * gamma * (std::pow(p, nu * n) - sgn * std::pow(q, alpha * n)) /
                        (pn + qa));
        }
        case Kind::rational_rRs: {
            const auto a = indexed_extras(spec, "a"), b = indexed_extras(spec, "b");
            const auto c = indexed_extras(spec, "c"), d = indexed_extras(spec, "d");
            const int r = static_cast<int>(a.size()), s = static_cast<int>(c.size());
            const double pm = std::pow(p, n - 1), qm = std::pow(q, n - 1);
            double num = std::pow(p, n) - std::pow(q, n);
            for (size_t i = 0; i < c.size(); ++i) num *= c[i] * pm - d[i] * qm;
            double den = ipow(-std::pow(q / p, n - 1), 1 + s - r);
            for (size_t j = 0; j < a.size(); ++j) den *= a[j] * pm - b[j] * qm;
            if (den == 0.0)
                throw PoleHit("rational structure function pole at n=" + std::to_string(n));
            return num / den;
        }
    }
    throw UnsupportedKind("unknown kind enum value");
}

// ---- factorials and binomials ----------------------------------------------

inline constexpr int factorial_overflow_threshold = 300;

inline double rpq_factorial(const DeformationSpec& spec, int n) {
    if (n < 0) throw DomainError("factorial requires n >= 0");
    if (n > factorial_overflow_threshold)
        throw OverflowRisk("factorial order " + std::to_string(n) +
                           " exceeds the direct-product threshold; use rpq_log_factorial");
    double f = 1.0;
    for (int k = 1; k <= n; ++k) f *= rpq_number(spec, k);
    return f;
}

struct SignedLog {
    double log_abs = 0.0; // log of the absolute value; -inf when the value is 0
    double sign = 1.0;    // -1, 0 or +1
    double value() const { return sign * std::exp(log_abs); }
};

inline SignedLog rpq_log_factorial(const DeformationSpec& spec, int n) {
    if (n < 0) throw DomainError("factorial requires n >= 0");
    SignedLog out;
    for (int k = 1; k <= n; ++k) {
        const double v = rpq_number(spec, k);
        if (v == 0.0) {
            out.sign = 0.0;
            out.log_abs = -std::numeric_limits<double>::infinity();
            return out;
        }
        out.log_abs += std::log(std::abs(v));
        if (v < 0.0) out.sign = -out.sign;
    }
    return out;
}

inline double rpq_binomial(const DeformationSpec& spec, int n, int k) {
    if (k < 0 || k > n) return 0.0;
    const double den = rpq_factorial(spec, k) * rpq_factorial(spec, n - k);
    if (den == 0.0) throw DivisionByZero("vanishing factorial in binomial denominator");
    return rpq_factorial(spec, n) / den;
}

// Single-parameter Gaussian binomial, used as an independent cross-check.
inline double gaussian_binomial(double q, int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
        r *= (1.0 - std::pow(q, n - k + i)) / (1.0 - std::pow(q, i));
    return r;
}

// ((a,b);(p,q))_n = prod_{k=0}^{n-1} (a p^k - b q^k)
template <class T>
T pq_shifted_factorial(T a, T b, double p, double q, int n) {
    if (n < 0) throw DomainError("shifted factorial requires n >= 0");
    T r = T(1);
    double pk = 1.0, qk = 1.0;
    for (int k = 0; k < n; ++k) {
        r *= a * pk - b * qk;
        pk *= p;
        qk *= q;
    }
    return r;
}

// ---- noncommutative binomial theorem, matrix realisation --------------------
//
// For xy = w yx and ba = v ab (x,y commuting with a,b), checks
//   (ax + by)^n = sum_k C(n,k) a^{n-k} b^k y^k x^{n-k}
// on the faithful-to-degree-n realisation x = shift, y = diag(w^-j) acting on
// one tensor factor and a = shift, b = diag(v^j) on the other.
inline double nc_binomial_residual(double w, double v,
                                   const std::function<double(int, int)>& binom,
                                   int n) {
    using Eigen::MatrixXd;
    const int d = n + 1;
    MatrixXd S = MatrixXd::Zero(d, d);
    for (int j = 0; j + 1 < d; ++j) S(j + 1, j) = 1.0;
    MatrixXd W = MatrixXd::Zero(d, d), V = MatrixXd::Zero(d, d);
    for (int j = 0; j < d; ++j) {
        W(j, j) = std::pow(w, -j);
        V(j, j) = std::pow(v, j);
    }
    const MatrixXd I = MatrixXd::Identity(d, d);
    const MatrixXd X = kron(I, S), Y = kron(I, W);
    const MatrixXd A = kron(S, I), B = kron(V, I);

    const MatrixXd M = A * X + B * Y;
    MatrixXd lhs = MatrixXd::Identity(d * d, d * d);
    for (int i = 0; i < n; ++i) lhs = lhs * M;

    std::vector<MatrixXd> Ap{MatrixXd::Identity(d * d, d * d)}, Bp = Ap, Yp = Ap, Xp = Ap;
    for (int i = 1; i <= n; ++i) {
        Ap.push_back(Ap.back() * A);
        Bp.push_back(Bp.back() * B);
        Yp.push_back(Yp.back() * Y);
        Xp.push_back(Xp.back() * X);
    }
    MatrixXd rhs = MatrixXd::Zero(d * d, d * d);
    for (int k = 0; k <= n; ++k)
        rhs += binom(n, k) * Ap[n - k] * Bp[k] * Yp[k] * Xp[n - k];

    return max_abs(lhs - rhs) / std::max(1.0, max_abs(lhs));
}

// ---- identity suites ---------------------------------------------------------
//
// Each suite evaluates a family of closed-form identities on an integer grid and
// returns, per identity, the worst relative residual encountered.

using ResidualMap = std::map<std::string, double>;

namespace detail {

struct ResidualRecorder {
    ResidualMap& out;
    void operator()(const std::string& key, double lhs, double rhs) const {
        double& slot = out[key];
        slot = std::max(slot, rel_residual(lhs, rhs));
    }
    void raw(const std::string& key, double res) const {
        double& slot = out[key];
        slot = std::max(slot, res);
    }
};

} // namespace detail

inline ResidualMap js_identity_suite(const DeformationSpec& spec, int nmax = 12) {
    if (spec.kind != Kind::jagannathan_srinivasa)
        throw UnsupportedKind("js_identity_suite requires kind jagannathan_srinivasa");
    const double p = spec.p, q = spec.q;
    auto N = [&](int n) { return rpq_number(spec, n); };
    auto B = [&](int n, int k) { return rpq_binomial(spec, n, k); };

    ResidualMap out;
    detail::ResidualRecorder rec{out};

    for (int n = 1; n <= nmax; ++n) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += std::pow(p, n - 1 - k) * std::pow(q, k);
        rec("geometric_sum", N(n), s);
    }
    for (int n = 0; n <= nmax; ++n)
        for (int m = 0; m <= nmax; ++m) {
            rec("addition_1", N(n + m), std::pow(p, m) * N(n) + std::pow(q, n) * N(m));
            rec("addition_2", N(n + m), std::pow(q, m) * N(n) + std::pow(p, n) * N(m));
            rec("subtraction_1", N(n - m),
                std::pow(p, -m) * N(n) - std::pow(q, n) * std::pow(p * q, -m) * N(m));
            rec("subtraction_2", N(n - m),
                std::pow(q, -m) * N(n) - std::pow(p, n) * std::pow(p * q, -m) * N(m));
        }
    for (int m = 1; m <= nmax; ++m)
        rec("negation", N(-m), -std::pow(p * q, -m) * N(m));
    for (int n = 2; n <= nmax; ++n)
        rec("recursion", N(n), N(2) * N(n - 1) - p * q * N(n - 2));

    for (int n = 0; n <= nmax; ++n)
        for (int k = 0; k <= n; ++k) {
            rec("binomial_symmetry", B(n, k), B(n, n - k));
            rec("binomial_gauss", B(n, k),
                std::pow(p, k * (n - k)) * gaussian_binomial(q / p, n, k));
        }
    for (int n = 0; n < nmax; ++n)
        for (int k = 0; k <= n + 1; ++k) {
            rec("pascal_1", B(n + 1, k),
                std::pow(p, k) * B(n, k) + std::pow(q, n + 1 - k) * B(n, k - 1));
            rec("pascal_2", B(n + 1, k),
                std::pow(q, k) * B(n, k) + std::pow(p, n + 1 - k) * B(n, k - 1));
            if (n >= 1)
                rec("pascal_3", B(n + 1, k),
                    std::pow(p, k) * B(n, k) + std::pow(p, n + 1 - k) * B(n, k - 1) -
                        (std::pow(p, n) - std::pow(q, n)) * B(n - 1, k - 1));
        }

    for (const auto [a, b] : {std::pair{1.3, 0.7}, std::pair{0.4, 1.1}})
        for (int n = 0; n <= nmax; ++n) {
            double s = 0.0;
            for (int k = 0; k <= n; ++k)
                s += B(n, k) * ipow_sign(k) *
                     std::pow(p, 0.5 * (n - k) * (n - k - 1)) *
                     std::pow(q, 0.5 * k * (k - 1)) * std::pow(a, n - k) * std::pow(b, k);
            rec("shifted_factorial_expansion", pq_shifted_factorial(a, b, p, q, n), s);
        }
    for (int s = 1; s <= 3; ++s)
        for (int n = 0; n <= nmax; ++n)
            rec("shifted_factorial_ladder",
                pq_shifted_factorial(std::pow(p, s + 1), std::pow(q, s + 1), p, q, n),
                pq_shifted_factorial(std::pow(p, s), std::pow(q, s), p, q, n + 1) /
                    (std::pow(p, s) - std::pow(q, s)));

    for (int n = 1; n <= std::min(nmax, 12); ++n)
        rec.raw("nc_binomial", nc_binomial_residual(q, p, B, n));

    return out;
}

inline ResidualMap cj_identity_suite(const DeformationSpec& spec, int nmax = 12) {
    if (spec.kind != Kind::chakrabarti_jagannathan)
        throw UnsupportedKind("cj_identity_suite requires kind chakrabarti_jagannathan");
    const double p = spec.p, q = spec.q;
    auto N = [&](int n) { return rpq_number(spec, n); };
    auto B = [&](int n, int k) { return rpq_binomial(spec, n, k); };
    DeformationSpec js{Kind::jagannathan_srinivasa, 1.0 / p, q, {}};

    ResidualMap out;
    detail::ResidualRecorder rec{out};

    for (int n = 0; n <= nmax; ++n) {
        rec("bridge", N(n), rpq_number(js, n));
        for (int m = 0; m <= nmax; ++m) {
            rec("addition_1", N(n + m), std::pow(p, -m) * N(n) + std::pow(q, n) * N(m));
            rec("addition_2", N(n + m), std::pow(q, m) * N(n) + std::pow(p, -n) * N(m));
            rec("subtraction_1", N(n - m),
                std::pow(p, m) * N(n) - std::pow(q, n) * std::pow(q / p, -m) * N(m));
            rec("subtraction_2", N(n - m),
                std::pow(q, -m) * N(n) - std::pow(p, -n) * std::pow(q / p, -m) * N(m));
        }
    }
    for (int m = 1; m <= nmax; ++m)
        rec("negation", N(-m), -std::pow(q / p, -m) * N(m));
    for (int n = 2; n <= nmax; ++n)
        rec("recursion", N(n), N(2) * N(n - 1) - (q / p) * N(n - 2));

    for (int n = 0; n <= nmax; ++n)
        for (int k = 0; k <= n; ++k) {
            rec("binomial_symmetry", B(n, k), B(n, n - k));
            rec("binomial_gauss", B(n, k),
                std::pow(p, -k * (n - k)) * gaussian_binomial(q * p, n, k));
        }
    for (int n = 0; n < nmax; ++n)
        for (int k = 0; k <= n + 1; ++k) {
            rec("pascal_1", B(n + 1, k),
                std::pow(p, -k) * B(n, k) + std::pow(q, n + 1 - k) * B(n, k - 1));
            rec("pascal_2", B(n + 1, k),
                std::pow(q, k) * B(n, k) + std::pow(p, -(n + 1 - k)) * B(n, k - 1));
            if (n >= 1)
                rec("pascal_3", B(n + 1, k),
                    std::pow(p, -k) * B(n, k) + std::pow(p, -(n + 1 - k)) * B(n, k - 1) -
                        (std::pow(p, -n) - std::pow(q, n)) * B(n - 1, k - 1));
        }

    for (int n = 1; n <= std::min(nmax, 12); ++n)
        rec.raw("nc_binomial", nc_binomial_residual(q, 1.0 / p, B, n));

    return out;
}

inline ResidualMap quesne_identity_suite(const DeformationSpec& spec, int nmax = 12) {
    if (spec.kind != Kind::quesne)
        throw UnsupportedKind("quesne_identity_suite requires kind quesne");
    const double p = spec.p, q = spec.q;
    auto N = [&](int n) { return rpq_number(spec, n); };
    auto B = [&](int n, int k) { return rpq_binomial(spec, n, k); };
    DeformationSpec js{Kind::jagannathan_srinivasa, p, 1.0 / q, {}};
    const double c = (q - 1.0 / p) / (p - 1.0 / q);

    ResidualMap out;
    detail::ResidualRecorder rec{out};

    for (int n = 0; n <= nmax; ++n) {
        rec("bridge", rpq_number(js, n), c * N(n));
        for (int m = 0; m <= nmax; ++m) {
            rec("addition_1", N(n + m), std::pow(q, -m) * N(n) + std::pow(p, n) * N(m));
            rec("addition_2", N(n + m), std::pow(p, m) * N(n) + std::pow(q, -n) * N(m));
            rec("subtraction_1", N(n - m),
                std::pow(q, m) * N(n) - std::pow(p, n - m) * std::pow(q, m) * N(m));
            rec("subtraction_2", N(n - m),
                std::pow(p, -m) * N(n) - std::pow(p, -m) * std::pow(q, m - n) * N(m));
        }
    }
    for (int m = 1; m <= nmax; ++m)
        rec("negation", N(-m), -std::pow(p, -m) * std::pow(q, m) * N(m));
    for (int n = 2; n <= nmax; ++n)
        rec("recursion", N(n), c * N(2) * N(n - 1) - (p / q) * N(n - 2));

    for (int n = 0; n <= nmax; ++n)
        for (int k = 0; k <= n; ++k) {
            rec("binomial_symmetry", B(n, k), B(n, n - k));
            rec("binomial_bridge", B(n, k), rpq_binomial(js, n, k));
            rec("binomial_gauss", B(n, k),
                std::pow(p, k * (n - k)) * gaussian_binomial(1.0 / (p * q), n, k));
        }
    for (int n = 0; n < nmax; ++n)
        for (int k = 0; k <= n + 1; ++k) {
            rec("pascal_1", B(n + 1, k),
                std::pow(p, k) * B(n, k) + std::pow(q, -(n + 1 - k)) * B(n, k - 1));
            if (n >= 1)
                rec("pascal_3", B(n + 1, k),
                    std::pow(p, k) * B(n, k) + std::pow(p, n + 1 - k) * B(n, k - 1) -
                        (std::pow(p, n) - std::pow(q, -n)) * B(n - 1, k - 1));
        }

    for (int n = 1; n <= std::min(nmax, 12); ++n)
        rec.raw("nc_binomial", nc_binomial_residual(1.0 / q, p, B, n));

    return out;
}

inline ResidualMap hn_identity_suite(const DeformationSpec& spec, int nmax = 12) {
    if (spec.kind != Kind::hounkonnou_ngompe)
        throw UnsupportedKind("hn_identity_suite requires kind hounkonnou_ngompe");
    const double p = spec.p, q = spec.q;
    const double mu = spec.extra("mu", 1.0), nu = spec.extra("nu", 1.0);
    const double h = spec.extra("h", 1.0);
    auto N = [&](int n) { return rpq_number(spec, n); };
    auto B = [&](int n, int k) { return rpq_binomial(spec, n, k); };
    DeformationSpec qs{Kind::quesne, p, q, {}};
    auto pw = [](double base, double e) { return std::pow(base, e); };

    ResidualMap out;
    detail::ResidualRecorder rec{out};

    for (int n = 0; n <= nmax; ++n) {
        rec("bridge", N(n), h * pw(q, nu * n) * pw(p, -mu * n) * rpq_number(qs, n));
        for (int m = 0; m <= nmax; ++m) {
            rec("addition_1", N(n + m),
                pw(q, nu * m - m) * pw(p, -mu * m) * N(n) +
                    pw(q, nu * n) * pw(p, -mu * n + n) * N(m));
            rec("addition_2", N(n + m),
                pw(q, nu * m) * pw(p, -mu * m + m) * N(n) +
                    pw(q, nu * n - n) * pw(p, -mu * n) * N(m));
            rec("subtraction_1", N(n - m),
                pw(q, (1.0 - nu) * m) * pw(p, mu * m) * N(n) -
                    pw(q, nu * n - 2.0 * nu * m + m) *
                        pw(p, -mu * n + 2.0 * mu * m + n - m) * N(m));
            rec("subtraction_2", N(n - m),
                pw(q, -nu * m) * pw(p, mu * m - m) * N(n) -
                    pw(q, nu * n - 2.0 * nu * m + m - n) *
                        pw(p, -mu * n + 2.0 * mu * m - m) * N(m));
        }
    }
    for (int m = 1; m <= nmax; ++m)
        rec("negation", N(-m),
            -pw(q, -2.0 * nu * m + m) * pw(p, 2.0 * mu * m - m) * N(m));
    const double rc = (q - 1.0 / p) / (p - 1.0 / q) * pw(q, -nu) * pw(p, mu) / h;
    for (int n = 2; n <= nmax; ++n)
        rec("recursion", N(n),
            rc * N(2) * N(n - 1) - pw(q, 2.0 * nu - 1.0) * pw(p, 1.0 - 2.0 * mu) * N(n - 2));

    const double w = pw(q, nu) / pw(p, mu);
    const double phi1 = pw(p, 1.0 - mu) * pw(q, nu);
    const double phi2 = pw(p, -mu) * pw(q, nu - 1.0);
    const double phi3 = (q - 1.0 / p) / h;
    for (int n = 0; n <= nmax; ++n)
        for (int k = 0; k <= n; ++k) {
            rec("binomial_symmetry", B(n, k), B(n, n - k));
            rec("binomial_bridge", B(n, k),
                std::pow(w, k * (n - k)) * rpq_binomial(qs, n, k));
        }
    for (int n = 0; n < nmax; ++n)
        for (int k = 0; k <= n + 1; ++k) {
            rec("pascal_1", B(n + 1, k),
                std::pow(phi1, k) * B(n, k) + std::pow(phi2, n + 1 - k) * B(n, k - 1));
            rec("pascal_2", B(n + 1, k),
                std::pow(phi2, k) * B(n, k) + std::pow(phi1, n + 1 - k) * B(n, k - 1));
            if (n >= 1)
                rec("pascal_3", B(n + 1, k),
                    std::pow(phi1, k) * B(n, k) + std::pow(phi1, n + 1 - k) * B(n, k - 1) -
                        phi3 * N(n) * B(n - 1, k - 1));
        }

    return out;
}

inline ResidualMap run_identity_suite(const DeformationSpec& spec, int nmax = 12) {
    switch (spec.kind) {
        case Kind::jagannathan_srinivasa: return js_identity_suite(spec, nmax);
        case Kind::chakrabarti_jagannathan: return cj_identity_suite(spec, nmax);
        case Kind::quesne: return quesne_identity_suite(spec, nmax);
        case Kind::hounkonnou_ngompe: return hn_identity_suite(spec, nmax);
        default:
            throw UnsupportedKind("no identity suite for kind " + kind_name(spec.kind));
    }
}

} // namespace rpq
