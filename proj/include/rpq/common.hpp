#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace rpq {

using cplx = std::complex<double>;

inline constexpr double default_abs_tol = 1e-12;
inline constexpr double default_rel_tol = 1e-9;

struct PrecisionPolicy {
    bool log_space = false;
    double abs_tol = default_abs_tol;
    double rel_tol = default_rel_tol;
};

struct SeriesEvalConfig {
    int max_terms = 200;      // safety cap on summed terms
    double abs_tol = 1e-15;   // stop when |term| falls below this
    double ratio_guard = 0.999; // consecutive-term ratio must drop below this
};

// ---- error taxonomy -------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct UnsupportedKind : Error { using Error::Error; };
struct OverflowRisk : Error { using Error::Error; };
struct OutsideRadius : Error { using Error::Error; };
struct NonConvergent : Error { using Error::Error; };
struct PoleHit : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

struct PhiConditionViolated : Error {
    int n = -1, k = -1;
    double residual = 0.0;
    PhiConditionViolated(int n_, int k_, double r_)
        : Error("phi-triple condition violated at (n=" + std::to_string(n_) +
                ", k=" + std::to_string(k_) + "), residual " + std::to_string(r_)),
          n(n_), k(k_), residual(r_) {}
};

// A vanishing structure-function value phi(n0)=0 truncates the state space to
// dimension n0; reported as a signal, not a computation failure.
struct FiniteDimensional : Error {
    int n0;
    explicit FiniteDimensional(int n0_)
        : Error("structure function vanishes at n=" + std::to_string(n0_) +
                "; representation is " + std::to_string(n0_) + "-dimensional"),
          n0(n0_) {}
};

// ---- small numeric helpers ------------------------------------------------

inline bool is_close(double a, double b,
                     double abs_tol = default_abs_tol,
                     double rel_tol = default_rel_tol) {
    const double d = std::abs(a - b);
    return d <= abs_tol || d <= rel_tol * std::max(std::abs(a), std::abs(b));
}

// |a-b| scaled down by the magnitude of the operands once they exceed 1,
// so residuals of large and small identities are comparable.
inline double rel_residual(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

inline double rel_residual(const cplx& a, const cplx& b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

inline double ipow_sign(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

} // namespace rpq
