#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "rpq/common.hpp"
#include "rpq/linalg.hpp"
#include "rpq/numbers.hpp"
#include "rpq/spec.hpp"
#include "rpq/structure.hpp"

namespace rpq {

inline constexpr int max_fock_dim = 2048;

struct FockOperators {
    Eigen::MatrixXd a, ad, n;
    int dim() const { return static_cast<int>(n.rows()); }
};

inline FockOperators fock_operators(const DeformationSpec& spec, int D) {
    if (D < 2 || D > max_fock_dim)
        throw RangeError("Fock dimension must lie in [2, " +
                         std::to_string(max_fock_dim) + "]");
    FockOperators ops;
    ops.a = Eigen::MatrixXd::Zero(D, D);
    ops.n = Eigen::MatrixXd::Zero(D, D);
    for (int i = 0; i < D; ++i) ops.n(i, i) = i;
    for (int i = 0; i + 1 < D; ++i) {
        const double phi = rpq_number(spec, i + 1);
        if (phi < 0.0)
            throw DomainError("structure function negative at n=" + std::to_string(i + 1) +
                              "; no Hermitian ladder realisation at this dimension");
        ops.a(i, i + 1) = std::sqrt(phi);
    }
    ops.ad = ops.a.transpose();
    return ops;
}

// Diagonal matrix g(N) for a scalar function g of the number operator.
inline Eigen::MatrixXd diag_of_n(int D, const std::function<double(int)>& g) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(D, D);
    for (int i = 0; i < D; ++i) m(i, i) = g(i);
    return m;
}

namespace detail {

// The second closed commutation relation a a† - F a†a = G carried by the
// two-parameter families (the mirror of the catalogued one).
inline bool second_fg(const DeformationSpec& spec, FGSpec& out) {
    const double p = spec.p, q = spec.q;
    switch (spec.kind) {
        case Kind::jagannathan_srinivasa:
            out = {[q](int) { return q; }, [p](int k) { return std::pow(p, k); }};
            return true;
        case Kind::chakrabarti_jagannathan:
            out = {[p](int) { return 1.0 / p; }, [q](int k) { return std::pow(q, k); }};
            return true;
        case Kind::quesne:
            out = {[q](int) { return 1.0 / q; },
                   [p, q](int k) { return std::pow(p, k + 1) / q; }};
            return true;
        default:
            return false;
    }
}

} // namespace detail

// Residuals of the ladder algebra on a truncated Fock space.  Relations whose
// top row/column is polluted by the truncation are evaluated on the interior
// (D-1)x(D-1) block.  All residuals are relative to the participating entries.
inline ResidualMap fock_algebra_residuals(const DeformationSpec& spec, int D) {
    const FockOperators ops = fock_operators(spec, D);
    const Eigen::MatrixXd aad = ops.a * ops.ad;
    const Eigen::MatrixXd ada = ops.ad * ops.a;
    const Eigen::MatrixXd fN = diag_of_n(D, [&](int k) { return rpq_number(spec, k); });
    const Eigen::MatrixXd fN1 =
        diag_of_n(D, [&](int k) { return rpq_number(spec, k + 1); });

    ResidualMap out;
    const double ladder_scale = std::max(1.0, max_abs(ops.a));
    out["number_lower"] =
        max_abs(ops.n * ops.a - ops.a * ops.n + ops.a) / ladder_scale;
    out["number_raise"] =
        max_abs(ops.n * ops.ad - ops.ad * ops.n - ops.ad) / ladder_scale;
    out["structure_lower"] =
        max_abs(ada - fN) / std::max({1.0, max_abs(ada), max_abs(fN)});
    out["structure_raise"] =
        max_abs((aad - fN1).block(0, 0, D - 1, D - 1)) /
        std::max({1.0, max_abs(aad), max_abs(fN1)});

    auto relation_residual = [&](const FGSpec& fg) {
        const Eigen::MatrixXd Fn = diag_of_n(D, fg.F), Gn = diag_of_n(D, fg.G);
        const Eigen::MatrixXd lhs = aad - Fn * ada;
        return max_abs((lhs - Gn).block(0, 0, D - 1, D - 1)) /
               std::max({1.0, max_abs(aad), max_abs(Fn * ada), max_abs(Gn)});
    };
    try {
        out["fg_relation"] = relation_residual(builtin_fg(spec));
    } catch (const UnsupportedKind&) {
        // kinds without a scalar F/G closure still expose the number/structure checks
    }
    FGSpec second;
    if (detail::second_fg(spec, second)) out["fg_relation_dual"] = relation_residual(second);
    return out;
}

// ---- deformed oscillator diagnostics ----------------------------------------

// Energies and position/momentum variances of H = (hbar w/2)(a a† + a†a) in the
// number basis: E_n and variances are (hbar w/2)(phi(n) + phi(n+1)) up to the
// usual mass/frequency prefactors.
struct OscillatorLevel {
    int n;
    double energy;
    double dx2, dp2;   // position / momentum variance in |n>
    double product;    // dx2 * dp2
};

struct OscillatorReport {
    std::vector<OscillatorLevel> levels;
    double spectrum_residual; // closed form vs matrix diagonal, relative
};

inline OscillatorReport oscillator_report(const DeformationSpec& spec, int nmax,
                                          double hbar = 1.0, double m = 1.0,
                                          double omega = 1.0) {
    if (spec.kind != Kind::kalnins)
        throw UnsupportedKind("oscillator report is defined for kind kalnins");
    const double q = spec.q;
    const double l = spec.extra("l", 1.0), lambda = spec.extra("lambda", 0.0);
    const int D = nmax + 2;
    const FockOperators ops = fock_operators(spec, D);
    const Eigen::MatrixXd H = 0.5 * hbar * omega * (ops.a * ops.ad + ops.ad * ops.a);

    OscillatorReport rep;
    rep.spectrum_residual = 0.0;
    auto qnum = [&](int n) { return detail::heine_num(q, n); };
    for (int n = 0; n <= nmax; ++n) {
        OscillatorLevel lv;
        lv.n = n;
        const double bracket = l * l * std::pow(q, lambda - n - 1) *
                               (q * qnum(n) + qnum(n + 1));
        lv.energy = 0.5 * hbar * omega * bracket;
        lv.dx2 = hbar / (2.0 * m * omega) * bracket;
        lv.dp2 = 0.5 * hbar * m * omega * bracket;
        lv.product = lv.dx2 * lv.dp2;
        rep.spectrum_residual =
            std::max(rep.spectrum_residual, rel_residual(lv.energy, H(n, n)));
        rep.levels.push_back(lv);
    }
    return rep;
}

// Lattice-site diagnostics for the deformed position lattice x_n = sqrt(phi(n)).
struct SiteDiagnostics {
    std::vector<double> x;          // x_0 .. x_nmax
    double bound;                   // sqrt(l^2 q^lambda/(q-1)) when q > 1, else NaN
    double max_x;
    double worst_log_concavity;     // max of x_{n-1} x_{n+1} - x_n^2 (meaningful q < 1)
    double tail_ratio;              // x_{nmax-1} / x_nmax
};

inline SiteDiagnostics kalnins_site_diagnostics(const DeformationSpec& spec, int nmax) {
    if (spec.kind != Kind::kalnins)
        throw UnsupportedKind("site diagnostics are defined for kind kalnins");
    const double q = spec.q;
    const double l = spec.extra("l", 1.0), lambda = spec.extra("lambda", 0.0);
    SiteDiagnostics d;
    for (int n = 0; n <= nmax; ++n) {
        const double phi = rpq_number(spec, n);
        if (phi < 0.0) throw DomainError("negative structure function; lattice undefined");
        d.x.push_back(std::sqrt(phi));
    }
    d.bound = q > 1.0 ? std::sqrt(l * l * std::pow(q, lambda) / (q - 1.0))
                      : std::numeric_limits<double>::quiet_NaN();
    d.max_x = *std::max_element(d.x.begin(), d.x.end());
    d.worst_log_concavity = -std::numeric_limits<double>::infinity();
    for (int n = 1; n + 1 <= nmax; ++n) {
        // scale-normalised concavity defect; the raw difference of two huge
        // near-equal products drowns in rounding noise for growing lattices
        const double s = std::max(1.0, d.x[n] * d.x[n]);
        d.worst_log_concavity = std::max(
            d.worst_log_concavity, (d.x[n - 1] * d.x[n + 1] - d.x[n] * d.x[n]) / s);
    }
    d.tail_ratio = nmax >= 1 && d.x[nmax] != 0.0 ? d.x[nmax - 1] / d.x[nmax] : 0.0;
    return d;
}

} // namespace rpq
