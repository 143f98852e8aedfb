#pragma once

#include <cmath>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "rpq/common.hpp"
#include "rpq/fock.hpp"
#include "rpq/linalg.hpp"
#include "rpq/numbers.hpp"
#include "rpq/spec.hpp"

namespace rpq {

// Hopf structure on the deformed oscillator algebra generated by A, A+, N:
//   coproduct  D(g) = g (x) k^{N+tau} + k^{-N-tau} (x) g      (g = A, A+)
//              D(N) = N (x) 1 + 1 (x) N + tau 1 (x) 1
//   counit     e(A) = e(A+) = 0,  e(N) = -tau,  e(1) = 1
//   antipode   S(A) = -k^{-1} A,  S(A+) = -k A+,  S(N) = -N - 2 tau
// extended multiplicatively to the grouplike tags k^{sN+c}:
//   D(k^{sN+c}) = k^{sN+s tau+c} (x) k^{sN},
//   e(k^{sN+c}) = k^{-s tau+c},  S(k^{sN+c}) = k^{-sN+c-2 s tau}.
// The commutator homomorphism carries weight gamma = 1 for every built-in:
//   D([A,A+]) = [A,A+] (x) k^{2N+2tau} + k^{-2N-2tau} (x) [A,A+].

struct HopfSpec {
    double kappa = 1.0;
    double tau = 0.0;
    double gamma = 1.0;
};

inline HopfSpec hopf_spec(const DeformationSpec& spec) {
    HopfSpec hs;
    hs.tau = spec.extra("tau", 0.0);
    switch (spec.kind) {
        case Kind::jagannathan_srinivasa:
        case Kind::chakrabarti_jagannathan:
        case Kind::quesne:
            hs.kappa = 1.0;
            break;
        case Kind::hounkonnou_ngompe: {
            const double mu = spec.extra("mu", 1.0), nu = spec.extra("nu", 1.0);
            hs.kappa = std::pow(spec.q, nu) / std::pow(spec.p, mu - 1.0);
            break;
        }
        default:
            throw UnsupportedKind("no Hopf structure catalogued for kind " +
                                  kind_name(spec.kind));
    }
    return hs;
}

namespace hopf_detail {

enum class Gen { lower, raise, number, unit, diag };

struct Leg {
    Gen g;
    double s = 0.0, c = 0.0; // exponents for diag legs k^{sN+c}
};

struct Term {
    double coeff;
    std::vector<Leg> legs;
};

using Element = std::vector<Term>;

class Checker {
public:
    Checker(const DeformationSpec& spec, const HopfSpec& hs, int D)
        : hs_(hs), D_(D) {
        const FockOperators ops = fock_operators(spec, D);
        A_ = ops.a;
        Ad_ = ops.ad;
        N_ = ops.n;
        I_ = Eigen::MatrixXd::Identity(D, D);
    }

    Eigen::MatrixXd leg_matrix(const Leg& l) const {
        switch (l.g) {
            case Gen::lower: return A_;
            case Gen::raise: return Ad_;
            case Gen::number: return N_;
            case Gen::unit: return I_;
            case Gen::diag: {
                Eigen::MatrixXd m = Eigen::MatrixXd::Zero(D_, D_);
                for (int i = 0; i < D_; ++i)
                    m(i, i) = std::pow(hs_.kappa, l.s * i + l.c);
                return m;
            }
        }
        throw Error("unreachable leg kind");
    }

    double counit_leg(const Leg& l) const {
        switch (l.g) {
            case Gen::lower:
            case Gen::raise: return 0.0;
            case Gen::number: return -hs_.tau;
            case Gen::unit: return 1.0;
            case Gen::diag: return std::pow(hs_.kappa, -l.s * hs_.tau + l.c);
        }
        throw Error("unreachable leg kind");
    }

    std::vector<std::pair<double, Leg>> antipode_leg(const Leg& l) const {
        switch (l.g) {
            case Gen::lower: return {{-1.0 / hs_.kappa, l}};
            case Gen::raise: return {{-hs_.kappa, l}};
            case Gen::number:
                return {{-1.0, l}, {-2.0 * hs_.tau, Leg{Gen::unit}}};
            case Gen::unit: return {{1.0, l}};
            case Gen::diag:
                return {{1.0, Leg{Gen::diag, -l.s, l.c - 2.0 * l.s * hs_.tau}}};
        }
        throw Error("unreachable leg kind");
    }

    std::vector<std::tuple<double, Leg, Leg>> coproduct_leg(const Leg& l) const {
        const double tau = hs_.tau;
        switch (l.g) {
            case Gen::lower:
            case Gen::raise:
                return {{1.0, l, Leg{Gen::diag, 1.0, tau}},
                        {1.0, Leg{Gen::diag, -1.0, -tau}, l}};
            case Gen::number:
                return {{1.0, l, Leg{Gen::unit}},
                        {1.0, Leg{Gen::unit}, l},
                        {tau, Leg{Gen::unit}, Leg{Gen::unit}}};
            case Gen::unit:
                return {{1.0, l, l}};
            case Gen::diag:
                return {{1.0, Leg{Gen::diag, l.s, l.s * tau + l.c},
                         Leg{Gen::diag, l.s, 0.0}}};
        }
        throw Error("unreachable leg kind");
    }

    Element coproduct(const Leg& l) const {
        Element out;
        for (const auto& [w, a, b] : coproduct_leg(l))
            out.push_back({w, {a, b}});
        return out;
    }

    Element coproduct_at(const Element& e, size_t pos) const {
        Element out;
        for (const Term& t : e)
            for (const auto& [w, a, b] : coproduct_leg(t.legs[pos])) {
                Term nt{t.coeff * w, {}};
                for (size_t i = 0; i < t.legs.size(); ++i) {
                    if (i == pos) {
                        nt.legs.push_back(a);
                        nt.legs.push_back(b);
                    } else {
                        nt.legs.push_back(t.legs[i]);
                    }
                }
                out.push_back(nt);
            }
        return out;
    }

    Element counit_at(const Element& e, size_t pos) const {
        Element out;
        for (const Term& t : e) {
            Term nt{t.coeff * counit_leg(t.legs[pos]), {}};
            if (nt.coeff == 0.0) continue;
            for (size_t i = 0; i < t.legs.size(); ++i)
                if (i != pos) nt.legs.push_back(t.legs[i]);
            out.push_back(nt);
        }
        return out;
    }

    Element antipode_at(const Element& e, size_t pos) const {
        Element out;
        for (const Term& t : e)
            for (const auto& [w, nl] : antipode_leg(t.legs[pos])) {
                Term nt = t;
                nt.coeff *= w;
                nt.legs[pos] = nl;
                out.push_back(nt);
            }
        return out;
    }

    // tensor-product assembly of a term list
    Eigen::MatrixXd assemble(const Element& e, int legs) const {
        Eigen::Index dim = 1;
        for (int i = 0; i < legs; ++i) dim *= D_;
        Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
        for (const Term& t : e) {
            Eigen::MatrixXd m = Eigen::MatrixXd::Identity(1, 1);
            for (const Leg& l : t.legs) m = kron(m, leg_matrix(l)).eval();
            out += t.coeff * m;
        }
        return out;
    }

    // in-place multiplication of the legs (the Hopf multiplication map)
    Eigen::MatrixXd multiply_legs(const Element& e) const {
        Eigen::MatrixXd out = Eigen::MatrixXd::Zero(D_, D_);
        for (const Term& t : e) {
            Eigen::MatrixXd m = I_;
            for (const Leg& l : t.legs) m = m * leg_matrix(l);
            out += t.coeff * m;
        }
        return out;
    }

    int dim() const { return D_; }

private:
    HopfSpec hs_;
    int D_;
    Eigen::MatrixXd A_, Ad_, N_, I_;
};

// Largest |entry| over rows/columns whose tensor indices all stay below
// D - margin (the truncation-safe interior).
inline double masked_max_abs(const Eigen::MatrixXd& m, int D, int legs, int margin) {
    const int keep_below = D - margin;
    auto keep = [&](Eigen::Index flat) {
        for (int i = 0; i < legs; ++i) {
            if (flat % D >= keep_below) return false;
            flat /= D;
        }
        return true;
    };
    std::vector<bool> ok(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i) ok[i] = keep(i);
    double worst = 0.0;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        if (!ok[r]) continue;
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            if (ok[c]) worst = std::max(worst, std::abs(m(r, c)));
    }
    return worst;
}

} // namespace hopf_detail

inline ResidualMap hopf_axiom_residuals(const DeformationSpec& spec, int D,
                                        int margin_single = 1, int margin_hom = 2) {
    using namespace hopf_detail;
    const HopfSpec hs = hopf_spec(spec);
    Checker ck(spec, hs, D);

    ResidualMap out;
    auto record = [&](const std::string& key, double v) {
        double& slot = out[key];
        slot = std::max(slot, v);
    };

    const std::vector<Leg> generators = {
        Leg{Gen::lower}, Leg{Gen::raise}, Leg{Gen::number}};

    for (const Leg& g : generators) {
        const Element dg = ck.coproduct(g);

        {
            const Eigen::MatrixXd lhs = ck.assemble(ck.coproduct_at(dg, 0), 3);
            const Eigen::MatrixXd rhs = ck.assemble(ck.coproduct_at(dg, 1), 3);
            const double scale =
                std::max({1.0, masked_max_abs(lhs, D, 3, margin_single),
                          masked_max_abs(rhs, D, 3, margin_single)});
            record("coassociativity",
                   masked_max_abs(lhs - rhs, D, 3, margin_single) / scale);
        }

        const Eigen::MatrixXd gm = ck.leg_matrix(g);
        const double gscale = std::max(1.0, max_abs(gm));
        record("counit_left",
               masked_max_abs(ck.assemble(ck.counit_at(dg, 0), 1) - gm, D, 1,
                              margin_single) /
                   gscale);
        record("counit_right",
               masked_max_abs(ck.assemble(ck.counit_at(dg, 1), 1) - gm, D, 1,
                              margin_single) /
                   gscale);

        const Eigen::MatrixXd eps_target =
            ck.counit_leg(g) * Eigen::MatrixXd::Identity(D, D);
        record("antipode_left",
               masked_max_abs(ck.multiply_legs(ck.antipode_at(dg, 0)) - eps_target, D, 1,
                              margin_single));
        record("antipode_right",
               masked_max_abs(ck.multiply_legs(ck.antipode_at(dg, 1)) - eps_target, D, 1,
                              margin_single));
    }

    // coproduct compatibility with the number-ladder relations
    {
        const Eigen::MatrixXd dA = ck.assemble(ck.coproduct(Leg{Gen::lower}), 2);
        const Eigen::MatrixXd dAd = ck.assemble(ck.coproduct(Leg{Gen::raise}), 2);
        const Eigen::MatrixXd dN = ck.assemble(ck.coproduct(Leg{Gen::number}), 2);
        const double scale = std::max({1.0, max_abs(dA), max_abs(dN)});
        record("number_compatibility",
               masked_max_abs(dN * dA - dA * dN + dA, D, 2, margin_single) / scale);
        record("number_compatibility",
               masked_max_abs(dN * dAd - dAd * dN - dAd, D, 2, margin_single) / scale);

        // gamma-weighted commutator homomorphism (gamma = 1 for built-ins)
        const Eigen::MatrixXd A = ck.leg_matrix(Leg{Gen::lower});
        const Eigen::MatrixXd Ad = ck.leg_matrix(Leg{Gen::raise});
        const Eigen::MatrixXd C = A * Ad - hs.gamma * Ad * A;
        const Eigen::MatrixXd U2 = ck.leg_matrix(Leg{Gen::diag, 2.0, 2.0 * hs.tau});
        const Eigen::MatrixXd U2i = ck.leg_matrix(Leg{Gen::diag, -2.0, -2.0 * hs.tau});
        const Eigen::MatrixXd lhs = dA * dAd - hs.gamma * dAd * dA;
        const Eigen::MatrixXd rhs = kron(C, U2) + kron(U2i, C);
        const double hscale = std::max({1.0, masked_max_abs(lhs, D, 2, margin_hom),
                                        masked_max_abs(rhs, D, 2, margin_hom)});
        record("commutator_homomorphism",
               masked_max_abs(lhs - rhs, D, 2, margin_hom) / hscale);
    }
    return out;
}

} // namespace rpq
