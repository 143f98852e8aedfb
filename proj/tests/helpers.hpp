#pragma once

#include <map>
#include <string>

#include "rpq/spec.hpp"

namespace rpqtest {

inline rpq::DeformationSpec make(rpq::Kind kind, double p, double q,
                                 std::map<std::string, double> extras = {}) {
    rpq::DeformationSpec s;
    s.kind = kind;
    s.p = p;
    s.q = q;
    s.extras = std::move(extras);
    rpq::validate(s);
    return s;
}

// canonical admissible parameter set for each built-in deformation
inline std::vector<rpq::DeformationSpec> canonical_specs() {
    using rpq::Kind;
    std::vector<rpq::DeformationSpec> out = {
        make(Kind::heine_q, 1.0, 0.5),
        make(Kind::jagannathan_srinivasa, 1.2, 0.7),
        make(Kind::chakrabarti_jagannathan, 1.2, 0.7),
        make(Kind::quesne, 1.1, 0.9),
        make(Kind::hounkonnou_ngompe, 1.2, 0.8, {{"mu", 1.0}, {"nu", 1.5}, {"h", 1.0}}),
        make(Kind::kalnins, 1.0, 2.0, {{"l", 1.0}, {"lambda", 0.0}}),
        make(Kind::tamm_dancoff, 1.0, 0.8),
        make(Kind::arik_coon, 1.0, 0.5),
        make(Kind::feinsilver, 1.0, 1.2),
        make(Kind::biedenharn_macfarlane, 1.0, 1.5),
        make(Kind::calogero_vasiliev, 1.0, 0.5, {{"nu", 0.25}}),
        make(Kind::chung, 1.0, 0.7, {{"alpha", 0.5}, {"beta", 0.3}}),
        make(Kind::borzov, 1.0, 0.8, {{"gamma", 1.2}, {"alpha", 0.4}, {"beta", 0.1}}),
        make(Kind::brzezinski, 1.0, 1.3, {{"alpha", 0.2}}),
        make(Kind::burban, 1.0, 0.8,
             {{"alpha", 0.5}, {"gamma", 0.5}, {"beta", 0.2}, {"nu", 0.3}}),
        make(Kind::baloitcha, 0.9, 0.5,
             {{"nu", 1.0}, {"alpha", 1.0}, {"beta", 0.0}, {"gamma", 0.2}}),
    };
    rpq::DeformationSpec rat;
    rat.kind = Kind::rational_rRs;
    rat.p = 0.9;
    rat.q = 0.5;
    rat.extras = {{"a1", 1.0}, {"b1", 0.3}};
    rpq::validate(rat);
    out.push_back(rat);
    return out;
}

} // namespace rpqtest
