#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rpq/common.hpp"

namespace rpq {

enum class Kind {
    heine_q,
    jagannathan_srinivasa,
    chakrabarti_jagannathan,
    quesne,
    hounkonnou_ngompe,
    kalnins,
    tamm_dancoff,
    arik_coon,
    feinsilver,
    biedenharn_macfarlane,
    calogero_vasiliev,
    chung,
    borzov,
    brzezinski,
    burban,
    baloitcha,
    rational_rRs,
};

inline const std::vector<std::pair<Kind, std::string>>& kind_table() {
    static const std::vector<std::pair<Kind, std::string>> t = {
        {Kind::heine_q, "heine_q"},
        {Kind::jagannathan_srinivasa, "jagannathan_srinivasa"},
        {Kind::chakrabarti_jagannathan, "chakrabarti_jagannathan"},
        {Kind::quesne, "quesne"},
        {Kind::hounkonnou_ngompe, "hounkonnou_ngompe"},
        {Kind::kalnins, "kalnins"},
        {Kind::tamm_dancoff, "tamm_dancoff"},
        {Kind::arik_coon, "arik_coon"},
        {Kind::feinsilver, "feinsilver"},
        {Kind::biedenharn_macfarlane, "biedenharn_macfarlane"},
        {Kind::calogero_vasiliev, "calogero_vasiliev"},
        {Kind::chung, "chung"},
        {Kind::borzov, "borzov"},
        {Kind::brzezinski, "brzezinski"},
        {Kind::burban, "burban"},
        {Kind::baloitcha, "baloitcha"},
        {Kind::rational_rRs, "rational_rRs"},
    };
    return t;
}

inline std::string kind_name(Kind k) {
    for (const auto& [kk, name] : kind_table())
        if (kk == k) return name;
    throw UnsupportedKind("unknown kind enum value");
}

inline Kind kind_from_string(const std::string& s) {
    for (const auto& [kk, name] : kind_table())
        if (name == s) return kk;
    throw UnsupportedKind("unknown kind \"" + s + "\"");
}

struct DeformationSpec {
    Kind kind = Kind::jagannathan_srinivasa;
    double p = 1.0;
    double q = 0.5;
    std::map<std::string, double> extras;

    double extra(const std::string& name, double fallback) const {
        auto it = extras.find(name);
        return it == extras.end() ? fallback : it->second;
    }

    bool has_extra(const std::string& name) const {
        return extras.count(name) != 0;
    }
};

namespace detail {

inline const std::set<std::string>& allowed_extras(Kind k) {
    static const std::set<std::string> none = {};
    static const std::set<std::string> tau_only = {"tau"};
    static const std::set<std::string> hn = {"mu", "nu", "h", "tau"};
    static const std::set<std::string> kal = {"l", "lambda"};
    static const std::set<std::string> cv = {"nu"};
    static const std::set<std::string> chung = {"alpha", "beta"};
    static const std::set<std::string> borzov = {"alpha", "beta", "gamma"};
    static const std::set<std::string> brz = {"alpha"};
    static const std::set<std::string> burban = {"alpha", "beta", "gamma", "nu"};
    static const std::set<std::string> bal = {"nu", "alpha", "beta", "gamma"};
    switch (k) {
        case Kind::heine_q: return none;
        case Kind::jagannathan_srinivasa:
        case Kind::chakrabarti_jagannathan:
        case Kind::quesne: return tau_only;
        case Kind::hounkonnou_ngompe: return hn;
        case Kind::kalnins: return kal;
        case Kind::tamm_dancoff:
        case Kind::arik_coon:
        case Kind::feinsilver:
        case Kind::biedenharn_macfarlane: return none;
        case Kind::calogero_vasiliev: return cv;
        case Kind::chung: return chung;
        case Kind::borzov: return borzov;
        case Kind::brzezinski: return brz;
        case Kind::burban: return burban;
        case Kind::baloitcha: return bal;
        case Kind::rational_rRs: return none; // handled positionally below
    }
    return none;
}

// rational_rRs takes indexed coefficient lists a1..ar, b1..br, c1..cs, d1..ds.
inline bool rational_extra_key_ok(const std::string& key) {
    if (key.size() < 2) return false;
    char c = key[0];
    if (c != 'a' && c != 'b' && c != 'c' && c != 'd') return false;
    for (size_t i = 1; i < key.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(key[i]))) return false;
    return key[1] != '0';
}

} // namespace detail

// Indexed coefficient list for rational_rRs: keys prefix1..prefixN, contiguous.
inline std::vector<double> indexed_extras(const DeformationSpec& spec,
                                          const std::string& prefix) {
    std::vector<double> out;
    for (int i = 1;; ++i) {
        auto it = spec.extras.find(prefix + std::to_string(i));
        if (it == spec.extras.end()) break;
        out.push_back(it->second);
    }
    return out;
}

inline void validate(const DeformationSpec& spec) {
    const double p = spec.p, q = spec.q;
    if (!std::isfinite(p) || !std::isfinite(q))
        throw DomainError("p and q must be finite");

    if (spec.kind == Kind::rational_rRs) {
        for (const auto& [key, val] : spec.extras) {
            if (!detail::rational_extra_key_ok(key))
                throw ConfigError("unknown extras key \"" + key + "\" for kind rational_rRs");
            if (!std::isfinite(val))
                throw DomainError("extras value for \"" + key + "\" must be finite");
        }
        const auto a = indexed_extras(spec, "a"), b = indexed_extras(spec, "b");
        const auto c = indexed_extras(spec, "c"), d = indexed_extras(spec, "d");
        if (a.size() != b.size())
            throw ConfigError("rational_rRs requires matching a/b coefficient counts");
        if (c.size() != d.size())
            throw ConfigError("rational_rRs requires matching c/d coefficient counts");
        if (a.size() + b.size() + c.size() + d.size() != spec.extras.size())
            throw ConfigError("rational_rRs coefficient indices must be contiguous from 1");
    } else {
        const auto& allowed = detail::allowed_extras(spec.kind);
        for (const auto& [key, val] : spec.extras) {
            if (!allowed.count(key))
                throw ConfigError("unknown extras key \"" + key + "\" for kind " +
                                  kind_name(spec.kind));
            if (!std::isfinite(val))
                throw DomainError("extras value for \"" + key + "\" must be finite");
        }
    }

    auto require = [](bool ok, const std::string& msg) {
        if (!ok) throw DomainError(msg);
    };

    switch (spec.kind) {
        case Kind::heine_q:
            require(q > 0.0 && q != 1.0, "heine_q requires q > 0, q != 1");
            break;
        case Kind::jagannathan_srinivasa:
            require(p > 0.0 && q > 0.0, "jagannathan_srinivasa requires p, q > 0");
            require(p != q, "jagannathan_srinivasa requires p != q");
            break;
        case Kind::chakrabarti_jagannathan:
            require(p > 0.0 && q > 0.0, "chakrabarti_jagannathan requires p, q > 0");
            require(p * q != 1.0, "chakrabarti_jagannathan requires p*q != 1");
            break;
        case Kind::quesne:
            require(p > 0.0 && q > 0.0, "quesne requires p, q > 0");
            require(p * q != 1.0, "quesne requires p*q != 1");
            break;
        case Kind::hounkonnou_ngompe: {
            require(p > 0.0 && q > 0.0, "hounkonnou_ngompe requires p, q > 0");
            require(p * q != 1.0, "hounkonnou_ngompe requires p*q != 1");
            require(spec.extra("h", 1.0) != 0.0, "hounkonnou_ngompe requires h != 0");
            break;
        }
        case Kind::kalnins:
            require(q > 0.0 && q != 1.0, "kalnins requires q > 0, q != 1");
            require(spec.extra("l", 1.0) != 0.0, "kalnins requires l != 0");
            break;
        case Kind::tamm_dancoff:
            require(q > 0.0, "tamm_dancoff requires q > 0");
            break;
        case Kind::arik_coon:
        case Kind::feinsilver:
        case Kind::biedenharn_macfarlane:
            require(q > 0.0 && q != 1.0,
                    kind_name(spec.kind) + " requires q > 0, q != 1");
            break;
        case Kind::calogero_vasiliev:
            require(spec.extra("nu", 0.0) > -0.5,
                    "calogero_vasiliev requires nu > -1/2");
            break;
        case Kind::chung:
            require(q > 0.0, "chung requires q > 0");
            if (spec.extra("alpha", 1.0) != 1.0)
                require(q != 1.0, "chung with alpha != 1 requires q != 1");
            break;
        case Kind::borzov:
            require(q > 0.0, "borzov requires q > 0");
            if (spec.extra("alpha", 1.0) != spec.extra("gamma", 1.0))
                require(q != 1.0, "borzov with alpha != gamma requires q != 1");
            break;
        case Kind::brzezinski:
            require(q > 0.0 && q != 1.0, "brzezinski requires q > 0, q != 1");
            break;
        case Kind::burban:
            require(q > 0.0, "burban requires q > 0");
            if (spec.extra("alpha", 1.0) != spec.extra("gamma", 1.0))
                require(q != 1.0, "burban with alpha != gamma requires q != 1");
            break;
        case Kind::baloitcha:
            require(p > 0.0 && q > 0.0, "baloitcha requires p, q > 0");
            break;
        case Kind::rational_rRs:
            require(p > 0.0 && q > 0.0, "rational_rRs requires p, q > 0");
            require(p != q, "rational_rRs requires p != q");
            break;
    }
}

// ---- JSON round trip -------------------------------------------------------

inline nlohmann::json to_json(const DeformationSpec& spec) {
    nlohmann::json j;
    j["kind"] = kind_name(spec.kind);
    j["p"] = spec.p;
    j["q"] = spec.q;
    if (!spec.extras.empty()) {
        nlohmann::json e = nlohmann::json::object();
        for (const auto& [k, v] : spec.extras) e[k] = v;
        j["extras"] = e;
    }
    return j;
}

inline DeformationSpec spec_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("deformation spec must be a JSON object");
    static const std::set<std::string> top = {"kind", "p", "q", "extras"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!top.count(it.key()))
            throw ConfigError("unknown field \"" + it.key() + "\" in deformation spec");

    if (!j.contains("kind") || !j["kind"].is_string())
        throw ConfigError("deformation spec requires string field \"kind\"");

    DeformationSpec spec;
    spec.kind = kind_from_string(j["kind"].get<std::string>());

    auto num = [&](const char* field, double fallback) {
        if (!j.contains(field)) return fallback;
        if (!j[field].is_number())
            throw ConfigError(std::string("field \"") + field + "\" must be a number");
        return j[field].get<double>();
    };
    spec.p = num("p", 1.0);
    spec.q = num("q", 0.5);

    if (j.contains("extras")) {
        if (!j["extras"].is_object())
            throw ConfigError("field \"extras\" must be an object");
        for (auto it = j["extras"].begin(); it != j["extras"].end(); ++it) {
            if (!it.value().is_number())
                throw ConfigError("extras value for \"" + it.key() + "\" must be a number");
            spec.extras[it.key()] = it.value().get<double>();
        }
    }

    validate(spec);
    return spec;
}

inline DeformationSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open spec file \"" + path + "\"");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("malformed JSON in \"" + path + "\": " + e.what());
    }
    return spec_from_json(j);
}

inline void save_spec(const DeformationSpec& spec, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write spec file \"" + path + "\"");
    out << to_json(spec).dump(2) << "\n";
}

} // namespace rpq
