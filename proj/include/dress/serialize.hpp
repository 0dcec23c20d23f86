#pragma once

#include <string>

#include <json.hpp>

#include "dress/certificate.hpp"
#include "dress/factor.hpp"
#include "dress/parse.hpp"
#include "dress/sturm.hpp"

namespace dress {

using nlohmann::json;

// Machine-readable documents with stable field names. Polynomials and ring
// elements are serialized in their exact text form, so documents round-trip
// without any loss.

inline json to_json(const Mat2& m) {
    return json{{"a", to_string(m.a)}, {"b", to_string(m.b)}, {"c", to_string(m.c)}, {"d", to_string(m.d)}};
}

inline Mat2 mat2_from_json(const json& j) {
    return Mat2{parse_dress_elem(j.at("a").get<std::string>()),
                parse_dress_elem(j.at("b").get<std::string>()),
                parse_dress_elem(j.at("c").get<std::string>()),
                parse_dress_elem(j.at("d").get<std::string>())};
}

inline json to_json(const RuleStep& st) {
    json j{{"rule", rule_name(st.kind)}};
    if (st.r) j["r"] = to_string(*st.r);
    if (st.root_count) j["root_count"] = *st.root_count;
    if (st.uniform_clause) j["uniform_clause"] = *st.uniform_clause;
    if (st.x) j["x"] = to_string(*st.x);
    if (st.y) j["y"] = to_string(*st.y);
    if (st.eta) j["eta"] = to_string(*st.eta);
    if (st.delta) j["delta"] = to_string(*st.delta);
    if (st.tau) j["tau"] = to_string(*st.tau);
    if (st.z) j["z"] = to_string(*st.z);
    if (st.mult) j["mult"] = *st.mult;
    if (st.steps) j["steps"] = *st.steps;
    if (st.elem) j["elem"] = to_string(*st.elem);
    return j;
}

inline RuleKind rule_kind_from_name(const std::string& name) {
    for (RuleKind k : {RuleKind::R0Left, RuleKind::R0Right, RuleKind::ZeroMatrix, RuleKind::UnitEntry,
                       RuleKind::Swap, RuleKind::Shear, RuleKind::PeelTau, RuleKind::PeelRoot,
                       RuleKind::SignCondition, RuleKind::Semidefinite, RuleKind::OddOdd,
                       RuleKind::EvenOdd, RuleKind::EvenOddCommon})
        if (name == rule_name(k)) return k;
    throw ParseError("unknown rule name: " + name);
}

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline RuleStep rule_step_from_json(const json& j) {
    RuleStep st = RuleStep::simple(rule_kind_from_name(j.at("rule").get<std::string>()));
    if (j.contains("r")) st.r = rational_from_string(j["r"].get<std::string>());
    if (j.contains("root_count")) st.root_count = j["root_count"].get<int>();
    if (j.contains("uniform_clause")) st.uniform_clause = j["uniform_clause"].get<bool>();
    if (j.contains("x")) st.x = parse_poly(j["x"].get<std::string>());
    if (j.contains("y")) st.y = parse_poly(j["y"].get<std::string>());
    if (j.contains("eta")) st.eta = parse_poly(j["eta"].get<std::string>());
    if (j.contains("delta")) st.delta = parse_poly(j["delta"].get<std::string>());
    if (j.contains("tau")) st.tau = parse_poly(j["tau"].get<std::string>());
    if (j.contains("z")) st.z = rational_from_string(j["z"].get<std::string>());
    if (j.contains("mult")) st.mult = j["mult"].get<int>();
    if (j.contains("steps")) st.steps = j["steps"].get<int>();
    if (j.contains("elem")) st.elem = parse_dress_elem(j["elem"].get<std::string>());
    return st;
}

inline json to_json(const FactorizationCert& cert) {
    json chain = json::array();
    for (const Mat2& t : cert.chain) chain.push_back(to_json(t));
    json trace = json::array();
    for (const RuleStep& st : cert.trace) trace.push_back(to_json(st));
    return json{{"input", to_json(cert.input)}, {"chain", chain}, {"trace", trace}};
}

inline FactorizationCert cert_from_json(const json& j) {
    FactorizationCert cert;
    cert.input = mat2_from_json(j.at("input"));
    for (const json& t : j.at("chain")) cert.chain.push_back(mat2_from_json(t));
    if (j.contains("trace"))
        for (const json& st : j["trace"]) cert.trace.push_back(rule_step_from_json(st));
    return cert;
}

inline json to_json(const FactorOutcome& outcome) {
    if (outcome.ok()) {
        return json{{"status", "ok"}, {"rule", outcome.rule}, {"certificate", to_json(*outcome.cert)}};
    }
    json diags = json::array();
    for (const RuleFailure& f : outcome.failures)
        diags.push_back(json{{"rule", f.rule}, {"reason", f.reason}});
    return json{{"status", "no_applicable_rule"}, {"diagnostics", diags}};
}

inline json to_json(const IsolatedRoot& r) {
    json j{{"multiplicity", r.multiplicity}};
    if (r.exact()) {
        j["root"] = to_string(r.value());
    } else {
        j["interval"] = json{{"lo", to_string(r.location.lo)}, {"hi", to_string(r.location.hi)}};
    }
    return j;
}

}  // namespace dress
