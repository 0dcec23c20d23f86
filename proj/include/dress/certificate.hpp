#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dress/mat2.hpp"
#include "dress/poly.hpp"
#include "dress/sturm.hpp"

namespace dress {

enum class RuleKind {
    R0Left,
    R0Right,
    ZeroMatrix,
    UnitEntry,
    Swap,
    Shear,
    PeelTau,
    PeelRoot,
    SignCondition,
    Semidefinite,
    OddOdd,
    EvenOdd,
    EvenOddCommon,
};

inline const char* rule_name(RuleKind k) {
    switch (k) {
        case RuleKind::R0Left: return "R0Left";
        case RuleKind::R0Right: return "R0Right";
        case RuleKind::ZeroMatrix: return "ZeroMatrix";
        case RuleKind::UnitEntry: return "UnitEntry";
        case RuleKind::Swap: return "Swap";
        case RuleKind::Shear: return "Shear";
        case RuleKind::PeelTau: return "PeelTau";
        case RuleKind::PeelRoot: return "PeelRoot";
        case RuleKind::SignCondition: return "SignCondition";
        case RuleKind::Semidefinite: return "Semidefinite";
        case RuleKind::EvenOdd: return "EvenOdd";
        case RuleKind::OddOdd: return "OddOdd";
        case RuleKind::EvenOddCommon: return "EvenOddCommon";
    }
    return "?";
}

/// One audit-trail entry: which rule fired, with the witnesses it found.
/// Every witness carries enough data for independent re-verification (the
/// eta/delta certificate, or the shear parameter with the polynomials it
/// acted on and the certified root count).
struct RuleStep {
    RuleKind kind;

    std::optional<Rational> r;          // Shear parameter
    std::optional<int> root_count;      // Shear: certified roots of r*x + y
    std::optional<bool> uniform_clause; // Shear: uniform-sign clause was certified
    std::optional<Poly> x, y;           // Shear / SignCondition context
    std::optional<Poly> eta;            // SignCondition witness
    std::optional<Poly> delta;          // SignCondition / PeelRoot witness
    std::optional<Poly> tau;            // PeelTau witness
    std::optional<Rational> z;          // PeelRoot shared root
    std::optional<int> mult;            // PeelRoot peeled multiplicity
    std::optional<int> steps;           // search steps taken
    std::optional<DressElem> elem;      // R0 / UnitEntry element

    static RuleStep simple(RuleKind k) { return RuleStep{.kind = k}; }
};

/// A verified factorization: input = product of the chain, every chain
/// element idempotent with entries in D, plus the rule trace.
struct FactorizationCert {
    Mat2 input;
    std::vector<Mat2> chain;
    std::vector<RuleStep> trace;
};

/// Result of re-checking a certificate; converts to bool, and carries the
/// first failing chain index and a description on failure.
struct ChainCheck {
    bool ok = true;
    std::size_t index = 0;
    std::string what;

    explicit operator bool() const { return ok; }

    static ChainCheck fail(std::size_t i, std::string msg) { return {false, i, std::move(msg)}; }
};

namespace detail {

// Entries of a DressElem are valid by construction; re-establish the
// invariants from scratch anyway, since certificates may arrive over the
// wire.
inline bool entry_in_dress(const DressElem& e) {
    if (e.is_zero()) return e.den() == Poly(1);
    if (e.den().lc() != 1) return false;
    if (!is_gamma(e.den())) return false;
    if (e.num().degree() > e.den().degree()) return false;
    if (e.den().degree() > 0 && gcd(e.num(), e.den()).degree() > 0) return false;
    return true;
}

}  // namespace detail

/// Re-check a certificate exactly: all entries in D, every factor
/// idempotent, and the ordered chain product equal to the input.
inline ChainCheck verify_chain(const FactorizationCert& cert) {
    if (cert.chain.empty()) return ChainCheck::fail(0, "empty chain");
    for (std::size_t i = 0; i < cert.chain.size(); ++i) {
        const Mat2& t = cert.chain[i];
        for (const DressElem* e : {&t.a, &t.b, &t.c, &t.d})
            if (!detail::entry_in_dress(*e))
                return ChainCheck::fail(i, "chain entry is not a reduced element of D");
        if (!is_idempotent(t)) return ChainCheck::fail(i, "chain element is not idempotent");
    }
    Mat2 prod = cert.chain.front();
    for (std::size_t i = 1; i < cert.chain.size(); ++i) prod = prod * cert.chain[i];
    if (prod != cert.input) return ChainCheck::fail(cert.chain.size(), "chain product differs from input");
    return {};
}

}  // namespace dress
