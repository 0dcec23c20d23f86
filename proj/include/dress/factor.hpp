#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dress/certificate.hpp"
#include "dress/dress_elem.hpp"
#include "dress/errors.hpp"
#include "dress/mat2.hpp"
#include "dress/search.hpp"

namespace dress {

enum class Side { Left, Right };

/// The two immediate factorizations of diagonal/antidiagonal row matrices:
///   [[p,0],[0,0]] = [[1,-1],[0,0]] * [[1,0],[1-p,0]]
///   [[0,p],[0,0]] = [[1,0],[0,0]]  * [[0,p],[0,1]]
/// A zero p yields the zero matrix as its own single-element chain.
inline FactorizationCert base_r0(const DressElem& p, Side side) {
    const DressElem one = DressElem::constant(1);
    const DressElem zero;

    FactorizationCert cert;
    if (p.is_zero()) {
        cert.input = Mat2::zero();
        cert.chain = {Mat2::zero()};
        cert.trace = {RuleStep::simple(RuleKind::ZeroMatrix)};
        return cert;
    }
    if (side == Side::Left) {
        cert.input = Mat2::row(p, zero);
        cert.chain = {Mat2{one, -one, zero, zero}, Mat2{one, zero, one - p, zero}};
        RuleStep st = RuleStep::simple(RuleKind::R0Left);
        st.elem = p;
        cert.trace = {st};
    } else {
        cert.input = Mat2::row(zero, p);
        cert.chain = {Mat2{one, zero, zero, zero}, Mat2{zero, p, zero, one}};
        RuleStep st = RuleStep::simple(RuleKind::R0Right);
        st.elem = p;
        cert.trace = {st};
    }
    return cert;
}

/// Certificate for [[q,p],[0,0]] from one for [[p,q],[0,0]]. The two
/// matrices have different traces, so no similarity can swap the entries;
/// instead every factor is conjugated by the permutation matrix and the
/// idempotent [[1,1],[0,0]] is prepended:
///   [[q,p],[0,0]] = [[1,1],[0,0]] * P * [[p,q],[0,0]] * P.
inline FactorizationCert swap_conjugate(const FactorizationCert& cert) {
    if (!cert.input.is_row_form()) throw PreconditionError("swap_conjugate: input not in row form");
    const DressElem one = DressElem::constant(1);
    FactorizationCert out;
    out.input = Mat2::row(cert.input.b, cert.input.a);
    out.chain.reserve(cert.chain.size() + 1);
    out.chain.push_back(Mat2{one, one, DressElem(), DressElem()});
    for (const Mat2& t : cert.chain) out.chain.push_back(t.permutation_conjugate());
    out.trace = cert.trace;
    out.trace.push_back(RuleStep::simple(RuleKind::Swap));
    return out;
}

namespace detail {

// Conjugation by [[1,-r],[0,1]] maps [[p,q],[0,0]] to [[p,q+rp],[0,0]] and
// preserves idempotency and D-entries.
inline Mat2 shear_factor(const Mat2& t, const Rational& r) {
    DressElem rc = t.c.scalar_mul(r);
    return Mat2{t.a - rc,
                t.b - t.d.scalar_mul(r) + t.a.scalar_mul(r) - rc.scalar_mul(r),
                t.c,
                t.d + rc};
}

}  // namespace detail

/// Certificate for [[p, q + r*p],[0,0]] from one for [[p,q],[0,0]], by
/// conjugating every factor with the unitriangular matrix of parameter r.
/// `annotation`, when given, replaces the default trace entry (used to
/// attach the shear-lemma witnesses).
inline FactorizationCert shear_conjugate(const FactorizationCert& cert, const Rational& r,
                                         const std::vector<RuleStep>& annotation = {}) {
    if (!cert.input.is_row_form()) throw PreconditionError("shear_conjugate: input not in row form");
    FactorizationCert out;
    out.input = Mat2::row(cert.input.a, cert.input.b + cert.input.a.scalar_mul(r));
    if (r == 0) {
        out.chain = cert.chain;
        out.trace = cert.trace;
        return out;
    }
    out.chain.reserve(cert.chain.size());
    for (const Mat2& t : cert.chain) out.chain.push_back(detail::shear_factor(t, r));
    out.trace = cert.trace;
    if (annotation.empty()) {
        RuleStep st = RuleStep::simple(RuleKind::Shear);
        st.r = r;
        out.trace.push_back(st);
    } else {
        for (const RuleStep& st : annotation) out.trace.push_back(st);
    }
    return out;
}

/// Result of peeling a Gamma+ factor tau out of the denominator:
/// [[x/g, y/g],[0,0]] = [[tau/g, 0],[0,0]] * [[x/tau, y/tau],[0,0]].
struct PeelTauResult {
    FactorizationCert left;  // chain for [[tau/gamma, 0],[0,0]] via (r0)
    DressElem rest_p, rest_q;
    Poly tau;
};

/// Pick tau = (X^2+1)^m with deg tau = max(deg x, deg y) rounded up to
/// even; requires max(deg x, deg y) < deg gamma.
inline PeelTauResult peel_tau(const Poly& x, const Poly& y, const Poly& gamma) {
    if (x.is_zero() && y.is_zero()) throw PreconditionError("peel_tau: both numerators zero");
    int d = std::max(x.degree(), y.degree());
    if (d >= gamma.degree()) throw PreconditionError("peel_tau: numerator degree not below denominator degree");
    Poly tau = pow(Poly(std::vector<Rational>{Rational(1), Rational(0), Rational(1)}), (d + 1) / 2);

    PeelTauResult out;
    out.left = base_r0(DressElem::make(tau, gamma), Side::Left);
    RuleStep st = RuleStep::simple(RuleKind::PeelTau);
    st.tau = tau;
    out.left.trace.insert(out.left.trace.begin(), st);
    out.rest_p = DressElem::make(x, tau);
    out.rest_q = DressElem::make(y, tau);
    out.tau = std::move(tau);
    return out;
}

namespace detail {

inline int root_multiplicity(const Poly& f, const Rational& z) {
    int m = 0;
    Poly g = f;
    const Poly lin = Poly::x() - Poly(z);
    while (!g.is_zero() && g.eval(z) == 0) {
        g = exact_div(g, lin);
        ++m;
    }
    return m;
}

// Equal-degree assembly behind the sign-condition theorem: for p = x/g and
// q = y/g with deg x = deg y and x of uniform sign on the roots of y, emit
//   [[x/g, y/g],[0,0]] = (peel) * (r0 chain of the unit delta/(tau*eta))
//                        * [[x*eta/delta, y*eta/delta],[x*y/delta, y^2/delta]]
// where delta = x*eta + y^2 comes from the certified eta-search.
inline FactorizationCert sign_condition_equal_degree(const DressElem& p, const DressElem& q,
                                                     int max_steps) {
    CommonDenominator cd = common_denominator(p, q);
    const Poly& x = cd.x;
    const Poly& y = cd.y;

    FactorizationCert cert;
    cert.input = Mat2::row(p, q);

    Poly denom = cd.gamma;
    if (x.degree() < cd.gamma.degree()) {
        PeelTauResult peel = peel_tau(x, y, cd.gamma);
        cert.chain = peel.left.chain;
        cert.trace = peel.left.trace;
        denom = peel.tau;
    }

    EtaCert ec = find_eta(x, y, max_steps);
    RuleStep st = RuleStep::simple(RuleKind::SignCondition);
    st.x = x;
    st.y = y;
    st.eta = ec.eta;
    st.delta = ec.delta;
    st.steps = ec.scale_steps;
    cert.trace.push_back(st);

    DressElem unit = DressElem::make(ec.delta, denom * ec.eta);
    if (!unit.is_unit()) throw std::logic_error("sign condition assembly: delta/(denom*eta) is not a unit");
    FactorizationCert unit_chain = base_r0(unit, Side::Left);
    cert.chain.insert(cert.chain.end(), unit_chain.chain.begin(), unit_chain.chain.end());
    cert.trace.insert(cert.trace.end(), unit_chain.trace.begin(), unit_chain.trace.end());

    Mat2 t{DressElem::make(x * ec.eta, ec.delta), DressElem::make(y * ec.eta, ec.delta),
           DressElem::make(x * y, ec.delta), DressElem::make(y * y, ec.delta)};
    if (!is_idempotent(t)) throw std::logic_error("sign condition assembly: factor is not idempotent");
    cert.chain.push_back(t);
    return cert;
}

// Case (ii) of the sign-condition theorem: deg q >= deg p and p of uniform
// sign on the roots of q. A strict degree gap is closed by replacing p with
// p + q (which agrees with p on the roots of q), built on the swapped side
// since row conjugation can only alter the second entry.
inline FactorizationCert sign_condition_case_ii(const DressElem& p, const DressElem& q,
                                                int max_steps) {
    if (q.deg() > p.deg()) {
        FactorizationCert eq = sign_condition_equal_degree(p + q, q, max_steps);
        FactorizationCert s1 = swap_conjugate(eq);             // [[q, p+q]]
        FactorizationCert s2 = shear_conjugate(s1, -1);        // [[q, p]]
        return swap_conjugate(s2);                             // [[p, q]]
    }
    return sign_condition_equal_degree(p, q, max_steps);
}

}  // namespace detail

/// Factor [[p,q],[0,0]] under the sign-condition theorem: (i) deg p >= deg q
/// with q of uniform sign on the roots of p, or (ii) deg q >= deg p with p
/// of uniform sign on the roots of q (no real roots counts as uniform).
inline FactorizationCert factor_sign_condition(const DressElem& p, const DressElem& q,
                                               int max_steps = kDefaultMaxSteps) {
    if (p.is_zero() || q.is_zero()) throw PreconditionError("factor_sign_condition: zero entry");
    CommonDenominator cd = common_denominator(p, q);
    SignAtRoots p_at_q = sign_at_roots(cd.x, cd.y);
    SignAtRoots q_at_p = sign_at_roots(cd.y, cd.x);

    if (q.deg() >= p.deg() && detail::uniformish(p_at_q))
        return detail::sign_condition_case_ii(p, q, max_steps);
    if (p.deg() >= q.deg() && detail::uniformish(q_at_p))
        return swap_conjugate(detail::sign_condition_case_ii(q, p, max_steps));

    throw PreconditionError(std::string("factor_sign_condition: neither case applies (sign of q at "
                                        "roots of p: ") +
                            to_string(q_at_p) + ", sign of p at roots of q: " + to_string(p_at_q) +
                            ")");
}

namespace detail {

// p semidefinite and weakly comaximal with q.
inline FactorizationCert semidefinite_core(const DressElem& p, const DressElem& q, int max_steps) {
    if (q.deg() > p.deg()) return factor_sign_condition(p, q, max_steps);
    if (p.deg() > q.deg()) {
        // Replace q by p + q: degrees equalize and comaximality survives.
        FactorizationCert eq = sign_condition_equal_degree(p, p + q, max_steps);
        return shear_conjugate(eq, -1);
    }
    return sign_condition_equal_degree(p, q, max_steps);
}

}  // namespace detail

/// Factor [[p,q],[0,0]] when p, q are weakly comaximal and one of them is
/// everywhere nonnegative or everywhere nonpositive.
inline FactorizationCert factor_semidefinite(const DressElem& p, const DressElem& q,
                                             int max_steps = kDefaultMaxSteps) {
    if (p.is_zero() || q.is_zero()) throw PreconditionError("factor_semidefinite: zero entry");
    if (!weakly_comaximal(p, q)) throw PreconditionError("factor_semidefinite: entries are not weakly comaximal");
    const bool sp = p.is_nonneg() || p.is_nonpos();
    const bool sq = q.is_nonneg() || q.is_nonpos();
    if (!sp && !sq) throw PreconditionError("factor_semidefinite: neither entry is semidefinite");

    FactorizationCert cert = sp ? detail::semidefinite_core(p, q, max_steps)
                                : swap_conjugate(detail::semidefinite_core(q, p, max_steps));
    cert.trace.insert(cert.trace.begin(), RuleStep::simple(RuleKind::Semidefinite));
    return cert;
}

inline FactorizationCert factor_odd_odd(const DressElem& p, const DressElem& q,
                                        int max_steps = kDefaultMaxSteps);

namespace detail {

// q has the unique real root; both degrees odd.
inline FactorizationCert odd_odd_core(const DressElem& p, const DressElem& q, int max_steps) {
    CommonDenominator cd = common_denominator(p, q);
    Poly shared = gcd(cd.x, cd.y);

    if (is_gamma(shared)) {  // weakly comaximal
        if (q.deg() >= p.deg()) return factor_sign_condition(p, q, max_steps);
        if (uniformish(sign_at_roots(cd.y, cd.x))) return factor_sign_condition(p, q, max_steps);
        ShearCert sc = find_r_one_root(cd.x, cd.y, max_steps);
        DressElem sheared_q = q + p.scalar_mul(sc.r);  // (r*x + y)/gamma, one real root
        FactorizationCert eq = factor_sign_condition(p, sheared_q, max_steps);
        RuleStep st = RuleStep::simple(RuleKind::Shear);
        st.r = sc.r;
        st.root_count = sc.root_count;
        st.steps = sc.halving_steps;
        st.x = cd.x;
        st.y = cd.y;
        return shear_conjugate(eq, -sc.r, {st});
    }

    // Shared root: it must be the unique root of q; peel (X-z)^min out.
    RootInfo riq = root_info(q);
    if (!riq.unique_root || !riq.unique_root->exact())
        throw IrrationalSharedRootError(
            "factor_odd_odd: the shared unique root is not rational; the peeled factor would "
            "leave Q[X]");
    const Rational z = riq.unique_root->value();
    const int mp = root_multiplicity(cd.x, z);
    const int mq = root_multiplicity(cd.y, z);
    if (mp < 1 || mq < 1) throw std::logic_error("factor_odd_odd: shared root bookkeeping failed");
    const Poly lin_pow_mp = pow(Poly::x() - Poly(z), mp);
    const Poly lin_pow_mq = pow(Poly::x() - Poly(z), mq);
    const Poly xbar = exact_div(cd.x, lin_pow_mp);
    const Poly ybar = exact_div(cd.y, lin_pow_mq);

    const int m = std::min(mp, mq);
    const Poly delta = pow(Poly(std::vector<Rational>{Rational(1), Rational(0), Rational(1)}), (m + 1) / 2);

    FactorizationCert left = base_r0(DressElem::make(pow(Poly::x() - Poly(z), m), delta), Side::Left);
    DressElem p2 = DressElem::make(pow(Poly::x() - Poly(z), mp - m) * xbar * delta, cd.gamma);
    DressElem q2 = DressElem::make(pow(Poly::x() - Poly(z), mq - m) * ybar * delta, cd.gamma);

    FactorizationCert rest;
    if (mp >= mq)
        rest = factor_semidefinite(p2, q2, max_steps);  // q2 has Gamma numerator
    else if (mp % 2 == 0)
        rest = factor_odd_odd(p2, q2, max_steps);  // both odd again, now comaximal
    else
        rest = factor_semidefinite(p2, q2, max_steps);  // even shared power left in q2

    FactorizationCert cert;
    cert.input = Mat2::row(p, q);
    RuleStep st = RuleStep::simple(RuleKind::PeelRoot);
    st.z = z;
    st.mult = m;
    st.delta = delta;
    cert.trace.push_back(st);
    cert.trace.insert(cert.trace.end(), left.trace.begin(), left.trace.end());
    cert.trace.insert(cert.trace.end(), rest.trace.begin(), rest.trace.end());
    cert.chain = left.chain;
    cert.chain.insert(cert.chain.end(), rest.chain.begin(), rest.chain.end());
    return cert;
}

}  // namespace detail

/// Factor [[p,q],[0,0]] when both D-degrees are odd and one entry has a
/// unique real root. Handles the non-comaximal case by peeling the shared
/// rational root.
inline FactorizationCert factor_odd_odd(const DressElem& p, const DressElem& q, int max_steps) {
    if (p.is_zero() || q.is_zero()) throw PreconditionError("factor_odd_odd: zero entry");
    if (p.deg() % 2 == 0 || q.deg() % 2 == 0)
        throw PreconditionError("factor_odd_odd: both D-degrees must be odd");

    FactorizationCert cert;
    if (root_info(q).distinct_count == 1)
        cert = detail::odd_odd_core(p, q, max_steps);
    else if (root_info(p).distinct_count == 1)
        cert = swap_conjugate(detail::odd_odd_core(q, p, max_steps));
    else
        throw PreconditionError("factor_odd_odd: neither entry has a unique real root");
    cert.trace.insert(cert.trace.begin(), RuleStep::simple(RuleKind::OddOdd));
    return cert;
}

/// Factor [[p,q],[0,0]] when p, q are weakly comaximal, deg p is even,
/// deg q is odd, and either p has a unique real root or q has a unique real
/// root at which p matches the sign of its leading coefficient.
inline FactorizationCert factor_even_odd(const DressElem& p, const DressElem& q,
                                         int max_steps = kDefaultMaxSteps) {
    if (p.is_zero() || q.is_zero()) throw PreconditionError("factor_even_odd: zero entry");
    if (p.deg() == DressElem::kNegInfDeg || p.deg() % 2 != 0)
        throw PreconditionError("factor_even_odd: deg p must be even");
    if (q.deg() % 2 == 0) throw PreconditionError("factor_even_odd: deg q must be odd");
    if (!weakly_comaximal(p, q)) throw PreconditionError("factor_even_odd: entries are not weakly comaximal");

    FactorizationCert cert;
    if (root_info(p).distinct_count == 1) {
        // Even degree with one distinct root forces even multiplicity, so p
        // is semidefinite.
        cert = factor_semidefinite(p, q, max_steps);
    } else {
        if (root_info(q).distinct_count != 1)
            throw PreconditionError("factor_even_odd: q must have a unique real root when p has several");
        SignAtRoots s = sign_at_roots(p.num(), q.num());
        const int p_at_u = (s == SignAtRoots::UniformPositive) ? 1 : -1;
        if (p_at_u != sign(p.num().lc()))
            throw PreconditionError(
                "factor_even_odd: sign of p at the root of q differs from the sign of its leading "
                "coefficient");
        if (q.deg() > p.deg()) {
            cert = factor_sign_condition(p, q, max_steps);
        } else {
            CommonDenominator cd = common_denominator(p, q);
            if (detail::uniformish(sign_at_roots(cd.y, cd.x))) {
                cert = factor_sign_condition(p, q, max_steps);
            } else {
                ShearCert sc = find_r_two_roots(cd.x, cd.y, max_steps);
                DressElem sheared_q = q + p.scalar_mul(sc.r);
                FactorizationCert eq = factor_sign_condition(p, sheared_q, max_steps);
                RuleStep st = RuleStep::simple(RuleKind::Shear);
                st.r = sc.r;
                st.root_count = sc.root_count;
                st.uniform_clause = true;
                st.steps = sc.halving_steps;
                st.x = cd.x;
                st.y = cd.y;
                cert = shear_conjugate(eq, -sc.r, {st});
            }
        }
    }
    cert.trace.insert(cert.trace.begin(), RuleStep::simple(RuleKind::EvenOdd));
    return cert;
}

/// Corollary engine for non-comaximal even/odd pairs with negative
/// D-degrees: peel the shared rational root, then dispatch the residual
/// pair to the semidefinite or even/odd rule.
inline FactorizationCert factor_even_odd_common(const DressElem& p, const DressElem& q,
                                                int max_steps = kDefaultMaxSteps) {
    if (p.is_zero() || q.is_zero()) throw PreconditionError("factor_even_odd_common: zero entry");
    if (p.deg() == DressElem::kNegInfDeg || p.deg() % 2 != 0)
        throw PreconditionError("factor_even_odd_common: deg p must be even");
    if (q.deg() % 2 == 0) throw PreconditionError("factor_even_odd_common: deg q must be odd");
    if (p.deg() >= 0 || q.deg() >= 0)
        throw PreconditionError("factor_even_odd_common: both D-degrees must be negative");

    CommonDenominator cd = common_denominator(p, q);
    Poly shared = gcd(cd.x, cd.y);
    int shared_roots = shared.degree() < 1 ? 0 : count_real_roots(shared);
    if (shared_roots == 0)
        throw PreconditionError("factor_even_odd_common: entries share no real root");
    if (shared_roots > 1)
        throw PreconditionError("factor_even_odd_common: entries share more than one real root");
    std::vector<IsolatedRoot> ziso = isolate_real_roots(shared);
    if (!ziso.front().exact())
        throw IrrationalSharedRootError(
            "factor_even_odd_common: the shared root is not rational; the peeled factor would "
            "leave Q[X]");
    const Rational z = ziso.front().value();

    const int k = detail::root_multiplicity(cd.x, z);
    const int h = detail::root_multiplicity(cd.y, z);
    const Poly xbar = exact_div(cd.x, pow(Poly::x() - Poly(z), k));
    const Poly ybar = exact_div(cd.y, pow(Poly::x() - Poly(z), h));

    const bool hyp_p = root_info(p).distinct_count == 1 && sign(ybar.eval(z)) == sign(ybar.lc());
    const bool hyp_q = root_info(q).distinct_count == 1 && sign(xbar.eval(z)) == sign(xbar.lc());
    if (!hyp_p && !hyp_q)
        throw PreconditionError(
            "factor_even_odd_common: unique-root / sign hypotheses of the corollary fail");

    const int m = std::min(k, h);
    const Poly delta = pow(Poly(std::vector<Rational>{Rational(1), Rational(0), Rational(1)}), (m + 1) / 2);
    FactorizationCert left = base_r0(DressElem::make(pow(Poly::x() - Poly(z), m), delta), Side::Left);
    DressElem p2 = DressElem::make(pow(Poly::x() - Poly(z), k - m) * xbar * delta, cd.gamma);
    DressElem q2 = DressElem::make(pow(Poly::x() - Poly(z), h - m) * ybar * delta, cd.gamma);

    FactorizationCert rest;
    const bool semidef2 = (p2.is_nonneg() || p2.is_nonpos() || q2.is_nonneg() || q2.is_nonpos());
    if (semidef2)
        rest = factor_semidefinite(p2, q2, max_steps);
    else if (p2.deg() % 2 == 0)
        rest = factor_even_odd(p2, q2, max_steps);
    else
        rest = swap_conjugate(factor_even_odd(q2, p2, max_steps));

    FactorizationCert cert;
    cert.input = Mat2::row(p, q);
    cert.trace.push_back(RuleStep::simple(RuleKind::EvenOddCommon));
    RuleStep st = RuleStep::simple(RuleKind::PeelRoot);
    st.z = z;
    st.mult = m;
    st.delta = delta;
    cert.trace.push_back(st);
    cert.trace.insert(cert.trace.end(), left.trace.begin(), left.trace.end());
    cert.trace.insert(cert.trace.end(), rest.trace.begin(), rest.trace.end());
    cert.chain = left.chain;
    cert.chain.insert(cert.chain.end(), rest.chain.begin(), rest.chain.end());
    return cert;
}

/// Why one dispatcher rule did not apply.
struct RuleFailure {
    std::string rule;
    std::string reason;
};

/// Dispatcher outcome: either a certificate with the winning rule's name,
/// or the per-rule diagnostics of every failed precondition.
struct FactorOutcome {
    std::optional<FactorizationCert> cert;
    std::string rule;
    std::vector<RuleFailure> failures;

    bool ok() const { return cert.has_value(); }
};

namespace detail {

inline FactorizationCert unit_entry_cert(const DressElem& u, const DressElem& q) {
    FactorizationCert cert = base_r0(u, Side::Left);
    cert.input = Mat2::row(u, q);
    const DressElem one = DressElem::constant(1);
    cert.chain.push_back(Mat2{one, q * u.invert(), DressElem(), DressElem()});
    RuleStep st = RuleStep::simple(RuleKind::UnitEntry);
    st.elem = u;
    cert.trace.insert(cert.trace.begin(), st);
    return cert;
}

}  // namespace detail

/// Try every factorization rule on a singular row-form matrix, cheapest
/// first. Returns the first certificate found, or the collected per-rule
/// diagnostics when none applies.
inline FactorOutcome factor(const Mat2& m, int max_steps = kDefaultMaxSteps) {
    if (!m.is_singular()) throw NotSingularError("factor: matrix is not singular");
    if (!m.is_row_form()) throw NotRowFormError("factor: matrix is not in row form [[p,q],[0,0]]");
    const DressElem& p = m.a;
    const DressElem& q = m.b;

    FactorOutcome out;
    auto won = [&](const char* rule, FactorizationCert cert) {
        out.rule = rule;
        out.cert = std::move(cert);
    };

    if (p.is_zero() && q.is_zero()) {
        won("ZeroMatrix", base_r0(DressElem(), Side::Left));
        return out;
    }
    out.failures.push_back({"ZeroMatrix", "input is not the zero matrix"});

    if (q.is_zero()) {
        won("R0Left", base_r0(p, Side::Left));
        return out;
    }
    out.failures.push_back({"R0Left", "second entry is nonzero"});

    if (p.is_zero()) {
        won("R0Right", base_r0(q, Side::Right));
        return out;
    }
    out.failures.push_back({"R0Right", "first entry is nonzero"});

    if (p.is_unit()) {
        won("UnitEntry", detail::unit_entry_cert(p, q));
        return out;
    }
    if (q.is_unit()) {
        won("UnitEntry", swap_conjugate(detail::unit_entry_cert(q, p)));
        return out;
    }
    out.failures.push_back({"UnitEntry", "neither entry is a unit of D"});

    using Engine = FactorizationCert (*)(const DressElem&, const DressElem&, int);
    const std::pair<const char*, Engine> engines[] = {
        {"SignCondition", &factor_sign_condition},
        {"Semidefinite", &factor_semidefinite},
        {"OddOdd", &factor_odd_odd},
        {"EvenOdd", &factor_even_odd},
        {"EvenOddCommon", &factor_even_odd_common},
    };
    for (const auto& [name, engine] : engines) {
        try {
            won(name, engine(p, q, max_steps));
            return out;
        } catch (const PreconditionError& e) {
            out.failures.push_back({name, e.what()});
        } catch (const IrrationalSharedRootError& e) {
            out.failures.push_back({name, e.what()});
        }
    }
    return out;
}

/// Instance check of the structural lemma: if S is singular, T idempotent,
/// and S*T is in row form with both top entries nonzero, then S itself must
/// be in row form. Used as a property-test harness.
inline bool lemma_construction_check(const Mat2& s, const Mat2& t) {
    if (!s.is_singular()) throw PreconditionError("lemma_construction_check: S must be singular");
    if (!is_idempotent(t)) throw PreconditionError("lemma_construction_check: T must be idempotent");
    Mat2 prod = s * t;
    if (prod.is_row_form() && !prod.a.is_zero() && !prod.b.is_zero()) return s.is_row_form();
    return true;
}

}  // namespace dress
