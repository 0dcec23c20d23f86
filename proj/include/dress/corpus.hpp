#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dress/dress_elem.hpp"
#include "dress/errors.hpp"
#include "dress/factor.hpp"
#include "dress/mat2.hpp"
#include "dress/poly.hpp"

namespace dress {

/// Instance profiles mirroring the hypotheses of the factorization rules.
/// Instances are built from chosen rational roots and Gamma factors, so the
/// ground truth about roots and signs is known by construction; the profile
/// predicate is re-checked after generation.
enum class Profile { Semidefinite, SignCondition, OddOdd, EvenOdd, EvenOddCommon, ExampleLike };

inline const char* profile_name(Profile p) {
    switch (p) {
        case Profile::Semidefinite: return "semidefinite";
        case Profile::SignCondition: return "sign-condition";
        case Profile::OddOdd: return "odd-odd";
        case Profile::EvenOdd: return "even-odd";
        case Profile::EvenOddCommon: return "even-odd-common";
        case Profile::ExampleLike: return "example-like";
    }
    return "?";
}

inline Profile profile_from_name(const std::string& name) {
    for (Profile p : {Profile::Semidefinite, Profile::SignCondition, Profile::OddOdd,
                      Profile::EvenOdd, Profile::EvenOddCommon, Profile::ExampleLike})
        if (name == profile_name(p)) return p;
    throw UnknownProfileError("unknown profile: " + name);
}

struct Instance {
    DressElem p, q;
};

namespace corpus_detail {

using Rng = std::mt19937_64;

inline Rng rng_for(std::uint64_t seed, std::uint64_t index) {
    return Rng(seed * 0x9E3779B97F4A7C15ULL + index + 1);
}

inline int pick(Rng& rng, int lo, int hi) {  // inclusive
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline int pick_sign(Rng& rng) { return pick(rng, 0, 1) ? 1 : -1; }

inline Rational small_rational(Rng& rng, int max_num = 6) {
    int den = pick(rng, 1, 3);
    int num = pick(rng, -max_num * den, max_num * den);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::vector<Rational> distinct_rationals(Rng& rng, int count,
                                                const std::vector<Rational>& avoid = {}) {
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < count) {
        Rational r = small_rational(rng);
        bool clash = false;
        for (const Rational& a : avoid) clash = clash || a == r;
        for (const Rational& a : out) clash = clash || a == r;
        if (!clash) out.push_back(r);
    }
    return out;
}

// (X - s)^2 + t with t > 0: a monic quadratic with no real roots.
inline Poly gamma_quad(Rng& rng) {
    Rational s = small_rational(rng, 3);
    Rational t = Rational(pick(rng, 1, 4), pick(rng, 1, 2));
    return Poly(std::vector<Rational>{s * s + t, -2 * s, Rational(1)});
}

inline Poly gamma_plus_poly(Rng& rng, int half_deg) {
    Poly g(1);
    for (int i = 0; i < half_deg; ++i) g = g * gamma_quad(rng);
    return g;
}

inline Poly from_roots(const std::vector<Rational>& roots, const std::vector<int>& mults) {
    Poly f(1);
    for (std::size_t i = 0; i < roots.size(); ++i)
        f = f * pow(Poly::x() - Poly(roots[i]), mults[i]);
    return f;
}

inline Poly pad_to_min_degree(Rng& rng, Poly f, int min_deg) {
    while (f.degree() < min_deg) f = f * gamma_quad(rng);
    return f;
}

inline Poly denominator_for(Rng& rng, int max_num_deg, bool strict) {
    int need = strict ? max_num_deg + 1 : max_num_deg;
    int half = (need + 1) / 2 + pick(rng, 0, 1);
    return gamma_plus_poly(rng, half);
}

inline Instance make_instance(const Poly& x, const Poly& y, const Poly& gamma) {
    return {DressElem::make(x, gamma), DressElem::make(y, gamma)};
}

inline bool sign_condition_holds(const Instance& inst) {
    CommonDenominator cd = common_denominator(inst.p, inst.q);
    if (inst.q.deg() >= inst.p.deg() && detail::uniformish(sign_at_roots(cd.x, cd.y))) return true;
    if (inst.p.deg() >= inst.q.deg() && detail::uniformish(sign_at_roots(cd.y, cd.x))) return true;
    return false;
}

inline Instance gen_semidefinite(Rng& rng) {
    std::vector<Rational> pr = distinct_rationals(rng, pick(rng, 0, 2));
    Poly x(Rational(pick_sign(rng) * pick(rng, 1, 3)));
    for (const Rational& r : pr) x = x * pow(Poly::x() - Poly(r), 2);
    if (pick(rng, 0, 1)) x = x * gamma_quad(rng);

    std::vector<Rational> qr = distinct_rationals(rng, pick(rng, 1, 3), pr);
    Poly y(Rational(pick_sign(rng) * pick(rng, 1, 3)));
    for (const Rational& r : qr) y = y * pow(Poly::x() - Poly(r), pick(rng, 1, 2));
    if (pick(rng, 0, 1)) y = y * gamma_quad(rng);

    Poly gamma = denominator_for(rng, std::max(x.degree(), y.degree()), false);
    return make_instance(x, y, gamma);
}

inline bool semidefinite_ok(const Instance& i) {
    if (i.p.is_zero() || i.q.is_zero()) return false;
    if (!weakly_comaximal(i.p, i.q)) return false;
    return i.p.is_nonneg() || i.p.is_nonpos() || i.q.is_nonneg() || i.q.is_nonpos();
}

inline Instance gen_sign_condition(Rng& rng) {
    // Build the case (ii) shape: the "sign" element has its real roots far
    // from the other entry's roots, so its sign there is uniform.
    std::vector<Rational> us;
    for (int i = 0, n = pick(rng, 1, 2); i < n; ++i) {
        Rational u = Rational(pick(rng, -6, 6), pick(rng, 1, 2));
        u.canonicalize();
        bool dup = false;
        for (const Rational& v : us) dup = dup || v == u;
        if (!dup) us.push_back(u);
    }
    Poly y(Rational(pick_sign(rng) * pick(rng, 1, 3)));
    for (const Rational& u : us) y = y * pow(Poly::x() - Poly(u), pick(rng, 1, 3));

    Poly x(Rational(pick_sign(rng) * pick(rng, 1, 3)));
    for (int i = 0, n = pick(rng, 0, 2); i < n; ++i)
        x = x * (Poly::x() - Poly(Rational(pick(rng, 8, 14))));
    if (pick(rng, 0, 1)) x = x * gamma_quad(rng);

    y = pad_to_min_degree(rng, y, x.degree());
    Poly gamma = denominator_for(rng, std::max(x.degree(), y.degree()), false);
    Instance inst = make_instance(x, y, gamma);
    if (pick(rng, 0, 1)) std::swap(inst.p, inst.q);  // exercise case (i) too
    return inst;
}

inline bool sign_condition_ok(const Instance& i) {
    if (i.p.is_zero() || i.q.is_zero()) return false;
    return sign_condition_holds(i);
}

inline Instance gen_odd_odd(Rng& rng, bool shared) {
    Rational z = small_rational(rng, 3);
    int kq = pick(rng, 0, 1) ? 1 : 3;
    Poly y = pow(Poly::x() - Poly(z), kq) * gamma_plus_poly(rng, pick(rng, 0, 1)) *
             Poly(Rational(pick_sign(rng) * pick(rng, 1, 3)));

    Poly x(Rational(pick_sign(rng) * pick(rng, 1, 3)));
    if (shared) x = x * pow(Poly::x() - Poly(z), pick(rng, 1, 3));
    std::vector<Rational> ws = distinct_rationals(rng, pick(rng, 1, 2), {z});
    for (const Rational& w : ws) x = x * (Poly::x() - Poly(w));
    if (pick(rng, 0, 1)) x = x * gamma_quad(rng);
    if (x.degree() % 2 == 0) {
        std::vector<Rational> extra = distinct_rationals(rng, 1, [&] {
            std::vector<Rational> avoid = ws;
            avoid.push_back(z);
            return avoid;
        }());
        x = x * (Poly::x() - Poly(extra.front()));
    }

    Poly gamma = denominator_for(rng, std::max(x.degree(), y.degree()), false);
    return make_instance(x, y, gamma);
}

inline bool odd_odd_ok(const Instance& i, bool shared) {
    if (i.p.is_zero() || i.q.is_zero()) return false;
    if (i.p.deg() % 2 == 0 || i.q.deg() % 2 == 0) return false;
    if (root_info(i.q).distinct_count != 1) return false;
    return weakly_comaximal(i.p, i.q) == !shared;
}

inline Instance gen_even_odd(Rng& rng, int variant) {
    if (variant == 0) {
        // p with a unique (even multiplicity) root.
        Rational r = small_rational(rng, 3);
        Poly x = pow(Poly::x() - Poly(r), 2 * pick(rng, 1, 2)) * gamma_plus_poly(rng, pick(rng, 0, 1)) *
                 Poly(Rational(pick_sign(rng) * pick(rng, 1, 3)));
        std::vector<Rational> ss = distinct_rationals(rng, pick(rng, 1, 2), {r});
        Poly y(Rational(pick_sign(rng) * pick(rng, 1, 3)));
        for (const Rational& s : ss) y = y * (Poly::x() - Poly(s));
        if (y.degree() % 2 == 0) {
            std::vector<Rational> avoid = ss;
            avoid.push_back(r);
            y = y * (Poly::x() - Poly(distinct_rationals(rng, 1, avoid).front()));
        }
        Poly gamma = denominator_for(rng, std::max(x.degree(), y.degree()), false);
        return make_instance(x, y, gamma);
    }
    if (variant == 1) {
        // q with a unique root u and deg q > deg p; p semidefinite-shaped, so
        // its sign at u automatically matches its leading coefficient.
        Rational u = small_rational(rng, 3);
        Poly y = pow(Poly::x() - Poly(u), pick(rng, 0, 1) ? 1 : 3) * gamma_plus_poly(rng, pick(rng, 0, 1)) *
                 Poly(Rational(pick_sign(rng) * pick(rng, 1, 3)));
        Poly x(Rational(pick_sign(rng) * pick(rng, 1, 3)));
        if (pick(rng, 0, 1)) {
            std::vector<Rational> vs = distinct_rationals(rng, 1, {u});
            x = x * pow(Poly::x() - Poly(vs.front()), 2);
        } else {
            x = x * gamma_quad(rng);
        }
        y = pad_to_min_degree(rng, y, x.degree() + 1);
        Poly gamma = denominator_for(rng, std::max(x.degree(), y.degree()), false);
        return make_instance(x, y, gamma);
    }
    // variant 2: q with a unique root u, deg p > deg q, and q of mixed sign
    // on the roots of p; two roots on each side of u keep sign(p(u)) equal
    // to the sign of the leading coefficient.
    Rational u = small_rational(rng, 2);
    Rational step1(pick(rng, 1, 2)), step2 = step1 + pick(rng, 1, 2);
    std::vector<Rational> vs{u - step2, u - step1, u + step1, u + step2};
    Poly x = from_roots(vs, {1, 1, 1, 1}) * Poly(Rational(pick_sign(rng) * pick(rng, 1, 2)));
    Poly y = (Poly::x() - Poly(u)) * Poly(Rational(pick_sign(rng) * pick(rng, 1, 2)));
    if (pick(rng, 0, 1)) y = y * gamma_quad(rng);
    Poly gamma = denominator_for(rng, x.degree(), false);
    return make_instance(x, y, gamma);
}

inline bool even_odd_ok(const Instance& i) {
    if (i.p.is_zero() || i.q.is_zero()) return false;
    if (i.p.deg() == DressElem::kNegInfDeg || i.p.deg() % 2 != 0 || i.q.deg() % 2 == 0) return false;
    if (!weakly_comaximal(i.p, i.q)) return false;
    if (root_info(i.p).distinct_count == 1) return true;
    if (root_info(i.q).distinct_count != 1) return false;
    SignAtRoots s = sign_at_roots(i.p.num(), i.q.num());
    int at_u = (s == SignAtRoots::UniformPositive) ? 1 : -1;
    return at_u == sign(i.p.num().lc());
}

inline Instance gen_even_odd_common(Rng& rng, int variant) {
    Rational z = small_rational(rng, 2);
    Poly x, y;
    if (variant == 0) {
        // p has z as its unique root; the sign condition lands on ybar.
        Poly xbar = gamma_plus_poly(rng, pick(rng, 0, 1)) * Poly(Rational(pick_sign(rng) * pick(rng, 1, 3)));
        x = pow(Poly::x() - Poly(z), 2 * pick(rng, 1, 2)) * xbar;
        Poly ybar;
        if (pick(rng, 0, 1)) {
            ybar = gamma_plus_poly(rng, pick(rng, 0, 1)) * Poly(Rational(pick_sign(rng) * pick(rng, 1, 3)));
        } else {
            Rational s1(pick(rng, 1, 2)), s2 = s1 + 1;
            ybar = from_roots({z - s2, z - s1, z + s1, z + s2}, {1, 1, 1, 1}) *
                   Poly(Rational(pick_sign(rng) * pick(rng, 1, 2)));
        }
        int h = pick(rng, 1, 3);
        if ((h + ybar.degree()) % 2 == 0) ++h;
        y = pow(Poly::x() - Poly(z), h) * ybar;
    } else {
        // q has z as its unique root; the sign condition lands on xbar.
        Poly ybar = gamma_plus_poly(rng, pick(rng, 0, 1)) * Poly(Rational(pick_sign(rng) * pick(rng, 1, 3)));
        int h = pick(rng, 0, 1) ? 1 : 3;
        y = pow(Poly::x() - Poly(z), h) * ybar;
        Poly xbar;
        if (pick(rng, 0, 1)) {
            xbar = gamma_plus_poly(rng, pick(rng, 0, 1)) * Poly(Rational(pick_sign(rng) * pick(rng, 1, 3)));
        } else {
            Rational s1(pick(rng, 1, 2)), s2 = s1 + 1;
            xbar = from_roots({z - s2, z - s1, z + s1, z + s2}, {1, 1, 1, 1}) *
                   Poly(Rational(pick_sign(rng) * pick(rng, 1, 2)));
        }
        int k = pick(rng, 1, 3);
        if ((k + xbar.degree()) % 2 != 0) ++k;
        x = pow(Poly::x() - Poly(z), k) * xbar;
    }
    Poly gamma = denominator_for(rng, std::max(x.degree(), y.degree()), true);
    return make_instance(x, y, gamma);
}

inline bool even_odd_common_ok(const Instance& i) {
    if (i.p.is_zero() || i.q.is_zero()) return false;
    if (i.p.deg() == DressElem::kNegInfDeg || i.p.deg() % 2 != 0 || i.q.deg() % 2 == 0) return false;
    if (i.p.deg() >= 0 || i.q.deg() >= 0) return false;
    CommonDenominator cd = common_denominator(i.p, i.q);
    Poly shared = gcd(cd.x, cd.y);
    if (shared.degree() < 1 || count_real_roots(shared) != 1) return false;
    std::vector<IsolatedRoot> iso = isolate_real_roots(shared);
    if (!iso.front().exact()) return false;
    Rational z = iso.front().value();
    Poly xbar = cd.x, ybar = cd.y;
    const Poly lin = Poly::x() - Poly(z);
    while (xbar.eval(z) == 0) xbar = exact_div(xbar, lin);
    while (ybar.eval(z) == 0) ybar = exact_div(ybar, lin);
    bool hyp_p = root_info(i.p).distinct_count == 1 && sign(ybar.eval(z)) == sign(ybar.lc());
    bool hyp_q = root_info(i.q).distinct_count == 1 && sign(xbar.eval(z)) == sign(xbar.lc());
    return hyp_p || hyp_q;
}

inline Instance example_like(std::uint64_t index) {
    if (index == 0) {
        Poly den(std::vector<Rational>{Rational(1), Rational(0), Rational(1)});  // 1 + X^2
        Poly pn(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});  // X^2 - 1
        return {DressElem::make(pn, den), DressElem::make(Poly::x(), den)};
    }
    int a = 1 + static_cast<int>(index % 3);
    int b = 1 + static_cast<int>((index / 3) % 2);
    int c = 1 + static_cast<int>(index % 2);
    Poly den(std::vector<Rational>{Rational(c), Rational(0), Rational(1)});
    Poly pn(std::vector<Rational>{Rational(-a * a), Rational(0), Rational(1)});
    return {DressElem::make(pn, den), DressElem::make(Poly::x() * Rational(b), den)};
}

}  // namespace corpus_detail

/// Deterministic seeded instance for a profile; identical (seed, index)
/// pairs always yield the same instance.
inline Instance generate_instance(std::uint64_t seed, Profile profile, std::uint64_t index) {
    using namespace corpus_detail;
    if (profile == Profile::ExampleLike) return example_like(index);

    Rng rng = rng_for(seed, index);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Instance inst;
        bool ok = false;
        switch (profile) {
            case Profile::Semidefinite:
                inst = gen_semidefinite(rng);
                ok = semidefinite_ok(inst);
                break;
            case Profile::SignCondition:
                inst = gen_sign_condition(rng);
                ok = sign_condition_ok(inst);
                break;
            case Profile::OddOdd: {
                bool shared = index % 3 == 2;
                inst = gen_odd_odd(rng, shared);
                ok = odd_odd_ok(inst, shared);
                break;
            }
            case Profile::EvenOdd:
                inst = gen_even_odd(rng, static_cast<int>(index % 3));
                ok = even_odd_ok(inst);
                break;
            case Profile::EvenOddCommon:
                inst = gen_even_odd_common(rng, static_cast<int>(index % 2));
                ok = even_odd_common_ok(inst);
                break;
            case Profile::ExampleLike:
                break;  // handled above
        }
        if (ok) return inst;
    }
    throw std::logic_error(std::string("generate_instance: profile ") + profile_name(profile) +
                           " failed to produce a valid instance");
}

/// Uniformly random element of D built from a random numerator over a
/// random Gamma+ denominator of sufficient degree.
inline DressElem random_dress_elem(corpus_detail::Rng& rng, bool allow_zero = true) {
    using namespace corpus_detail;
    for (;;) {
        int d = pick(rng, 0, 4);
        std::vector<Rational> coeffs;
        for (int i = 0; i <= d; ++i) coeffs.push_back(Rational(pick(rng, -4, 4), pick(rng, 1, 2)));
        Poly num(coeffs);
        if (num.is_zero()) {
            if (allow_zero) return DressElem();
            continue;
        }
        Poly den = gamma_plus_poly(rng, (num.degree() + 1) / 2 + pick(rng, 0, 1));
        return DressElem::make(num, den);
    }
}

/// Random idempotent with entries in D: a simple trace-one idempotent
/// conjugated by random shears/swaps.
inline Mat2 random_idempotent(corpus_detail::Rng& rng) {
    using namespace corpus_detail;
    const DressElem one = DressElem::constant(1);
    const DressElem zero;
    DressElem e = random_dress_elem(rng);
    Mat2 t;
    switch (pick(rng, 0, 3)) {
        case 0: t = Mat2{one, zero, zero, zero}; break;
        case 1: t = Mat2{one, e, zero, zero}; break;
        case 2: t = Mat2{one, zero, e, zero}; break;
        default: t = Mat2{zero, zero, e, one}; break;
    }
    for (int i = 0, n = pick(rng, 0, 2); i < n; ++i) {
        if (pick(rng, 0, 1))
            t = detail::shear_factor(t, small_rational(rng, 2));
        else
            t = t.permutation_conjugate();
    }
    return t;
}

/// Random nonzero singular matrix over D (a rank-one outer product).
inline Mat2 random_singular(corpus_detail::Rng& rng) {
    for (;;) {
        DressElem u = random_dress_elem(rng), v = random_dress_elem(rng);
        DressElem s = random_dress_elem(rng), t = random_dress_elem(rng);
        Mat2 m{u * s, u * t, v * s, v * t};
        if (!m.is_zero()) return m;
    }
}

/// Random singular matrix with a nonzero bottom row (top row a D-multiple
/// of the bottom row).
inline Mat2 random_singular_bottom_row(corpus_detail::Rng& rng) {
    using namespace corpus_detail;
    for (;;) {
        DressElem c = random_dress_elem(rng), d = random_dress_elem(rng);
        if (c.is_zero() && d.is_zero()) continue;
        DressElem lambda = random_dress_elem(rng);
        return Mat2{lambda * c, lambda * d, c, d};
    }
}

}  // namespace dress
