#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "dress/errors.hpp"
#include "dress/interval.hpp"
#include "dress/poly.hpp"

namespace dress {

/// Canonical signed remainder sequence of a squarefree polynomial. By
/// Sturm's theorem the drop in sign variations between two non-root points
/// a < b equals the number of distinct real roots in (a, b).
struct SturmChain {
    std::vector<Poly> seq;

    static SturmChain build(const Poly& g) {
        SturmChain ch;
        ch.seq.push_back(normalize(g));
        Poly d = g.derivative();
        if (!d.is_zero()) {
            ch.seq.push_back(normalize(d));
            for (;;) {
                const Poly& a = ch.seq[ch.seq.size() - 2];
                const Poly& b = ch.seq.back();
                Poly r = divmod(a, b).second;
                if (r.is_zero()) break;
                ch.seq.push_back(normalize(-r));
            }
        }
        return ch;
    }

    int variations_at(const Rational& t) const {
        int count = 0, prev = 0;
        for (const Poly& p : seq) {
            int s = sign(p.eval(t));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }

    int variations_pos_inf() const {
        int count = 0, prev = 0;
        for (const Poly& p : seq) {
            int s = sign(p.lc());
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }

    int variations_neg_inf() const {
        int count = 0, prev = 0;
        for (const Poly& p : seq) {
            int s = sign(p.lc());
            if (p.degree() % 2 != 0) s = -s;
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }

private:
    // Positive rescaling keeps every sign: divide by |lc|.
    static Poly normalize(const Poly& p) {
        Rational a = abs(p.lc());
        return a == 0 ? p : p / a;
    }
};

namespace detail {

/// Smallest power of two >= Cauchy's root bound 1 + max|c_i|/|c_n|. All real
/// roots of g lie strictly inside (-B, B).
inline Rational cauchy_bound_pow2(const Poly& g) {
    Rational m(0);
    for (int i = 0; i < g.degree(); ++i) m = std::max(m, Rational(abs(g.coeff(i))));
    Rational bound = 1 + m / abs(g.lc());
    Rational b(1);
    while (b < bound) b *= 2;
    return b;
}

inline constexpr long kTrialDivisionBound = 1000000;
inline constexpr std::size_t kMaxDivisors = 8192;

/// Prime factorization by trial division; nullopt when the cofactor left
/// after the bound cannot be certified prime.
inline std::optional<std::vector<std::pair<Integer, int>>> factorize(Integer n) {
    std::vector<std::pair<Integer, int>> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    auto take = [&](const Integer& p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    };
    take(2);
    for (Integer d = 3; d <= kTrialDivisionBound && d * d <= n; d += 2) take(d);
    if (n > 1) {
        if (n <= Integer(kTrialDivisionBound) * Integer(kTrialDivisionBound)) {
            out.push_back({n, 1});  // no factor below the bound, so prime
        } else {
            return std::nullopt;
        }
    }
    return out;
}

inline std::optional<std::vector<Integer>> divisors(const Integer& n) {
    auto fac = factorize(n);
    if (!fac) return std::nullopt;
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : *fac) {
        std::size_t base = divs.size();
        if (base * static_cast<std::size_t>(e + 1) > kMaxDivisors) return std::nullopt;
        Integer pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

/// All rational roots of a squarefree polynomial, via the rational root
/// theorem on its primitive integer form. nullopt when the coefficient
/// divisors cannot be enumerated within the caps (callers then fall back to
/// pure bisection, which may report rational roots as intervals).
inline std::optional<std::vector<Rational>> rational_roots(const Poly& g) {
    std::vector<Rational> roots;
    if (g.degree() < 1) return roots;

    Integer den_lcm(1);
    for (const Rational& c : g.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
    std::vector<Integer> ic;
    ic.reserve(g.coeffs().size());
    for (const Rational& c : g.coeffs()) ic.push_back(Integer(c.get_num() * (den_lcm / c.get_den())));

    std::size_t v = 0;
    while (v < ic.size() && ic[v] == 0) ++v;
    if (v > 0) roots.push_back(Rational(0));  // squarefree, so v == 1
    if (v + 1 == ic.size()) return roots;     // g was c * X

    auto p_divs = divisors(ic[v]);
    auto q_divs = divisors(ic.back());
    if (!p_divs || !q_divs) return std::nullopt;
    if (p_divs->size() * q_divs->size() > 2 * kMaxDivisors) return std::nullopt;

    std::vector<Rational> seen;
    for (const Integer& p : *p_divs)
        for (const Integer& q : *q_divs) {
            Rational cand(p, q);
            cand.canonicalize();
            for (int s = 0; s < 2; ++s, cand = -cand) {
                if (std::find(seen.begin(), seen.end(), cand) != seen.end()) continue;
                seen.push_back(cand);
                if (g.eval(cand) == 0) roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Isolation data for a squarefree polynomial: every real root appears
/// either as an exact point or inside exactly one open interval; the
/// locations are pairwise disjoint. `deflated` is the input with the exact
/// roots divided out; no interval endpoint is a root of it.
struct RootIsolation {
    std::vector<Interval> roots;
    Poly deflated;
    SturmChain chain;  // chain of deflated, meaningful when deg(deflated) >= 1
};

inline RootIsolation isolate_squarefree(Poly g) {
    RootIsolation out;
    std::vector<Rational> exact;

    if (g.degree() >= 1) {
        if (auto rr = rational_roots(g)) {
            for (const Rational& r : *rr) {
                exact.push_back(r);
                g = exact_div(g, Poly::x() - Poly(r));
            }
        }
    }

    struct Seg {
        Rational a, b;
        int va, vb;
    };
    std::vector<std::pair<Rational, Rational>> ivals;
    SturmChain ch;
    for (;;) {
        ivals.clear();
        if (g.degree() < 1) break;
        ch = SturmChain::build(g);
        Rational bound = cauchy_bound_pow2(g);
        bool restart = false;
        std::vector<Seg> stack;
        {
            int va = ch.variations_at(-bound), vb = ch.variations_at(bound);
            if (va - vb > 0) stack.push_back({-bound, bound, va, vb});
        }
        while (!stack.empty()) {
            Seg s = stack.back();
            stack.pop_back();
            if (s.va - s.vb == 1) {
                ivals.push_back({s.a, s.b});
                continue;
            }
            Rational m = (s.a + s.b) / 2;
            if (g.eval(m) == 0) {
                // Rare: a rational root the divisor enumeration could not
                // reach. Divide it out and start over with the smaller poly.
                exact.push_back(m);
                g = exact_div(g, Poly::x() - Poly(m));
                restart = true;
                break;
            }
            int vm = ch.variations_at(m);
            if (s.va - vm > 0) stack.push_back({s.a, m, s.va, vm});
            if (vm - s.vb > 0) stack.push_back({m, s.b, vm, s.vb});
        }
        if (!restart) break;
    }

    // Exact points must not sit inside any isolating interval: shrink the
    // interval to the side that still holds its root.
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& iv : ivals)
            for (const Rational& r : exact) {
                if (r > iv.first && r < iv.second) {
                    int left = ch.variations_at(iv.first) - ch.variations_at(r);
                    if (left == 1)
                        iv.second = r;
                    else
                        iv.first = r;
                    changed = true;
                }
            }
    }

    out.chain = std::move(ch);
    for (const Rational& r : exact) out.roots.push_back(Interval::point(r));
    for (const auto& iv : ivals) out.roots.push_back(Interval::open(iv.first, iv.second));
    std::sort(out.roots.begin(), out.roots.end(), [](const Interval& x, const Interval& y) {
        return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
    });
    out.deflated = std::move(g);
    return out;
}

}  // namespace detail

/// Number of distinct real roots of f in I, exact.
inline int count_real_roots(const Poly& f, const Interval& I) {
    if (f.is_zero()) throw ZeroInputError("count_real_roots: zero polynomial");
    if (f.degree() == 0) return 0;

    if (I.whole) {
        Poly g = squarefree_part(f);
        if (g.degree() < 1) return 0;
        SturmChain ch = SturmChain::build(g);
        return ch.variations_neg_inf() - ch.variations_pos_inf();
    }
    if (I.is_point()) return f.eval(I.lo) == 0 ? 1 : 0;

    // Roots sitting exactly on an endpoint are divided out, counted only
    // when the endpoint is included.
    int extra = 0;
    Poly g = f;
    const Poly x = Poly::x();
    if (g.eval(I.lo) == 0) {
        do g = exact_div(g, x - Poly(I.lo));
        while (!g.is_zero() && g.eval(I.lo) == 0);
        if (I.lo_closed) ++extra;
    }
    if (g.degree() >= 1 && g.eval(I.hi) == 0) {
        do g = exact_div(g, x - Poly(I.hi));
        while (!g.is_zero() && g.eval(I.hi) == 0);
        if (I.hi_closed) ++extra;
    }
    if (g.degree() < 1) return extra;
    Poly G = squarefree_part(g);
    if (G.degree() < 1) return extra;
    SturmChain ch = SturmChain::build(G);
    return ch.variations_at(I.lo) - ch.variations_at(I.hi) + extra;
}

inline int count_real_roots(const Poly& f) { return count_real_roots(f, Interval::whole_line()); }

/// One distinct real root of a polynomial: an exact rational point or an
/// open isolating interval, together with the root's multiplicity.
struct IsolatedRoot {
    Interval location;
    int multiplicity = 1;

    bool exact() const { return location.is_point(); }
    const Rational& value() const { return location.lo; }
};

/// Isolate all distinct real roots of f. Locations are pairwise disjoint,
/// each holds exactly one root, and their union covers every real root.
inline std::vector<IsolatedRoot> isolate_real_roots(const Poly& f) {
    if (f.is_zero()) throw ZeroInputError("isolate_real_roots: zero polynomial");
    std::vector<IsolatedRoot> out;
    if (f.degree() == 0) return out;

    SquarefreeDecomposition dec = squarefree_decompose(f);
    Poly G(1);
    for (const auto& part : dec.parts) G = G * part.part;
    if (G.degree() < 1) return out;

    detail::RootIsolation iso = detail::isolate_squarefree(G);
    for (const Interval& loc : iso.roots) {
        int mult = 0;
        for (const auto& part : dec.parts) {
            bool here = loc.is_point() ? part.part.eval(loc.lo) == 0
                                       : count_real_roots(part.part, loc) == 1;
            if (here) {
                mult = part.multiplicity;
                break;
            }
        }
        out.push_back({loc, mult});
    }
    return out;
}

enum class SignAtRoots { UniformPositive, UniformNegative, Mixed, SharedRoot, NoRealRoots };

inline const char* to_string(SignAtRoots s) {
    switch (s) {
        case SignAtRoots::UniformPositive: return "UniformPositive";
        case SignAtRoots::UniformNegative: return "UniformNegative";
        case SignAtRoots::Mixed: return "Mixed";
        case SignAtRoots::SharedRoot: return "SharedRoot";
        case SignAtRoots::NoRealRoots: return "NoRealRoots";
    }
    return "?";
}

/// Classify the sign of f at every distinct real root of g. Exact: each
/// isolating interval is refined until f is certified sign-constant on it.
inline SignAtRoots sign_at_roots(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroInputError("sign_at_roots: zero polynomial");
    {
        Poly d = gcd(g, f);
        if (d.degree() >= 1 && count_real_roots(d) > 0) return SignAtRoots::SharedRoot;
    }
    if (g.degree() < 1) return SignAtRoots::NoRealRoots;

    detail::RootIsolation iso = detail::isolate_squarefree(squarefree_part(g));
    if (iso.roots.empty()) return SignAtRoots::NoRealRoots;

    bool pos = false, neg = false;
    for (const Interval& loc : iso.roots) {
        int s = 0;
        if (loc.is_point()) {
            s = sign(f.eval(loc.lo));
        } else {
            Rational a = loc.lo, b = loc.hi;
            for (;;) {
                if (count_real_roots(f, Interval::closed(a, b)) == 0) {
                    s = sign(f.eval(a));
                    break;
                }
                Rational m = (a + b) / 2;
                if (iso.deflated.eval(m) == 0) {
                    s = sign(f.eval(m));
                    break;
                }
                if (iso.chain.variations_at(a) - iso.chain.variations_at(m) == 1)
                    b = m;
                else
                    a = m;
            }
        }
        (s > 0 ? pos : neg) = true;
    }
    if (pos && neg) return SignAtRoots::Mixed;
    return pos ? SignAtRoots::UniformPositive : SignAtRoots::UniformNegative;
}

/// Gamma membership: nonzero with no real roots.
inline bool is_gamma(const Poly& f) {
    if (f.is_zero()) return false;
    return f.degree() == 0 || count_real_roots(f) == 0;
}

/// Gamma+ membership: everywhere positive, i.e. in Gamma with positive
/// leading coefficient.
inline bool is_gamma_plus(const Poly& f) { return is_gamma(f) && sign(f.lc()) > 0; }

}  // namespace dress
