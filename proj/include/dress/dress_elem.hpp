#pragma once

#include <optional>
#include <utility>

#include "dress/errors.hpp"
#include "dress/poly.hpp"
#include "dress/sturm.hpp"

namespace dress {

/// An element f/gamma of the minimal Dress ring of R(X), restricted to
/// rational coefficient data.
///
/// Canonical form: gamma is monic with no real roots (so in Gamma+), the
/// fraction is fully reduced, deg f <= deg gamma, and 0 is 0/1. Values are
/// immutable; all operations are pure.
class DressElem {
public:
    static constexpr int kNegInfDeg = Poly::kNegInfDeg;

    DressElem() : num_(), den_(1) {}

    /// Build f/g: reduce, normalize the denominator to monic form, then
    /// admit the value only if the reduced denominator has no real roots
    /// and the numerator degree does not exceed the denominator's.
    static DressElem make(const Poly& f, const Poly& g) {
        if (g.is_zero()) throw ZeroDenominatorError("make: zero denominator");
        if (f.is_zero()) return DressElem();
        Poly num = f, den = g;
        Poly d = gcd(num, den);
        if (d.degree() > 0) {
            num = exact_div(num, d);
            den = exact_div(den, d);
        }
        Rational c = den.lc();
        den = den / c;
        num = num / c;
        if (count_real_roots(den) != 0)
            throw NotInDressError(NotInDressError::Reason::DenominatorHasRealRoot,
                                  "make: denominator has a real root");
        if (num.degree() > den.degree())
            throw NotInDressError(NotInDressError::Reason::DegreeTooLarge,
                                  "make: numerator degree exceeds denominator degree");
        return DressElem(std::move(num), std::move(den));
    }

    static DressElem constant(const Rational& c) {
        DressElem e;
        if (c != 0) e.num_ = Poly(c);
        return e;
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// D-degree deg(f) - deg(gamma) <= 0; kNegInfDeg for zero.
    int deg() const { return is_zero() ? kNegInfDeg : num_.degree() - den_.degree(); }

    bool operator==(const DressElem& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const DressElem& o) const { return !(*this == o); }

    DressElem operator-() const { return DressElem(-num_, den_); }

    DressElem operator+(const DressElem& o) const {
        return reduced(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }

    DressElem operator-(const DressElem& o) const { return *this + (-o); }

    DressElem operator*(const DressElem& o) const {
        return reduced(num_ * o.num_, den_ * o.den_);
    }

    DressElem scalar_mul(const Rational& c) const {
        if (c == 0) return DressElem();
        return DressElem(num_ * c, den_);
    }

    /// Units of D are ratios of root-free polynomials of equal degree.
    bool is_unit() const { return !is_zero() && deg() == 0 && is_gamma(num_); }

    DressElem invert() const {
        if (!is_unit()) throw NotAUnitError("invert: not a unit of D");
        return reduced(den_, num_);
    }

    /// p(t) >= 0 for all real t: positive leading coefficient and no
    /// odd-multiplicity squarefree part with a real root.
    bool is_nonneg() const { return semidefinite_sign() > 0; }
    bool is_nonpos() const { return semidefinite_sign() < 0; }

    Rational eval_at(const Rational& t) const { return num_.eval(t) / den_.eval(t); }

private:
    DressElem(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}

    // Ring operations stay inside D and their denominators are products of
    // root-free polynomials, so reduction plus a degree assertion suffices.
    static DressElem reduced(Poly num, Poly den) {
        if (num.is_zero()) return DressElem();
        Poly d = gcd(num, den);
        if (d.degree() > 0) {
            num = exact_div(num, d);
            den = exact_div(den, d);
        }
        Rational c = den.lc();
        den = den / c;
        num = num / c;
        if (num.degree() > den.degree())
            throw std::logic_error("DressElem: ring operation left D");
        return DressElem(std::move(num), std::move(den));
    }

    // +1 everywhere nonnegative, -1 everywhere nonpositive, 0 indefinite.
    int semidefinite_sign() const {
        if (is_zero()) throw ZeroInputError("semidefiniteness of the zero element");
        SquarefreeDecomposition dec = squarefree_decompose(num_);
        for (const auto& part : dec.parts)
            if (part.multiplicity % 2 == 1 && count_real_roots(part.part) > 0) return 0;
        return sign(num_.lc());
    }

    Poly num_;
    Poly den_;
};

inline DressElem scalar_mul(const Rational& c, const DressElem& p) { return p.scalar_mul(c); }

/// Common Gamma+ denominator: p = x/gamma, q = y/gamma with gamma the lcm
/// of the two reduced denominators.
struct CommonDenominator {
    Poly x, y, gamma;
};

inline CommonDenominator common_denominator(const DressElem& p, const DressElem& q) {
    Poly g = gcd(p.den(), q.den());
    Poly qc = exact_div(q.den(), g);
    Poly pc = exact_div(p.den(), g);
    return {p.num() * qc, q.num() * pc, p.den() * qc};
}

/// Weak comaximality: over a common denominator the numerators share no
/// real root (their gcd lies in Gamma).
inline bool weakly_comaximal(const DressElem& p, const DressElem& q) {
    if (p.is_zero() || q.is_zero()) throw ZeroInputError("weakly_comaximal: zero element");
    CommonDenominator cd = common_denominator(p, q);
    return is_gamma(gcd(cd.x, cd.y));
}

/// Distinct real roots of the numerator (the denominator contributes none).
struct RootInfo {
    int distinct_count = 0;
    std::optional<IsolatedRoot> unique_root;  // present iff distinct_count == 1
};

inline RootInfo root_info(const DressElem& p) {
    if (p.is_zero()) throw ZeroInputError("root_info: zero element");
    std::vector<IsolatedRoot> roots = isolate_real_roots(p.num());
    RootInfo info;
    info.distinct_count = static_cast<int>(roots.size());
    if (roots.size() == 1) info.unique_root = roots.front();
    return info;
}

}  // namespace dress
