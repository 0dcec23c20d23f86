#pragma once

#include <cassert>
#include <limits>
#include <utility>
#include <vector>

#include "dress/errors.hpp"
#include "dress/rational.hpp"

namespace dress {

/// Dense univariate polynomial with exact rational coefficients.
///
/// Invariant: the coefficient vector carries no trailing zeros, so the zero
/// polynomial is the empty vector and degree() of zero is kNegInfDeg, a
/// sentinel ordered below every integer.
class Poly {
public:
    static constexpr int kNegInfDeg = std::numeric_limits<int>::min();

    Poly() = default;
    Poly(const Rational& constant) { coeffs_.push_back(constant); trim(); }
    Poly(int constant) : Poly(Rational(constant)) {}
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// The monomial c * X^k.
    static Poly monomial(const Rational& c, int k) {
        std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
        v.back() = c;
        return Poly(std::move(v));
    }

    static Poly x() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kNegInfDeg : static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of X^k (zero beyond the degree).
    const Rational& coeff(int k) const {
        static const Rational zero(0);
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
        return coeffs_[static_cast<size_t>(k)];
    }

    /// Leading coefficient; 0 for the zero polynomial.
    Rational lc() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
        for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
        return Poly(std::move(v));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i)
            for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
        return Poly(std::move(v));
    }

    Poly operator*(const Rational& c) const {
        if (c == 0) return Poly();
        Poly r = *this;
        for (auto& a : r.coeffs_) a *= c;
        return r;
    }

    Poly operator/(const Rational& c) const {
        assert(c != 0);
        Poly r = *this;
        for (auto& a : r.coeffs_) a /= c;
        return r;
    }

    /// Exact value at a rational point (Horner).
    Rational eval(const Rational& t) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    /// j-th derivative; derivative(0) is the identity.
    Poly derivative(int j = 1) const {
        assert(j >= 0);
        Poly r = *this;
        for (int step = 0; step < j; ++step) {
            if (r.coeffs_.size() <= 1) return Poly();
            std::vector<Rational> v(r.coeffs_.size() - 1);
            for (size_t i = 1; i < r.coeffs_.size(); ++i) v[i - 1] = r.coeffs_[i] * Rational(static_cast<int>(i));
            r = Poly(std::move(v));
        }
        return r;
    }

    /// Divide by the leading coefficient.
    Poly monic() const {
        if (is_zero()) return *this;
        return *this / lc();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

/// Quotient and remainder of exact division in Q[X].
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    assert(!b.is_zero());
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational blc = b.lc();
    const int db = b.degree();
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational q = rem[static_cast<size_t>(k + db)] / blc;
        quot[static_cast<size_t>(k)] = q;
        if (q == 0) continue;
        for (int i = 0; i <= db; ++i) rem[static_cast<size_t>(k + i)] -= q * b.coeff(i);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

/// Exact quotient; the remainder must vanish.
inline Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

/// Monic greatest common divisor. gcd(f, 0) is the monic normalization of f.
inline Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw BothZeroError("gcd: both inputs are zero");
    Poly f = a, g = b;
    while (!g.is_zero()) {
        Poly r = divmod(f, g).second;
        f = std::move(g);
        g = r.is_zero() ? Poly() : r.monic();  // monic remainders keep coefficients small
    }
    return f.monic();
}

inline Poly pow(const Poly& base, int e) {
    assert(e >= 0);
    Poly acc(1);
    for (int i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

struct SquarefreePart {
    Poly part;         // monic, squarefree
    int multiplicity;  // >= 1
};

struct SquarefreeDecomposition {
    Rational content;  // leading coefficient of the input
    std::vector<SquarefreePart> parts;  // pairwise coprime, multiplicities strictly increasing

    /// Re-expand content * prod part_i^mult_i.
    Poly expand() const {
        Poly acc(content);
        for (const auto& p : parts) acc = acc * pow(p.part, p.multiplicity);
        return acc;
    }
};

/// Yun's squarefree decomposition over Q.
inline SquarefreeDecomposition squarefree_decompose(const Poly& f) {
    if (f.is_zero()) throw ZeroInputError("squarefree_decompose: zero input");
    SquarefreeDecomposition out;
    out.content = f.lc();
    Poly fm = f.monic();
    if (fm.degree() == 0) return out;

    Poly d = fm.derivative();
    Poly g = gcd(fm, d);
    if (g.degree() == 0) {
        out.parts.push_back({fm, 1});
        return out;
    }
    Poly w = exact_div(fm, g);
    Poly y = exact_div(d, g);
    Poly z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        Poly gi = gcd(w, z);
        if (gi.degree() > 0) out.parts.push_back({gi, i});
        w = exact_div(w, gi);
        y = exact_div(z, gi);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

/// f / gcd(f, f'), monic: same distinct roots, all simple.
inline Poly squarefree_part(const Poly& f) {
    if (f.is_zero()) throw ZeroInputError("squarefree_part: zero input");
    if (f.degree() == 0) return Poly(1);
    Poly g = gcd(f, f.derivative());
    return exact_div(f, g).monic();
}

}  // namespace dress
