#pragma once

#include "dress/dress_elem.hpp"

namespace dress {

/// 2x2 matrix over D, row-major: [[a, b], [c, d]].
struct Mat2 {
    DressElem a, b, c, d;

    static Mat2 row(const DressElem& p, const DressElem& q) {
        return {p, q, DressElem(), DressElem()};
    }

    static Mat2 zero() { return {}; }

    static Mat2 identity() {
        return {DressElem::constant(1), DressElem(), DressElem(), DressElem::constant(1)};
    }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    bool operator==(const Mat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator!=(const Mat2& o) const { return !(*this == o); }

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
    bool is_singular() const { return a * d == b * c; }
    bool is_row_form() const { return c.is_zero() && d.is_zero(); }

    DressElem trace() const { return a + d; }

    /// Entry swap under conjugation by the permutation matrix: P M P.
    Mat2 permutation_conjugate() const { return {d, c, b, a}; }
};

/// Exact idempotency check M*M == M.
inline bool is_idempotent(const Mat2& m) { return m * m == m; }

}  // namespace dress
