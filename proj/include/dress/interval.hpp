#pragma once

#include <stdexcept>

#include "dress/rational.hpp"

namespace dress {

/// A rational-endpoint interval used as a root-certification range: open,
/// half-open or closed bounded intervals, exact points, or the whole line.
struct Interval {
    Rational lo{0}, hi{0};
    bool lo_closed = false;
    bool hi_closed = false;
    bool whole = false;

    static Interval whole_line() {
        Interval i;
        i.whole = true;
        return i;
    }

    static Interval open(const Rational& a, const Rational& b) { return bounded(a, b, false, false); }
    static Interval closed(const Rational& a, const Rational& b) { return bounded(a, b, true, true); }
    static Interval open_closed(const Rational& a, const Rational& b) { return bounded(a, b, false, true); }
    static Interval closed_open(const Rational& a, const Rational& b) { return bounded(a, b, true, false); }

    /// Degenerate exact point [a, a].
    static Interval point(const Rational& a) {
        Interval i;
        i.lo = i.hi = a;
        i.lo_closed = i.hi_closed = true;
        return i;
    }

    static Interval bounded(const Rational& a, const Rational& b, bool lc, bool hc) {
        if (a > b || (a == b && !(lc && hc)))
            throw std::invalid_argument("Interval: endpoints out of order");
        Interval i;
        i.lo = a;
        i.hi = b;
        i.lo_closed = lc;
        i.hi_closed = hc;
        return i;
    }

    bool is_point() const { return !whole && lo == hi; }

    bool contains(const Rational& t) const {
        if (whole) return true;
        if (t < lo || t > hi) return false;
        if (t == lo && !lo_closed) return false;
        if (t == hi && !hi_closed) return false;
        return true;
    }

    bool operator==(const Interval& o) const {
        if (whole != o.whole) return false;
        if (whole) return true;
        return lo == o.lo && hi == o.hi && lo_closed == o.lo_closed && hi_closed == o.hi_closed;
    }
};

}  // namespace dress
