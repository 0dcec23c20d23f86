#pragma once

#include <string>

#include "dress/errors.hpp"
#include "dress/poly.hpp"
#include "dress/sturm.hpp"

namespace dress {

inline constexpr int kDefaultMaxSteps = 256;

/// Witness for delta = x*eta + y^2 (find_eta) or delta = x^2 + y*beta
/// (find_beta): eta in Gamma, delta in Gamma+ with deg delta twice the
/// squared factor's degree. scale_steps records how often the scalar was
/// halved before the Sturm certificate accepted.
struct EtaCert {
    Poly eta;
    Poly delta;
    int scale_steps = 0;
};

/// Witness r for a shear x -> r*x + y with a certified number of distinct
/// real roots (1 or 2).
struct ShearCert {
    Rational r;
    int root_count = 1;
    int halving_steps = 0;
};

namespace detail {

inline bool uniformish(SignAtRoots s) {
    return s == SignAtRoots::UniformPositive || s == SignAtRoots::UniformNegative ||
           s == SignAtRoots::NoRealRoots;
}

// sigma * c * (X^2+1)^m: the fixed Gamma witness shape. m is chosen so the
// degree lands in [deg-1, deg] for the given target degree.
inline Poly gamma_witness(int target_deg, int sigma, const Rational& c) {
    Poly w = pow(Poly(std::vector<Rational>{Rational(1), Rational(0), Rational(1)}), target_deg / 2);
    return w * (sigma > 0 ? c : -c);
}

}  // namespace detail

/// Search for eta in Gamma with delta = x*eta + y^2 in Gamma+ and
/// deg delta = 2 deg y. Requires deg x = deg y and x of uniform sign on the
/// real roots of y (vacuously when y has none). The scalar on the witness
/// (X^2+1)^m is halved geometrically from 1; each candidate is accepted only
/// after an exact Sturm certificate on delta.
inline EtaCert find_eta(const Poly& x, const Poly& y, int max_steps = kDefaultMaxSteps) {
    if (x.is_zero() || y.is_zero()) throw PreconditionError("find_eta: zero input");
    if (x.degree() != y.degree()) throw PreconditionError("find_eta: degrees differ");
    SignAtRoots s = sign_at_roots(x, y);
    if (!detail::uniformish(s))
        throw PreconditionError(std::string("find_eta: sign of x at roots of y is ") + to_string(s));
    const int sigma = (s == SignAtRoots::UniformNegative) ? -1 : 1;

    Rational c(1);
    for (int step = 0; step <= max_steps; ++step) {
        Poly eta = detail::gamma_witness(y.degree(), sigma, c);
        Poly delta = x * eta + y * y;
        if (delta.degree() == 2 * y.degree() && is_gamma_plus(delta)) return {eta, delta, step};
        c /= 2;
    }
    throw SearchExhaustedError(
        "find_eta: no admissible scale within the step budget (existence is guaranteed for a "
        "small enough scale; raise max_steps)");
}

/// Mirror of find_eta: beta in Gamma with delta = x^2 + y*beta in Gamma+
/// and deg delta = 2 deg x; y must have uniform sign on the roots of x.
inline EtaCert find_beta(const Poly& x, const Poly& y, int max_steps = kDefaultMaxSteps) {
    if (x.is_zero() || y.is_zero()) throw PreconditionError("find_beta: zero input");
    if (x.degree() != y.degree()) throw PreconditionError("find_beta: degrees differ");
    SignAtRoots s = sign_at_roots(y, x);
    if (!detail::uniformish(s))
        throw PreconditionError(std::string("find_beta: sign of y at roots of x is ") + to_string(s));
    const int sigma = (s == SignAtRoots::UniformNegative) ? -1 : 1;

    Rational c(1);
    for (int step = 0; step <= max_steps; ++step) {
        Poly beta = detail::gamma_witness(x.degree(), sigma, c);
        Poly delta = x * x + y * beta;
        if (delta.degree() == 2 * x.degree() && is_gamma_plus(delta)) return {beta, delta, step};
        c /= 2;
    }
    throw SearchExhaustedError(
        "find_beta: no admissible scale within the step budget (existence is guaranteed for a "
        "small enough scale; raise max_steps)");
}

namespace detail {

inline void check_shear_preconditions(const char* who, const Poly& x, const Poly& y,
                                      bool x_deg_even) {
    if (x.is_zero() || y.is_zero()) throw PreconditionError(std::string(who) + ": zero input");
    if (x_deg_even ? (x.degree() % 2 != 0) : (x.degree() % 2 == 0))
        throw PreconditionError(std::string(who) + ": degree of x has the wrong parity");
    if (y.degree() < 0 || y.degree() % 2 == 0)
        throw PreconditionError(std::string(who) + ": degree of y must be odd");
    if (x.degree() <= y.degree())
        throw PreconditionError(std::string(who) + ": deg x must exceed deg y");
    if (!is_gamma(gcd(x, y)))
        throw PreconditionError(std::string(who) + ": x and y share a real root");
    if (count_real_roots(y) != 1)
        throw PreconditionError(std::string(who) + ": y must have a unique real root");
    SignAtRoots s = sign_at_roots(y, x);
    if (s != SignAtRoots::Mixed)
        throw PreconditionError(std::string(who) + ": y must change sign on the roots of x (got " +
                                to_string(s) + ")");
}

}  // namespace detail

/// Certified r with r*x + y having a unique real root. Tries r = sigma/2^j,
/// sigma matching the sign that sends x*y to +infinity at both ends.
inline ShearCert find_r_one_root(const Poly& x, const Poly& y, int max_steps = kDefaultMaxSteps) {
    detail::check_shear_preconditions("find_r_one_root", x, y, /*x_deg_even=*/false);
    const int sigma = sign(x.lc() * y.lc());
    for (int j = 0; j <= max_steps; ++j) {
        Rational r = pow2_inverse(j) * sigma;
        if (count_real_roots(x * r + y) == 1) return {r, 1, j};
    }
    throw SearchExhaustedError("find_r_one_root: step budget exhausted; raise max_steps");
}

/// Certified r with r*x + y having exactly two distinct real roots. When
/// the sign of x at the unique root of y matches the sign of lc(x), the
/// certificate additionally guarantees x has uniform sign at both roots,
/// checked exactly before acceptance.
inline ShearCert find_r_two_roots(const Poly& x, const Poly& y, int max_steps = kDefaultMaxSteps) {
    detail::check_shear_preconditions("find_r_two_roots", x, y, /*x_deg_even=*/true);

    SignAtRoots x_at_y = sign_at_roots(x, y);  // y has one root, so uniform
    const int lc_sign = sign(x.lc());
    const bool need_uniform = (x_at_y == SignAtRoots::UniformPositive && lc_sign > 0) ||
                              (x_at_y == SignAtRoots::UniformNegative && lc_sign < 0);

    const int sigma = lc_sign;
    for (int j = 0; j <= max_steps; ++j) {
        Rational r = pow2_inverse(j) * sigma;
        Poly h = x * r + y;
        if (count_real_roots(h) != 2) continue;
        if (need_uniform) {
            SignAtRoots s = sign_at_roots(x, h);
            if (s != SignAtRoots::UniformPositive && s != SignAtRoots::UniformNegative) continue;
        }
        return {r, 2, j};
    }
    throw SearchExhaustedError("find_r_two_roots: step budget exhausted; raise max_steps");
}

}  // namespace dress
