#pragma once

#include <vector>

#include "irratio/basic_poly.hpp"
#include "irratio/numbers.hpp"

namespace irratio {

using Poly = BasicPoly<Rational>;

/// Builds a polynomial from coefficients listed by increasing power.
Poly make_poly(std::initializer_list<Rational> coeffs);

Rational poly_eval(const Poly& p, const Rational& x);
Poly derivative(const Poly& p);

/// The l-th derivative by repeated differentiation, checked term by term
/// against the closed form (x^j)^(l) = j!/(j-l)! x^(j-l). A mismatch throws
/// InternalFault.
Poly nth_derivative(const Poly& p, unsigned order);

/// q(x) = p(1 - x), by binomial expansion of each (1 - x)^j.
Poly reflect(const Poly& p);

/// x^n (1-x)^n / n!. The coefficient of x^j, n <= j <= 2n, is
/// (-1)^(j-n) / ((j-n)! (2n-j)!); written that way it equals the
/// (-1)^(n-j) form since the exponents differ by an even number. The closed
/// form is cross-checked against the expanded product.
Poly niven_poly(unsigned n);

/// Exact values f^(l)(0) and f^(l)(1), l = 0..2n, of the Niven polynomial.
struct EndpointDerivatives {
    unsigned n = 0;
    std::vector<Integer> at0;
    std::vector<Integer> at1;
};

/// Every entry is verified integral, entries n <= l <= 2n are verified
/// against C(n, l-n) (-1)^(n-l) l!/n!, and the values at 1 come from the
/// reflected polynomial with chain-rule sign (-1)^l.
EndpointDerivatives niven_endpoint_derivatives(unsigned n);

/// The closed form C(n, l-n) (-1)^(n-l) l!/n! for n <= l <= 2n, zero otherwise.
Integer niven_derivative_closed_form(unsigned n, unsigned order);

} // namespace irratio
