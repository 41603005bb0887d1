#include "irratio/polynomials.hpp"

#include <string>

#include "irratio/combinatorics.hpp"
#include "irratio/errors.hpp"

namespace irratio {

Poly make_poly(std::initializer_list<Rational> coeffs) { return Poly(std::vector<Rational>(coeffs)); }

Rational poly_eval(const Poly& p, const Rational& x) { return p(x); }

Poly derivative(const Poly& p) { return p.derivative(); }

Poly nth_derivative(const Poly& p, unsigned order) {
    Poly iterated = p;
    for (unsigned i = 0; i < order && !iterated.is_zero(); ++i)
        iterated = iterated.derivative();

    // (x^j)^(l) = j!/(j-l)! x^(j-l), applied to each term.
    std::vector<Rational> closed;
    const auto& c = p.coeffs();
    if (c.size() > order) {
        closed.resize(c.size() - order);
        Integer falling(1); // j!/(j-l)! for j = l
        for (unsigned k = 1; k <= order; ++k)
            falling *= Integer(k);
        for (std::size_t j = order; j < c.size(); ++j) {
            if (j > order) // advance j-1 -> j: multiply by j/(j-l)
                falling = floor_div(falling * Integer(static_cast<unsigned long>(j)),
                                    Integer(static_cast<unsigned long>(j - order)));
            closed[j - order] = c[j] * Rational(falling);
        }
    }
    if (Poly(std::move(closed)) != iterated)
        throw InternalFault("iterated derivative disagrees with the power-rule closed form");
    return iterated;
}

Poly reflect(const Poly& p) {
    if (p.is_zero())
        return p;
    const auto deg = static_cast<unsigned>(p.degree());
    const PascalTriangle t = pascal_rows(deg);
    std::vector<Rational> out(deg + 1);
    for (unsigned j = 0; j <= deg; ++j) {
        const Rational& cj = p.coeffs()[j];
        if (cj.is_zero())
            continue;
        for (unsigned i = 0; i <= j; ++i) {
            Rational term = cj * Rational(t.at(j, i));
            out[i] += (i % 2 == 0) ? term : -term;
        }
    }
    return Poly(std::move(out));
}

Poly niven_poly(unsigned n) {
    if (n == 0)
        throw InvalidInput("niven_poly needs n >= 1");
    std::vector<Rational> coeffs(2 * n + 1);
    for (unsigned j = n; j <= 2 * n; ++j) {
        Rational c(Integer(1), factorial(j - n) * factorial(2 * n - j));
        coeffs[j] = ((j - n) % 2 == 0) ? c : -c;
    }
    Poly closed(std::move(coeffs));

    Poly one_minus_x = make_poly({1, -1});
    Poly product = Poly::monomial(Rational(Integer(1), factorial(n)), n);
    for (unsigned i = 0; i < n; ++i)
        product = product * one_minus_x;
    if (product != closed)
        throw InternalFault("Niven polynomial closed form disagrees with the expanded product");
    return closed;
}

Integer niven_derivative_closed_form(unsigned n, unsigned order) {
    if (order < n || order > 2 * n)
        return Integer(0);
    Integer v = floor_div(binomial(n, order - n) * factorial(order), factorial(n));
    return ((order - n) % 2 == 0) ? v : -v;
}

namespace {

Integer require_integer(const Rational& v, const char* where, unsigned n, unsigned order) {
    if (!v.is_integer())
        throw InternalFault(std::string("non-integral Niven derivative ") + where + " for n=" + std::to_string(n) +
                            ", l=" + std::to_string(order) + ": " + v.to_string());
    return v.num();
}

} // namespace

EndpointDerivatives niven_endpoint_derivatives(unsigned n) {
    const Poly f = niven_poly(n);
    const Poly r = reflect(f); // r(x) = f(1-x), so r^(l)(0) = (-1)^l f^(l)(1)

    EndpointDerivatives out;
    out.n = n;
    Poly df = f, dr = r;
    for (unsigned order = 0; order <= 2 * n; ++order) {
        Integer v0 = require_integer(df(Rational(0)), "at 0", n, order);
        Integer v1 = require_integer(dr(Rational(0)), "at 1", n, order);
        if (order % 2 == 1)
            v1 = -v1;
        if (v0 != niven_derivative_closed_form(n, order))
            throw InternalFault("Niven derivative at 0 disagrees with closed form for n=" + std::to_string(n) +
                                ", l=" + std::to_string(order));
        out.at0.push_back(std::move(v0));
        out.at1.push_back(std::move(v1));
        df = df.derivative();
        dr = dr.derivative();
    }
    return out;
}

} // namespace irratio
