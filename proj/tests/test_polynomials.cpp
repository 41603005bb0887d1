#include <doctest.h>

#include "generators.hpp"
#include "irratio/combinatorics.hpp"
#include "irratio/errors.hpp"
#include "irratio/polynomials.hpp"

using namespace irratio;
using irratio::testing::Gen;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

Poly random_poly(Gen& g, unsigned max_degree) {
    std::vector<Rational> c(static_cast<std::size_t>(g.int_in(0, max_degree)) + 1);
    for (auto& x : c)
        x = g.rational(20, 9);
    return Poly(std::move(c));
}

} // namespace

TEST_CASE("evaluation") {
    CHECK(poly_eval(make_poly({0, 1, -1}), q("1/2")) == q("1/4"));
    CHECK(poly_eval(make_poly({q("7/3"), 5, 9}), 0) == q("7/3"));
    CHECK(poly_eval(make_poly({0, 0, 1, -2, 1}), 1) == 0);
    CHECK(poly_eval(Poly(), q("3")) == 0);
}

TEST_CASE("derivatives") {
    CHECK(derivative(Poly::monomial(1, 5)) == Poly::monomial(5, 4));
    CHECK(derivative(make_poly({q("9/2")})).is_zero());
    CHECK(derivative(make_poly({0, 1, -1})) == make_poly({1, -2}));
    CHECK(nth_derivative(Poly::monomial(1, 5), 2) == Poly::monomial(20, 3));
    for (unsigned n = 0; n < 12; ++n)
        CHECK(nth_derivative(Poly::monomial(1, n), n) == Poly(Rational(factorial(n))));
    CHECK(nth_derivative(Poly::monomial(1, 3), 4).is_zero());
    CHECK(Poly().degree() == -1);
}

TEST_CASE("property: derivative rules on random polynomials") {
    Gen g(31);
    for (int i = 0; i < 100; ++i) {
        const Poly p = random_poly(g, 12), r = random_poly(g, 12);
        CHECK(derivative(p + r) == derivative(p) + derivative(r));
        CHECK(derivative(p * r) == derivative(p) * r + p * derivative(r));
        CHECK(nth_derivative(p, 3) == derivative(derivative(derivative(p))));
        const unsigned beyond = static_cast<unsigned>(p.degree() + 1 + g.int_in(0, 3));
        CHECK(nth_derivative(p, beyond).is_zero());
    }
}

TEST_CASE("reflection") {
    CHECK(reflect(make_poly({0, 1})) == make_poly({1, -1}));
    CHECK(reflect(make_poly({0, 0, 1})) == make_poly({1, -2, 1}));
    CHECK(reflect(niven_poly(2)) == niven_poly(2));
    Gen g(32);
    for (int i = 0; i < 50; ++i) {
        const Poly p = random_poly(g, 30);
        CHECK(reflect(reflect(p)) == p);
        const Rational x = g.rational(5, 7);
        CHECK(poly_eval(reflect(p), x) == poly_eval(p, Rational(1) - x));
    }
}

TEST_CASE("niven polynomial") {
    CHECK(niven_poly(1) == make_poly({0, 1, -1}));
    CHECK(niven_poly(2) == make_poly({0, 0, q("1/2"), -1, q("1/2")}));
    CHECK_THROWS_AS(niven_poly(0), InvalidInput);
    for (unsigned n = 1; n <= 12; ++n) {
        const Poly f = niven_poly(n);
        CHECK(f.degree() == static_cast<int>(2 * n));
        const Rational sign = n % 2 == 0 ? 1 : -1;
        CHECK(f.coeff(2 * n) == sign / Rational(factorial(n)));
        // Independent product oracle: x^n (1 - x)^n / n!.
        Poly prod = Poly::monomial(1, n);
        for (unsigned k = 0; k < n; ++k)
            prod = prod * make_poly({1, -1});
        CHECK(f == prod.scaled(Rational(1) / Rational(factorial(n))));
    }
}

TEST_CASE("property: 0 <= f(x) <= 1/n! on sample points") {
    const Rational xs[] = {0, q("1/4"), q("1/2"), q("3/4"), 1};
    for (unsigned n = 1; n <= 10; ++n) {
        const Poly f = niven_poly(n);
        const Rational bound = Rational(1) / Rational(factorial(n));
        for (const auto& x : xs) {
            const Rational v = poly_eval(f, x);
            CHECK(v >= 0);
            CHECK(v < bound);
            if (x.is_zero() || x == Rational(1))
                CHECK(v == 0);
        }
    }
}

TEST_CASE("endpoint derivatives") {
    const EndpointDerivatives d1 = niven_endpoint_derivatives(1);
    CHECK(d1.at0 == std::vector<Integer>{0, 1, -2});
    CHECK(d1.at1 == std::vector<Integer>{0, -1, -2});
    const EndpointDerivatives d2 = niven_endpoint_derivatives(2);
    CHECK(d2.at0[2] == Integer(1));
    CHECK(d2.at0[3] == Integer(-6));
    CHECK(d2.at0[4] == Integer(12));
}

TEST_CASE("property: endpoint derivatives are integers matching the closed form, n <= 20") {
    for (unsigned n = 1; n <= 20; ++n) {
        const Poly f = niven_poly(n);
        const EndpointDerivatives d = niven_endpoint_derivatives(n);
        REQUIRE(d.at0.size() == 2 * n + 1);
        REQUIRE(d.at1.size() == 2 * n + 1);
        for (unsigned l = 0; l <= 2 * n; ++l) {
            // Direct evaluation is the oracle; the report must agree with it.
            const Poly fl = nth_derivative(f, l);
            const Rational at0 = poly_eval(fl, 0), at1 = poly_eval(fl, 1);
            CHECK(at0.is_integer());
            CHECK(at1.is_integer());
            CHECK(Rational(d.at0[l]) == at0);
            CHECK(Rational(d.at1[l]) == at1);
            CHECK(d.at1[l] == (l % 2 == 0 ? d.at0[l] : -d.at0[l]));
            if (l < n) {
                CHECK(d.at0[l].is_zero());
            } else {
                const Integer sign = (l - n) % 2 == 0 ? 1 : -1;
                const Integer closed = sign * binomial(n, l - n) * floor_div(factorial(l), factorial(n));
                CHECK(d.at0[l] == closed);
                CHECK(niven_derivative_closed_form(n, l) == closed);
            }
        }
    }
}
