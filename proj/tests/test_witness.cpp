#include <doctest.h>

#include "generators.hpp"
#include "irratio/combinatorics.hpp"
#include "irratio/errors.hpp"
#include "irratio/polynomials.hpp"
#include "irratio/series.hpp"
#include "irratio/witness.hpp"

using namespace irratio;
using irratio::testing::Gen;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

PiRat pi_pow(int k, Rational c = 1) { return PiRat::monomial(std::move(c), k); }

// Brute-force minimal n with (22/7) a^n < n!.
unsigned brute_force_n(long a) {
    for (unsigned n = 1;; ++n)
        if (q("22/7") * pow(Rational(a), n) < Rational(factorial(n)))
            return n;
}

} // namespace

TEST_CASE("choice of n") {
    CHECK(choose_niven_n(10, 1) == 26);
    CHECK(choose_niven_n(1, 1) == 3);
    CHECK(choose_niven_n(2, 1) == 5);
    CHECK(choose_niven_n(89, 9) == 240);
    CHECK(choose_niven_n(2, 1) >= choose_niven_n(1, 1));
    unsigned prev = 0;
    for (long a = 1; a <= 40; ++a) {
        const unsigned n = choose_niven_n(a, 7);
        CHECK(n == brute_force_n(a));
        CHECK(n >= prev);
        prev = n;
    }
    CHECK_THROWS_AS(choose_niven_n(0, 1), InvalidInput);
    CHECK(pi_upper_bound() == q("22/7"));
}

TEST_CASE("g for n = 1") {
    const PiPoly g = build_g(5, 3, 1);
    // b (Pi^2 x - Pi^2 x^2 + 2)
    const PiPoly expected(std::vector<PiRat>{PiRat(6), pi_pow(2, 3), pi_pow(2, -3)});
    CHECK(g == expected);
    CHECK(pirat_substitute_pi2(g(Rational(0)), q("5/3")) == 6);
}

TEST_CASE("g structure") {
    for (unsigned n = 1; n <= 8; ++n) {
        const Integer b(3);
        const PiPoly g = build_g(7, b, n);
        for (const auto& c : g.coeffs()) {
            CHECK(c.all_exponents_even());
            if (!c.is_zero()) {
                CHECK(c.min_exponent() >= 0);
                CHECK(c.max_exponent() <= static_cast<int>(2 * n));
            }
        }
        // The Pi^(2n) part is b^n f.
        const Poly f = niven_poly(n);
        for (int j = 0; j <= g.degree(); ++j)
            CHECK(g.coeff(static_cast<std::size_t>(j)).coeff(static_cast<int>(2 * n)) ==
                  Rational(pow(b, n)) * f.coeff(static_cast<std::size_t>(j)));
    }
}

TEST_CASE("ODE identity") {
    for (unsigned n = 1; n <= 10; ++n) {
        const ProofCheck c = verify_ode_identity(1, 1, n);
        CHECK(c.passed);
        CHECK(c.failed_identity.empty());
    }
    CHECK(verify_ode_identity(10, 3, 6).passed);

    // Negative control: drop one term of g.
    std::vector<PiRat> coeffs = build_g(1, 1, 1).coeffs();
    coeffs[0] = PiRat();
    const ProofCheck broken = verify_ode_identity(PiPoly(coeffs), 1, 1);
    CHECK_FALSE(broken.passed);
    CHECK_FALSE(broken.failed_identity.empty());
    CHECK_FALSE(broken.detail.empty());

    for (unsigned n = 2; n <= 6; ++n) {
        std::vector<PiRat> c = build_g(2, 3, n).coeffs();
        c[n] = c[n] + pi_pow(2, q("1/5"));
        CHECK_FALSE(verify_ode_identity(PiPoly(c), 3, n).passed);
    }

    // At x = 0: g''(0) + Pi^2 g(0) = b^n Pi^(2n+2) f(0) = 0.
    const PiPoly g = build_g(4, 5, 3);
    CHECK((g.derivative().derivative()(Rational(0)) + g(Rational(0)).shifted(2)).is_zero());
}

TEST_CASE("exact integral uses only even powers of Pi") {
    for (unsigned n = 1; n <= 12; ++n) {
        const PiRat i = niven_integral_exact(3, n);
        CHECK(i.all_exponents_even());
        CHECK_FALSE(i.is_zero());
    }
}

TEST_CASE("property: central equality and integrality for n <= 12") {
    Gen gen(61);
    for (int trial = 0; trial < 40; ++trial) {
        const Integer a(gen.int_in(1, 60)), b(gen.int_in(1, 20));
        const unsigned n = static_cast<unsigned>(gen.int_in(1, 12));
        const CentralEquality eq = central_equality(a, b, n);
        CHECK(eq.equal());
        CHECK(eq.substituted.is_integer());
        const PiPoly g = build_g(a, b, n);
        const Rational t(a, b);
        CHECK(pirat_substitute_pi2(g(Rational(0)), t).is_integer());
        CHECK(pirat_substitute_pi2(g(Rational(1)), t).is_integer());
    }
}

TEST_CASE("pi witness for 10/1") {
    const PiWitnessReport r = pi_witness(10, 1);
    CHECK(r.n == 26);
    CHECK(r.N.to_string() == "-4239621545521305164037255254851328000000");
    CHECK(r.I_enclosure.inside_open(0, 1));
    CHECK(r.I_enclosure.inside_open(0, r.upper_bound));
    CHECK(r.upper_bound < 1);
    CHECK(r.upper_bound == q("22/7") * Rational(pow(Integer(10), 26), factorial(26)));
    CHECK(r.verdict == Verdict::contradiction);
    // 2.8980053030140407217e-17 from an mpmath quadrature oracle.
    CHECK(r.I_enclosure.inside_open(q("28980053030/1000000000000000000000000000"),
                                    q("28980053031/1000000000000000000000000000")));
    CHECK(pirat_substitute_pi2(r.I_exact, 10) == Rational(r.N));
}

TEST_CASE("pi witness edge cases") {
    const PiWitnessReport one = pi_witness(1, 1);
    CHECK(one.n == 3);
    CHECK(one.verdict == Verdict::contradiction);
    CHECK(one.I_enclosure.inside_open(0, 1));

    const PiWitnessReport forced = pi_witness(10, 1, 30u);
    CHECK(forced.n == 30);
    CHECK(forced.verdict == Verdict::contradiction);
    CHECK_THROWS_AS(pi_witness(10, 1, 25u), InvalidInput);
    CHECK_THROWS_AS(pi_witness(10, 1, 0u), InvalidInput);
    CHECK_THROWS_AS(pi_witness(0, 1), InvalidInput);
    CHECK_THROWS_AS(pi_witness(10, 1, std::nullopt, WitnessLimits{4096, 20}), ResourceCap);
    CHECK_THROWS_AS(pi_witness(10, 1, std::nullopt, WitnessLimits{20, 1000}), PrecisionExhausted);
}

TEST_CASE("property: every rational candidate is refuted") {
    Gen gen(62);
    for (int trial = 0; trial < 12; ++trial) {
        const Integer a(gen.int_in(1, 30)), b(gen.int_in(1, 9));
        const PiWitnessReport r = pi_witness(a, b);
        CHECK(r.verdict == Verdict::contradiction);
        CHECK(r.I_enclosure.inside_open(0, r.upper_bound));
        CHECK(r.upper_bound < 1);
    }
    // A convergent of pi^2.
    CHECK(pi_witness(89, 9).verdict == Verdict::contradiction);
}

TEST_CASE("e witness examples") {
    const EWitnessReport r = e_witness(19, 7);
    CHECK(r.n == 7);
    CHECK(r.M == Integer(-20));
    CHECK(scaled_e_partial_sum(7) == Integer(13700));
    CHECK(r.tail_enclosure.inside_open(q("140/1000"), q("141/1000")));
    CHECK(r.tail_enclosure.inside_open(0, q("1/7")));
    CHECK(r.verdict == Verdict::contradiction);

    const EWitnessReport three = e_witness(3, 1);
    CHECK(three.n == 1);
    CHECK(three.M == Integer(1));
    CHECK(three.tail_enclosure.inside_open(q("718/1000"), q("719/1000")));
    CHECK(three.verdict == Verdict::contradiction);

    CHECK_THROWS_AS(e_witness(3, 0), InvalidInput);
    CHECK_THROWS_AS(e_witness(3, 11, WitnessLimits{4096, 10}), ResourceCap);
}

TEST_CASE("property: e tail bound for b <= 50") {
    const RationalInterval e = e_enclosure(200).value;
    for (long b = 1; b <= 50; ++b) {
        const Integer a = (Rational(b) * e.midpoint()).floor();
        const EWitnessReport r = e_witness(a, b);
        CHECK(r.n == static_cast<unsigned>(b));
        CHECK(r.tail_enclosure.inside_open(0, Rational(Integer(1), Integer(b))));
        CHECK(r.verdict == Verdict::contradiction);
        // Independent oracle for M: n! (a/b - sum 1/k!).
        Rational sum;
        for (unsigned k = 0; k <= r.n; ++k)
            sum += Rational(Integer(1), factorial(k));
        CHECK(Rational(r.M) == Rational(factorial(r.n)) * (Rational(a, b) - sum));
        CHECK(scaled_e_partial_sum(r.n) == (Rational(factorial(r.n)) * sum).num());
    }
}
