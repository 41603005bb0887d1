#include <doctest.h>

#include <algorithm>

#include "irratio/errors.hpp"
#include "irratio/pi_engine.hpp"

using namespace irratio;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

// pi to 60 digits (mpmath oracle).
const char* const pi_digits = "3.141592653589793238462643383279502884197169399375105820974944";

} // namespace

TEST_CASE("cos-root enclosure examples") {
    const PiEnclosure six = pi_by_cos_root(6);
    CHECK(six.method == PiMethod::cos_root);
    CHECK(six.value.inside_open(q("3141592/1000000"), q("3141593/1000000")));
    CHECK(six.value.width() < ten_to_minus(6));
    CHECK(pi_by_cos_root(1).value.inside_open(q("31/10"), q("32/10")));
    CHECK_THROWS_AS(pi_by_cos_root(0), InvalidInput);
    CHECK_THROWS_AS(pi_by_cos_root(50, 40), PrecisionExhausted);
}

TEST_CASE("cos-root digits match the oracle") {
    for (unsigned d : {3u, 10u, 25u, 40u}) {
        const PiEnclosure pi = pi_by_cos_root(d + 2);
        const std::string digits = to_decimal(pi.value, d).digits;
        CHECK(digits == std::string(pi_digits).substr(0, d + 2));
    }
}

TEST_CASE("property: rational approximations bracket pi") {
    for (unsigned d = 3; d <= 30; d += 3) {
        const RationalInterval pi = pi_by_cos_root(d).value;
        CHECK(q("314/100") < pi.lo());
        CHECK(pi.hi() < q("22/7"));
        if (d >= 9) {
            // 355/113 exceeds pi by about 2.7e-7.
            CHECK(q("333/106") < pi.lo());
            CHECK(pi.hi() < q("355/113"));
        }
    }
}

TEST_CASE("archimedes examples") {
    const auto rows = archimedes_table(4, 20);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].sides == Integer(6));
    CHECK(rows[0].inscribed == RationalInterval::point(3));
    CHECK(rows[0].circumscribed.inside_open(q("34641016/10000000"), q("34641017/10000000")));
    CHECK(rows[4].sides == Integer(96));

    const PiEnclosure p96 = archimedes_bounds(4, 20);
    CHECK(p96.method == PiMethod::archimedes);
    CHECK(RationalInterval(q("31408450/10000000"), q("31428572/10000000")).contains(p96.value));
    CHECK(to_decimal(p96.value.lo(), 10).digits == "3.1410319508");
    CHECK(to_decimal(p96.value.hi(), 10).digits == "3.1427145996");

    const PiEnclosure p10 = archimedes_bounds(10, 20);
    CHECK(p10.value.width() < q("1/100000"));
    CHECK(p10.value.contains(pi_by_cos_root(15).value));
    CHECK_THROWS_AS(archimedes_table(61, 10), InvalidInput);
}

TEST_CASE("property: archimedes bounds are monotone and contain pi") {
    const auto rows = archimedes_table(40, 40);
    const RationalInterval pi = pi_by_cos_root(40).value;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(rows[k].inscribed.hi() <= pi.lo());
        CHECK(pi.hi() <= rows[k].circumscribed.lo());
        if (k > 0) {
            const Rational slack_in = rows[k].inscribed.width();
            const Rational slack_out = rows[k].circumscribed.width();
            CHECK(rows[k - 1].inscribed.lo() <= rows[k].inscribed.lo() + slack_in);
            CHECK(rows[k].circumscribed.hi() <= rows[k - 1].circumscribed.hi() + slack_out);
        }
    }
}

TEST_CASE("property: cos-root and archimedes agree") {
    for (unsigned doublings : {5u, 12u, 25u}) {
        for (unsigned d : {8u, 20u}) {
            const RationalInterval a = archimedes_bounds(doublings, d).value;
            const RationalInterval c = pi_by_cos_root(d).value;
            CHECK(a.intersects(c));
            const Rational combined = a.width() + c.width();
            CHECK(abs(a.midpoint() - c.midpoint()) <= combined);
        }
    }
}

TEST_CASE("rhind value") {
    CHECK(rhind_value() == q("256/81"));
    CHECK(to_decimal(rhind_value(), 6).str() == "3.160493…");
    CHECK(rhind_value() > archimedes_bounds(4, 20).value.hi());
}

TEST_CASE("continued fractions") {
    const CFExpansion approx = continued_fraction(RationalInterval::point(q("22/7")), 10);
    CHECK(approx.partial_quotients == std::vector<Integer>{3, 7});
    CHECK(approx.convergents == std::vector<Rational>{3, q("22/7")});
    CHECK(continued_fraction(RationalInterval::point(2), 5).partial_quotients == std::vector<Integer>{2});

    const RationalInterval pi15 = pi_by_cos_root(15).value;
    const CFExpansion cf = continued_fraction(pi15, 30);
    REQUIRE(cf.partial_quotients.size() >= 5);
    CHECK(std::vector<Integer>(cf.partial_quotients.begin(), cf.partial_quotients.begin() + 5) ==
          std::vector<Integer>{3, 7, 15, 1, 292});
    CHECK(std::find(cf.convergents.begin(), cf.convergents.end(), q("22/7")) != cf.convergents.end());
    CHECK(std::find(cf.convergents.begin(), cf.convergents.end(), q("355/113")) != cf.convergents.end());
    CHECK(cf.certified_depth == cf.partial_quotients.size());
    CHECK(continued_fraction(pi15, 3).partial_quotients.size() == 3);

    // Each convergent is within 1/q^2 of the midpoint, and every quotient is
    // shared by the expansions of both endpoints.
    const CFExpansion lo = continued_fraction(RationalInterval::point(pi15.lo()), 60);
    const CFExpansion hi = continued_fraction(RationalInterval::point(pi15.hi()), 60);
    for (std::size_t k = 0; k < cf.convergents.size(); ++k) {
        const Rational& c = cf.convergents[k];
        const Rational den(c.den());
        CHECK(abs(pi15.midpoint() - c) < Rational(1) / (den * den));
        CHECK(lo.partial_quotients.at(k) == cf.partial_quotients[k]);
        CHECK(hi.partial_quotients.at(k) == cf.partial_quotients[k]);
    }
}
