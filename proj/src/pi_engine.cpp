#include "irratio/pi_engine.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "irratio/errors.hpp"
#include "irratio/series.hpp"

namespace irratio {

const char* to_string(PiMethod m) {
    switch (m) {
    case PiMethod::cos_root: return "cos-root";
    case PiMethod::archimedes: return "archimedes";
    }
    return "?";
}

namespace {

// +1 or -1; raises the series precision until the enclosure excludes zero.
int certified_cos_sign(const Rational& x, unsigned start_digits, unsigned max_digits) {
    for (unsigned digits = start_digits;;) {
        const RationalInterval c = cos_enclosure(x, digits).value;
        if (c.lo().sign() > 0)
            return 1;
        if (c.hi().sign() < 0)
            return -1;
        if (digits >= max_digits)
            throw PrecisionExhausted("cannot separate the sign of cos(" + x.to_string() + ") within " +
                                     std::to_string(max_digits) + " digits");
        digits = std::min(2 * digits, max_digits);
    }
}

// Enclosure [lo, hi] * 2^-bits of a nonnegative quantity, in fixed point.
struct Fixed {
    mpz_class lo, hi;
};

mpz_class shift_floor(const mpz_class& a, unsigned bits) {
    mpz_class r;
    mpz_fdiv_q_2exp(r.get_mpz_t(), a.get_mpz_t(), bits);
    return r;
}

mpz_class shift_ceil(const mpz_class& a, unsigned bits) {
    mpz_class r;
    mpz_cdiv_q_2exp(r.get_mpz_t(), a.get_mpz_t(), bits);
    return r;
}

Fixed to_fixed(const RationalInterval& x, unsigned bits) {
    const Rational scale(Integer(mpz_class(1) << bits));
    return {(x.lo() * scale).floor().raw(), (x.hi() * scale).ceil().raw()};
}

// sin and cos of h = 2^-k, 1 <= k, by their alternating series. Multiplying
// by h^2 is a shift, so each term costs one small division.
std::pair<Fixed, Fixed> sin_cos_dyadic(unsigned k, unsigned bits) {
    auto series = [&](bool sine) {
        const unsigned first = sine ? 2 : 1;
        mpz_class mag_lo = mpz_class(1) << (sine ? bits - k : bits);
        mpz_class mag_hi = mag_lo;
        mpz_class sum_lo = 0, sum_hi = 0;
        for (unsigned j = 0; mag_hi != 0; ++j) {
            if (j % 2 == 0) {
                sum_lo += mag_lo;
                sum_hi += mag_hi;
            } else {
                sum_lo -= mag_hi;
                sum_hi -= mag_lo;
            }
            const unsigned long d = static_cast<unsigned long>(2 * j + first) * (2 * j + first + 1);
            mpz_fdiv_q_ui(mag_lo.get_mpz_t(), shift_floor(mag_lo, 2 * k).get_mpz_t(), d);
            mpz_cdiv_q_ui(mag_hi.get_mpz_t(), shift_ceil(mag_hi, 2 * k).get_mpz_t(), d);
            // Terms decrease from here on since h^2 < 2; the remainder lies
            // between 0 and the next term, at most mag_hi.
            if (mag_hi <= 1) {
                if (j % 2 == 0)
                    sum_lo -= mag_hi;
                else
                    sum_hi += mag_hi;
                break;
            }
        }
        return Fixed{sum_lo, sum_hi};
    };
    return {series(true), series(false)};
}

// a*b - c*d for nonnegative enclosures, rescaled to `bits`.
Fixed mul_sub(const Fixed& a, const Fixed& b, const Fixed& c, const Fixed& d, unsigned bits) {
    return {shift_floor(a.lo * b.lo - c.hi * d.hi, bits), shift_ceil(a.hi * b.hi - c.lo * d.lo, bits)};
}

Fixed mul_add(const Fixed& a, const Fixed& b, const Fixed& c, const Fixed& d, unsigned bits) {
    return {shift_floor(a.lo * b.lo + c.lo * d.lo, bits), shift_ceil(a.hi * b.hi + c.hi * d.hi, bits)};
}

void clamp_nonnegative(Fixed& x) {
    if (x.lo < 0)
        x.lo = 0;
}

} // namespace

PiEnclosure pi_by_cos_root(unsigned precision_digits, unsigned max_digits) {
    if (precision_digits == 0)
        throw InvalidInput("precision_digits must be positive");
    if (precision_digits > max_digits)
        throw PrecisionExhausted("requested " + std::to_string(precision_digits) + " digits exceeds cap of " +
                                 std::to_string(max_digits));
    if (certified_cos_sign(Rational(1), 10, max_digits) <= 0 || certified_cos_sign(Rational(2), 10, max_digits) >= 0)
        throw InternalFault("cos does not change sign on [1, 2]");

    // lo = 1 + j 2^-s and hi = lo + 2^-s, so every midpoint is lo + 2^-(s+1)
    // and cos(mid) = cos(lo) cos(h) - sin(lo) sin(h) by the addition theorem.
    // cos(lo) and sin(lo) are carried along as fixed-point enclosures; both
    // stay positive because lo < pi/2.
    const unsigned bits = digits_to_bits(precision_digits + 2) + 48;
    const unsigned work_digits = precision_digits + 5;
    Fixed c = to_fixed(cos_enclosure(Rational(1), work_digits + 10).value, bits);
    Fixed s = to_fixed(sin_enclosure(Rational(1), work_digits + 10).value, bits);

    // pi = 2 * root, so the bracket must shrink below half the target width.
    const Rational half_target = ten_to_minus(precision_digits) / Rational(2);
    Rational lo(1), width(1);
    unsigned steps = 0;
    while (!(width < half_target)) {
        const unsigned k = steps + 1;
        width /= Rational(2);
        const Rational mid = lo + width;
        const auto [sin_h, cos_h] = sin_cos_dyadic(k, bits);
        const Fixed cos_mid = mul_sub(c, cos_h, s, sin_h, bits);
        int sign;
        if (cos_mid.lo > 0)
            sign = 1;
        else if (cos_mid.hi < 0)
            sign = -1;
        else // mid is extremely close to the root; decide with a direct series
            sign = certified_cos_sign(mid, work_digits, std::max(max_digits, work_digits));
        if (sign > 0) {
            Fixed sin_mid = mul_add(s, cos_h, c, sin_h, bits);
            c = cos_mid;
            s = std::move(sin_mid);
            clamp_nonnegative(c);
            clamp_nonnegative(s);
            lo = mid;
        }
        ++steps;
    }
    return {RationalInterval(lo * Rational(2), (lo + width) * Rational(2)), PiMethod::cos_root, steps};
}

std::vector<PolygonBounds> archimedes_table(unsigned doublings, unsigned precision_digits) {
    if (doublings > 60)
        throw InvalidInput("archimedes_bounds supports at most 60 doublings");
    if (precision_digits == 0)
        throw InvalidInput("precision_digits must be positive");
    // Each step loses at most a couple of ulps; guard bits absorb it.
    const unsigned bits = digits_to_bits(precision_digits) + 2 * doublings + 32;

    std::vector<PolygonBounds> rows;
    RationalInterval inscribed = RationalInterval::point(Rational(3));
    RationalInterval circumscribed = iv_sqrt(RationalInterval::point(Rational(12)), bits);
    Integer sides(6);
    rows.push_back({0, sides, inscribed, circumscribed});
    for (unsigned k = 1; k <= doublings; ++k) {
        // Both means are increasing in each argument, so endpoints map to endpoints.
        auto harmonic = [](const Rational& s, const Rational& t) { return Rational(2) * s * t / (s + t); };
        RationalInterval next_circ =
            RationalInterval(harmonic(inscribed.lo(), circumscribed.lo()), harmonic(inscribed.hi(), circumscribed.hi()))
                .outward(bits);
        RationalInterval product(inscribed.lo() * next_circ.lo(), inscribed.hi() * next_circ.hi());
        inscribed = iv_sqrt(product, bits);
        circumscribed = next_circ;
        sides *= Integer(2);
        rows.push_back({k, sides, inscribed, circumscribed});
    }
    return rows;
}

PiEnclosure archimedes_bounds(unsigned doublings, unsigned precision_digits) {
    const PolygonBounds last = archimedes_table(doublings, precision_digits).back();
    return {RationalInterval(last.inscribed.lo(), last.circumscribed.hi()), PiMethod::archimedes, doublings};
}

Rational rhind_value() {
    const Rational side(16, 9);
    return side * side;
}

CFExpansion continued_fraction(const RationalInterval& x, unsigned max_depth) {
    CFExpansion cf;
    Rational lo = x.lo(), hi = x.hi();
    // Convergent recurrence p_k = a_k p_{k-1} + p_{k-2}, seeded with
    // p_{-1}/q_{-1} = 1/0 and p_{-2}/q_{-2} = 0/1.
    Integer p_prev(1), q_prev(0), p_prev2(0), q_prev2(1);
    while (cf.partial_quotients.size() < max_depth) {
        const Integer a = lo.floor();
        if (a != hi.floor())
            break;
        Integer p = a * p_prev + p_prev2;
        Integer q = a * q_prev + q_prev2;
        cf.partial_quotients.push_back(a);
        cf.convergents.emplace_back(p, q);
        p_prev2 = std::exchange(p_prev, std::move(p));
        q_prev2 = std::exchange(q_prev, std::move(q));

        const Rational frac_lo = lo - Rational(a);
        const Rational frac_hi = hi - Rational(a);
        // A point equal to a ends its expansion here; the rest continue.
        if (frac_lo.is_zero())
            break;
        lo = frac_hi.reciprocal();
        hi = frac_lo.reciprocal();
    }
    cf.certified_depth = static_cast<unsigned>(cf.partial_quotients.size());
    return cf;
}

} // namespace irratio
