#include "irratio/series.hpp"

#include "irratio/combinatorics.hpp"
#include "irratio/errors.hpp"

namespace irratio {

Enclosure exp_enclosure(const Rational& x, unsigned precision_digits) {
    if (x.sign() <= 0 || x > Rational(1))
        throw UnsupportedDomain("exp_enclosure supports 0 < x <= 1, got " + x.to_string());
    if (precision_digits == 0)
        throw InvalidInput("precision_digits must be positive");

    // Term count from the a priori bound: the gap between S_n and the upper
    // bound is x^n/n! * x/(n+1-x). One guard digit beyond the request.
    const Rational target = ten_to_minus(precision_digits + 1);
    Rational term(1); // x^n / n!
    Rational sum(1);  // S_n
    unsigned n = 0;
    Rational gap;
    while (true) {
        ++n;
        term *= x / Rational(n);
        sum += term;
        gap = term * x / (Rational(n + 1) - x);
        if (gap < target)
            break;
    }
    Enclosure e{RationalInterval(sum, sum + gap), n + 1, gap};
    if (!(e.value.width() < ten_to_minus(precision_digits)))
        throw InternalFault("exp enclosure wider than requested");
    return e;
}

Enclosure e_enclosure(unsigned precision_digits) { return exp_enclosure(Rational(1), precision_digits); }

namespace {

// Magnitudes of consecutive terms shrink by x^2 / ((2k+first)(2k+first+1))
// where `first` is 1 for cos (x^0, x^2, ...) and 2 for sin (x^1, x^3, ...).
// Work in fixed point: every quantity is an integer multiple of 2^-bits,
// with lower bounds floored and upper bounds ceiled.
Enclosure alternating_series(const Rational& ax, bool sine, unsigned digits) {
    const unsigned first = sine ? 2 : 1;
    const mpz_class ten_target = pow(Integer(10), digits + 1).raw(); // term < 10^-(d+1)
    const mpz_class& num = ax.raw().get_num();
    const mpz_class& den = ax.raw().get_den();
    for (unsigned bits = digits_to_bits(digits + 2) + 24;; bits += 64) {
        const mpz_class scale = mpz_class(1) << bits;
        auto floor_q = [](const mpz_class& a, const mpz_class& b) {
            mpz_class r;
            mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            return r;
        };
        auto ceil_q = [](const mpz_class& a, const mpz_class& b) {
            mpz_class r;
            mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            return r;
        };
        const mpz_class x2_num = num * num * scale, x2_den = den * den;
        const mpz_class x2_lo = floor_q(x2_num, x2_den), x2_hi = ceil_q(x2_num, x2_den);
        mpz_class mag_lo = sine ? floor_q(num * scale, den) : scale;
        mpz_class mag_hi = sine ? ceil_q(num * scale, den) : scale;
        mpz_class sum_lo = 0, sum_hi = 0;
        unsigned k = 0;
        while (true) {
            const unsigned long d = static_cast<unsigned long>(2 * k + first) * (2 * k + first + 1);
            const mpz_class denom_scaled = scale * d;
            const bool decreasing_from_here = x2_hi < denom_scaled;
            if (decreasing_from_here && mag_hi * ten_target < scale)
                break;
            if (k % 2 == 0) {
                sum_lo += mag_lo;
                sum_hi += mag_hi;
            } else {
                sum_lo -= mag_hi;
                sum_hi -= mag_lo;
            }
            mag_lo = floor_q(mag_lo * x2_lo, denom_scaled);
            mag_hi = ceil_q(mag_hi * x2_hi, denom_scaled);
            ++k;
        }
        // Remainder lies between 0 and the first omitted term, which has sign (-1)^k.
        if (k % 2 == 0)
            sum_hi += mag_hi;
        else
            sum_lo -= mag_hi;
        const Integer denom = Integer(scale);
        RationalInterval value(Rational(Integer(sum_lo), denom), Rational(Integer(sum_hi), denom));
        if (value.width() < ten_to_minus(digits))
            return {value, k, Rational(Integer(mag_hi), denom)};
    }
}

void check_trig_domain(const Rational& x, unsigned digits) {
    if (abs(x) > Rational(8))
        throw UnsupportedDomain("sin/cos enclosures support |x| <= 8, got " + x.to_string());
    if (digits == 0)
        throw InvalidInput("precision_digits must be positive");
}

} // namespace

Enclosure sin_enclosure(const Rational& x, unsigned precision_digits) {
    check_trig_domain(x, precision_digits);
    if (x.is_zero())
        return {RationalInterval::point(Rational(0)), 0, Rational(0)};
    Enclosure e = alternating_series(abs(x), true, precision_digits);
    if (x.sign() < 0)
        e.value = -e.value;
    return e;
}

Enclosure cos_enclosure(const Rational& x, unsigned precision_digits) {
    check_trig_domain(x, precision_digits);
    if (x.is_zero())
        return {RationalInterval::point(Rational(1)), 1, Rational(0)};
    return alternating_series(abs(x), false, precision_digits);
}

RationalInterval e_compound_enclosure(unsigned log2_m, unsigned bits) {
    const Rational base = Rational(1) + Rational(Integer(1), pow(Integer(2), log2_m));
    RationalInterval power = RationalInterval::point(base);
    for (unsigned i = 0; i < log2_m; ++i)
        power = sqr(power).outward(bits);
    RationalInterval upper = (power * RationalInterval::point(base)).outward(bits);
    return {power.lo(), upper.hi()};
}

SandwichReport sandwich_check(const Rational& x, unsigned n) {
    if (x.sign() <= 0)
        throw InvalidInput("sandwich_check needs x > 0");
    if (n == 0)
        throw InvalidInput("sandwich_check needs n >= 1");
    SandwichReport r;
    r.x = x;
    r.n = n;
    r.compound = pow(Rational(1) + x / Rational(n), n);
    Rational term(1);
    r.partial_sum = Rational(1);
    for (unsigned k = 1; k <= n; ++k) {
        term *= x / Rational(k);
        r.partial_sum += term;
    }
    r.strict = r.compound < r.partial_sum;
    r.equal = r.compound == r.partial_sum;
    return r;
}

SqueezeReport squeeze_check(const Rational& h, unsigned precision_digits) {
    if (h.sign() <= 0 || h > Rational(3, 2))
        throw UnsupportedDomain("squeeze_check needs 0 < h <= 3/2, got " + h.to_string());
    SqueezeReport r;
    r.h = h;
    const RationalInterval hp = RationalInterval::point(h);
    const RationalInterval s = sin_enclosure(h, precision_digits).value;
    r.cos_h = cos_enclosure(h, precision_digits).value;
    r.sin_over_h = s / hp;
    r.one_minus_cos_over_h = (RationalInterval::point(Rational(1)) - r.cos_h) / hp;

    const Rational one(1);
    if (r.cos_h.hi() < r.sin_over_h.lo() && r.sin_over_h.hi() < one)
        r.tangent_chain = SqueezeStatus::certified;
    else if (r.cos_h.lo() >= r.sin_over_h.hi() || r.sin_over_h.lo() >= one)
        r.tangent_chain = SqueezeStatus::violated;

    const Rational half_h = h / Rational(2);
    const auto& omc = r.one_minus_cos_over_h;
    if (omc.lo().sign() >= 0 && omc.hi() <= half_h)
        r.chord_chain = SqueezeStatus::certified;
    else if (omc.hi().sign() < 0 || omc.lo() > half_h)
        r.chord_chain = SqueezeStatus::violated;
    return r;
}

const char* to_string(SqueezeStatus s) {
    switch (s) {
    case SqueezeStatus::certified: return "certified";
    case SqueezeStatus::insufficient_precision: return "insufficient-precision";
    case SqueezeStatus::violated: return "violated";
    }
    return "?";
}

} // namespace irratio
