#pragma once

// Exact integers, normalized rationals and rational-endpoint intervals.
//
// Everything numeric in irratio bottoms out here. Integer and Rational are
// exact; RationalInterval only promises containment: every operation returns
// an interval holding the exact image, and endpoints may be widened outward
// to dyadic rationals to keep their size bounded.

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace irratio {

class Integer {
public:
    Integer() = default;
    template <std::signed_integral T>
    Integer(T v) : v_(static_cast<long>(v)) {}
    template <std::unsigned_integral T>
    Integer(T v) : v_(static_cast<unsigned long>(v)) {}
    explicit Integer(mpz_class v) : v_(std::move(v)) {}

    /// Parses an optionally signed decimal integer; throws InvalidInput.
    static Integer parse(std::string_view text);

    const mpz_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
    std::size_t bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2); }
    bool fits_long() const { return v_.fits_slong_p(); }
    long to_long() const;
    std::string to_string() const { return v_.get_str(); }

    Integer operator-() const { return Integer(mpz_class(-v_)); }
    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

    friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

private:
    mpz_class v_;
};

Integer abs(const Integer& x);
Integer pow(const Integer& base, unsigned long exp);
/// Floor division and the matching non-negative remainder; divisor must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);
/// Largest r with r*r <= x; x must be non-negative.
Integer isqrt(const Integer& x);
/// Smallest r with r*r >= x; x must be non-negative.
Integer isqrt_ceil(const Integer& x);
std::ostream& operator<<(std::ostream& os, const Integer& x);

class Rational {
public:
    Rational() = default;
    template <std::integral T>
    Rational(T v) : q_(Integer(v).raw()) {}
    Rational(const Integer& n) : q_(n.raw()) {}
    /// Normalizes sign and common factors; throws DivisionByZero if den == 0.
    Rational(const Integer& num, const Integer& den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Accepts "p" or "p/q" with decimal integer parts.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return q_; }
    Integer num() const { return Integer(mpz_class(q_.get_num())); }
    Integer den() const { return Integer(mpz_class(q_.get_den())); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    std::size_t den_bits() const { return mpz_sizeinbase(q_.get_den_mpz_t(), 2); }

    Integer floor() const;
    Integer ceil() const;
    Rational reciprocal() const;
    /// "p/q", or just "p" for integers.
    std::string to_string() const;
    /// Nearest double; for diagnostics and oracles only.
    double to_double() const { return q_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.q_, b.q_) <=> 0;
    }

private:
    mpq_class q_;
};

Rational abs(const Rational& x);
/// Integer powers; negative exponents require x != 0.
Rational pow(const Rational& x, long exp);
std::ostream& operator<<(std::ostream& os, const Rational& x);

enum class ArithOp { add, sub, mul, div };

Rational rat_arith(const Rational& x, const Rational& y, ArithOp op);

/// Largest dyadic m/2^bits that is <= x, and smallest that is >= x.
Rational round_down(const Rational& x, unsigned bits);
Rational round_up(const Rational& x, unsigned bits);

/// Bits needed so that 2^-bits <= 10^-digits.
unsigned digits_to_bits(unsigned digits);
/// 10^-digits as an exact rational.
Rational ten_to_minus(unsigned digits);

class RationalInterval {
public:
    RationalInterval() = default;
    /// Throws InvalidInput unless lo <= hi.
    RationalInterval(Rational lo, Rational hi);
    static RationalInterval point(Rational x) { return {x, x}; }
    /// Smallest interval containing both values, in either order.
    static RationalInterval hull(const Rational& a, const Rational& b);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / Rational(2); }
    bool is_point() const { return lo_ == hi_; }

    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const RationalInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    /// True when the interval lies inside the open interval (a, b).
    bool inside_open(const Rational& a, const Rational& b) const { return a < lo_ && hi_ < b; }
    bool intersects(const RationalInterval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
    /// Throws InvalidInput if the intervals are disjoint.
    RationalInterval intersect(const RationalInterval& o) const;

    /// Widens each endpoint to a dyadic with at most `bits` fractional bits,
    /// leaving endpoints that are already that small untouched.
    RationalInterval outward(unsigned bits) const;

    RationalInterval operator-() const { return {-hi_, -lo_}; }
    RationalInterval& operator+=(const RationalInterval& o);
    RationalInterval& operator-=(const RationalInterval& o);
    RationalInterval& operator*=(const RationalInterval& o);
    RationalInterval& operator/=(const RationalInterval& o);

    friend RationalInterval operator+(RationalInterval a, const RationalInterval& b) { return a += b; }
    friend RationalInterval operator-(RationalInterval a, const RationalInterval& b) { return a -= b; }
    friend RationalInterval operator*(RationalInterval a, const RationalInterval& b) { return a *= b; }
    friend RationalInterval operator/(RationalInterval a, const RationalInterval& b) { return a /= b; }

    friend bool operator==(const RationalInterval&, const RationalInterval&) = default;

private:
    Rational lo_, hi_;
};

RationalInterval iv_arith(const RationalInterval& x, const RationalInterval& y, ArithOp op);
/// Tight square: never negative, unlike x*x on a zero-straddling interval.
RationalInterval sqr(const RationalInterval& x);
RationalInterval pow(const RationalInterval& x, unsigned exp);
/// Encloses sqrt over x; each endpoint is exact or off by at most 2^-precision_bits.
RationalInterval iv_sqrt(const RationalInterval& x, unsigned precision_bits);
std::ostream& operator<<(std::ostream& os, const RationalInterval& x);

/// Certified decimal rendering. `digits` holds only digits every point of
/// the interval shares after truncation toward zero; `truncated` is set
/// whenever the value continues beyond them.
struct DecimalString {
    std::string digits;
    bool truncated = false;

    bool empty() const { return digits.empty(); }
    /// digits followed by an ellipsis when truncated; "?" when nothing is certified.
    std::string str() const;
};

DecimalString to_decimal(const RationalInterval& x, unsigned max_digits);
DecimalString to_decimal(const Rational& x, unsigned max_digits);

} // namespace irratio
