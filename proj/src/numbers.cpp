#include "irratio/numbers.hpp"

#include <algorithm>
#include <ostream>

#include "irratio/errors.hpp"

namespace irratio {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

mpz_class pow2(unsigned bits) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, bits);
    return r;
}

mpz_class pow10(unsigned digits) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, digits);
    return r;
}

} // namespace

// ---- Integer ---------------------------------------------------------------

Integer Integer::parse(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+'))
        body.remove_prefix(1);
    if (!all_digits(body))
        throw InvalidInput("not a decimal integer: '" + std::string(text) + "'");
    std::string s(text.front() == '+' ? text.substr(1) : text);
    return Integer(mpz_class(s, 10));
}

long Integer::to_long() const {
    if (!fits_long())
        throw ResourceCap("integer " + to_string() + " does not fit a machine word");
    return v_.get_si();
}

Integer abs(const Integer& x) { return Integer(mpz_class(::abs(x.raw()))); }

Integer pow(const Integer& base, unsigned long exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exp);
    return Integer(std::move(r));
}

Integer floor_div(const Integer& a, const Integer& b) {
    if (b.is_zero())
        throw DivisionByZero();
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(std::move(r));
}

Integer ceil_div(const Integer& a, const Integer& b) {
    if (b.is_zero())
        throw DivisionByZero();
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(std::move(r));
}

Integer gcd(const Integer& a, const Integer& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(std::move(r));
}

Integer isqrt(const Integer& x) {
    if (x.sign() < 0)
        throw InvalidInput("isqrt of negative integer");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), x.raw().get_mpz_t());
    return Integer(std::move(r));
}

Integer isqrt_ceil(const Integer& x) {
    Integer r = isqrt(x);
    if (r * r < x)
        r += 1;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Integer& x) { return os << x.to_string(); }

// ---- Rational --------------------------------------------------------------

Rational::Rational(const Integer& num, const Integer& den) {
    if (den.is_zero())
        throw DivisionByZero();
    q_ = mpq_class(num.raw(), den.raw());
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(Integer::parse(text));
    Integer num = Integer::parse(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text))
        throw InvalidInput("denominator must be a positive decimal integer: '" + std::string(text) + "'");
    return Rational(num, Integer::parse(den_text));
}

Integer Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return Integer(std::move(r));
}

Integer Rational::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return Integer(std::move(r));
}

Rational Rational::reciprocal() const {
    if (is_zero())
        throw DivisionByZero();
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return Rational(std::move(r));
}

std::string Rational::to_string() const {
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw DivisionByZero();
    q_ /= o.q_;
    return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& x, long exp) {
    if (exp < 0)
        return pow(x.reciprocal(), -exp);
    auto e = static_cast<unsigned long>(exp);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), x.raw().get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), x.raw().get_den_mpz_t(), e);
    // Powers of coprime parts stay coprime.
    mpq_class r;
    mpq_set_num(r.get_mpq_t(), n.get_mpz_t());
    mpq_set_den(r.get_mpq_t(), d.get_mpz_t());
    return Rational(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

Rational rat_arith(const Rational& x, const Rational& y, ArithOp op) {
    switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div: return x / y;
    }
    throw InvalidInput("unknown arithmetic operation");
}

Rational round_down(const Rational& x, unsigned bits) {
    mpz_class scaled = x.raw().get_num() * pow2(bits);
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.raw().get_den_mpz_t());
    return Rational(Integer(std::move(q)), Integer(pow2(bits)));
}

Rational round_up(const Rational& x, unsigned bits) {
    mpz_class scaled = x.raw().get_num() * pow2(bits);
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.raw().get_den_mpz_t());
    return Rational(Integer(std::move(q)), Integer(pow2(bits)));
}

unsigned digits_to_bits(unsigned digits) {
    // log2(10) < 3.3220
    return static_cast<unsigned>((static_cast<unsigned long>(digits) * 33220 + 9999) / 10000);
}

Rational ten_to_minus(unsigned digits) { return Rational(Integer(1), Integer(pow10(digits))); }

// ---- RationalInterval ------------------------------------------------------

RationalInterval::RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_)
        throw InvalidInput("interval endpoints out of order: [" + lo_.to_string() + ", " + hi_.to_string() + "]");
}

RationalInterval RationalInterval::hull(const Rational& a, const Rational& b) {
    return a <= b ? RationalInterval(a, b) : RationalInterval(b, a);
}

RationalInterval RationalInterval::intersect(const RationalInterval& o) const {
    if (!intersects(o))
        throw InvalidInput("intervals are disjoint");
    return {std::max(lo_, o.lo_), std::min(hi_, o.hi_)};
}

RationalInterval RationalInterval::outward(unsigned bits) const {
    Rational lo = lo_.den_bits() > bits ? round_down(lo_, bits) : lo_;
    Rational hi = hi_.den_bits() > bits ? round_up(hi_, bits) : hi_;
    return {std::move(lo), std::move(hi)};
}

RationalInterval& RationalInterval::operator+=(const RationalInterval& o) {
    lo_ += o.lo_;
    hi_ += o.hi_;
    return *this;
}

RationalInterval& RationalInterval::operator-=(const RationalInterval& o) {
    lo_ -= o.hi_;
    hi_ -= o.lo_;
    return *this;
}

RationalInterval& RationalInterval::operator*=(const RationalInterval& o) {
    if (is_point() && o.is_point()) {
        lo_ *= o.lo_;
        hi_ = lo_;
        return *this;
    }
    Rational a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
    lo_ = std::min({a, b, c, d});
    hi_ = std::max({a, b, c, d});
    return *this;
}

RationalInterval& RationalInterval::operator/=(const RationalInterval& o) {
    if (o.contains_zero())
        throw DivisionByZero("division by an interval containing zero");
    return *this *= RationalInterval(o.hi_.reciprocal(), o.lo_.reciprocal());
}

RationalInterval iv_arith(const RationalInterval& x, const RationalInterval& y, ArithOp op) {
    switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div: return x / y;
    }
    throw InvalidInput("unknown arithmetic operation");
}

RationalInterval sqr(const RationalInterval& x) {
    Rational a = x.lo() * x.lo(), b = x.hi() * x.hi();
    if (x.contains_zero())
        return {Rational(0), std::max(a, b)};
    return RationalInterval::hull(a, b);
}

RationalInterval pow(const RationalInterval& x, unsigned exp) {
    if (exp == 0)
        return RationalInterval::point(Rational(1));
    if (exp % 2 == 0)
        return pow(sqr(x), exp / 2);
    // Odd powers are monotone.
    return {pow(x.lo(), exp), pow(x.hi(), exp)};
}

RationalInterval iv_sqrt(const RationalInterval& x, unsigned precision_bits) {
    if (x.lo().sign() < 0)
        throw InvalidInput("square root of an interval with negative part");
    // Integer square root of the value scaled by 4^p gives dyadic bounds
    // r/2^p with r^2 <= scaled, the discrete analogue of bisection on q^2 <= x.
    const mpz_class scale = pow2(2 * precision_bits);
    const Integer denom(pow2(precision_bits));
    auto root_below = [&](const Rational& q) {
        if (q.is_integer()) {
            Integer r = isqrt(q.num());
            if (r * r == q.num())
                return Rational(r);
        }
        mpz_class s;
        mpz_class num = q.raw().get_num() * scale;
        mpz_fdiv_q(s.get_mpz_t(), num.get_mpz_t(), q.raw().get_den_mpz_t());
        return Rational(isqrt(Integer(std::move(s))), denom);
    };
    auto root_above = [&](const Rational& q) {
        if (q.is_integer()) {
            Integer r = isqrt(q.num());
            if (r * r == q.num())
                return Rational(r);
        }
        mpz_class s;
        mpz_class num = q.raw().get_num() * scale;
        mpz_cdiv_q(s.get_mpz_t(), num.get_mpz_t(), q.raw().get_den_mpz_t());
        return Rational(isqrt_ceil(Integer(std::move(s))), denom);
    };
    return {root_below(x.lo()), root_above(x.hi())};
}

std::ostream& operator<<(std::ostream& os, const RationalInterval& x) {
    return os << "[" << x.lo() << ", " << x.hi() << "]";
}

// ---- Decimal rendering -----------------------------------------------------

std::string DecimalString::str() const {
    if (digits.empty())
        return "?";
    return truncated ? digits + "…" : digits;
}

namespace {

// Fixed-point rendering of floor(q * 10^k) for q >= 0, with k fractional digits.
std::string fixed_truncated(const Rational& q, unsigned k) {
    mpz_class scaled = q.raw().get_num() * pow10(k);
    mpz_class t;
    mpz_fdiv_q(t.get_mpz_t(), scaled.get_mpz_t(), q.raw().get_den_mpz_t());
    std::string s = t.get_str();
    if (s.size() < k + 1)
        s.insert(0, k + 1 - s.size(), '0');
    if (k > 0)
        s.insert(s.size() - k, ".");
    return s;
}

std::size_t integer_part_length(const std::string& s) {
    auto dot = s.find('.');
    return dot == std::string::npos ? s.size() : dot;
}

// Certified prefix for 0 <= lo <= hi.
DecimalString nonnegative_prefix(const Rational& lo, const Rational& hi, unsigned max_digits) {
    if (lo == hi) {
        // Shortest terminating expansion within max_digits, if any.
        for (unsigned k = 0; k <= max_digits; ++k) {
            mpz_class scaled = lo.raw().get_num() * pow10(k);
            if (mpz_divisible_p(scaled.get_mpz_t(), lo.raw().get_den_mpz_t()))
                return {fixed_truncated(lo, k), false};
        }
        return {fixed_truncated(lo, max_digits), true};
    }
    std::string a = fixed_truncated(lo, max_digits);
    std::string b = fixed_truncated(hi, max_digits);
    const std::size_t int_len = integer_part_length(a);
    if (int_len != integer_part_length(b))
        return {"", true};
    std::size_t n = 0;
    while (n < a.size() && a[n] == b[n])
        ++n;
    if (n < int_len)
        return {"", true};
    std::string prefix = a.substr(0, n);
    if (!prefix.empty() && prefix.back() == '.')
        prefix.pop_back();
    return {prefix, true};
}

} // namespace

DecimalString to_decimal(const RationalInterval& x, unsigned max_digits) {
    if (max_digits == 0)
        throw InvalidInput("max_digits must be positive");
    if (x.lo().sign() >= 0)
        return nonnegative_prefix(x.lo(), x.hi(), max_digits);
    if (x.hi().sign() <= 0) {
        DecimalString d = nonnegative_prefix(-x.hi(), -x.lo(), max_digits);
        if (!d.digits.empty())
            d.digits.insert(0, "-");
        return d;
    }
    return {"", true};
}

DecimalString to_decimal(const Rational& x, unsigned max_digits) {
    return to_decimal(RationalInterval::point(x), max_digits);
}

} // namespace irratio
