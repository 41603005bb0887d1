#pragma once

#include "irratio/numbers.hpp"

namespace irratio {

/// A rigorous enclosure of a real value obtained from a truncated series.
/// The true value lies in `value`; `tail_bound` bounds the omitted tail.
struct Enclosure {
    RationalInterval value;
    unsigned terms_used = 0;
    Rational tail_bound;
};

/// e from its power series. With n terms past the constant,
///   S_n < e < S_n + 1/(n! n)
/// where the upper bound comes from a geometric majorant of the tail.
/// Width is below 10^-digits.
Enclosure e_enclosure(unsigned precision_digits);

/// exp(x) for 0 < x <= 1, with tail sum_{k>=n} x^k/k! bounded by
/// x^n/n! (n+1)/(n+1-x). Throws UnsupportedDomain outside (0, 1].
Enclosure exp_enclosure(const Rational& x, unsigned precision_digits);

/// Alternating-series enclosures of sin and cos, valid for |x| <= 8.
/// Once terms decrease in magnitude the remainder lies between zero and the
/// first omitted term. Throws UnsupportedDomain for |x| > 8.
Enclosure sin_enclosure(const Rational& x, unsigned precision_digits);
Enclosure cos_enclosure(const Rational& x, unsigned precision_digits);

/// Second route to e: [(1+1/m)^m, (1+1/m)^(m+1)] with m = 2^log2_m. The
/// lower end is the compound-interest sequence, which increases to e; the
/// upper end decreases to e. Powers are taken by repeated squaring with
/// outward rounding to `bits`.
RationalInterval e_compound_enclosure(unsigned log2_m, unsigned bits);

/// (1 + x/n)^n against 1 + x + x^2/2! + ... + x^n/n!, both exact.
struct SandwichReport {
    Rational x;
    unsigned n = 0;
    Rational compound;
    Rational partial_sum;
    bool strict = false; // compound < partial_sum
    bool equal = false;  // happens only at n = 1
};

SandwichReport sandwich_check(const Rational& x, unsigned n);

enum class SqueezeStatus {
    certified,
    insufficient_precision, // enclosures too wide to decide
    violated,               // enclosures prove the inequality false
};

/// cos h < sin h / h < 1 and 0 <= (1 - cos h)/h <= h/2 for 0 < h <= 3/2.
struct SqueezeReport {
    Rational h;
    RationalInterval cos_h;
    RationalInterval sin_over_h;
    RationalInterval one_minus_cos_over_h;
    SqueezeStatus tangent_chain = SqueezeStatus::insufficient_precision; // cos h < sin h/h < 1
    SqueezeStatus chord_chain = SqueezeStatus::insufficient_precision;   // 0 <= (1-cos h)/h <= h/2

    bool certified() const {
        return tangent_chain == SqueezeStatus::certified && chord_chain == SqueezeStatus::certified;
    }
};

SqueezeReport squeeze_check(const Rational& h, unsigned precision_digits);

const char* to_string(SqueezeStatus s);

} // namespace irratio
