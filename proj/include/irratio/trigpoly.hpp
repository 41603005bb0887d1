#pragma once

// Exact algebra for P(x) sin(Pi x) + Q(x) cos(Pi x) + c, where Pi is a
// formal symbol standing for pi and the coefficients of P, Q and c are
// Laurent polynomials in Pi. No numeric value of pi ever enters these
// computations; pirat_eval_interval is the only bridge to numbers.

#include <map>
#include <string>

#include "irratio/basic_poly.hpp"
#include "irratio/numbers.hpp"

namespace irratio {

/// Finite sum of c_k Pi^k with rational c_k and integer (possibly negative)
/// k. Zero coefficients are never stored.
class PiRat {
public:
    PiRat() = default;
    PiRat(Rational c) { add_term(0, std::move(c)); }
    template <std::integral T>
    PiRat(T c) : PiRat(Rational(c)) {}
    static PiRat monomial(Rational c, int exponent);

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of Pi^k (zero if absent).
    Rational coeff(int k) const;
    int min_exponent() const;
    int max_exponent() const;
    bool all_exponents_even() const;

    /// Multiplies by Pi^k.
    PiRat shifted(int k) const;

    PiRat operator-() const;
    PiRat& operator+=(const PiRat& o);
    PiRat& operator-=(const PiRat& o);
    friend PiRat operator+(PiRat a, const PiRat& b) { return a += b; }
    friend PiRat operator-(PiRat a, const PiRat& b) { return a -= b; }
    friend PiRat operator*(const PiRat& a, const PiRat& b);
    friend PiRat operator*(const PiRat& a, const Rational& s);

    friend bool operator==(const PiRat&, const PiRat&) = default;

    /// e.g. "2*Pi^-1", "Pi^2 + 1".
    std::string to_string() const;

private:
    void add_term(int k, Rational c);

    std::map<int, Rational> terms_;
};

/// Polynomial in x with PiRat coefficients.
using PiPoly = BasicPoly<PiRat>;

/// Lifts a rational polynomial into PiPoly.
PiPoly to_pipoly(const BasicPoly<Rational>& p);
/// Multiplies every coefficient by Pi^k.
PiPoly shift_pi(const PiPoly& p, int k);

/// sin_part(x) sin(Pi x) + cos_part(x) cos(Pi x) + constant.
struct TrigPoly {
    PiPoly sin_part;
    PiPoly cos_part;
    PiRat constant; // an integration constant; differentiates to zero

    friend bool operator==(const TrigPoly&, const TrigPoly&) = default;
    friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
        return {a.sin_part + b.sin_part, a.cos_part + b.cos_part, a.constant + b.constant};
    }
    TrigPoly scaled(const PiRat& s) const;
};

/// (P' - Pi Q) sin + (Q' + Pi P) cos.
TrigPoly trig_derivative(const TrigPoly& t);

/// T with trig_derivative(T) = p(x) sin(Pi x), by repeated integration by
/// parts:
///   sin part =  p'/Pi^2 - p'''/Pi^4 + ...
///   cos part = -p/Pi   + p''/Pi^3  - ...
/// The result is differentiated back and compared before returning; a
/// mismatch throws InternalFault.
TrigPoly antiderivative_p_sin(const PiPoly& p);

/// T(1) - T(0) using sin(0) = sin(Pi) = 0, cos(0) = 1, cos(Pi) = -1, which
/// reduces to -Q(1) - Q(0). The constant cancels.
PiRat definite_01(const TrigPoly& t);

/// Replaces Pi^(2k) by t^k. Throws InvalidInput ("not a polynomial in Pi^2")
/// if an odd exponent is present, and DivisionByZero for t = 0 with
/// negative exponents.
Rational pirat_substitute_pi2(const PiRat& value, const Rational& t);

/// Encloses value(pi) for every pi in pi_iv. Powers are formed per term and
/// rounded outward to round_bits when round_bits > 0.
RationalInterval pirat_eval_interval(const PiRat& value, const RationalInterval& pi_iv, unsigned round_bits = 0);

/// First location where two PiPolys differ, as "x^j Pi^k: a vs b"; empty if equal.
std::string first_difference(const PiPoly& a, const PiPoly& b);

} // namespace irratio
