#include "irratio/witness.hpp"

#include <algorithm>

#include "irratio/combinatorics.hpp"
#include "irratio/errors.hpp"
#include "irratio/polynomials.hpp"
#include "irratio/series.hpp"

namespace irratio {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::contradiction: return "CONTRADICTION";
    case Verdict::inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

Rational pi_upper_bound() { return Rational(22, 7); }

namespace {

void require_positive(const Integer& a, const Integer& b) {
    if (a.sign() <= 0 || b.sign() <= 0)
        throw InvalidInput("candidate a/b needs a >= 1 and b >= 1");
}

Rational niven_upper_bound(const Integer& a, unsigned n) {
    return pi_upper_bound() * Rational(pow(a, n), factorial(n));
}

PiRat to_pi(const Integer& v) { return PiRat(Rational(v)); }

} // namespace

unsigned choose_niven_n(const Integer& a, const Integer& b) {
    require_positive(a, b);
    // Only a matters: pi a^n / n! < 1 does not involve b.
    return dominance_index(Rational(a), pi_upper_bound());
}

PiPoly build_g(const Integer& a, const Integer& b, unsigned n) {
    require_positive(a, b);
    if (n == 0)
        throw InvalidInput("build_g needs n >= 1");
    const Poly f = niven_poly(n);
    const int top = static_cast<int>(2 * n);
    PiPoly g;
    Poly d = f; // f^(2k)
    for (unsigned k = 0; k <= n && !d.is_zero(); ++k) {
        PiPoly term = shift_pi(to_pipoly(d), top - static_cast<int>(2 * k));
        g += (k % 2 == 0) ? term : -term;
        d = d.derivative().derivative();
    }
    return g.scaled(to_pi(pow(b, n)));
}

ProofCheck verify_ode_identity(const PiPoly& g, const Integer& b, unsigned n) {
    const PiPoly rhs = shift_pi(to_pipoly(niven_poly(n)), static_cast<int>(2 * n + 2)).scaled(to_pi(pow(b, n)));

    const PiPoly lhs = g.derivative().derivative() + shift_pi(g, 2);
    if (lhs != rhs)
        return {false, "g'' + Pi^2 g = b^n Pi^(2n+2) f", first_difference(lhs, rhs)};

    const TrigPoly antiderivative{g.derivative(), -shift_pi(g, 1), PiRat()};
    const TrigPoly d = trig_derivative(antiderivative);
    if (d.sin_part != rhs)
        return {false, "(g' sin - Pi g cos)' = b^n Pi^(2n+2) f sin", "sin part " + first_difference(d.sin_part, rhs)};
    if (!d.cos_part.is_zero())
        return {false, "(g' sin - Pi g cos)' = b^n Pi^(2n+2) f sin",
                "cos part " + first_difference(d.cos_part, PiPoly())};
    return {true, {}, {}};
}

ProofCheck verify_ode_identity(const Integer& a, const Integer& b, unsigned n) {
    return verify_ode_identity(build_g(a, b, n), b, n);
}

PiRat niven_integral_exact(const Integer& a, unsigned n) {
    if (n == 0)
        throw InvalidInput("niven_integral_exact needs n >= 1");
    const TrigPoly t = antiderivative_p_sin(to_pipoly(niven_poly(n)));
    PiRat integral = definite_01(t).shifted(1) * Rational(pow(a, n));
    if (!integral.all_exponents_even())
        throw InternalFault("I contains an odd power of Pi: " + integral.to_string());
    const int bound = static_cast<int>(4 * n + 4);
    if (integral.min_exponent() < -bound || integral.max_exponent() > bound)
        throw InternalFault("Pi exponent outside the expected range in I");
    return integral;
}

namespace {

CentralEquality central_equality_for(const PiRat& integral, const Integer& a, const Integer& b, unsigned n) {
    const Rational t(a, b);
    CentralEquality eq;
    eq.n = n;
    eq.substituted = pirat_substitute_pi2(integral, t);
    const PiPoly g = build_g(a, b, n);
    eq.g_sum = pirat_substitute_pi2(g(Rational(0)) + g(Rational(1)), t);
    return eq;
}

} // namespace

CentralEquality central_equality(const Integer& a, const Integer& b, unsigned n) {
    require_positive(a, b);
    return central_equality_for(niven_integral_exact(a, n), a, b, n);
}

PiWitnessReport pi_witness(const Integer& a, const Integer& b, std::optional<unsigned> n_override,
                           const WitnessLimits& limits) {
    require_positive(a, b);
    PiWitnessReport r;
    r.a = a;
    r.b = b;
    if (n_override) {
        if (*n_override == 0 || !(niven_upper_bound(a, *n_override) < Rational(1)))
            throw InvalidInput("n = " + std::to_string(*n_override) + " does not satisfy (22/7) a^n / n! < 1");
        r.n = *n_override;
    } else {
        r.n = choose_niven_n(a, b);
    }
    if (r.n > limits.max_n)
        throw ResourceCap("Niven degree parameter n = " + std::to_string(r.n) + " exceeds cap " +
                          std::to_string(limits.max_n));
    r.upper_bound = niven_upper_bound(a, r.n);
    if (!(r.upper_bound < Rational(1)))
        throw InternalFault("upper bound of pi a^n / n! is not below 1");

    r.I_exact = niven_integral_exact(a, r.n);
    const CentralEquality eq = central_equality_for(r.I_exact, a, b, r.n);
    if (!eq.substituted.is_integer())
        throw InternalFault("I under Pi^2 = a/b is not an integer: " + eq.substituted.to_string());
    if (!eq.equal())
        throw InternalFault("I under Pi^2 = a/b differs from g(0) + g(1)");
    r.N = eq.substituted.num();

    // a^n amplifies the width of the pi enclosure; widen precision until
    // the enclosure of I fits strictly inside (0, upper_bound).
    unsigned digits = std::min(10 + r.n, limits.max_digits);
    while (true) {
        const PiEnclosure pi = pi_by_cos_root(digits, limits.max_digits);
        if (!(pi.value.hi() < pi_upper_bound()))
            throw InternalFault("22/7 is not certified above pi");
        r.I_enclosure = pirat_eval_interval(r.I_exact, pi.value, 4 * digits_to_bits(digits));
        r.pi_digits = digits;
        if (r.I_enclosure.inside_open(Rational(0), r.upper_bound))
            break;
        if (digits >= limits.max_digits)
            throw PrecisionExhausted("enclosure of I not inside (0, upper_bound) at " + std::to_string(digits) +
                                     " digits of pi");
        digits = std::min(2 * digits, limits.max_digits);
    }

    const bool bounded = r.I_enclosure.inside_open(Rational(0), Rational(1));
    const Rational n_value(r.N);
    const bool excluded = r.N.sign() <= 0 || r.N >= Integer(1) || !r.I_enclosure.contains(n_value);
    r.verdict = (bounded && excluded) ? Verdict::contradiction : Verdict::inconclusive;
    return r;
}

Integer scaled_e_partial_sum(unsigned n) {
    // 1 + n (1 + (n-1) (1 + ... (1 + 1))), Horner form of sum n!/k!.
    Integer acc(1);
    for (unsigned j = 1; j <= n; ++j)
        acc = acc * Integer(j) + Integer(1);
    return acc;
}

EWitnessReport e_witness(const Integer& a, const Integer& b, const WitnessLimits& limits) {
    require_positive(a, b);
    if (b > Integer(limits.max_n))
        throw ResourceCap("denominator " + b.to_string() + " exceeds cap " + std::to_string(limits.max_n));
    EWitnessReport r;
    r.a = a;
    r.b = b;
    r.n = static_cast<unsigned>(b.to_long());
    const Integer fact = factorial(r.n);
    // n = b, so n! a / b = (n-1)! a is an integer.
    const Integer scaled_sum = scaled_e_partial_sum(r.n);
    r.M = factorial(r.n - 1) * a - scaled_sum;

    const Rational one_over_n(Integer(1), Integer(r.n));
    const Rational fact_r(fact);
    unsigned digits = std::min(static_cast<unsigned>(fact.bit_length() * 3 / 10) + 10, limits.max_digits);
    while (true) {
        const RationalInterval e = e_enclosure(digits).value;
        r.tail_enclosure = RationalInterval(fact_r * e.lo() - Rational(scaled_sum), fact_r * e.hi() - Rational(scaled_sum));
        if (r.tail_enclosure.inside_open(Rational(0), one_over_n))
            break;
        if (digits >= limits.max_digits)
            throw PrecisionExhausted("tail enclosure not inside (0, 1/n) at " + std::to_string(digits) + " digits");
        digits = std::min(2 * digits, limits.max_digits);
    }
    r.verdict = r.tail_enclosure.contains(Rational(r.M)) ? Verdict::inconclusive : Verdict::contradiction;
    return r;
}

} // namespace irratio
