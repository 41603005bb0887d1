#pragma once

// Contradiction certificates for rational candidates of pi^2 and e.
//
// Each report carries the integer that the irrationality argument builds
// from the candidate, together with a rigorous enclosure of the real number
// that same integer would have to equal. The enclosure sits strictly inside
// (0, 1), so no integer fits: the candidate is refuted.

#include <optional>
#include <string>

#include "irratio/numbers.hpp"
#include "irratio/pi_engine.hpp"
#include "irratio/trigpoly.hpp"

namespace irratio {

enum class Verdict { contradiction, inconclusive };

const char* to_string(Verdict v);

/// 22/7, the rational upper bound of pi used for choosing n.
Rational pi_upper_bound();

/// Minimal n >= 1 with (22/7) a^n / n! < 1.
unsigned choose_niven_n(const Integer& a, const Integer& b);

/// g(x) = b^n sum_{k=0}^n (-1)^k Pi^(2n-2k) f^(2k)(x) with f the Niven
/// polynomial of degree 2n.
PiPoly build_g(const Integer& a, const Integer& b, unsigned n);

struct ProofCheck {
    bool passed = false;
    std::string failed_identity; // empty when passed
    std::string detail;          // first differing coefficient
};

/// Checks, as exact symbolic equalities,
///   g'' + Pi^2 g = b^n Pi^(2n+2) f
///   (g' sin(Pi x) - Pi g cos(Pi x))' = b^n Pi^(2n+2) f sin(Pi x).
ProofCheck verify_ode_identity(const Integer& a, const Integer& b, unsigned n);
/// Same checks against a caller-supplied g.
ProofCheck verify_ode_identity(const PiPoly& g, const Integer& b, unsigned n);

/// I = Pi a^n int_0^1 f(x) sin(Pi x) dx, exactly, via the symbolic
/// antiderivative. Only even powers of Pi appear; InternalFault otherwise.
PiRat niven_integral_exact(const Integer& a, unsigned n);

/// The two independent routes to the integer N under the hypothesis
/// Pi^2 = a/b: substituting into I, and evaluating g(0) + g(1).
struct CentralEquality {
    unsigned n = 0;
    Rational substituted; // I with Pi^2 -> a/b
    Rational g_sum;       // g(0) + g(1) with Pi^2 -> a/b
    bool equal() const { return substituted == g_sum; }
};

CentralEquality central_equality(const Integer& a, const Integer& b, unsigned n);

struct PiWitnessReport {
    Integer a, b;
    unsigned n = 0;
    Integer N;
    PiRat I_exact;
    RationalInterval I_enclosure;
    Rational upper_bound; // 22/7 * a^n / n!, bounds pi a^n / n! from above
    Verdict verdict = Verdict::inconclusive;
    unsigned pi_digits = 0; // precision of the pi enclosure behind I_enclosure

    friend bool operator==(const PiWitnessReport&, const PiWitnessReport&) = default;
};

struct WitnessLimits {
    unsigned max_digits = default_max_digits; // cap on internal pi/e precision
    unsigned max_n = 1000;                    // cap on the Niven degree parameter
};

/// Refutes pi^2 = a/b. n_override, if given, must itself satisfy
/// (22/7) a^n / n! < 1 (InvalidInput otherwise). Throws ResourceCap if n
/// exceeds limits.max_n and PrecisionExhausted if the enclosure cannot be
/// placed inside (0, upper_bound) within limits.max_digits.
PiWitnessReport pi_witness(const Integer& a, const Integer& b, std::optional<unsigned> n_override = std::nullopt,
                           const WitnessLimits& limits = {});

struct EWitnessReport {
    Integer a, b;
    unsigned n = 0;
    Integer M;
    RationalInterval tail_enclosure; // encloses n! (e - sum_{k<=n} 1/k!)
    Verdict verdict = Verdict::inconclusive;

    friend bool operator==(const EWitnessReport&, const EWitnessReport&) = default;
};

/// sum_{k=0}^n n!/k!, an integer.
Integer scaled_e_partial_sum(unsigned n);

/// Refutes e = a/b with n = b: M = n! a/b - sum n!/k! is an integer, yet the
/// real it would equal lies in (0, 1/n).
EWitnessReport e_witness(const Integer& a, const Integer& b, const WitnessLimits& limits = {});

} // namespace irratio
