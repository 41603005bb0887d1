#pragma once

#include <vector>

#include "irratio/numbers.hpp"

namespace irratio {

enum class PiMethod { cos_root, archimedes };

const char* to_string(PiMethod m);

struct PiEnclosure {
    RationalInterval value;
    PiMethod method = PiMethod::cos_root;
    unsigned effort = 0; // bisection steps or polygon doublings
};

/// Default cap on internal decimal precision.
inline constexpr unsigned default_max_digits = 4096;

/// pi as twice the smallest positive zero of cos, by bisection on [1, 2]
/// with certified signs of cos at each midpoint. When a midpoint's sign is
/// ambiguous the series precision is doubled, up to max_digits, after which
/// PrecisionExhausted is thrown. Width is below 10^-precision_digits.
PiEnclosure pi_by_cos_root(unsigned precision_digits, unsigned max_digits = default_max_digits);

/// Inscribed and circumscribed semiperimeters of the regular 6*2^k-gon.
struct PolygonBounds {
    unsigned doublings = 0;
    Integer sides;
    RationalInterval inscribed;
    RationalInterval circumscribed;
};

/// Rows for k = 0..doublings, starting from the hexagon (3, 2 sqrt 3) and
/// applying circumscribed' = 2 s t/(s + t), inscribed' = sqrt(s circumscribed').
/// Square roots are rounded outward at a working precision derived from
/// precision_digits. doublings must be <= 60.
std::vector<PolygonBounds> archimedes_table(unsigned doublings, unsigned precision_digits);

/// [inscribed.lo, circumscribed.hi] of the last row of archimedes_table.
PiEnclosure archimedes_bounds(unsigned doublings, unsigned precision_digits);

/// (16/9)^2.
Rational rhind_value();

struct CFExpansion {
    std::vector<Integer> partial_quotients;
    std::vector<Rational> convergents;
    unsigned certified_depth = 0;
};

/// Continued fraction quotients shared by every real in x. Expansion stops
/// at max_depth, when the two endpoints' integer parts disagree, or when
/// the expansion of some point in x terminates.
CFExpansion continued_fraction(const RationalInterval& x, unsigned max_depth);

} // namespace irratio
