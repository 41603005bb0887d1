#pragma once

#include <variant>
#include <vector>

#include "irratio/numbers.hpp"

namespace irratio {

Integer factorial(unsigned n);

/// n choose k. The closed form n!/((n-k)!k!) is cross-checked against the
/// additive recursion C(n,k) = C(n-1,k-1) + C(n-1,k); a mismatch throws
/// InternalFault. Throws InvalidInput when k > n.
Integer binomial(unsigned n, unsigned k);

/// Rows 0..m of Pascal's triangle, built only from the additive recursion.
struct PascalTriangle {
    std::vector<std::vector<Integer>> rows;

    const std::vector<Integer>& row(unsigned n) const { return rows.at(n); }
    const Integer& at(unsigned n, unsigned k) const { return rows.at(n).at(k); }
};

PascalTriangle pascal_rows(unsigned m);

/// Sum of C(n,k) a^(n-k) b^k; checked against the direct power (a+b)^n.
Rational binomial_expand(const Rational& a, const Rational& b, unsigned n);

/// Minimal n >= 1 with c * a^n < n!. Both arguments must be positive.
unsigned dominance_index(const Rational& a, const Rational& c);

struct GrowthRow {
    unsigned n;
    Integer square, cube, power_of_two, factorial;
};

/// n, n^2, n^3, 2^n and n! for n = 0..max_n.
std::vector<GrowthRow> growth_table(unsigned max_n);

struct PerfectSquare {
    Integer root;
};

// sqrt(m) lies strictly between two consecutive integers. A rational root of
// an integer is itself an integer, so this settles irrationality.
struct IrrationalRoot {
    Integer m;
    Integer floor_root;
};

using SqrtRationality = std::variant<PerfectSquare, IrrationalRoot>;

/// Decides whether sqrt(m) is rational; m must be positive.
SqrtRationality sqrt_rationality(const Integer& m);

} // namespace irratio
