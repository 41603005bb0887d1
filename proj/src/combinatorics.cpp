#include "irratio/combinatorics.hpp"

#include <string>

#include "irratio/errors.hpp"

namespace irratio {

Integer factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Integer(std::move(r));
}

namespace {

// C(n,k) from the recursion alone: slide a row of width k+1 down n times.
Integer binomial_by_recursion(unsigned n, unsigned k) {
    std::vector<Integer> row(k + 1, Integer(0));
    row[0] = 1;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = std::min(i, k); j >= 1; --j)
            row[j] += row[j - 1];
    return row[k];
}

} // namespace

Integer binomial(unsigned n, unsigned k) {
    if (k > n)
        throw InvalidInput("binomial(" + std::to_string(n) + ", " + std::to_string(k) + "): k exceeds n");
    Integer denom = factorial(n - k) * factorial(k);
    Integer closed = floor_div(factorial(n), denom);
    if (closed * denom != factorial(n))
        throw InternalFault("binomial closed form is not integral");
    if (closed != binomial_by_recursion(n, k))
        throw InternalFault("binomial closed form disagrees with Pascal recursion");
    return closed;
}

PascalTriangle pascal_rows(unsigned m) {
    PascalTriangle t;
    t.rows.reserve(m + 1);
    t.rows.push_back({Integer(1)});
    for (unsigned n = 1; n <= m; ++n) {
        const auto& prev = t.rows.back();
        std::vector<Integer> row(n + 1, Integer(1));
        for (unsigned k = 1; k < n; ++k)
            row[k] = prev[k - 1] + prev[k];
        t.rows.push_back(std::move(row));
    }
    return t;
}

Rational binomial_expand(const Rational& a, const Rational& b, unsigned n) {
    const PascalTriangle t = pascal_rows(n);
    Rational sum(0);
    for (unsigned k = 0; k <= n; ++k)
        sum += Rational(t.at(n, k)) * pow(a, n - k) * pow(b, k);
    if (sum != pow(a + b, n))
        throw InternalFault("binomial expansion disagrees with direct power");
    return sum;
}

unsigned dominance_index(const Rational& a, const Rational& c) {
    if (a.sign() <= 0 || c.sign() <= 0)
        throw InvalidInput("dominance_index needs a > 0 and c > 0");
    Rational lhs = c * a;
    Integer fact(1);
    for (unsigned n = 1;; ++n) {
        if (lhs < Rational(fact))
            return n;
        lhs *= a;
        fact *= Integer(n + 1);
    }
}

std::vector<GrowthRow> growth_table(unsigned max_n) {
    std::vector<GrowthRow> rows;
    for (unsigned n = 0; n <= max_n; ++n) {
        Integer v(n);
        rows.push_back({n, v * v, v * v * v, pow(Integer(2), n), factorial(n)});
    }
    return rows;
}

SqrtRationality sqrt_rationality(const Integer& m) {
    if (m.sign() <= 0)
        throw InvalidInput("sqrt_rationality needs a positive integer");
    Integer r = isqrt(m);
    if (r * r == m)
        return PerfectSquare{r};
    return IrrationalRoot{m, r};
}

} // namespace irratio
