#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "irratio/numbers.hpp"

namespace irratio {

/// Dense univariate polynomial in x. coeffs()[j] multiplies x^j. Trailing
/// zeros are trimmed, so the zero polynomial has no coefficients and
/// equality is coefficient-wise.
///
/// Coeff must be a ring element with `is_zero()`, `+ - *`, and
/// multiplication by a Rational.
template <typename Coeff>
class BasicPoly {
public:
    BasicPoly() = default;
    explicit BasicPoly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
    BasicPoly(Coeff constant) : c_{std::move(constant)} { trim(); }

    static BasicPoly monomial(Coeff c, std::size_t power) {
        std::vector<Coeff> v(power + 1);
        v[power] = std::move(c);
        return BasicPoly(std::move(v));
    }

    const std::vector<Coeff>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Coeff coeff(std::size_t j) const { return j < c_.size() ? c_[j] : Coeff{}; }

    template <typename F>
    auto map(F&& f) const {
        using Out = decltype(f(std::declval<const Coeff&>()));
        std::vector<Out> out;
        out.reserve(c_.size());
        for (const auto& c : c_)
            out.push_back(f(c));
        return BasicPoly<Out>(std::move(out));
    }

    BasicPoly operator-() const {
        return map([](const Coeff& c) { return c * Rational(-1); });
    }

    BasicPoly& operator+=(const BasicPoly& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c_[j] += o.c_[j];
        trim();
        return *this;
    }

    BasicPoly& operator-=(const BasicPoly& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c_[j] -= o.c_[j];
        trim();
        return *this;
    }

    friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
    friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }

    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Coeff> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        }
        return BasicPoly(std::move(out));
    }

    /// Scales every coefficient by s.
    BasicPoly scaled(const Coeff& s) const {
        return map([&](const Coeff& c) { return c * s; });
    }

    /// Term-wise power rule.
    BasicPoly derivative() const {
        if (c_.size() <= 1)
            return {};
        std::vector<Coeff> out;
        out.reserve(c_.size() - 1);
        for (std::size_t j = 1; j < c_.size(); ++j)
            out.push_back(c_[j] * Rational(static_cast<long>(j)));
        return BasicPoly(std::move(out));
    }

    /// Horner evaluation at a rational point.
    Coeff operator()(const Rational& x) const {
        Coeff acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(const BasicPoly& a, const BasicPoly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<Coeff> c_;
};

} // namespace irratio
