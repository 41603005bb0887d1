#include "irratio/trigpoly.hpp"

#include <optional>
#include <sstream>
#include <vector>

#include "irratio/errors.hpp"

namespace irratio {

// ---- PiRat -----------------------------------------------------------------

PiRat PiRat::monomial(Rational c, int exponent) {
    PiRat r;
    r.add_term(exponent, std::move(c));
    return r;
}

void PiRat::add_term(int k, Rational c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(k, std::move(c));
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Rational PiRat::coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

int PiRat::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int PiRat::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

bool PiRat::all_exponents_even() const {
    for (const auto& [k, c] : terms_)
        if (k % 2 != 0)
            return false;
    return true;
}

PiRat PiRat::shifted(int k) const {
    PiRat r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
}

PiRat PiRat::operator-() const {
    PiRat r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
}

PiRat& PiRat::operator+=(const PiRat& o) {
    for (const auto& [k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

PiRat& PiRat::operator-=(const PiRat& o) {
    for (const auto& [k, c] : o.terms_)
        add_term(k, -c);
    return *this;
}

PiRat operator*(const PiRat& a, const PiRat& b) {
    PiRat r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term(ka + kb, ca * cb);
    return r;
}

PiRat operator*(const PiRat& a, const Rational& s) {
    if (s.is_zero())
        return {};
    PiRat r;
    for (const auto& [k, c] : a.terms_)
        r.terms_.emplace_hint(r.terms_.end(), k, c * s);
    return r;
}

std::string PiRat::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        Rational mag = abs(c);
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != Rational(1))
            os << mag << "*";
        os << "Pi";
        if (k != 1)
            os << "^" << k;
    }
    return os.str();
}

// ---- PiPoly / TrigPoly -----------------------------------------------------

PiPoly to_pipoly(const BasicPoly<Rational>& p) {
    return p.map([](const Rational& c) { return PiRat(c); });
}

PiPoly shift_pi(const PiPoly& p, int k) {
    return p.map([k](const PiRat& c) { return c.shifted(k); });
}

TrigPoly TrigPoly::scaled(const PiRat& s) const {
    return {sin_part.scaled(s), cos_part.scaled(s), constant * s};
}

TrigPoly trig_derivative(const TrigPoly& t) {
    return {t.sin_part.derivative() - shift_pi(t.cos_part, 1), t.cos_part.derivative() + shift_pi(t.sin_part, 1),
            PiRat()};
}

TrigPoly antiderivative_p_sin(const PiPoly& p) {
    TrigPoly t;
    // Even derivatives feed the cos part, odd ones the sin part, with
    // alternating signs and one extra power of 1/Pi per derivative.
    PiPoly d = p;
    for (int order = 0; !d.is_zero(); ++order) {
        const int k = order / 2;
        const bool negate = (order % 2 == 0) ? (k % 2 == 0) : (k % 2 == 1);
        PiPoly term = shift_pi(d, -(order + 1));
        if (negate)
            term = -term;
        if (order % 2 == 0)
            t.cos_part += term;
        else
            t.sin_part += term;
        d = d.derivative();
    }
    const TrigPoly check = trig_derivative(t);
    if (!(check.sin_part == p) || !check.cos_part.is_zero())
        throw InternalFault("antiderivative of p(x) sin(Pi x) does not differentiate back");
    return t;
}

PiRat definite_01(const TrigPoly& t) {
    return -(t.cos_part(Rational(1)) + t.cos_part(Rational(0)));
}

Rational pirat_substitute_pi2(const PiRat& value, const Rational& t) {
    Rational out(0);
    for (const auto& [k, c] : value.terms()) {
        if (k % 2 != 0)
            throw InvalidInput("not a polynomial in Pi^2: term Pi^" + std::to_string(k) + " in " + value.to_string());
        out += c * pow(t, k / 2);
    }
    return out;
}

namespace {

// Powers [a^k, b^k] for 0 < a <= b, built incrementally and rounded
// outward when bits > 0.
class PositivePowers {
public:
    PositivePowers(Rational a, Rational b, unsigned bits) : a_(std::move(a)), b_(std::move(b)), bits_(bits) {
        lo_.emplace_back(1);
        hi_.emplace_back(1);
    }

    RationalInterval get(unsigned k) {
        while (lo_.size() <= k) {
            Rational lo = lo_.back() * a_, hi = hi_.back() * b_;
            if (bits_ > 0) {
                lo = round_down(lo, bits_);
                hi = round_up(hi, bits_);
            }
            lo_.push_back(std::move(lo));
            hi_.push_back(std::move(hi));
        }
        return {lo_[k], hi_[k]};
    }

private:
    Rational a_, b_;
    unsigned bits_;
    std::vector<Rational> lo_, hi_;
};

} // namespace

RationalInterval pirat_eval_interval(const PiRat& value, const RationalInterval& pi_iv, unsigned round_bits) {
    const bool has_negative = !value.is_zero() && value.min_exponent() < 0;
    if (has_negative && pi_iv.contains_zero())
        throw DivisionByZero("negative power of Pi over an interval containing zero");
    const bool positive = pi_iv.lo().sign() > 0;
    std::optional<PositivePowers> up, down;
    if (positive) {
        up.emplace(pi_iv.lo(), pi_iv.hi(), round_bits);
        Rational inv_lo = pi_iv.hi().reciprocal(), inv_hi = pi_iv.lo().reciprocal();
        if (round_bits > 0) {
            inv_lo = round_down(inv_lo, round_bits);
            inv_hi = round_up(inv_hi, round_bits);
        }
        down.emplace(std::move(inv_lo), std::move(inv_hi), round_bits);
    }

    RationalInterval sum = RationalInterval::point(Rational(0));
    for (const auto& [k, c] : value.terms()) {
        RationalInterval power;
        if (positive)
            power = k >= 0 ? up->get(static_cast<unsigned>(k)) : down->get(static_cast<unsigned>(-k));
        else if (k >= 0)
            power = pow(pi_iv, static_cast<unsigned>(k));
        else
            power = pow(RationalInterval::point(Rational(1)) / pi_iv, static_cast<unsigned>(-k));
        sum += power * RationalInterval::point(c);
        if (round_bits > 0)
            sum = sum.outward(round_bits);
    }
    return sum;
}

std::string first_difference(const PiPoly& a, const PiPoly& b) {
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t j = 0; j < n; ++j) {
        const PiRat ca = a.coeff(j), cb = b.coeff(j);
        if (ca == cb)
            continue;
        const PiRat diff = ca - cb;
        const int k = diff.max_exponent();
        return "x^" + std::to_string(j) + " Pi^" + std::to_string(k) + ": " + ca.coeff(k).to_string() + " vs " +
               cb.coeff(k).to_string();
    }
    return {};
}

} // namespace irratio
