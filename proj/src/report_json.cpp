#include "irratio/report_json.hpp"

#include <string>

#include "irratio/errors.hpp"

namespace irratio {

namespace {

// n is a small count internally but is carried as a decimal string like
// every other integer field.
unsigned parse_count(const Json& j) {
    const Integer v = j.get<Integer>();
    if (v.sign() < 0 || v > Integer(0xFFFFFFFFul))
        throw InvalidInput("count out of range: " + v.to_string());
    return static_cast<unsigned>(v.to_long());
}

} // namespace

void to_json(Json& j, const Integer& v) { j = v.to_string(); }
void from_json(const Json& j, Integer& v) { v = Integer::parse(j.get<std::string>()); }

void to_json(Json& j, const Rational& v) { j = v.to_string(); }
void from_json(const Json& j, Rational& v) { v = Rational::parse(j.get<std::string>()); }

void to_json(Json& j, const RationalInterval& v) { j = Json{{"lo", v.lo()}, {"hi", v.hi()}}; }
void from_json(const Json& j, RationalInterval& v) {
    v = RationalInterval(j.at("lo").get<Rational>(), j.at("hi").get<Rational>());
}

void to_json(Json& j, const PiRat& v) {
    j = Json::object();
    for (const auto& [k, c] : v.terms())
        j[std::to_string(k)] = c;
}

void from_json(const Json& j, PiRat& v) {
    v = PiRat();
    for (const auto& [key, value] : j.items())
        v += PiRat::monomial(value.get<Rational>(), std::stoi(key));
}

void to_json(Json& j, Verdict v) { j = to_string(v); }
void from_json(const Json& j, Verdict& v) {
    const auto s = j.get<std::string>();
    if (s == to_string(Verdict::contradiction))
        v = Verdict::contradiction;
    else if (s == to_string(Verdict::inconclusive))
        v = Verdict::inconclusive;
    else
        throw InvalidInput("unknown verdict: " + s);
}

void to_json(Json& j, const PiWitnessReport& r) {
    j = Json{
        {"a", r.a},
        {"b", r.b},
        {"n", Integer(r.n)},
        {"N", r.N},
        {"I_exact", r.I_exact},
        {"I_enclosure", r.I_enclosure},
        {"upper_bound", r.upper_bound},
        {"verdict", r.verdict},
        {"pi_digits", Integer(r.pi_digits)},
    };
}

void from_json(const Json& j, PiWitnessReport& r) {
    r.a = j.at("a").get<Integer>();
    r.b = j.at("b").get<Integer>();
    r.n = parse_count(j.at("n"));
    r.N = j.at("N").get<Integer>();
    r.I_exact = j.at("I_exact").get<PiRat>();
    r.I_enclosure = j.at("I_enclosure").get<RationalInterval>();
    r.upper_bound = j.at("upper_bound").get<Rational>();
    r.verdict = j.at("verdict").get<Verdict>();
    r.pi_digits = j.contains("pi_digits") ? parse_count(j.at("pi_digits")) : 0;
}

void to_json(Json& j, const EWitnessReport& r) {
    j = Json{
        {"a", r.a},
        {"b", r.b},
        {"n", Integer(r.n)},
        {"M", r.M},
        {"tail_enclosure", r.tail_enclosure},
        {"verdict", r.verdict},
    };
}

void from_json(const Json& j, EWitnessReport& r) {
    r.a = j.at("a").get<Integer>();
    r.b = j.at("b").get<Integer>();
    r.n = parse_count(j.at("n"));
    r.M = j.at("M").get<Integer>();
    r.tail_enclosure = j.at("tail_enclosure").get<RationalInterval>();
    r.verdict = j.at("verdict").get<Verdict>();
}

Json sqrt_rationality_json(const Integer& m, const SqrtRationality& result) {
    if (const auto* sq = std::get_if<PerfectSquare>(&result))
        return Json{{"m", m}, {"result", "perfect-square"}, {"root", sq->root}};
    const auto& irr = std::get<IrrationalRoot>(result);
    return Json{{"m", m}, {"result", "irrational"}, {"floor_root", irr.floor_root}};
}

Json squeeze_json(const SqueezeReport& r) {
    return Json{
        {"h", r.h},
        {"cos_h", r.cos_h},
        {"sin_over_h", r.sin_over_h},
        {"one_minus_cos_over_h", r.one_minus_cos_over_h},
        {"tangent_chain", to_string(r.tangent_chain)},
        {"chord_chain", to_string(r.chord_chain)},
    };
}

} // namespace irratio
