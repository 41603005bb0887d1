#pragma once

// JSON encoding of reports. Integers and rationals travel as decimal
// strings ("-20", "22/7") so nothing is lost to floating point; intervals
// are {"lo": ..., "hi": ...}; PiRat values map exponent strings to
// coefficients, e.g. {"0": "3", "-2": "-1/2"}.

#include <json.hpp>

#include "irratio/combinatorics.hpp"
#include "irratio/numbers.hpp"
#include "irratio/series.hpp"
#include "irratio/trigpoly.hpp"
#include "irratio/witness.hpp"

namespace irratio {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const Integer& v);
void from_json(const Json& j, Integer& v);
void to_json(Json& j, const Rational& v);
void from_json(const Json& j, Rational& v);
void to_json(Json& j, const RationalInterval& v);
void from_json(const Json& j, RationalInterval& v);
void to_json(Json& j, const PiRat& v);
void from_json(const Json& j, PiRat& v);
void to_json(Json& j, Verdict v);
void from_json(const Json& j, Verdict& v);

void to_json(Json& j, const PiWitnessReport& r);
void from_json(const Json& j, PiWitnessReport& r);
void to_json(Json& j, const EWitnessReport& r);
void from_json(const Json& j, EWitnessReport& r);

Json sqrt_rationality_json(const Integer& m, const SqrtRationality& result);
Json squeeze_json(const SqueezeReport& r);

} // namespace irratio
