#pragma once

#include <json.hpp>

#include "quadpair/higgs.hpp"
#include "quadpair/pairs.hpp"

namespace quadpair {

using Json = nlohmann::json;

// Rationals serialize as exact [num, den] pairs inside vectors; standalone
// values collapse to plain integers when the denominator is 1.
Json toJson(const Rational& r);
Json toJsonPair(const Rational& r);  // always [num, den]
Rational rationalFromJson(const Json& j);

Json toJson(const Scalar& s);
Scalar scalarFromJson(const Json& j);

Json toJson(const PicClass& c);
PicClass picClassFromJson(const Json& j);

Json toJson(const Divisor& d);
Divisor divisorFromJson(const Json& j);

Json toJson(const CurveModel& c);
CurveModel curveFromJson(const Json& j);

Json toJson(const DecomposablePair& p);
DecomposablePair pairFromJson(const Json& j);

Json toJson(const ExtensionPair& p);
ExtensionPair extensionPairFromJson(const Json& j);

Json toJson(const EspQuadruple& q);
EspQuadruple espFromJson(const Json& j);

std::vector<SubbundleCandidate> candidatesFromJson(const Json& j);

Json toJson(const StabilityVerdict& v);

}  // namespace quadpair
