#include "quadpair/json_io.hpp"

namespace quadpair {

Json toJson(const Rational& r) {
  if (r.isInteger()) return r.num();
  return Json::array({r.num(), r.den()});
}

Json toJsonPair(const Rational& r) { return Json::array({r.num(), r.den()}); }

Rational rationalFromJson(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_array() && j.size() == 2)
    return Rational(j[0].get<long long>(), j[1].get<long long>());
  if (j.is_string()) {  // "p/q" form accepted on input
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }
  throw Error(ErrorCode::UsageError, "expected an integer or [num, den] pair");
}

Json toJson(const Scalar& s) {
  if (s.isRational()) return toJsonPair(s.re());
  return Json{{"re", toJsonPair(s.re())}, {"im", toJsonPair(s.im())}};
}

Scalar scalarFromJson(const Json& j) {
  if (j.is_object()) {
    Rational re = j.contains("re") ? rationalFromJson(j.at("re")) : Rational(0);
    Rational im = j.contains("im") ? rationalFromJson(j.at("im")) : Rational(0);
    return Scalar(re, im);
  }
  return Scalar(rationalFromJson(j));
}

Json toJson(const PicClass& c) {
  Json jac = Json::array();
  for (const auto& x : c.jac) jac.push_back(toJsonPair(x));
  return Json{{"degree", c.degree}, {"jac", jac}};
}

PicClass picClassFromJson(const Json& j) {
  PicClass c;
  c.degree = j.at("degree").get<long long>();
  if (j.contains("jac"))
    for (const auto& x : j.at("jac")) c.jac.push_back(rationalFromJson(x).mod1());
  return c;
}

Json toJson(const Divisor& d) {
  Json points = Json::object();
  for (const auto& [p, m] : d.support) points[p] = m;
  return Json{{"points", points}};
}

Divisor divisorFromJson(const Json& j) {
  Divisor d;
  const Json& points = j.contains("points") ? j.at("points") : j;
  for (auto it = points.begin(); it != points.end(); ++it)
    d.support[it.key()] = it.value().get<long long>();
  d.validate();
  return d;
}

Json toJson(const CurveModel& c) {
  Json points = Json::object();
  for (const auto& [id, aj] : c.points) {
    Json v = Json::array();
    for (const auto& x : aj) v.push_back(toJsonPair(x));
    points[id] = v;
  }
  Json canon = Json::array();
  for (const auto& x : c.canonicalClassJac) canon.push_back(toJsonPair(x));
  return Json{{"genus", c.genus}, {"points", points}, {"canonicalJac", canon}};
}

CurveModel curveFromJson(const Json& j) {
  CurveModel c(j.at("genus").get<int>());
  if (j.contains("points")) {
    for (auto it = j.at("points").begin(); it != j.at("points").end(); ++it) {
      AJVector aj;
      for (const auto& x : it.value()) aj.push_back(rationalFromJson(x));
      c.registerPoint(it.key(), std::move(aj));
    }
  }
  if (j.contains("canonicalJac")) {
    c.canonicalClassJac.clear();
    for (const auto& x : j.at("canonicalJac")) c.canonicalClassJac.push_back(rationalFromJson(x).mod1());
  }
  c.validate();
  return c;
}

static Json sectionToJson(const std::optional<Divisor>& d) {
  if (!d) return nullptr;
  return toJson(*d);
}

static std::optional<Divisor> sectionFromJson(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return divisorFromJson(j);
}

static const char* gammaEntryKey(GammaEntry e) {
  switch (e) {
    case GammaEntry::G11: return "g11";
    case GammaEntry::G12: return "g12";
    case GammaEntry::G22: return "g22";
  }
  return "?";
}

static Json jetsToJson(const PairJets& jets) {
  Json out = Json::object();
  for (const auto& [p, entries] : jets.perPoint) {
    Json pj = Json::object();
    for (const auto& [e, coeffs] : entries) {
      Json arr = Json::array();
      for (const auto& c : coeffs) arr.push_back(toJson(c));
      pj[gammaEntryKey(e)] = arr;
    }
    out[p] = pj;
  }
  return out;
}

static PairJets jetsFromJson(const Json& j) {
  PairJets jets;
  for (auto pit = j.begin(); pit != j.end(); ++pit) {
    for (GammaEntry e : {GammaEntry::G11, GammaEntry::G12, GammaEntry::G22}) {
      if (!pit.value().contains(gammaEntryKey(e))) continue;
      std::vector<Scalar> coeffs;
      for (const auto& c : pit.value().at(gammaEntryKey(e))) coeffs.push_back(scalarFromJson(c));
      jets.perPoint[pit.key()][e] = std::move(coeffs);
    }
  }
  return jets;
}

Json toJson(const DecomposablePair& p) {
  Json j{{"schemaVersion", 1},
         {"kind", "decomposable"},
         {"curve", toJson(p.curve)},
         {"U", toJson(p.U)},
         {"L1", toJson(p.L1)},
         {"L2", toJson(p.L2)},
         {"g11", sectionToJson(p.g11)},
         {"g12", sectionToJson(p.g12)},
         {"g22", sectionToJson(p.g22)}};
  if (p.jets) j["jets"] = jetsToJson(*p.jets);
  return j;
}

DecomposablePair pairFromJson(const Json& j) {
  DecomposablePair p;
  p.curve = curveFromJson(j.at("curve"));
  p.U = picClassFromJson(j.at("U"));
  p.L1 = picClassFromJson(j.at("L1"));
  p.L2 = picClassFromJson(j.at("L2"));
  p.g11 = j.contains("g11") ? sectionFromJson(j.at("g11")) : std::nullopt;
  p.g12 = j.contains("g12") ? sectionFromJson(j.at("g12")) : std::nullopt;
  p.g22 = j.contains("g22") ? sectionFromJson(j.at("g22")) : std::nullopt;
  if (j.contains("jets") && !j.at("jets").is_null()) p.jets = jetsFromJson(j.at("jets"));
  p.validate();
  return p;
}

Json toJson(const ExtensionPair& p) {
  return Json{{"schemaVersion", 1},
              {"kind", "extension"},
              {"curve", toJson(p.curve)},
              {"U", toJson(p.U)},
              {"sub", toJson(p.sub)},
              {"quot", toJson(p.quot)},
              {"gammaQuot", sectionToJson(p.gammaQuot)},
              {"extNontrivial", p.extNontrivial}};
}

ExtensionPair extensionPairFromJson(const Json& j) {
  ExtensionPair p;
  p.curve = curveFromJson(j.at("curve"));
  p.U = picClassFromJson(j.at("U"));
  p.sub = picClassFromJson(j.at("sub"));
  p.quot = picClassFromJson(j.at("quot"));
  p.gammaQuot = sectionFromJson(j.at("gammaQuot"));
  p.extNontrivial = j.value("extNontrivial", true);
  p.validate();
  return p;
}

Json toJson(const EspQuadruple& q) {
  if (q.degreeOnlyD1)
    return Json{{"schemaVersion", 1},
                {"kind", "esp"},
                {"curve", toJson(q.curve)},
                {"V", {{"degreeOnly", *q.degreeOnlyD1}}},
                {"L", toJson(q.Lcls)}};
  return Json{{"schemaVersion", 1},
              {"kind", "esp"},
              {"curve", toJson(q.curve)},
              {"L1", toJson(q.L1)},
              {"L2", toJson(q.L2)},
              {"L", toJson(q.Lcls)},
              {"b11", sectionToJson(q.b11)},
              {"b12", sectionToJson(q.b12)},
              {"b22", sectionToJson(q.b22)},
              {"g11", sectionToJson(q.g11)},
              {"g12", sectionToJson(q.g12)},
              {"g22", sectionToJson(q.g22)}};
}

EspQuadruple espFromJson(const Json& j) {
  EspQuadruple q;
  q.curve = curveFromJson(j.at("curve"));
  q.Lcls = picClassFromJson(j.at("L"));
  if (j.contains("V") && j.at("V").contains("degreeOnly")) {
    q.degreeOnlyD1 = j.at("V").at("degreeOnly").get<long long>();
    q.L1 = picZero(q.curve.genus);
    q.L2 = picZero(q.curve.genus);
    return q;
  }
  q.L1 = picClassFromJson(j.at("L1"));
  q.L2 = picClassFromJson(j.at("L2"));
  auto opt = [&](const char* key) -> std::optional<Divisor> {
    if (!j.contains(key)) return std::nullopt;
    return sectionFromJson(j.at(key));
  };
  q.b11 = opt("b11");
  q.b12 = opt("b12");
  q.b22 = opt("b22");
  q.g11 = opt("g11");
  q.g12 = opt("g12");
  q.g22 = opt("g22");
  q.validate();
  return q;
}

std::vector<SubbundleCandidate> candidatesFromJson(const Json& j) {
  std::vector<SubbundleCandidate> out;
  for (const auto& c : j) {
    std::string kind = c.at("kind").get<std::string>();
    if (kind == "graph") {
      int from = c.at("from").get<int>();
      if (c.contains("f") && !c.at("f").is_null())
        out.push_back(SubbundleCandidate::graph(from, divisorFromJson(c.at("f"))));
      else
        out.push_back(SubbundleCandidate::genericGraph(from));
    } else if (kind == "declared") {
      out.push_back(SubbundleCandidate::declared(c.at("degree").get<long long>(),
                                                 c.at("class").get<std::string>().at(0)));
    } else {
      throw Error(ErrorCode::UsageError, "unknown candidate kind: " + kind);
    }
  }
  return out;
}

Json toJson(const StabilityVerdict& v) {
  Json types = Json::array();
  if (v.typeA) types.push_back("A");
  if (v.typeB) types.push_back("B");
  if (v.typeC) types.push_back("C");
  Json j{{"status", verdictStatusName(v.status)},
         {"semistableTypes", types},
         {"polystable", v.polystable},
         {"exactness", v.exactness == Exactness::Exact ? "Exact" : "CandidateRelative"}};
  if (v.witness)
    j["witness"] = Json{{"candidate", v.witness->candidate.describe()},
                        {"class", conditionClassName(v.witness->cls)},
                        {"degree", v.witness->degree}};
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

}  // namespace quadpair
