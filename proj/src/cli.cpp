#include "quadpair/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "quadpair/dimensions.hpp"
#include "quadpair/json_io.hpp"
#include "quadpair/modelgen.hpp"
#include "quadpair/selftest.hpp"
#include "quadpair/spectral.hpp"

namespace quadpair {

namespace {

Rational parseRational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected an integer or p/q rational, got '" + s + "'");
  }
}

Json loadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::UsageError, "cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

struct Output {
  std::ostream& out;
  bool json = false;

  // Machine output wraps the payload in a CommandResult envelope.
  void emit(const Json& payload, const std::string& text, const Json& metadata = Json::object()) {
    if (json) {
      Json meta = metadata;
      meta["schemaVersion"] = 1;
      Json result{{"status", "ok"}, {"payload", payload}, {"metadata", meta}};
      out << result.dump() << "\n";
    } else {
      out << text;
    }
  }
};

std::string describeChamberLocation(const ChamberLocation& loc) {
  switch (loc.kind) {
    case ChamberLocation::Kind::Chamber:
      return "Chamber(" + std::to_string(loc.index) + ")";
    case ChamberLocation::Kind::Critical:
      return "Critical(k=" + std::to_string(loc.index) + ")";
    case ChamberLocation::Kind::CriticalMax: return "Critical(Max)";
    case ChamberLocation::Kind::EmptyAlphaTooBig: return "EmptyAlphaTooBig";
  }
  return "?";
}

void addChambers(CLI::App& app, Output& o) {
  auto* cmd = app.add_subcommand("chambers", "Chamber decomposition of the parameter line");
  auto g = std::make_shared<int>(2);
  auto dU = std::make_shared<long long>(0);
  auto d = std::make_shared<long long>(0);
  auto alpha = std::make_shared<std::string>();
  cmd->add_option("--g", *g, "genus")->required();
  cmd->add_option("--dU", *dU, "degree of U")->required();
  cmd->add_option("--d", *d, "degree of V")->required();
  cmd->add_option("--alpha", *alpha, "optionally locate this alpha");
  cmd->callback([&o, g, dU, d, alpha]() {
    ChamberDecomposition cd = chamberDecomposition(*d, *dU);
    Json criticals = Json::array();
    for (const auto& c : cd.criticals) criticals.push_back(toJson(c));
    Json chambers = Json::array();
    for (const auto& iv : cd.chambers)
      chambers.push_back(Json::array(
          {iv.lo ? toJson(*iv.lo) : Json("-inf"), toJson(iv.hi)}));
    Json payload{{"criticals", criticals},
                 {"alphaMin", toJson(cd.alphaMin)},
                 {"alphaMax", toJson(cd.alphaMax)},
                 {"chambers", chambers},
                 {"g", *g},
                 {"d", *d},
                 {"dU", *dU}};
    std::string locText;
    if (!alpha->empty()) {
      ChamberLocation loc = chamberIndex(parseRational(*alpha), ParamSpec{*g, *dU, *d});
      payload["location"] = describeChamberLocation(loc);
      locText = "alpha " + *alpha + ": " + describeChamberLocation(loc) + "\n";
    }
    Json meta{{"modelOnly", cd.modelOnly || *g < 2}};
    std::string text = "critical values:";
    for (const auto& c : cd.criticals) text += " " + c.str();
    text += "\nalpha_m = " + cd.alphaMin.str() + ", alpha_M = " + cd.alphaMax.str() + "\n" + locText;
    o.emit(payload, text, meta);
  });
}

void addRegionDiagram(CLI::App& app, Output& o) {
  auto* cmd = app.add_subcommand("region-diagram", "Qualitative diagram of the (alpha, d) regions");
  auto dU = std::make_shared<long long>(0);
  auto dRange = std::make_shared<std::string>();
  auto aRange = std::make_shared<std::string>();
  auto format = std::make_shared<std::string>("ascii");
  auto outFile = std::make_shared<std::string>();
  cmd->add_option("--dU", *dU, "degree of U")->required();
  cmd->add_option("--d-range", *dRange, "d range lo:hi")->required();
  cmd->add_option("--alpha-range", *aRange, "alpha range lo:hi")->required();
  cmd->add_option("--format", *format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  cmd->add_option("--out", *outFile, "write the document to a file");
  cmd->callback([&o, dU, dRange, aRange, format, outFile]() {
    auto splitRange = [](const std::string& s) -> std::pair<std::string, std::string> {
      auto colon = s.find(':');
      if (colon == std::string::npos)
        throw CLI::ValidationError("range must be lo:hi, got '" + s + "'");
      return {s.substr(0, colon), s.substr(colon + 1)};
    };
    auto [dLo, dHi] = splitRange(*dRange);
    auto [aLo, aHi] = splitRange(*aRange);
    DiagramWindow w;
    w.dU = *dU;
    w.dLo = parseRational(dLo).floor();
    w.dHi = parseRational(dHi).floor();
    w.alphaLo = parseRational(aLo);
    w.alphaHi = parseRational(aHi);
    std::string doc = *format == "svg" ? regionDiagramSvg(w) : regionDiagramAscii(w);
    if (!outFile->empty()) {
      std::ofstream f(*outFile);
      f << doc;
      o.emit(Json{{"written", *outFile}}, "wrote " + *outFile + "\n");
    } else {
      o.emit(Json{{"document", doc}}, doc);
    }
  });
}

void addDims(CLI::App& app, Output& o) {
  auto* cmd = app.add_subcommand("dims", "Expected, flip-locus and Hitchin dimensions");
  auto g = std::make_shared<int>(2);
  auto d = std::make_shared<long long>(0);
  auto dU = std::make_shared<long long>(0);
  auto alphaK = std::make_shared<std::string>();
  cmd->add_option("--g", *g)->required();
  cmd->add_option("--d", *d)->required();
  cmd->add_option("--dU", *dU)->required();
  cmd->add_option("--alpha-k", *alphaK, "critical value for the flip-locus report");
  cmd->callback([&o, g, d, dU, alphaK]() {
    ExpectedDim e = expectedDim(*g, *d, *dU);
    Json payload{{"expectedDim", e.dim}, {"chiS2", e.chiS2}, {"chiEnd", e.chiEnd}};
    std::string text = "expected dim = " + std::to_string(e.dim) + " (chi(S^2V*U) = " +
                       std::to_string(e.chiS2) + ", chi(End V) = " + std::to_string(e.chiEnd) +
                       ")\n";
    Json meta = Json::object();
    Json flags = Json::array();
    if (*d < *dU) {
      auto [px, fibre] = hitchinDims(*g, *d, *dU);
      payload["dimPX"] = px;
      payload["dimHitchinFibre"] = fibre;
      text += "dim P_X = " + std::to_string(px) + ", hitchin fibre dim = " +
              std::to_string(fibre) + "\n";
    }
    if (!alphaK->empty()) {
      DimensionReport r = flipDimensions(*g, *d, *dU, parseRational(*alphaK));
      payload["dimSplus"] = r.dimSplus;
      payload["splusFibreDim"] = r.splusFibreDim;
      payload["dimSminus0"] = r.dimSminus0;
      payload["codimSplus"] = r.codimSplus;
      payload["codimSminusLowerBound"] = r.codimSminusLowerBound;
      text += "dim S+ = " + std::to_string(r.dimSplus) + " (fibre P^" +
              std::to_string(r.splusFibreDim) + "), dim S-0 = " + std::to_string(r.dimSminus0);
      if (r.dimSminus1) {
        payload["dimSminus1"] = *r.dimSminus1;
        payload["dimQ"] = *r.dimQ;
        text += ", dim S-1 = " + std::to_string(*r.dimSminus1) + ", dim Q = " +
                std::to_string(*r.dimQ);
      } else {
        payload["dimSminus1"] = "NotApplicable";
        payload["dimQ"] = "NotApplicable";
        flags.push_back("SminusOneNeedsHypothesis");
        text += ", dim S-1 = n/a (needs dU-d > g-1)";
      }
      if (r.sminus1Empty) flags.push_back("SminusEqualsS0AtAlphaMin");
      text += "\n";
    }
    if (*g < 2) flags.push_back("ModelOnly");
    meta["hypothesisFlags"] = flags;
    o.emit(payload, text, meta);
  });
}

void addConnectedness(CLI::App& app, Output& o) {
  auto* cmd = app.add_subcommand("connectedness", "Connected-component verdict engine");
  auto g = std::make_shared<int>(2);
  auto d = std::make_shared<long long>(0);
  auto dU = std::make_shared<long long>(0);
  auto alpha = std::make_shared<std::string>();
  cmd->add_option("--g", *g)->required();
  cmd->add_option("--d", *d)->required();
  cmd->add_option("--dU", *dU)->required();
  cmd->add_option("--alpha", *alpha)->required();
  cmd->callback([&o, g, d, dU, alpha]() {
    ConnectednessVerdict v = connectedness(*g, *d, *dU, parseRational(*alpha));
    const char* kind = nullptr;
    switch (v.kind) {
      case ConnectednessVerdict::Kind::Empty: kind = "Empty"; break;
      case ConnectednessVerdict::Kind::ConnectedExtremal: kind = "ConnectedExtremal"; break;
      case ConnectednessVerdict::Kind::ConnectedByCodimension: kind = "ConnectedByCodimension"; break;
      case ConnectednessVerdict::Kind::SpecialDEqualsDU: kind = "SpecialDEqualsDU"; break;
      case ConnectednessVerdict::Kind::HypothesisFails: kind = "HypothesisFails"; break;
    }
    Json payload{{"verdict", kind}};
    if (v.kind == ConnectednessVerdict::Kind::Empty)
      payload["reason"] = regionTagName(v.emptyReason);
    if (v.componentCount) payload["componentCount"] = *v.componentCount;
    if (!v.note.empty()) payload["note"] = v.note;
    std::string text = std::string(kind);
    if (v.componentCount) text += " (components: " + std::to_string(*v.componentCount) + ")";
    text += "\n";
    o.emit(payload, text, Json{{"modelOnly", v.modelOnly}});
  });
}

void addRank1(CLI::App& app, Output& o) {
  auto* cmd = app.add_subcommand("rank1", "Rank-1 quadratic-pair moduli verdict");
  auto g = std::make_shared<int>(2);
  auto dU = std::make_shared<long long>(0);
  auto dPrime = std::make_shared<long long>(0);
  auto alpha = std::make_shared<std::string>();
  cmd->add_option("--g", *g)->required();
  cmd->add_option("--dU", *dU)->required();
  cmd->add_option("--dprime", *dPrime, "degree of the rank-1 bundle")->required();
  cmd->add_option("--alpha", *alpha)->required();
  cmd->callback([&o, g, dU, dPrime, alpha]() {
    CurveModel curve(*g);
    PicClass U = picZero(*g);
    U.degree = *dU;
    Rank1Verdict v = rank1Verdict(*dPrime, parseRational(*alpha), U, curve);
    Json payload;
    std::string text;
    switch (v.kind) {
      case Rank1Verdict::Kind::Empty: {
        const char* why = v.reason == Rank1Verdict::EmptyReason::AlphaExceedsDegree
                              ? "AlphaExceedsDegree"
                              : "NoNonzeroSection";
        payload = Json{{"verdict", "Empty"}, {"reason", why}};
        text = std::string("Empty(") + why + ")\n";
        break;
      }
      case Rank1Verdict::Kind::SquareRootSet:
        payload = Json{{"verdict", "SquareRootSet"}, {"count", v.count}};
        text = "SquareRootSet(count " + std::to_string(v.count) + ")\n";
        break;
      case Rank1Verdict::Kind::Cover:
        payload = Json{{"verdict", "Cover"}, {"dimension", v.dimension}};
        text = "Cover(dim " + std::to_string(v.dimension) + ")\n";
        break;
    }
    o.emit(payload, text, Json{{"modelOnly", v.modelOnly}});
  });
}

Json verdictMeta(const StabilityVerdict& v) {
  return Json{{"exactness", v.exactness == Exactness::Exact ? "Exact" : "CandidateRelative"}};
}

std::string verdictText(const StabilityVerdict& v) {
  std::string text = verdictStatusName(v.status);
  std::string types;
  if (v.typeA) types += "A";
  if (v.typeB) types += "B";
  if (v.typeC) types += "C";
  if (!types.empty()) text += " {" + types + "}";
  if (v.status == VerdictStatus::StrictlySemistable)
    text += v.polystable ? " polystable" : " not polystable";
  if (v.witness)
    text += " witness " + v.witness->candidate.describe() + " class " +
            conditionClassName(v.witness->cls) + " deg " + std::to_string(v.witness->degree);
  return text + "\n";
}

void addStability(CLI::App& app, Output& o) {
  auto* cmd = app.add_subcommand("stability", "Stability verdicts for pair files");
  auto* check = cmd->add_subcommand("check", "alpha-(semi/poly)stability of a pair");
  auto file = std::make_shared<std::string>();
  auto alpha = std::make_shared<std::string>();
  auto candFile = std::make_shared<std::string>();
  check->add_option("file", *file, "pair JSON file")->required();
  check->add_option("--alpha", *alpha)->required();
  check->add_option("--candidates", *candFile, "extra subbundle candidates JSON");
  check->callback([&o, file, alpha, candFile]() {
    Json j = loadJsonFile(*file);
    Rational a = parseRational(*alpha);
    StabilityVerdict v;
    if (j.value("kind", "decomposable") == "extension") {
      ExtensionVerdict ev = extensionPairVerdict(extensionPairFromJson(j), a);
      v = ev.verdict;
      Json payload = toJson(v);
      payload["splusFibreDim"] = ev.splusFibreDim;
      payload["ext1Dim"] = ev.ext1Dim;
      o.emit(payload, verdictText(v), verdictMeta(v));
      return;
    }
    DecomposablePair p = pairFromJson(j);
    std::vector<SubbundleCandidate> extra;
    if (!candFile->empty()) extra = candidatesFromJson(loadJsonFile(*candFile));
    v = alphaVerdict(p, a, extra);
    o.emit(toJson(v), verdictText(v), verdictMeta(v));
  });
  cmd->require_subcommand(1);
}

void addWallSide(CLI::App& app, Output& o) {
  auto* cmd = app.add_subcommand("wall-side", "Flip-locus side classification at a wall");
  auto file = std::make_shared<std::string>();
  auto alphaK = std::make_shared<std::string>();
  cmd->add_option("file", *file)->required();
  cmd->add_option("--alpha-k", *alphaK)->required();
  cmd->callback([&o, file, alphaK]() {
    Json j = loadJsonFile(*file);
    Rational ak = parseRational(*alphaK);
    WallSide ws = j.value("kind", "decomposable") == "extension"
                      ? wallSide(extensionPairFromJson(j), ak)
                      : wallSide(pairFromJson(j), ak);
    std::string name;
    switch (ws.kind) {
      case WallSide::Kind::SPlus: name = "SPlus"; break;
      case WallSide::Kind::SMinus:
        name = ws.sub == WallSide::Sub::S0 ? "SMinus(S0)" : "SMinus(S1)";
        break;
      case WallSide::Kind::NotInFlip: name = "NotInFlip"; break;
      case WallSide::Kind::NotSemistableAtWall: name = "NotSemistableAtWall"; break;
      case WallSide::Kind::MaxWall: name = "MaxWall"; break;
    }
    o.emit(Json{{"side", name}}, name + "\n");
  });
}

void addDestabAudit(CLI::App& app, Output& o) {
  auto* cmd = app.add_subcommand("destab-audit", "Destabilizer uniqueness audit");
  auto file = std::make_shared<std::string>();
  auto alpha = std::make_shared<std::string>();
  cmd->add_option("file", *file)->required();
  cmd->add_option("--alpha", *alpha)->required();
  cmd->callback([&o, file, alpha]() {
    DecomposablePair p = pairFromJson(loadJsonFile(*file));
    auto violations = destabAudit(p, parseRational(*alpha));
    Json arr = Json::array();
    std::string text;
    for (const auto& v : violations) {
      arr.push_back(v.description);
      text += "violation: " + v.description + "\n";
    }
    if (violations.empty()) text = "no violations\n";
    o.emit(Json{{"violations", arr}}, text);
  });
}

std::vector<Scalar> parseCoeffList(const std::string& csv) {
  std::vector<Scalar> out;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) out.push_back(Scalar(parseRational(token)));
  if (out.empty()) throw CLI::ValidationError("empty coefficient list");
  return out;
}

std::string jetToText(const Jet& j) {
  std::string s;
  for (size_t i = 0; i < j.coeffs.size(); ++i) {
    if (i) s += ",";
    s += j.coeffs[i].str();
  }
  return s;
}

Json jetToJson(const Jet& j) {
  Json arr = Json::array();
  for (const auto& c : j.coeffs) arr.push_back(toJson(c));
  return arr;
}

JetOnDivisor jetBundleFromJson(const Json& j, const char* key) {
  Divisor D = divisorFromJson(j.at("D"));
  std::map<PointId, std::vector<Scalar>> series;
  for (auto it = j.at(key).begin(); it != j.at(key).end(); ++it) {
    std::vector<Scalar> coeffs;
    for (const auto& c : it.value()) coeffs.push_back(scalarFromJson(c));
    series[it.key()] = std::move(coeffs);
  }
  return restrict(series, D);
}

void addJets(CLI::App& app, Output& o) {
  auto* cmd = app.add_subcommand("jets", "Truncated power-series operations");

  auto* sqrtCmd = cmd->add_subcommand("sqrt", "square roots of a jet");
  auto coeffs = std::make_shared<std::string>();
  auto len = std::make_shared<long long>(0);
  sqrtCmd->add_option("--coeffs", *coeffs, "comma-separated rationals")->required();
  sqrtCmd->add_option("--len", *len, "truncation length (default: #coeffs)");
  sqrtCmd->callback([&o, coeffs, len]() {
    std::vector<Scalar> c = parseCoeffList(*coeffs);
    size_t n = *len > 0 ? static_cast<size_t>(*len) : c.size();
    c.resize(n);
    Jet jet(c);
    JetSqrtResult res = jetSqrt(jet);
    Json roots = Json::array();
    std::string text;
    for (const auto& r : res.roots) {
      roots.push_back(jetToJson(r));
      bool ok = jetMul(r, r) == jet;
      text += jetToText(r) + (ok ? "  (verified)" : "  (NOT VERIFIED)") + "\n";
    }
    if (res.roots.empty())
      text = res.fieldExtensionNeeded
                 ? "no roots in Q(i); a field extension would be required\n"
                 : "no roots\n";
    o.emit(Json{{"roots", roots}, {"fieldExtensionNeeded", res.fieldExtensionNeeded}}, text);
  });

  auto* restrictCmd = cmd->add_subcommand("restrict", "truncate expansions along a divisor");
  auto rFile = std::make_shared<std::string>();
  restrictCmd->add_option("file", *rFile, "JSON {D, jets}")->required();
  restrictCmd->callback([&o, rFile]() {
    JetOnDivisor jd = jetBundleFromJson(loadJsonFile(*rFile), "jets");
    Json per = Json::object();
    std::string text;
    for (const auto& [p, jet] : jd.perPoint) {
      per[p] = jetToJson(jet);
      text += p + ": " + jetToText(jet) + "\n";
    }
    o.emit(Json{{"perPoint", per}}, text);
  });

  auto* solveCmd = cmd->add_subcommand("solve", "solve q^2 + eta|_D = 0");
  auto sFile = std::make_shared<std::string>();
  solveCmd->add_option("file", *sFile, "JSON {D, eta}")->required();
  solveCmd->callback([&o, sFile]() {
    JetOnDivisor eta = jetBundleFromJson(loadJsonFile(*sFile), "eta");
    SolveQResult res = solveQ(eta);
    Json sols = Json::array();
    for (const auto& sol : res.solutions) {
      Json per = Json::object();
      for (const auto& [p, jet] : sol.perPoint) per[p] = jetToJson(jet);
      sols.push_back(per);
    }
    std::string text = std::to_string(res.solutions.size()) + " solution(s)\n";
    o.emit(Json{{"solutions", sols}, {"count", res.solutions.size()},
                {"fieldExtensionNeeded", res.fieldExtensionNeeded}},
           text);
  });

  auto* detCmd = cmd->add_subcommand("det-check", "verify r(D)(det gamma) = -theta^2");
  auto dFile = std::make_shared<std::string>();
  detCmd->add_option("file", *dFile, "JSON {D, g11, g12, g22}")->required();
  detCmd->callback([&o, dFile]() {
    Json j = loadJsonFile(*dFile);
    LocalizedPair lp;
    lp.D = divisorFromJson(j.at("D"));
    auto read = [&](const char* key, std::map<PointId, std::vector<Scalar>>& dst) {
      for (auto it = j.at(key).begin(); it != j.at(key).end(); ++it) {
        std::vector<Scalar> coeffs;
        for (const auto& c : it.value()) coeffs.push_back(scalarFromJson(c));
        dst[it.key()] = std::move(coeffs);
      }
    };
    read("g11", lp.g11);
    read("g12", lp.g12);
    read("g22", lp.g22);
    bool ok = detIdentityCheck(lp);
    o.emit(Json{{"identityHolds", ok}}, ok ? "identity holds\n" : "identity FAILS\n");
  });
  cmd->require_subcommand(1);
}

void addSpectral(CLI::App& app, Output& o) {
  auto* cmd = app.add_subcommand("spectral", "Spectral-curve classification");
  auto* classify = cmd->add_subcommand("classify", "smooth / irreducible / reducible");
  auto dFile = std::make_shared<std::string>();
  auto xiStr = std::make_shared<std::string>();
  classify->add_option("--D", *dFile, "JSON file {curve, D}")->required();
  classify->add_option("--xi", *xiStr, "inline JSON PicClass")->required();
  classify->callback([&o, dFile, xiStr]() {
    Json j = loadJsonFile(*dFile);
    CurveModel curve = curveFromJson(j.at("curve"));
    SpectralData sd;
    sd.D = divisorFromJson(j.at("D"));
    sd.xi = picClassFromJson(Json::parse(*xiStr));
    SpectralClass c = spectralClassify(sd, curve);
    o.emit(Json{{"class", spectralClassName(c)}}, std::string(spectralClassName(c)) + "\n");
  });
  cmd->require_subcommand(1);
}

void addPx(CLI::App& app, Output& o) {
  auto* cmd = app.add_subcommand("px", "The 2^{2g}-cover of the symmetric product");
  auto* check = cmd->add_subcommand("check", "is (D, L) in P_X?");
  auto dFile = std::make_shared<std::string>();
  auto lStr = std::make_shared<std::string>();
  check->add_option("--D", *dFile, "JSON file {curve, D}")->required();
  check->add_option("--L", *lStr, "inline JSON PicClass")->required();
  check->callback([&o, dFile, lStr]() {
    Json j = loadJsonFile(*dFile);
    CurveModel curve = curveFromJson(j.at("curve"));
    bool member = pxMember(divisorFromJson(j.at("D")), picClassFromJson(Json::parse(*lStr)), curve);
    o.emit(Json{{"member", member}}, member ? "member\n" : "not a member\n");
  });
  auto* fibre = cmd->add_subcommand("fibre", "square roots of O(D)");
  auto fFile = std::make_shared<std::string>();
  fibre->add_option("--D", *fFile, "JSON file {curve, D}")->required();
  fibre->callback([&o, fFile]() {
    Json j = loadJsonFile(*fFile);
    CurveModel curve = curveFromJson(j.at("curve"));
    auto roots = pxFibre(divisorFromJson(j.at("D")), curve);
    Json arr = Json::array();
    for (const auto& r : roots) arr.push_back(toJson(r));
    o.emit(Json{{"fibre", arr}, {"count", roots.size()}},
           std::to_string(roots.size()) + " classes\n",
           Json{{"ajConvention", "unnormalized artifact coordinates"}});
  });
  cmd->require_subcommand(1);
}

void addHitchin(CLI::App& app, Output& o) {
  auto* cmd = app.add_subcommand("hitchin", "Hitchin invariant of a pair file");
  auto file = std::make_shared<std::string>();
  cmd->add_option("file", *file)->required();
  cmd->callback([&o, file]() {
    DecomposablePair p = pairFromJson(loadJsonFile(*file));
    HitchinInvariant h = hitchinInvariant(p);
    Json payload{{"xi", toJson(h.xi)}, {"detClass", toJson(h.detClass)}};
    std::string text = "xi degree " + std::to_string(h.xi.degree);
    if (h.detDivisor) {
      payload["detDivisor"] = toJson(*h.detDivisor);
      text += ", det divisor degree " + std::to_string(h.detDivisor->degree());
    } else {
      payload["detDivisor"] = "ClassOnly";
      text += ", det divisor: class-only (degree " + std::to_string(h.detClass.degree) + ")";
    }
    if (!h.refinedMultiplicities.empty()) {
      Json ref = Json::object();
      for (const auto& [pt, m] : h.refinedMultiplicities) ref[pt] = m;
      payload["refinedMultiplicities"] = ref;
    }
    o.emit(payload, text + "\n", Json{{"ajConvention", "unnormalized artifact coordinates"}});
  });
}

void addHiggs(CLI::App& app, Output& o) {
  auto* cmd = app.add_subcommand("higgs", "ESp/PSp invariant arithmetic");
  auto* inv = cmd->add_subcommand("invariants", "(a, b) and related data");
  auto d1 = std::make_shared<long long>(0);
  auto d2 = std::make_shared<long long>(0);
  auto n = std::make_shared<int>(2);
  inv->add_option("--d1", *d1)->required();
  inv->add_option("--d2", *d2)->required();
  inv->add_option("--n", *n);
  inv->callback([&o, d1, d2, n]() {
    ProjectedInvariants p = projectInvariants(*d1, *d2, *n);
    auto [dd1, dd2] = dualize(*d1, *d2, *n);
    Normalized norm = normalize(*d1, *d2, *n);
    Pi1Tables pi = pi1Tables(*n);
    Json payload{{"a", p.a},
                 {"b", p.b},
                 {"dual", Json::array({dd1, dd2})},
                 {"normalized", Json::array({norm.d1, norm.d2})},
                 {"twist", norm.twist},
                 {"liftsToSp", liftToSp(*d2)},
                 {"pi1EU", pi.euDescription},
                 {"pi1Quotient", pi.quotientDescription}};
    std::string text = "(a, b) = (" + std::to_string(p.a) + ", " + std::to_string(p.b) +
                       "), dual (d1, d2) = (" + std::to_string(dd1) + ", " + std::to_string(dd2) +
                       "), normalized (" + std::to_string(norm.d1) + ", " +
                       std::to_string(norm.d2) + "), lifts to Sp: " +
                       (liftToSp(*d2) ? "yes" : "no") + "\n";
    o.emit(payload, text);
  });
  auto* mw = cmd->add_subcommand("milnor-wood", "Milnor-Wood bound check");
  auto g = std::make_shared<int>(2);
  auto md1 = std::make_shared<long long>(0);
  auto md2 = std::make_shared<long long>(0);
  auto mn = std::make_shared<int>(2);
  mw->add_option("--g", *g)->required();
  mw->add_option("--d1", *md1)->required();
  mw->add_option("--d2", *md2)->required();
  mw->add_option("--n", *mn);
  mw->callback([&o, g, md1, md2, mn]() {
    MilnorWood m = milnorWood(*md1, *md2, *mn, *g);
    Json payload{{"valid", m.toledoFormHolds},
                 {"a", m.a},
                 {"bound", m.bound},
                 {"degreeFormHolds", m.degreeFormHolds},
                 {"toledoFormHolds", m.toledoFormHolds},
                 {"formsAgree", m.formsAgree}};
    std::string text = std::string(m.toledoFormHolds ? "valid" : "violated") + ": |a| = |" +
                       std::to_string(m.a) + "| vs bound " + std::to_string(m.bound) + "\n";
    o.emit(payload, text);
  });
  auto* lift = cmd->add_subcommand("lift", "lifting criterion to Sp(2n,R)");
  auto ld2 = std::make_shared<long long>(0);
  lift->add_option("--d2", *ld2)->required();
  lift->callback([&o, ld2]() {
    bool lifts = liftToSp(*ld2);
    o.emit(Json{{"lifts", lifts}}, lifts ? "lifts\n" : "does not lift\n");
  });
  cmd->require_subcommand(1);
}

void addSo23(CLI::App& app, Output& o) {
  auto* cmd = app.add_subcommand("so23", "SO_0(2,3) invariants and components");
  auto* tr = cmd->add_subcommand("translate", "(a,b) <-> (a,w)");
  auto a = std::make_shared<long long>(0);
  auto b = std::make_shared<long long>(-1);
  auto w = std::make_shared<long long>(-1);
  tr->add_option("--a", *a)->required();
  auto* bOpt = tr->add_option("--b", *b, "second PSp invariant");
  auto* wOpt = tr->add_option("--w", *w, "second Stiefel-Whitney class");
  bOpt->excludes(wOpt);
  tr->callback([&o, a, b, w]() {
    if (*b < 0 && *w < 0)
      throw CLI::ValidationError("provide exactly one of --b or --w");
    Json payload;
    std::string text;
    if (*b >= 0) {
      int ww = so23WFromB(*a, static_cast<int>(*b % 2));
      payload = Json{{"a", *a}, {"w", ww}};
      text = "(a, w) = (" + std::to_string(*a) + ", " + std::to_string(ww) + ")\n";
    } else {
      int bb = so23BFromW(*a, static_cast<int>(*w % 2));
      payload = Json{{"a", *a}, {"b", bb}};
      text = "(a, b) = (" + std::to_string(*a) + ", " + std::to_string(bb) + ")\n";
    }
    o.emit(payload, text,
           Json{{"toledoConvention", "a = deg(F) = d1 - d2 for the rank-3 bundle data"}});
  });
  auto* comp = cmd->add_subcommand("components", "component table of the character variety");
  auto g = std::make_shared<int>(2);
  comp->add_option("--g", *g)->required();
  comp->callback([&o, g]() {
    ComponentTable t = componentTable(*g);
    Json rows = Json::array();
    std::string text = "  a  w  verdict\n";
    for (const auto& row : t.rows) {
      const char* kind = row.verdict.kind == ComponentVerdict::Kind::Connected
                             ? "Connected"
                             : row.verdict.kind == ComponentVerdict::Kind::Empty
                                   ? "Empty"
                                   : "OutOfScope";
      Json r{{"a", row.a}, {"w", row.w}, {"verdict", kind}};
      if (row.verdict.kind == ComponentVerdict::Kind::Connected) r["count"] = row.verdict.count;
      rows.push_back(r);
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%3lld  %d  %s\n", row.a, row.w, kind);
      text += buf;
    }
    text += "in-range connected classes: " + std::to_string(t.inRangeConnected) + "\n";
    o.emit(Json{{"rows", rows}, {"inRangeConnected", t.inRangeConnected}}, text);
  });
  cmd->require_subcommand(1);
}

void addEsp(CLI::App& app, Output& o) {
  auto* cmd = app.add_subcommand("esp", "ESp(4,R)-Higgs bundle semistability");
  auto* check = cmd->add_subcommand("check", "semistability at parameter 0");
  auto file = std::make_shared<std::string>();
  auto genus = std::make_shared<int>(0);
  check->add_option("file", *file, "quadruple JSON file")->required();
  auto* gOpt = check->add_option("--g", *genus, "expected genus of the curve in the file");
  check->callback([&o, file, genus, gOpt]() {
    EspQuadruple q = espFromJson(loadJsonFile(*file));
    if (gOpt->count() > 0 && q.curve.genus != *genus)
      throw Error(ErrorCode::InvalidModel,
                  "file curve has genus " + std::to_string(q.curve.genus) +
                      ", expected " + std::to_string(*genus));
    EspVerdict v = espSemistable(q);
    Json payload = toJson(v.verdict);
    payload["viaQuadraticPairs"] = v.viaQuadraticPairs;
    payload["filtrationSemistable"] = v.filtrationSemistable;
    o.emit(payload, verdictText(v.verdict), verdictMeta(v.verdict));
  });
  cmd->require_subcommand(1);
}

void addSelfTest(CLI::App& app, Output& o) {
  auto* cmd = app.add_subcommand("selftest", "Run the cross-module invariant suite");
  auto seed = std::make_shared<uint64_t>(0);
  auto quick = std::make_shared<bool>(false);
  auto* seedOpt = cmd->add_option("--seed", *seed, "RNG seed (default QUADPAIR_SEED or 1)");
  cmd->add_flag("--quick", *quick, "reduced iteration counts");
  cmd->callback([&o, seed, quick, seedOpt]() {
    uint64_t s = 1;
    if (const char* env = std::getenv("QUADPAIR_SEED")) s = std::strtoull(env, nullptr, 10);
    if (seedOpt->count() > 0) s = *seed;
    SelfTestReport report = runSelfTest(s, *quick);
    Json suites = Json::array();
    std::string text;
    for (const auto& suite : report.suites) {
      Json js{{"name", suite.name}, {"checks", suite.checks}, {"failures", suite.failures}};
      if (!suite.messages.empty()) js["messages"] = suite.messages;
      suites.push_back(js);
      text += suite.name + ": " + std::to_string(suite.checks) + " checks, " +
              (suite.failures == 0 ? "all ok" : std::to_string(suite.failures) + " FAILED") +
              "\n";
      for (const auto& m : suite.messages) text += "  " + m + "\n";
    }
    text += "total: " + std::to_string(report.totalChecks()) + " checks, " +
            std::to_string(report.totalFailures()) + " failures (seed " + std::to_string(s) +
            ")\n";
    o.emit(Json{{"suites", suites},
                {"totalChecks", report.totalChecks()},
                {"totalFailures", report.totalFailures()},
                {"seed", s}},
           text);
    if (!report.allPassed()) throw Error(ErrorCode::InvalidModel, "selftest failures");
  });
}

}  // namespace

int runCli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"quadpair: exact stability, wall-crossing and invariant calculator "
               "for rank-2 quadratic pairs"};
  app.require_subcommand(1);
  Output o{out, false};
  app.add_flag("--json", o.json, "machine-readable output");

  addChambers(app, o);
  addRegionDiagram(app, o);
  addDims(app, o);
  addConnectedness(app, o);
  addRank1(app, o);
  addStability(app, o);
  addWallSide(app, o);
  addDestabAudit(app, o);
  addJets(app, o);
  addSpectral(app, o);
  addPx(app, o);
  addHitchin(app, o);
  addHiggs(app, o);
  addSo23(app, o);
  addEsp(app, o);
  addSelfTest(app, o);

  // --json may trail the subcommand, per the documented grammar.
  std::function<void(CLI::App*)> enableFallthrough = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands({})) {
      sub->fallthrough(true);
      enableFallthrough(sub);
    }
  };
  enableFallthrough(&app);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help and friends
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    if (o.json) {
      Json result{{"status", "error"},
                  {"error", errorCodeName(e.code())},
                  {"message", e.what()}};
      out << result.dump() << "\n";
    }
    err << "error [" << errorCodeName(e.code()) << "]: " << e.what() << "\n";
    return e.code() == ErrorCode::UsageError ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace quadpair
