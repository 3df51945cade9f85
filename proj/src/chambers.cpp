#include "quadpair/chambers.hpp"

#include <algorithm>
#include <sstream>

namespace quadpair {

const char* regionTagName(RegionTag t) {
  switch (t) {
    case RegionTag::EmptyDegreeTooBig: return "EmptyDegreeTooBig";
    case RegionTag::EmptyAlphaTooBig: return "EmptyAlphaTooBig";
    case RegionTag::SpecialDEqualsDU: return "SpecialDEqualsDU";
    case RegionTag::StableZone: return "StableZone";
    case RegionTag::WallZone: return "WallZone";
  }
  return "Unknown";
}

static long long floorDiv2(long long v) { return Rational(v, 2).floor(); }

std::vector<Rational> criticalValues(long long d, long long dU) {
  if (d >= dU)
    throw Error(ErrorCode::CriticalsUndefined,
                d == dU ? "d = dU is the special orthogonal-bundle region"
                        : "no critical values for d > dU");
  std::vector<Rational> out;
  long long kLo = d - floorDiv2(d) - floorDiv2(dU);
  for (long long k = kLo; k <= 0; ++k) out.push_back(Rational(floorDiv2(d) + k));
  Rational half(d, 2);
  if (out.empty() || out.back() != half) out.push_back(half);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<Rational, Rational> alphaBounds(long long d, long long dU) {
  return {Rational(d - floorDiv2(dU)), Rational(d, 2)};
}

ChamberDecomposition chamberDecomposition(long long d, long long dU) {
  ChamberDecomposition cd;
  cd.criticals = criticalValues(d, dU);
  auto [lo, hi] = alphaBounds(d, dU);
  cd.alphaMin = lo;
  cd.alphaMax = hi;
  cd.chambers.push_back({std::nullopt, cd.criticals.front()});
  for (size_t i = 0; i + 1 < cd.criticals.size(); ++i)
    cd.chambers.push_back({cd.criticals[i], cd.criticals[i + 1]});
  cd.modelOnly = dU <= 0;
  return cd;
}

ChamberLocation chamberIndex(const Rational& alpha, const ParamSpec& spec) {
  if (spec.d >= spec.dU)
    throw Error(ErrorCode::CriticalsUndefined, "chambers defined only for d < dU");
  Rational half(spec.d, 2);
  if (alpha > half) return {ChamberLocation::Kind::EmptyAlphaTooBig, 0};
  if (alpha == half) return {ChamberLocation::Kind::CriticalMax, 0};
  auto criticals = criticalValues(spec.d, spec.dU);
  long long below = 0;
  for (const auto& c : criticals) {
    if (alpha == c) {
      // alpha_k = [d/2] + k per the wall indexing.
      return {ChamberLocation::Kind::Critical, alpha.floor() - floorDiv2(spec.d)};
    }
    if (c < alpha) ++below;
  }
  return {ChamberLocation::Kind::Chamber, below};
}

RegionTag region(const Rational& alpha, long long d, long long dU) {
  if (d > dU) return RegionTag::EmptyDegreeTooBig;
  if (d == dU) return RegionTag::SpecialDEqualsDU;
  if (alpha > Rational(d, 2)) return RegionTag::EmptyAlphaTooBig;
  if (alpha < Rational(2 * d - dU, 2)) return RegionTag::StableZone;
  return RegionTag::WallZone;
}

GenericRank genericRank(const Rational& alpha, long long d, long long dU) {
  return alpha < Rational(2 * d - dU, 2) ? GenericRank::Two : GenericRank::PossiblyOne;
}

namespace {

char cellChar(long long d, const Rational& alpha, long long dU) {
  if (d > dU) return '#';
  if (d == dU) return '=';
  if (alpha == Rational(d, 2)) return 'M';
  if (alpha == Rational(d - floorDiv2(dU))) return 'm';
  switch (region(alpha, d, dU)) {
    case RegionTag::EmptyAlphaTooBig: return '!';
    case RegionTag::StableZone: return '.';
    default: return '*';
  }
}

std::vector<Rational> alphaGrid(const DiagramWindow& w) {
  std::vector<Rational> grid;
  Rational step(1, 2);
  // Snap the start down to a half-integer so criticals land on grid cells.
  Rational a = Rational(w.alphaLo.num() * 2 / w.alphaLo.den(), 2);
  if (a > w.alphaLo) a -= step;
  for (; a <= w.alphaHi; a += step) {
    if (a >= w.alphaLo) grid.push_back(a);
  }
  return grid;
}

}  // namespace

std::string regionDiagramAscii(const DiagramWindow& w) {
  if (w.dLo > w.dHi || w.alphaLo > w.alphaHi)
    throw Error(ErrorCode::EmptyWindow, "diagram window is empty");
  auto grid = alphaGrid(w);
  if (grid.empty()) throw Error(ErrorCode::EmptyWindow, "diagram window contains no grid cells");
  std::ostringstream os;
  os << "region-diagram dU=" << w.dU << " d=" << w.dLo << ".." << w.dHi << " alpha="
     << w.alphaLo.str() << ".." << w.alphaHi.str() << " step=1/2\n";
  os << "legend: #:empty(d>dU) =:special(d=dU) !:empty(alpha>d/2) .:stable-zone *:wall-zone"
        " M:alpha=d/2 m:alpha=d-[dU/2]\n";
  for (long long d = w.dHi; d >= w.dLo; --d) {
    os << "d=";
    std::string ds = std::to_string(d);
    for (size_t i = ds.size(); i < 3; ++i) os << ' ';
    os << ds << " |";
    for (const auto& a : grid) os << cellChar(d, a, w.dU);
    os << "|\n";
  }
  os << "alpha: " << grid.front().str() << " .. " << grid.back().str() << " (" << grid.size()
     << " cells)\n";
  return os.str();
}

std::string regionDiagramSvg(const DiagramWindow& w) {
  if (w.dLo > w.dHi || w.alphaLo > w.alphaHi)
    throw Error(ErrorCode::EmptyWindow, "diagram window is empty");
  auto grid = alphaGrid(w);
  if (grid.empty()) throw Error(ErrorCode::EmptyWindow, "diagram window contains no grid cells");
  const int cell = 20;
  long long rows = w.dHi - w.dLo + 1;
  long long width = static_cast<long long>(grid.size()) * cell;
  long long height = rows * cell;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\">\n";
  for (long long r = 0; r < rows; ++r) {
    long long d = w.dHi - r;
    for (size_t cidx = 0; cidx < grid.size(); ++cidx) {
      const char* fill = "white";
      switch (cellChar(d, grid[cidx], w.dU)) {
        case '#': fill = "#444444"; break;
        case '=': fill = "#bb66bb"; break;
        case '!': fill = "#dddddd"; break;
        case '.': fill = "#88cc88"; break;
        case '*': fill = "#cccc66"; break;
        case 'M': fill = "#cc4444"; break;
        case 'm': fill = "#4444cc"; break;
      }
      os << "<rect x=\"" << cidx * cell << "\" y=\"" << r * cell << "\" width=\"" << cell
         << "\" height=\"" << cell << "\" fill=\"" << fill << "\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace quadpair
