#pragma once

#include <cstdint>

#include "quadpair/higgs.hpp"
#include "quadpair/pairs.hpp"

namespace quadpair {

/// Deterministic 64-bit generator (splitmix64); identical streams on every
/// platform for a given seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}
  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }
  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }
  Rational dyadic(int bits = 4) {  // k / 2^bits in [0, 1)
    return Rational(static_cast<long long>(below(1ULL << bits)), 1LL << bits);
  }
  Rational smallRational() {  // non-zero, numerator in [-6, 6], denominator in [1, 4]
    long long num = range(1, 6) * (below(2) ? 1 : -1);
    return Rational(num, range(1, 4));
  }

 private:
  uint64_t state_;
};

/// Fresh curve with n seeded points carrying dyadic Abel-Jacobi coordinates.
CurveModel randomCurve(Rng& rng, int genus, int nPoints);

/// Effective divisor of the given degree and exact class: random registered
/// points plus one fresh adjustment point that lands the class on target.
Divisor divisorWithClass(Rng& rng, CurveModel& curve, long long degree, const PicClass& target,
                         const std::string& tag);

struct PairShape {
  bool useG11 = true, useG12 = true, useG22 = true;
};

/// Class-consistent decomposable pair with deg V = d, deg U = dU and the
/// requested entry pattern; entries whose target degree is negative are
/// forced to zero.
DecomposablePair randomDecomposablePair(Rng& rng, int genus, long long d, long long dU,
                                        long long degL1, PairShape shape);

/// Random pair with a random degree split and a random non-empty shape.
DecomposablePair randomDecomposablePair(Rng& rng, int genus, long long d, long long dU);

ExtensionPair randomExtensionPair(Rng& rng, int genus, long long d, long long dU,
                                  long long degSub);

/// ESp(4,R) quadruple with beta = 0 and gamma valid for U = L K.
EspQuadruple randomEspQuadruple(Rng& rng, int genus, long long d1, long long d2);

}  // namespace quadpair
