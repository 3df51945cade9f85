#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace quadpair {

struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact rational number over int64 with overflow-checked arithmetic.
/// Always normalized: gcd(num, den) = 1 and den > 0.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool isZero() const { return num_ == 0; }
  bool isInteger() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked(checkedMul(a.num_, b.den_) + checkedMul(b.num_, a.den_)),
                    checked(checkedMul(a.den_, b.den_)));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked(checkedMul(a.num_, b.num_)), checked(checkedMul(a.den_, b.den_)));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw ArithmeticError("rational division by zero");
    return Rational(checked(checkedMul(a.num_, b.den_)), checked(checkedMul(a.den_, b.num_)));
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return checkedMul(a.num_, b.den_) < checkedMul(b.num_, a.den_);
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  /// Largest integer <= value.
  long long floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  /// Representative in [0, 1) of the class mod 1.
  Rational mod1() const { return *this - Rational(floor()); }

  /// Exact square root when the value is a square of a rational.
  std::optional<Rational> sqrtExact() const {
    if (num_ < 0) return std::nullopt;
    long long sn = isqrt(num_), sd = isqrt(den_);
    if (sn < 0 || sd < 0) return std::nullopt;
    return Rational(sn, sd);
  }
  bool isSquare() const { return sqrtExact().has_value(); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  long long num_ = 0;
  long long den_ = 1;

  void normalize() {
    if (den_ == 0) throw ArithmeticError("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static long long checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw ArithmeticError("rational overflow");
    return static_cast<long long>(v);
  }
  static __int128 checkedMul(long long a, long long b) {
    return static_cast<__int128>(a) * static_cast<__int128>(b);
  }
  // Integer sqrt; -1 when not a perfect square.
  static long long isqrt(long long v) {
    if (v < 0) return -1;
    __int128 r = 0, bit = static_cast<__int128>(1) << 32;
    while (bit * bit > v) bit >>= 1;
    for (; bit > 0; bit >>= 1) {
      __int128 t = r + bit;
      if (t * t <= v) r = t;
    }
    return r * r == v ? static_cast<long long>(r) : -1;
  }
};

/// Element of Q(i): re + im*i. Coefficient field for jets that need
/// square roots of negative scalars.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long n) : re_(n) {}
  Scalar(Rational re) : re_(re) {}
  Scalar(Rational re, Rational im) : re_(re), im_(im) {}

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool isZero() const { return re_.isZero() && im_.isZero(); }
  bool isRational() const { return im_.isZero(); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.re_ - b.re_, a.im_ - b.im_);
  }
  Scalar operator-() const { return Scalar(-re_, -im_); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    Rational n = b.re_ * b.re_ + b.im_ * b.im_;
    if (n.isZero()) throw ArithmeticError("scalar division by zero");
    return Scalar((a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n);
  }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Exact square root in Q(i) when one exists; nullopt means the root
  /// lives in a proper field extension.
  std::optional<Scalar> sqrtInField() const {
    if (isZero()) return Scalar();
    if (im_.isZero()) {
      if (auto r = re_.sqrtExact()) return Scalar(*r);
      if (auto r = (-re_).sqrtExact()) return Scalar(Rational(0), *r);
      return std::nullopt;
    }
    // w = x + yi with x^2 = (re + |z|)/2, y = im/(2x); needs |z| and x^2 square.
    auto norm = (re_ * re_ + im_ * im_).sqrtExact();
    if (!norm) return std::nullopt;
    auto x = ((re_ + *norm) / Rational(2)).sqrtExact();
    if (!x || x->isZero()) return std::nullopt;
    return Scalar(*x, im_ / (Rational(2) * *x));
  }

  std::string str() const {
    if (im_.isZero()) return re_.str();
    std::string s = re_.isZero() ? "" : re_.str();
    if (!im_.isZero()) {
      if (!s.empty() && !(im_ < Rational(0))) s += "+";
      s += im_.str() + "i";
    }
    return s;
  }

 private:
  Rational re_, im_;
};

}  // namespace quadpair
