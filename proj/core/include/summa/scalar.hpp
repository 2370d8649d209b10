#pragma once

#include "summa/rational.hpp"

#include <atomic>
#include <optional>
#include <string>

namespace summa {

// Absolute comparison tolerance for float-mode checks.  One knob,
// default 1e-9; read everywhere a "within tau" comparison is specified.
double tolerance();
void set_tolerance(double tau);

// Dual-mode number: exact rational, or binary64.  Arithmetic stays exact
// while both operands are exact and degrades to float otherwise.  Roots
// and fractional powers always produce float mode.
class Scalar {
 public:
  Scalar() : exact_(true), rat_(0), dbl_(0.0) {}
  Scalar(const Rational& r) : exact_(true), rat_(r), dbl_(rat_dbl(r)) {}
  Scalar(long n) : Scalar(Rational(n)) {}
  Scalar(int n) : Scalar(Rational(n)) {}

  static Scalar flt(double v) {
    Scalar s;
    s.exact_ = false;
    s.rat_ = 0;
    s.dbl_ = v;
    return s;
  }

  bool exact() const { return exact_; }
  const Rational& rat() const;  // throws unless exact
  double dbl() const { return dbl_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Exact order when both operands are exact, double order otherwise.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;  // "p/q" in exact mode, 12 significant digits else

 private:
  bool exact_;
  Rational rat_;
  double dbl_;
};

Scalar abs(const Scalar& s);
Scalar pow_int(const Scalar& s, long e);

// a <= b + tau (and friends), for check-style operations.
bool approx_leq(const Scalar& a, const Scalar& b);
bool approx_eq(const Scalar& a, const Scalar& b);
bool approx_eq(double a, double b);

// Complex number with Scalar parts.
struct CScalar {
  Scalar re, im;

  CScalar() = default;
  CScalar(Scalar r) : re(std::move(r)), im(Scalar(0)) {}
  CScalar(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {}

  bool exact() const { return re.exact() && im.exact(); }
  bool is_real() const;

  CScalar conj() const { return {re, -im}; }
  Scalar modulus_sq() const { return re * re + im * im; }
  Scalar modulus() const;  // float mode unless the value is 0 or real-exact

  CScalar operator-() const { return {-re, -im}; }
  friend CScalar operator+(const CScalar& a, const CScalar& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend CScalar operator-(const CScalar& a, const CScalar& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend CScalar operator*(const CScalar& a, const CScalar& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const CScalar& a, const CScalar& b) {
    return a.re == b.re && a.im == b.im;
  }
};

// Exponent in (0, infinity].  Infinity is a distinguished value, never a
// large float.  Exponents built from rationals remember them so that
// even-integer and p = u/v paths can stay exact.
class Exponent {
 public:
  static Exponent infinity() {
    Exponent e;
    e.inf_ = true;
    return e;
  }
  explicit Exponent(double p) : val_(p) {}
  explicit Exponent(const Rational& p) : val_(rat_dbl(p)), exact_(p) {}
  Exponent(int p) : Exponent(Rational(p)) {}

  bool is_inf() const { return inf_; }
  double value() const;  // throws on infinity
  const std::optional<Rational>& exact() const { return exact_; }
  std::optional<long> as_int() const;

  // "inf", integers, "p/q", decimals.
  static std::optional<Exponent> parse(std::string_view s);
  std::string str() const;

 private:
  Exponent() = default;
  bool inf_ = false;
  double val_ = 0.0;
  std::optional<Rational> exact_;
};

}  // namespace summa
