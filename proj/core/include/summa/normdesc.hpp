#pragma once

#include "summa/rational.hpp"
#include "summa/rootsum.hpp"
#include "summa/scalar.hpp"

#include <span>
#include <string>
#include <vector>

namespace summa {

// norm(v) as value^(1/power) with an exact rational value when the norm
// admits one (l1, linf: power 1; l2 and complex modulus: power 2).
struct NormEval {
  std::optional<Rational> pow_val;
  int power = 1;
  double approx = 0.0;

  bool exact() const { return pow_val.has_value(); }
  RootSum as_rootsum() const;
};

// -1 / 0 / +1, exact whenever both sides are; falls back to double order.
int norm_cmp(const NormEval& a, const NormEval& b);

class NormDescriptor {
 public:
  enum class Kind { Lp, WeightedLp, CustomTable };

  static NormDescriptor lp(Exponent p);
  static NormDescriptor l1() { return lp(Exponent(1)); }
  static NormDescriptor l2() { return lp(Exponent(2)); }
  static NormDescriptor linf() { return lp(Exponent::infinity()); }
  static NormDescriptor weighted_lp(Exponent p, std::vector<Rational> w);

  // Gauge sampled at uniform angles over [0, pi), dimension 2 only.
  // Positivity and homogeneity hold by construction; the triangle
  // inequality is checked on random triples and failures reject the table.
  static NormDescriptor custom_table(std::vector<double> scales,
                                     std::uint64_t validation_seed = 7,
                                     int trials = 2000);

  Kind kind() const { return kind_; }
  const Exponent& p() const { return p_; }
  const std::vector<Rational>& weights() const { return weights_; }

  NormEval eval(std::span<const Rational> v) const;
  double eval_dbl(std::span<const double> v) const;

  std::string str() const;

 private:
  NormDescriptor() : p_(Exponent(1)) {}
  Kind kind_ = Kind::Lp;
  Exponent p_;
  std::vector<Rational> weights_;
  std::vector<double> table_;
};

// A point value carried by measures, families, and adapted sequences:
// real, complex, or a rational vector measured by an attached descriptor.
enum class ValueKind { Real, Complex, Vector };

struct Value {
  ValueKind kind = ValueKind::Real;
  Rational re, im;
  std::vector<Rational> vec;

  static Value real(Rational r);
  static Value complex(Rational r, Rational i);
  static Value vector(std::vector<Rational> v);
  static Value zero_like(const Value& v);

  int dim() const { return kind == ValueKind::Vector ? static_cast<int>(vec.size()) : 1; }
  bool is_zero() const;

  Value& operator+=(const Value& o);
  Value& operator-=(const Value& o);
  Value operator-() const;
  friend Value operator+(Value a, const Value& b) { return a += b; }
  friend Value operator-(Value a, const Value& b) { return a -= b; }
  Value scaled(const Rational& c) const;
  friend bool operator==(const Value& a, const Value& b);
};

NormEval value_norm(const Value& v, const NormDescriptor& nd);

}  // namespace summa
