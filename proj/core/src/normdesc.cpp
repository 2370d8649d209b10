#include "summa/normdesc.hpp"

#include "summa/errors.hpp"
#include "summa/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace summa {

RootSum NormEval::as_rootsum() const {
  RootSum s;
  if (!pow_val) throw DomainError("NormEval: no exact representation");
  s.add(1, *pow_val, static_cast<unsigned>(power));
  return s;
}

int norm_cmp(const NormEval& a, const NormEval& b) {
  if (a.exact() && b.exact()) {
    // Compare a^(1/pa) vs b^(1/pb) by raising to lcm(pa, pb).
    int l = std::lcm(a.power, b.power);
    Rational av = rat_pow(*a.pow_val, l / a.power);
    Rational bv = rat_pow(*b.pow_val, l / b.power);
    if (av < bv) return -1;
    if (av > bv) return 1;
    return 0;
  }
  if (a.approx < b.approx) return -1;
  if (a.approx > b.approx) return 1;
  return 0;
}

NormDescriptor NormDescriptor::lp(Exponent p) {
  if (!p.is_inf() && p.value() < 1)
    throw DomainError("NormDescriptor: lp requires p >= 1");
  NormDescriptor nd;
  nd.kind_ = Kind::Lp;
  nd.p_ = p;
  return nd;
}

NormDescriptor NormDescriptor::weighted_lp(Exponent p, std::vector<Rational> w) {
  NormDescriptor nd = lp(p);
  nd.kind_ = Kind::WeightedLp;
  for (const Rational& x : w)
    if (x <= 0) throw DomainError("NormDescriptor: weights must be positive");
  nd.weights_ = std::move(w);
  return nd;
}

NormDescriptor NormDescriptor::custom_table(std::vector<double> scales,
                                            std::uint64_t validation_seed,
                                            int trials) {
  if (scales.size() < 4)
    throw DomainError("NormDescriptor: custom table needs >= 4 samples");
  for (double s : scales)
    if (!(s > 0) || !std::isfinite(s))
      throw DomainError("NormDescriptor: custom table scales must be positive");
  NormDescriptor nd;
  nd.kind_ = Kind::CustomTable;
  nd.p_ = Exponent(2);
  nd.table_ = std::move(scales);

  Rng rng(validation_seed);
  for (int i = 0; i < trials; ++i) {
    double u[2] = {rng.unit() * 2 - 1, rng.unit() * 2 - 1};
    double v[2] = {rng.unit() * 2 - 1, rng.unit() * 2 - 1};
    double s[2] = {u[0] + v[0], u[1] + v[1]};
    double lhs = nd.eval_dbl(std::span<const double>(s, 2));
    double rhs = nd.eval_dbl(std::span<const double>(u, 2)) +
                 nd.eval_dbl(std::span<const double>(v, 2));
    if (lhs > rhs + 1e-9)
      throw DomainError("NormDescriptor: custom table violates the triangle inequality");
  }
  return nd;
}

double NormDescriptor::eval_dbl(std::span<const double> v) const {
  switch (kind_) {
    case Kind::Lp:
    case Kind::WeightedLp: {
      const bool weighted = kind_ == Kind::WeightedLp;
      if (weighted && weights_.size() != v.size())
        throw DomainError("NormDescriptor: weight/vector dimension mismatch");
      if (p_.is_inf()) {
        double m = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
          double t = std::fabs(v[i]) * (weighted ? rat_dbl(weights_[i]) : 1.0);
          m = std::max(m, t);
        }
        return m;
      }
      double p = p_.value(), acc = 0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        double t = std::fabs(v[i]) * (weighted ? rat_dbl(weights_[i]) : 1.0);
        acc += std::pow(t, p);
      }
      return std::pow(acc, 1.0 / p);
    }
    case Kind::CustomTable: {
      if (v.size() != 2)
        throw DomainError("NormDescriptor: custom table norms are 2-dimensional");
      double r = std::hypot(v[0], v[1]);
      if (r == 0) return 0;
      double theta = std::atan2(v[1], v[0]);
      const double pi = std::numbers::pi;
      while (theta < 0) theta += pi;
      while (theta >= pi) theta -= pi;
      double pos = theta / pi * static_cast<double>(table_.size());
      std::size_t i = static_cast<std::size_t>(pos) % table_.size();
      double frac = pos - std::floor(pos);
      double s0 = table_[i];
      double s1 = table_[(i + 1) % table_.size()];
      return r * (s0 + (s1 - s0) * frac);
    }
  }
  return 0;
}

NormEval NormDescriptor::eval(std::span<const Rational> v) const {
  NormEval e;
  std::vector<double> dv(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) dv[i] = rat_dbl(v[i]);

  if (kind_ == Kind::CustomTable) {
    e.approx = eval_dbl(dv);
    return e;
  }

  const bool weighted = kind_ == Kind::WeightedLp;
  if (weighted && weights_.size() != v.size())
    throw DomainError("NormDescriptor: weight/vector dimension mismatch");

  if (v.size() == 1) {
    // every lp norm of a scalar is |x| (times the weight)
    Rational t = rat_abs(v[0]) * (weighted ? weights_[0] : Rational(1));
    e.pow_val = t;
    e.power = 1;
    e.approx = rat_dbl(t);
    return e;
  }

  if (p_.is_inf()) {
    Rational m = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rational t = rat_abs(v[i]) * (weighted ? weights_[i] : Rational(1));
      if (t > m) m = t;
    }
    e.pow_val = m;
    e.power = 1;
    e.approx = rat_dbl(m);
    return e;
  }
  if (auto pi = p_.as_int(); pi && (*pi == 1 || *pi == 2)) {
    Rational acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rational t = rat_abs(v[i]) * (weighted ? weights_[i] : Rational(1));
      acc += *pi == 1 ? t : Rational(t * t);
    }
    e.pow_val = acc;
    e.power = static_cast<int>(*pi);
    e.approx = *pi == 1 ? rat_dbl(acc) : std::sqrt(rat_dbl(acc));
    return e;
  }
  e.approx = eval_dbl(dv);
  return e;
}

std::string NormDescriptor::str() const {
  switch (kind_) {
    case Kind::Lp:
      return "l" + p_.str();
    case Kind::WeightedLp:
      return "wl" + p_.str();
    case Kind::CustomTable:
      return "custom" + std::to_string(table_.size());
  }
  return "?";
}

Value Value::real(Rational r) {
  Value v;
  v.kind = ValueKind::Real;
  v.re = std::move(r);
  return v;
}

Value Value::complex(Rational r, Rational i) {
  Value v;
  v.kind = ValueKind::Complex;
  v.re = std::move(r);
  v.im = std::move(i);
  return v;
}

Value Value::vector(std::vector<Rational> x) {
  Value v;
  v.kind = ValueKind::Vector;
  v.vec = std::move(x);
  return v;
}

Value Value::zero_like(const Value& v) {
  Value z = v;
  z.re = 0;
  z.im = 0;
  std::fill(z.vec.begin(), z.vec.end(), Rational(0));
  return z;
}

bool Value::is_zero() const {
  if (kind == ValueKind::Vector)
    return std::all_of(vec.begin(), vec.end(),
                       [](const Rational& r) { return r == 0; });
  return re == 0 && im == 0;
}

Value& Value::operator+=(const Value& o) {
  if (kind != o.kind || vec.size() != o.vec.size())
    throw DomainError("Value: mixed kinds in arithmetic");
  re += o.re;
  im += o.im;
  for (std::size_t i = 0; i < vec.size(); ++i) vec[i] += o.vec[i];
  return *this;
}

Value& Value::operator-=(const Value& o) { return *this += -o; }

Value Value::operator-() const {
  Value v = *this;
  v.re = -v.re;
  v.im = -v.im;
  for (Rational& x : v.vec) x = -x;
  return v;
}

Value Value::scaled(const Rational& c) const {
  Value v = *this;
  v.re *= c;
  v.im *= c;
  for (Rational& x : v.vec) x *= c;
  return v;
}

bool operator==(const Value& a, const Value& b) {
  return a.kind == b.kind && a.re == b.re && a.im == b.im && a.vec == b.vec;
}

NormEval value_norm(const Value& v, const NormDescriptor& nd) {
  switch (v.kind) {
    case ValueKind::Real: {
      NormEval e;
      e.pow_val = rat_abs(v.re);
      e.power = 1;
      e.approx = std::fabs(rat_dbl(v.re));
      return e;
    }
    case ValueKind::Complex: {
      NormEval e;
      Rational m2 = v.re * v.re + v.im * v.im;
      e.pow_val = m2;
      e.power = 2;
      e.approx = std::sqrt(rat_dbl(m2));
      return e;
    }
    case ValueKind::Vector:
      return nd.eval(v.vec);
  }
  return {};
}

}  // namespace summa
