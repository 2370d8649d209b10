#include "summa/scalar.hpp"

#include "summa/errors.hpp"

#include <cmath>
#include <cstdio>

namespace summa {

namespace {
std::atomic<double> g_tolerance{1e-9};
}

double tolerance() { return g_tolerance.load(std::memory_order_relaxed); }

void set_tolerance(double tau) {
  if (!(tau >= 0)) throw DomainError("tolerance must be nonnegative");
  g_tolerance.store(tau, std::memory_order_relaxed);
}

const Rational& Scalar::rat() const {
  if (!exact_) throw DomainError("Scalar: float mode has no exact value");
  return rat_;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (s.exact_) s.rat_ = -s.rat_;
  s.dbl_ = -s.dbl_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (exact_ && o.exact_) {
    rat_ += o.rat_;
    dbl_ = rat_dbl(rat_);
  } else {
    exact_ = false;
    dbl_ += o.dbl_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (exact_ && o.exact_) {
    rat_ -= o.rat_;
    dbl_ = rat_dbl(rat_);
  } else {
    exact_ = false;
    dbl_ -= o.dbl_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (exact_ && o.exact_) {
    rat_ *= o.rat_;
    dbl_ = rat_dbl(rat_);
  } else {
    exact_ = false;
    dbl_ *= o.dbl_;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (exact_ && o.exact_) {
    if (o.rat_ == 0) throw DomainError("Scalar: division by exact zero");
    rat_ /= o.rat_;
    dbl_ = rat_dbl(rat_);
  } else {
    exact_ = false;
    dbl_ /= o.dbl_;
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.exact_ && b.exact_) return a.rat_ == b.rat_;
  return a.dbl_ == b.dbl_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.exact_ && b.exact_) return a.rat_ < b.rat_;
  return a.dbl_ < b.dbl_;
}

std::string format_double(double v);

std::string Scalar::str() const {
  if (exact_) return rat_str(rat_);
  return format_double(dbl_);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Scalar abs(const Scalar& s) {
  if (s.exact()) return Scalar(rat_abs(s.rat()));
  return Scalar::flt(std::fabs(s.dbl()));
}

Scalar pow_int(const Scalar& s, long e) {
  if (s.exact()) return Scalar(rat_pow(s.rat(), e));
  return Scalar::flt(std::pow(s.dbl(), static_cast<double>(e)));
}

bool approx_leq(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) return a.rat() <= b.rat();
  return a.dbl() <= b.dbl() + tolerance();
}

bool approx_eq(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) return a.rat() == b.rat();
  return std::fabs(a.dbl() - b.dbl()) <= tolerance();
}

bool approx_eq(double a, double b) { return std::fabs(a - b) <= tolerance(); }

bool CScalar::is_real() const {
  if (im.exact()) return im.rat() == 0;
  return im.dbl() == 0.0;
}

Scalar CScalar::modulus() const {
  if (is_real()) return abs(re);
  Scalar m2 = modulus_sq();
  return Scalar::flt(std::sqrt(m2.dbl()));
}

double Exponent::value() const {
  if (inf_) throw DomainError("Exponent: infinity has no finite value");
  return val_;
}

std::optional<long> Exponent::as_int() const {
  if (inf_ || !exact_) return std::nullopt;
  if (denominator(*exact_) != 1) return std::nullopt;
  return numerator(*exact_).convert_to<long>();
}

std::optional<Exponent> Exponent::parse(std::string_view s) {
  if (s == "inf" || s == "infinity" || s == "oo") return Exponent::infinity();
  if (auto r = rat_parse(s)) {
    if (*r <= 0) return std::nullopt;
    return Exponent(*r);
  }
  return std::nullopt;
}

std::string Exponent::str() const {
  if (inf_) return "inf";
  if (exact_) return rat_str(*exact_);
  return format_double(val_);
}

}  // namespace summa
