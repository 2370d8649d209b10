#include "summa/norms.hpp"

#include "summa/errors.hpp"

#include <algorithm>
#include <cmath>

namespace summa {

SeqVector SeqVector::from_rationals(const std::vector<Rational>& v) {
  SeqVector s;
  s.entries.reserve(v.size());
  for (const Rational& r : v) s.entries.emplace_back(Scalar(r));
  return s;
}

SeqVector SeqVector::from_doubles(const std::vector<double>& v) {
  SeqVector s;
  s.entries.reserve(v.size());
  for (double d : v) s.entries.emplace_back(Scalar::flt(d));
  return s;
}

bool SeqVector::all_exact() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const CScalar& c) { return c.exact(); });
}

bool SeqVector::is_real() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const CScalar& c) { return c.is_real(); });
}

Scalar lp_norm(const SeqVector& v, const Exponent& p) {
  if (!p.is_inf() && p.value() <= 0)
    throw DomainError("lp_norm: exponent must be positive");

  const bool exact_ok = v.all_exact() && v.is_real();

  if (p.is_inf()) {
    if (exact_ok) {
      Rational m = 0;
      for (const CScalar& c : v.entries) m = std::max(m, rat_abs(c.re.rat()));
      return Scalar(m);
    }
    double m = 0;
    for (const CScalar& c : v.entries) m = std::max(m, c.modulus().dbl());
    return Scalar::flt(m);
  }

  if (auto pi = p.as_int(); pi && *pi == 1 && exact_ok) {
    Rational acc = 0;
    for (const CScalar& c : v.entries) acc += rat_abs(c.re.rat());
    return Scalar(acc);
  }

  const double pv = p.value();
  if (pv == 2.0) {
    // Sum of squared moduli is exact whenever the entries are; only the
    // final root leaves the rationals.
    if (v.all_exact()) {
      Rational acc = 0;
      for (const CScalar& c : v.entries) acc += c.modulus_sq().rat();
      return Scalar::flt(std::sqrt(rat_dbl(acc)));
    }
  }
  double acc = 0;
  for (const CScalar& c : v.entries) acc += std::pow(c.modulus().dbl(), pv);
  return Scalar::flt(std::pow(acc, 1.0 / pv));
}

namespace {

double inv(const Exponent& p) { return p.is_inf() ? 0.0 : 1.0 / p.value(); }

bool conjugate(const Exponent& p, const Exponent& q) {
  if (p.exact() && q.exact() && !p.is_inf() && !q.is_inf())
    return Rational(1) / *p.exact() + Rational(1) / *q.exact() == 1;
  return std::fabs(inv(p) + inv(q) - 1.0) <= tolerance();
}

}  // namespace

HolderReport holder_verify(const SeqVector& f, const SeqVector& g,
                           const Exponent& p, const Exponent& q) {
  if (f.size() != g.size()) throw DomainError("holder_verify: length mismatch");
  if ((!p.is_inf() && p.value() < 1) || (!q.is_inf() && q.value() < 1) ||
      !conjugate(p, q))
    throw DomainError("holder_verify: exponents are not conjugate");

  SeqVector prod;
  prod.entries.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    prod.entries.push_back(f.entries[i] * g.entries[i]);

  HolderReport rep;
  rep.lhs = lp_norm(prod, Exponent(1));
  rep.rhs = lp_norm(f, p) * lp_norm(g, q);
  rep.holds = approx_leq(rep.lhs, rep.rhs);
  rep.equality_within_tol = approx_eq(rep.lhs, rep.rhs);
  return rep;
}

InterpolationReport lp_interpolate(const SeqVector& f, const Exponent& p,
                                   const Exponent& q, const Exponent& r) {
  const double ip = inv(p), iq = inv(q), ir = inv(r);
  if (q.is_inf()) {
    if (!(p.value() > 0) || r.is_inf() || !(r.value() > p.value()))
      throw DomainError("lp_interpolate: need 0 < p < r < q");
  } else if (!(p.value() > 0) || r.is_inf() || q.is_inf() ||
             !(p.value() < r.value() && r.value() < q.value())) {
    throw DomainError("lp_interpolate: need 0 < p < r < q");
  }

  InterpolationReport rep;
  rep.t = (ir - iq) / (ip - iq);
  rep.lhs = lp_norm(f, r);
  Scalar np = lp_norm(f, p), nq = lp_norm(f, q);
  rep.rhs = Scalar::flt(std::pow(np.dbl(), rep.t) *
                        std::pow(nq.dbl(), 1.0 - rep.t));
  rep.holds = approx_leq(rep.lhs, rep.rhs);
  return rep;
}

bool p_subadditivity_check(const Scalar& a, const Scalar& b,
                           const Exponent& p) {
  if (p.is_inf() || p.value() <= 0 || p.value() > 1)
    throw DomainError("p_subadditivity_check: p must lie in (0, 1]");
  if (a < Scalar(0) || b < Scalar(0))
    throw DomainError("p_subadditivity_check: inputs must be nonnegative");
  if (auto pi = p.as_int(); pi && *pi == 1 && a.exact() && b.exact())
    return true;  // equality, exactly
  double pv = p.value();
  double lhs = std::pow(a.dbl() + b.dbl(), pv);
  double rhs = std::pow(a.dbl(), pv) + std::pow(b.dbl(), pv);
  return lhs <= rhs + tolerance();
}

}  // namespace summa
