#include "summa/rootsum.hpp"

#include "summa/errors.hpp"

#include <algorithm>
#include <map>

namespace summa {

void RootSum::add(const Rational& c, const Rational& x, unsigned v) {
  if (x < 0) throw DomainError("RootSum: negative radicand");
  if (v == 0) throw DomainError("RootSum: zeroth root");
  if (c == 0 || x == 0) return;
  if (v == 1 || x == 1) {
    terms_.push_back({c * (x == 1 ? Rational(1) : x), Rational(1), 1});
  } else {
    terms_.push_back({c, x, v});
  }
  normalize();
}

namespace {

// Largest m with m^v | x found by small-prime trial division plus a
// perfect v-th-power check of the unfactored remainder; x >= 1.
BigInt power_part(BigInt x, unsigned v) {
  BigInt m = 1;
  for (long p = 2; p <= 4096 && BigInt(p) * p <= x; p += (p == 2 ? 1 : 2)) {
    if (x % p != 0) continue;
    unsigned count = 0;
    while (x % p == 0) {
      x /= p;
      ++count;
    }
    for (unsigned i = 0; i < count / v; ++i) m *= p;
  }
  if (x > 1) {
    BigInt r = iroot(x, v);
    if (r > 1 && boost::multiprecision::pow(r, v) == x) m *= r;
  }
  return m;
}

}  // namespace

void RootSum::normalize() {
  // Rewrite c * x^(1/v) as c' * y^(1/v) with y free of rational v-th
  // power factors; terms over the same (v, y) merge by adding the
  // rational coefficients, so structurally equal sums cancel to zero.
  std::map<std::pair<unsigned, Rational>, Rational> merged;
  Rational rational_part = 0;
  for (const Term& t : terms_) {
    if (t.root == 1) {
      rational_part += t.coeff;
      continue;
    }
    // (p/q)^(1/v) = (p q^(v-1))^(1/v) / q: integerize the radicand so the
    // class representative is unique, then strip its v-th-power part.
    BigInt num = numerator(t.radicand), den = denominator(t.radicand);
    BigInt whole = num * boost::multiprecision::pow(den, t.root - 1);
    BigInt m = power_part(whole, t.root);
    Rational residual(whole / boost::multiprecision::pow(m, t.root));
    Rational coeff = t.coeff * Rational(m, den);
    if (residual == 1) {
      rational_part += coeff;
      continue;
    }
    merged[{t.root, residual}] += coeff;
  }
  terms_.clear();
  if (rational_part != 0) terms_.push_back({rational_part, Rational(1), 1});
  for (auto& [key, coeff] : merged) {
    if (coeff == 0) continue;
    terms_.push_back({coeff, key.second, key.first});
  }
}

std::pair<Rational, Rational> RootSum::bounds(unsigned bits) const {
  Rational lo = 0, hi = 0;
  for (const Term& t : terms_) {
    if (t.root == 1) {
      lo += t.coeff;
      hi += t.coeff;
      continue;
    }
    auto [rlo, rhi] = root_bounds(t.radicand, t.root, bits);
    if (t.coeff >= 0) {
      lo += t.coeff * rlo;
      hi += t.coeff * rhi;
    } else {
      lo += t.coeff * rhi;
      hi += t.coeff * rlo;
    }
  }
  return {lo, hi};
}

double RootSum::approx() const {
  auto [lo, hi] = bounds(64);
  return rat_dbl((lo + hi) / 2);
}

RootSum::Cmp RootSum::compare(const RootSum& a, const RootSum& b,
                              unsigned max_bits) {
  // Structural difference: subtract and check for the empty sum.
  RootSum diff = a;
  for (const Term& t : b.terms_) diff.terms_.push_back({-t.coeff, t.radicand, t.root});
  diff.normalize();
  if (diff.terms_.empty()) return Cmp::EQ;

  for (unsigned bits = 32; bits <= max_bits; bits *= 2) {
    auto [lo, hi] = diff.bounds(bits);
    if (hi < 0) return Cmp::LT;
    if (lo > 0) return Cmp::GT;
    if (lo == 0 && hi == 0) return Cmp::EQ;
  }
  return Cmp::UNDECIDED;
}

}  // namespace summa
