#include "summa/rational.hpp"

#include "summa/errors.hpp"

#include <cctype>
#include <charconv>

namespace summa {

namespace mp = boost::multiprecision;

std::string rat_str(const Rational& r) {
  std::string num = numerator(r).str();
  if (denominator(r) == 1) return num;
  return num + "/" + denominator(r).str();
}

namespace {

bool parse_bigint(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return false;
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + (s[i] - '0');
  }
  out = neg ? BigInt(-v) : v;
  return true;
}

// Decimal with optional exponent, e.g. "-1.25e-3", parsed exactly.
std::optional<Rational> parse_decimal(std::string_view s) {
  std::size_t epos = s.find_first_of("eE");
  long expo = 0;
  if (epos != std::string_view::npos) {
    std::string_view es = s.substr(epos + 1);
    if (es.empty()) return std::nullopt;
    auto [p, ec] = std::from_chars(es.data(), es.data() + es.size(), expo);
    if (ec != std::errc() || p != es.data() + es.size()) return std::nullopt;
    s = s.substr(0, epos);
  }
  std::size_t dot = s.find('.');
  std::string digits;
  long frac_len = 0;
  if (dot == std::string_view::npos) {
    digits = std::string(s);
  } else {
    digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
    frac_len = static_cast<long>(s.size() - dot - 1);
    if (frac_len == 0 && digits.empty()) return std::nullopt;
  }
  BigInt mant;
  if (!parse_bigint(digits, mant)) return std::nullopt;
  Rational r(mant);
  long net = expo - frac_len;
  if (net > 0)
    r *= Rational(rat_pow(Rational(10), net));
  else if (net < 0)
    r /= Rational(rat_pow(Rational(10), -net));
  return r;
}

}  // namespace

std::optional<Rational> rat_parse(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  if (s.empty()) return std::nullopt;

  std::size_t slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (s.find('.') != std::string_view::npos ||
        s.find_first_of("eE") != std::string_view::npos)
      return parse_decimal(s);
    BigInt n;
    if (!parse_bigint(s, n)) return std::nullopt;
    return Rational(n);
  }

  BigInt num;
  if (!parse_bigint(s.substr(0, slash), num)) return std::nullopt;
  std::string_view den = s.substr(slash + 1);

  // "p/2^l" form used for dyadic locations.
  std::size_t caret = den.find('^');
  BigInt d;
  if (caret != std::string_view::npos) {
    BigInt base, e;
    if (!parse_bigint(den.substr(0, caret), base)) return std::nullopt;
    if (!parse_bigint(den.substr(caret + 1), e)) return std::nullopt;
    if (base <= 0 || e < 0 || e > 4096) return std::nullopt;
    d = 1;
    for (BigInt i = 0; i < e; ++i) d *= base;
  } else {
    if (!parse_bigint(den, d)) return std::nullopt;
  }
  if (d == 0) return std::nullopt;
  return Rational(num, d);
}

double rat_dbl(const Rational& r) { return r.convert_to<double>(); }

Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Rational rat_pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw DomainError("rat_pow: zero base with negative exponent");
    return rat_pow(Rational(1 / base), -e);
  }
  Rational acc = 1, b = base;
  unsigned long u = static_cast<unsigned long>(e);
  while (u > 0) {
    if (u & 1) acc *= b;
    b *= b;
    u >>= 1;
  }
  return acc;
}

BigInt iroot(const BigInt& x, unsigned n) {
  if (x < 0) throw DomainError("iroot: negative radicand");
  if (n == 0) throw DomainError("iroot: zeroth root");
  if (x == 0 || x == 1 || n == 1) return x;
  if (n == 2) return mp::sqrt(x);
  // Binary search on the bit length.
  unsigned bits = static_cast<unsigned>(mp::msb(x)) + 1;
  BigInt hi = BigInt(1) << (bits / n + 1);
  BigInt lo = 0;
  while (lo < hi - 1) {
    BigInt mid = (lo + hi) / 2;
    BigInt p = mp::pow(mid, n);
    if (p <= x)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

std::pair<Rational, Rational> root_bounds(const Rational& x, unsigned n,
                                          unsigned bits) {
  if (x < 0) throw DomainError("root_bounds: negative radicand");
  if (n == 0) throw DomainError("root_bounds: zeroth root");
  if (x == 0) return {Rational(0), Rational(0)};
  if (n == 1) return {x, x};
  const BigInt p = numerator(x), q = denominator(x);
  const BigInt scale = BigInt(1) << bits;
  // x * (scale*q)^n = p * scale^n * q^(n-1)
  BigInt m = p * mp::pow(scale, n) * mp::pow(q, n - 1);
  BigInt t = iroot(m, n);
  Rational den(scale * q);
  Rational lo = Rational(t) / den;
  if (mp::pow(t, n) == m) return {lo, lo};
  Rational hi = Rational(t + 1) / den;
  return {lo, hi};
}

std::pair<Rational, Rational> pow_bounds(const Rational& x, const Rational& e,
                                         unsigned bits) {
  if (x < 0) throw DomainError("pow_bounds: negative base");
  if (e < 0) throw DomainError("pow_bounds: negative exponent");
  const BigInt un = numerator(e), vd = denominator(e);
  if (un > 1024 || vd > 64)
    throw DomainError("pow_bounds: exponent out of supported range");
  long u = un.convert_to<long>();
  unsigned v = vd.convert_to<unsigned>();
  Rational xu = rat_pow(x, u);
  return root_bounds(xu, v, bits);
}

}  // namespace summa
