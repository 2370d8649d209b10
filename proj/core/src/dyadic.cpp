#include "summa/dyadic.hpp"

#include "summa/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>

namespace summa {

namespace {

Rational pow2(long e) {
  if (e >= 0) return Rational(BigInt(1) << e);
  return Rational(1, BigInt(1) << (-e));
}

const int kMaxLevel = 24;

void check_level(int l) {
  if (l < 0 || l > kMaxLevel)
    throw GuardError("dyadic level out of range (0..24)");
}

}  // namespace

DyadicStep DyadicStep::constant(const Rational& c, int level) {
  check_level(level);
  DyadicStep s;
  s.level = level;
  s.values.assign(std::size_t(1) << level, c);
  return s;
}

DyadicStep DyadicStep::from_values(int level, std::vector<Rational> v) {
  check_level(level);
  if (v.size() != (std::size_t(1) << level))
    throw DomainError("DyadicStep: need exactly 2^level values");
  DyadicStep s;
  s.level = level;
  s.values = std::move(v);
  return s;
}

DyadicStep DyadicStep::at_level(int finer) const {
  check_level(finer);
  if (finer < level) throw DomainError("DyadicStep: re-leveling must refine");
  if (finer == level) return *this;
  DyadicStep s;
  s.level = finer;
  s.values.clear();
  s.values.reserve(std::size_t(1) << finer);
  long rep = 1L << (finer - level);
  for (const Rational& v : values)
    for (long i = 0; i < rep; ++i) s.values.push_back(v);
  return s;
}

Rational DyadicStep::value_at(const Rational& x) const {
  if (x < 0 || x >= 1) throw DomainError("DyadicStep: point outside [0,1)");
  Rational scaled = x * pow2(level);
  BigInt j = numerator(scaled) / denominator(scaled);
  return values[j.convert_to<std::size_t>()];
}

Rational DyadicStep::integral() const {
  Rational acc = 0;
  for (const Rational& v : values) acc += v;
  return acc * pow2(-level);
}

Rational DyadicStep::integral_dyadic(int l, long j) const {
  check_level(l);
  if (j < 0 || j >= (1L << l))
    throw DomainError("DyadicStep: dyadic index out of range");
  if (l >= level) {
    // the query interval sits inside one cell
    return values[static_cast<std::size_t>(j >> (l - level))] * pow2(-l);
  }
  long first = j << (level - l), count = 1L << (level - l);
  Rational acc = 0;
  for (long i = first; i < first + count; ++i)
    acc += values[static_cast<std::size_t>(i)];
  return acc * pow2(-level);
}

Rational DyadicStep::lp_pow(long p) const {
  if (p < 1) throw DomainError("DyadicStep: integer p >= 1");
  Rational acc = 0;
  for (const Rational& v : values) acc += rat_pow(rat_abs(v), p);
  return acc * pow2(-level);
}

Rational DyadicStep::linf() const {
  Rational m = 0;
  for (const Rational& v : values) m = std::max(m, rat_abs(v));
  return m;
}

Scalar DyadicStep::lp_norm(const Exponent& p) const {
  if (p.is_inf()) return Scalar(linf());
  if (auto pi = p.as_int()) {
    Rational ppow = lp_pow(*pi);
    if (*pi == 1) return Scalar(ppow);
    return Scalar::flt(std::pow(rat_dbl(ppow), 1.0 / static_cast<double>(*pi)));
  }
  double pv = p.value(), acc = 0;
  for (const Rational& v : values) acc += std::pow(std::fabs(rat_dbl(v)), pv);
  acc *= std::pow(2.0, -level);
  return Scalar::flt(std::pow(acc, 1.0 / pv));
}

namespace {

template <typename Op>
DyadicStep zip(const DyadicStep& a, const DyadicStep& b, Op op) {
  int l = std::max(a.level, b.level);
  DyadicStep x = a.at_level(l), y = b.at_level(l);
  for (std::size_t i = 0; i < x.values.size(); ++i)
    x.values[i] = op(x.values[i], y.values[i]);
  return x;
}

}  // namespace

DyadicStep operator+(const DyadicStep& a, const DyadicStep& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}
DyadicStep operator-(const DyadicStep& a, const DyadicStep& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); });
}
DyadicStep operator*(const DyadicStep& a, const DyadicStep& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return Rational(x * y); });
}

DyadicStep pointwise_max(const DyadicStep& a, const DyadicStep& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) {
    return std::max(x, y);
  });
}

DyadicStep DyadicStep::scaled(const Rational& c) const {
  DyadicStep s = *this;
  for (Rational& v : s.values) v *= c;
  return s;
}

DyadicStep DyadicStep::abs() const {
  DyadicStep s = *this;
  for (Rational& v : s.values) v = rat_abs(v);
  return s;
}

bool operator==(const DyadicStep& a, const DyadicStep& b) {
  int l = std::max(a.level, b.level);
  return a.at_level(l).values == b.at_level(l).values;
}

DyadicStep dyadic_average(const DyadicStep& f, int l) {
  if (l < 0 || l > f.level)
    throw DomainError("dyadic_average: need 0 <= l <= f.level");
  DyadicStep s;
  s.level = l;
  s.values.clear();
  long group = 1L << (f.level - l);
  for (long j = 0; j < (1L << l); ++j) {
    Rational acc = 0;
    for (long i = j * group; i < (j + 1) * group; ++i)
      acc += f.values[static_cast<std::size_t>(i)];
    s.values.push_back(acc / group);
  }
  return s;
}

DyadicStep rademacher(int l, int level) {
  if (l < 1) throw DomainError("rademacher: l >= 1");
  if (level < l) throw DomainError("rademacher: level >= l required");
  check_level(level);
  DyadicStep s;
  s.level = level;
  s.values.clear();
  for (long j = 0; j < (1L << level); ++j) {
    long jl = j >> (level - l);
    s.values.push_back(jl % 2 == 0 ? Rational(1) : Rational(-1));
  }
  return s;
}

DyadicStep walsh(const std::set<int>& I, int level) {
  check_level(level);
  if (!I.empty() && *I.rbegin() > level)
    throw DomainError("walsh: level >= max(I) required");
  DyadicStep s = DyadicStep::constant(1, level);
  for (int l : I) s = s * rademacher(l, level);
  return s;
}

DyadicMeasure DyadicMeasure::lebesgue() {
  DyadicMeasure m;
  m.density = DyadicStep::constant(1);
  return m;
}

DyadicMeasure DyadicMeasure::unit_mass_at(const Rational& loc) {
  return from(DyadicStep::constant(0), {{loc, Rational(1)}});
}

DyadicMeasure DyadicMeasure::from(DyadicStep density,
                                  std::vector<PointMass> atoms) {
  for (const Rational& v : density.values)
    if (v < 0) throw DomainError("DyadicMeasure: density must be nonnegative");
  for (const PointMass& a : atoms) {
    if (a.mass <= 0) throw DomainError("DyadicMeasure: masses must be positive");
    if (a.loc < 0 || a.loc >= 1)
      throw DomainError("DyadicMeasure: atom outside [0,1)");
    BigInt den = denominator(a.loc);
    if ((den & (den - 1)) != 0)
      throw DomainError("DyadicMeasure: atom locations must be dyadic rationals");
  }
  DyadicMeasure m;
  m.density = std::move(density);
  m.atoms = std::move(atoms);
  return m;
}

Rational DyadicMeasure::mass_dyadic(int l, long j) const {
  Rational acc = density.integral_dyadic(l, j);
  Rational lo = Rational(j) * pow2(-l), hi = Rational(j + 1) * pow2(-l);
  for (const PointMass& a : atoms)
    if (a.loc >= lo && a.loc < hi) acc += a.mass;
  return acc;
}

Rational DyadicMeasure::total() const { return mass_dyadic(0, 0); }

namespace {

// masses[l][j] = mu([j 2^-l, (j+1) 2^-l)), built bottom-up.
std::vector<std::vector<Rational>> mass_tree(const DyadicMeasure& mu, int L) {
  std::vector<std::vector<Rational>> masses(static_cast<std::size_t>(L + 1));
  auto& leaves = masses[static_cast<std::size_t>(L)];
  leaves.assign(std::size_t(1) << L, Rational(0));
  const DyadicStep dens = mu.density.level <= L
                              ? mu.density.at_level(L)
                              : mu.density;
  if (dens.level <= L) {
    for (long j = 0; j < (1L << L); ++j)
      leaves[static_cast<std::size_t>(j)] =
          dens.values[static_cast<std::size_t>(j)] * pow2(-L);
  } else {
    for (long j = 0; j < (1L << L); ++j)
      leaves[static_cast<std::size_t>(j)] = mu.density.integral_dyadic(L, j);
  }
  for (const PointMass& a : mu.atoms) {
    Rational scaled = a.loc * pow2(L);
    BigInt cell = numerator(scaled) / denominator(scaled);
    leaves[cell.convert_to<std::size_t>()] += a.mass;
  }
  for (int l = L - 1; l >= 0; --l) {
    auto& row = masses[static_cast<std::size_t>(l)];
    const auto& below = masses[static_cast<std::size_t>(l + 1)];
    row.resize(std::size_t(1) << l);
    for (long j = 0; j < (1L << l); ++j)
      row[static_cast<std::size_t>(j)] = below[static_cast<std::size_t>(2 * j)] +
                                         below[static_cast<std::size_t>(2 * j + 1)];
  }
  return masses;
}

}  // namespace

DyadicStep dyadic_maximal(const DyadicMeasure& mu, int L) {
  check_level(L);
  const auto masses = mass_tree(mu, L);
  DyadicStep out;
  out.level = L;
  out.values.assign(std::size_t(1) << L, Rational(0));
  // Walk the dyadic tree carrying the best ancestor ratio.
  struct Frame {
    int l;
    long j;
    Rational best;
  };
  std::vector<Frame> stack{{0, 0, Rational(0)}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    Rational ratio =
        masses[static_cast<std::size_t>(f.l)][static_cast<std::size_t>(f.j)] *
        pow2(f.l);
    Rational best = std::max(f.best, ratio);
    if (f.l == L) {
      out.values[static_cast<std::size_t>(f.j)] = best;
    } else {
      stack.push_back({f.l + 1, 2 * f.j, best});
      stack.push_back({f.l + 1, 2 * f.j + 1, best});
    }
  }
  return out;
}

LevelSetReport maximal_level_sets(const DyadicMeasure& mu, const Rational& t,
                                  int L) {
  if (t <= 0) throw DomainError("maximal_level_sets: t > 0 required");
  check_level(L);
  const auto masses = mass_tree(mu, L);
  LevelSetReport rep;
  struct Frame {
    int l;
    long j;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const Rational& m =
        masses[static_cast<std::size_t>(f.l)][static_cast<std::size_t>(f.j)];
    if (m > t * pow2(-f.l)) {
      rep.intervals.push_back({f.l, f.j});
      rep.lebesgue += pow2(-f.l);
      rep.mass += m;
      continue;  // maximal: do not descend
    }
    if (f.l < L) {
      stack.push_back({f.l + 1, 2 * f.j});
      stack.push_back({f.l + 1, 2 * f.j + 1});
    }
  }
  std::sort(rep.intervals.begin(), rep.intervals.end());
  rep.strict_certified = !rep.intervals.empty() && t * rep.lebesgue < rep.mass;
  return rep;
}

std::vector<RatInterval> covering_reduce(const std::vector<RatInterval>& in) {
  if (in.empty()) throw DomainError("covering_reduce: empty input");
  for (const RatInterval& iv : in)
    if (!(iv.lo < iv.hi)) throw DomainError("covering_reduce: empty interval");

  std::vector<RatInterval> sorted = in;
  std::sort(sorted.begin(), sorted.end(), [](const RatInterval& a, const RatInterval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi > b.hi;
  });

  // Greedy minimal subcover per overlap component; minimal covers of an
  // interval union have multiplicity <= 2.
  std::vector<RatInterval> out;
  std::size_t i = 0;
  while (i < sorted.size()) {
    RatInterval cur = sorted[i];
    out.push_back(cur);
    Rational reach = cur.hi;
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j].lo < reach) {
      // extendable candidates: take the one reaching farthest
      std::size_t best = j;
      while (j < sorted.size() && sorted[j].lo < reach) {
        if (sorted[j].hi > sorted[best].hi) best = j;
        ++j;
      }
      if (sorted[best].hi > reach) {
        out.push_back(sorted[best]);
        reach = sorted[best].hi;
        j = best + 1;
      }
    }
    // skip everything swallowed by this component
    while (i < sorted.size() && sorted[i].lo < reach) ++i;
  }

  // Exact endpoint sweep: identical union, multiplicity <= 2.
  std::vector<Rational> pts;
  for (const RatInterval& iv : in) {
    pts.push_back(iv.lo);
    pts.push_back(iv.hi);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto covered = [](const std::vector<RatInterval>& set, const Rational& x) {
    int c = 0;
    for (const RatInterval& iv : set)
      if (iv.lo < x && x < iv.hi) ++c;
    return c;
  };
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    Rational mid = (pts[k] + pts[k + 1]) / 2;
    int corig = covered(in, mid), cred = covered(out, mid);
    if ((corig > 0) != (cred > 0) || cred > 2)
      throw PreconditionError("covering_reduce: sweep certification failed");
  }
  for (const Rational& p : pts) {
    if ((covered(in, p) > 0) != (covered(out, p) > 0))
      throw PreconditionError("covering_reduce: sweep certification failed");
  }
  return out;
}

HlReport hl_maximal_weak_type(const DyadicMeasure& mu, const Rational& t,
                              int L) {
  if (t <= 0) throw DomainError("hl_maximal_weak_type: t > 0 required");
  if (L > 12) throw GuardError("hl_maximal_weak_type: grid depth <= 12");
  check_level(L);
  const long n = 1L << L;
  const Rational cell = pow2(-L);

  std::vector<Rational> prefix(static_cast<std::size_t>(n + 1), Rational(0));
  for (long c = 0; c < n; ++c)
    prefix[static_cast<std::size_t>(c + 1)] =
        prefix[static_cast<std::size_t>(c)] + mu.mass_dyadic(L, c);

  HlReport rep;
  rep.bound = 2 * mu.total() / t;

  // thresholds per interval length: t * len for the exact grid maximal
  // function and t * (len - 2 cells) for the outward-snapped cover
  std::vector<Rational> thr_low(static_cast<std::size_t>(n + 1));
  std::vector<Rational> thr_up(static_cast<std::size_t>(n + 1));
  for (long len = 1; len <= n; ++len) {
    thr_low[static_cast<std::size_t>(len)] = t * Rational(len) * cell;
    thr_up[static_cast<std::size_t>(len)] = t * Rational(len - 2) * cell;
  }

  std::vector<int> low_mark(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> up_mark(static_cast<std::size_t>(n + 1), 0);
  std::vector<RatInterval> up_cover;
  for (long a = 0; a < n; ++a) {
    long b_up_max = -1;
    for (long b = a + 1; b <= n; ++b) {
      Rational m = prefix[static_cast<std::size_t>(b)] -
                   prefix[static_cast<std::size_t>(a)];
      if (m == 0) continue;
      if (m > thr_low[static_cast<std::size_t>(b - a)]) {
        ++low_mark[static_cast<std::size_t>(a)];
        --low_mark[static_cast<std::size_t>(b)];
      }
      // Outward snap: a real interval I has a grid cover J with
      // mu(J) >= mu(I), |J| < |I| + 2 cells; mu(I) > t|I| forces
      // mu(J) > t(|J| - 2 cells).
      if (m > thr_up[static_cast<std::size_t>(b - a)]) {
        ++up_mark[static_cast<std::size_t>(a)];
        --up_mark[static_cast<std::size_t>(b)];
        b_up_max = b;
      }
    }
    // intervals with the same left endpoint nest, so the longest
    // qualifying one carries the whole union into the subcover
    if (b_up_max > 0)
      up_cover.push_back({Rational(a) * cell, Rational(b_up_max) * cell});
  }
  int acc = 0;
  for (long c = 0; c < n; ++c) {
    acc += low_mark[static_cast<std::size_t>(c)];
    if (acc > 0) rep.lower += cell;
  }
  acc = 0;
  for (long c = 0; c < n; ++c) {
    acc += up_mark[static_cast<std::size_t>(c)];
    if (acc > 0) rep.upper += cell;
  }

  rep.holds_lower = rep.lower <= rep.bound;
  if (!up_cover.empty()) {
    std::vector<RatInterval> reduced = covering_reduce(up_cover);
    rep.slack = Rational(2 * static_cast<long>(reduced.size())) * cell;
  }
  rep.holds_upper_with_slack = rep.upper <= rep.bound + rep.slack;
  return rep;
}

namespace {

void even_check(long p) {
  if (p < 2 || p % 2 != 0)
    throw DomainError("rademacher moment: even integer p >= 2 required");
}

}  // namespace

Rational rademacher_moment_enumerate(const std::vector<Rational>& a, long p) {
  if (p < 1) throw DomainError("rademacher moment: integer p >= 1 required");
  const int n = static_cast<int>(a.size());
  if (n > 20)
    throw GuardError("rademacher_moment_enumerate: n <= 20 for enumeration");
  if (n == 0) return Rational(0);

  // Scale to integers over a common denominator so the sign-pattern loop
  // stays in integer arithmetic.
  BigInt den = 1;
  for (const Rational& x : a) den = lcm(den, denominator(x));
  std::vector<BigInt> scaled;
  for (const Rational& x : a) scaled.push_back(numerator(x) * (den / denominator(x)));

  BigInt sum = 0;
  for (const BigInt& s : scaled) sum -= s;  // start from all signs -1
  std::vector<int> sign(static_cast<std::size_t>(n), -1);
  BigInt acc = 0;
  auto addterm = [&](const BigInt& s) {
    BigInt v = s < 0 ? BigInt(-s) : s;
    acc += pow(v, static_cast<unsigned>(p));
  };
  addterm(sum);
  const std::uint64_t total = std::uint64_t(1) << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    int b = std::countr_zero(i);
    // flip sign b
    if (sign[static_cast<std::size_t>(b)] < 0) {
      sum += 2 * scaled[static_cast<std::size_t>(b)];
      sign[static_cast<std::size_t>(b)] = 1;
    } else {
      sum -= 2 * scaled[static_cast<std::size_t>(b)];
      sign[static_cast<std::size_t>(b)] = -1;
    }
    addterm(sum);
  }
  return Rational(acc) /
         (Rational(BigInt(1) << n) * Rational(pow(den, static_cast<unsigned>(p))));
}

Rational rademacher_moment_multinomial(const std::vector<Rational>& a, long p) {
  even_check(p);
  // G_j(m) = sum over even (k_1..k_j) with sum m of m!/(k_1!...k_j!) prod a^k,
  // via G_j(m) = sum_{k even} C(m,k) a_j^k G_{j-1}(m-k).
  std::vector<std::vector<BigInt>> choose(static_cast<std::size_t>(p + 1));
  for (long m = 0; m <= p; ++m) {
    choose[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(m + 1));
    for (long k = 0; k <= m; ++k)
      choose[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
          k == 0 || k == m
              ? BigInt(1)
              : choose[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k - 1)] +
                    choose[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k)];
  }
  std::vector<Rational> G(static_cast<std::size_t>(p + 1), Rational(0));
  G[0] = 1;
  for (const Rational& aj : a) {
    std::vector<Rational> next(static_cast<std::size_t>(p + 1), Rational(0));
    for (long m = 0; m <= p; ++m) {
      Rational acc = 0;
      Rational ak = 1;  // a_j^k
      for (long k = 0; k <= m; k += 2) {
        if (G[static_cast<std::size_t>(m - k)] != 0)
          acc += Rational(choose[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)]) *
                 ak * G[static_cast<std::size_t>(m - k)];
        ak *= aj * aj;  // advance a_j^k by two powers
      }
      next[static_cast<std::size_t>(m)] = acc;
    }
    G = std::move(next);
  }
  return G[static_cast<std::size_t>(p)];
}

Rational rademacher_moment(const std::vector<Rational>& a, long p) {
  if (p >= 1 && p % 2 == 1) return rademacher_moment_enumerate(a, p);
  even_check(p);
  Rational multi = rademacher_moment_multinomial(a, p);
  if (a.size() <= 20) {
    Rational enumd = rademacher_moment_enumerate(a, p);
    if (enumd != multi)
      throw PreconditionError("rademacher_moment: route disagreement");
  }
  return multi;
}

SignAverageReport khintchine_report(const std::vector<Rational>& a,
                                    const Exponent& p) {
  SignAverageReport rep;
  rep.n = a.size();
  rep.p = p;
  Rational sumsq = 0, sumabs = 0;
  for (const Rational& x : a) {
    sumsq += x * x;
    sumabs += rat_abs(x);
  }
  double l2 = std::sqrt(rat_dbl(sumsq));

  if (p.is_inf()) {
    rep.moment = Scalar(sumabs);
    rep.comparison = Scalar::flt(l2);
    rep.ratio = rep.comparison.dbl() > 0 ? rep.moment.dbl() / rep.comparison.dbl() : 0;
    rep.monotone_vs_l2 = rep.moment.dbl() + tolerance() >= l2;
    return rep;
  }

  const double pv = p.value();
  auto pi = p.as_int();
  if (pi && *pi % 2 == 0) {
    Rational m = rademacher_moment(a, *pi);
    rep.moment = Scalar(m);
    rep.comparison = Scalar(rat_pow(sumsq, *pi / 2));
  } else if (pi) {
    if (a.size() <= 20) {
      rep.moment = Scalar(rademacher_moment_enumerate(a, *pi));
    } else {
      throw GuardError("khintchine_report: odd p needs n <= 20");
    }
    rep.comparison = Scalar::flt(std::pow(rat_dbl(sumsq), pv / 2));
  } else {
    // fractional p: integrate the step function in float
    int n = static_cast<int>(a.size());
    if (n > 20) throw GuardError("khintchine_report: fractional p needs n <= 20");
    DyadicStep f = DyadicStep::constant(0, n);
    for (int l = 1; l <= n; ++l)
      f = f + rademacher(l, n).scaled(a[static_cast<std::size_t>(l - 1)]);
    double acc = 0;
    for (const Rational& v : f.values)
      acc += std::pow(std::fabs(rat_dbl(v)), pv);
    acc *= std::pow(2.0, -n);
    rep.moment = Scalar::flt(acc);
    rep.comparison = Scalar::flt(std::pow(rat_dbl(sumsq), pv / 2));
  }
  rep.ratio = rep.comparison.dbl() > 0 ? rep.moment.dbl() / rep.comparison.dbl() : 0;
  double lp = std::pow(rep.moment.dbl(), 1.0 / pv);
  rep.monotone_vs_l2 = pv >= 2 ? lp + tolerance() >= l2 : lp <= l2 + tolerance();
  return rep;
}

LacunaryResult lacunary_moment(
    const std::vector<long>& freqs,
    const std::vector<std::pair<Rational, Rational>>& coeffs, int k) {
  if (freqs.size() != coeffs.size())
    throw DomainError("lacunary_moment: frequency/coefficient mismatch");
  if (freqs.size() > 12) throw GuardError("lacunary_moment: at most 12 terms");
  if (k < 1 || k > 3) throw GuardError("lacunary_moment: k in 1..3");
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    if (freqs[i] < 1) throw DomainError("lacunary_moment: positive frequencies");
    if (i > 0 && freqs[i] <= freqs[i - 1])
      throw DomainError("lacunary_moment: strictly increasing frequencies");
  }

  LacunaryResult res;
  res.gap_q = 0;
  for (std::size_t i = 1; i < freqs.size(); ++i) {
    double q = static_cast<double>(freqs[i]) / static_cast<double>(freqs[i - 1]);
    res.gap_q = res.gap_q == 0 ? q : std::min(res.gap_q, q);
  }

  // g = f^(2^(k-1)) as a polynomial in z; the 2^k-th moment is the
  // squared l2 mass of g's coefficients (the z^j are orthonormal).
  using Coef = std::pair<Rational, Rational>;
  std::map<long, Coef> g;
  g[0] = {Rational(1), Rational(0)};
  const int h = 1 << (k - 1);
  for (int rep = 0; rep < h; ++rep) {
    std::map<long, Coef> next;
    for (const auto& [fr, cf] : g) {
      for (std::size_t i = 0; i < freqs.size(); ++i) {
        const auto& [are, aim] = coeffs[i];
        if (are == 0 && aim == 0) continue;
        Coef& slot = next[fr + freqs[i]];
        slot.first += cf.first * are - cf.second * aim;
        slot.second += cf.first * aim + cf.second * are;
      }
    }
    g = std::move(next);
  }
  res.moment = 0;
  for (const auto& [fr, cf] : g)
    res.moment += cf.first * cf.first + cf.second * cf.second;

  // Collapse flag: does any pair of distinct frequency multisets (with
  // nonzero coefficients) share the same sum?  If so, off-diagonal terms
  // contributed and the largest-frequency pairing argument did not apply.
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < freqs.size(); ++i)
    if (!(coeffs[i].first == 0 && coeffs[i].second == 0)) live.push_back(i);
  std::map<long, long> sum_count;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, long)> rec = [&](std::size_t start, long acc) {
    if (pick.size() == static_cast<std::size_t>(h)) {
      ++sum_count[acc];
      return;
    }
    for (std::size_t i = start; i < live.size(); ++i) {
      pick.push_back(live[i]);
      rec(i, acc + freqs[live[i]]);
      pick.pop_back();
    }
  };
  rec(0, 0);
  res.collapse_held = std::all_of(sum_count.begin(), sum_count.end(),
                                  [](const auto& kv) { return kv.second <= 1; });
  return res;
}

}  // namespace summa
