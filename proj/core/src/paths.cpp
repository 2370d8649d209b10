#include "summa/paths.hpp"

#include "summa/errors.hpp"
#include "summa/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace summa {

Polyline Polyline::make(std::vector<Rational> knots,
                        std::vector<std::vector<Rational>> points,
                        Interp interp, NormDescriptor norm) {
  if (knots.size() < 2) throw DomainError("Polyline: need at least two knots");
  if (points.size() != knots.size())
    throw DomainError("Polyline: knot/point count mismatch");
  for (std::size_t i = 1; i < knots.size(); ++i)
    if (!(knots[i - 1] < knots[i]))
      throw DomainError("Polyline: knots must be strictly increasing");
  const std::size_t d = points.front().size();
  if (d == 0) throw DomainError("Polyline: zero-dimensional points");
  for (const auto& p : points)
    if (p.size() != d) throw DomainError("Polyline: ragged points");
  Polyline f;
  f.knots = std::move(knots);
  f.points = std::move(points);
  f.interp = interp;
  f.norm = std::move(norm);
  return f;
}

namespace {

// Index of the last knot <= t (t clamped into [a,b]).
std::size_t knot_before(const std::vector<Rational>& knots, const Rational& t) {
  std::size_t lo = 0;
  for (std::size_t i = 0; i < knots.size(); ++i)
    if (knots[i] <= t) lo = i;
  return lo;
}

std::vector<Rational> lerp(const std::vector<Rational>& p,
                           const std::vector<Rational>& q, const Rational& c) {
  std::vector<Rational> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] + c * (q[i] - p[i]);
  return out;
}

}  // namespace

std::vector<Rational> Polyline::at(const Rational& t) const {
  if (t <= a()) return points.front();
  if (t >= b()) return points.back();
  std::size_t i = knot_before(knots, t);
  if (knots[i] == t) {
    if (interp == Interp::JumpLeft && i + 1 < points.size()) return points[i];
    return points[i];
  }
  switch (interp) {
    case Interp::Linear: {
      Rational c = (t - knots[i]) / (knots[i + 1] - knots[i]);
      return lerp(points[i], points[i + 1], c);
    }
    case Interp::JumpRight:
      return points[i];  // constant on [t_i, t_{i+1})
    case Interp::JumpLeft:
      return points[i + 1];  // constant on (t_i, t_{i+1}]
  }
  return points[i];
}

std::vector<Rational> Polyline::left_limit(const Rational& t) const {
  if (t <= a()) return points.front();
  if (t > b()) return points.back();
  std::size_t i = knot_before(knots, t);
  if (knots[i] == t) {
    switch (interp) {
      case Interp::Linear:
        return points[i];
      case Interp::JumpRight:
        return i == 0 ? points[0] : points[i - 1];
      case Interp::JumpLeft:
        return points[i];
    }
  }
  return at(t);
}

std::vector<Rational> Polyline::right_limit(const Rational& t) const {
  if (t < a()) return points.front();
  if (t >= b()) return points.back();
  std::size_t i = knot_before(knots, t);
  if (knots[i] == t) {
    switch (interp) {
      case Interp::Linear:
        return points[i];
      case Interp::JumpRight:
        return points[i];
      case Interp::JumpLeft:
        return points[i + 1];
    }
  }
  return at(t);
}

LengthResult path_length(const Polyline& f) {
  return path_length_to(f, f.b());
}

LengthResult path_length_to(const Polyline& f, const Rational& x) {
  if (x < f.a() || x > f.b())
    throw DomainError("path_length_to: point outside [a,b]");
  LengthResult res;
  res.exact_capable = true;
  Scalar total(0);
  bool scalar_exact = true;
  for (std::size_t i = 1; i < f.knots.size(); ++i) {
    Rational frac;
    if (f.knots[i] <= x)
      frac = 1;
    else if (f.knots[i - 1] >= x)
      break;
    else
      frac = (x - f.knots[i - 1]) / (f.knots[i] - f.knots[i - 1]);
    if (f.interp != Interp::Linear) frac = frac > 0 ? Rational(1) : Rational(0);

    std::vector<Rational> d(f.points[i].size());
    for (std::size_t c = 0; c < d.size(); ++c)
      d[c] = f.points[i][c] - f.points[i - 1][c];
    NormEval e = f.norm.eval(d);
    res.approx += rat_dbl(frac) * e.approx;
    if (e.exact()) {
      res.exact_form.add(frac, *e.pow_val, static_cast<unsigned>(e.power));
      if (e.power == 1)
        total += Scalar(frac * *e.pow_val);
      else
        scalar_exact = false;
    } else {
      res.exact_capable = false;
      scalar_exact = false;
    }
  }
  res.length = scalar_exact && res.exact_capable ? total : Scalar::flt(res.approx);
  return res;
}

Variation pos_neg_variation(const Polyline& f) {
  if (f.dim() != 1)
    throw DomainError("pos_neg_variation: scalar polylines only");
  Variation v{0, 0, 0};
  for (std::size_t i = 1; i < f.knots.size(); ++i) {
    Rational d = f.points[i][0] - f.points[i - 1][0];
    if (d > 0)
      v.pos += d;
    else
      v.neg -= d;
  }
  v.total = v.pos + v.neg;
  return v;
}

IntervalMeasureFromPath::IntervalMeasureFromPath(Polyline src)
    : src_(std::move(src)) {}

IntervalMeasureFromPath path_measure(const Polyline& f) {
  return IntervalMeasureFromPath(f);
}

std::vector<Rational> IntervalMeasureFromPath::of(const IntervalSpec& iv) const {
  if (iv.lo > iv.hi) throw DomainError("interval measure: lo > hi");
  if (iv.lo < src_.a() || iv.hi > src_.b())
    throw DomainError("interval measure: endpoints outside [a,b]");
  if (iv.lo == iv.hi && !(iv.lo_closed && iv.hi_closed)) {
    return std::vector<Rational>(static_cast<std::size_t>(src_.dim()),
                                 Rational(0));
  }
  std::vector<Rational> hi_val =
      iv.hi_closed ? src_.right_limit(iv.hi) : src_.left_limit(iv.hi);
  std::vector<Rational> lo_val =
      iv.lo_closed ? src_.left_limit(iv.lo) : src_.right_limit(iv.lo);
  std::vector<Rational> out(hi_val.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = hi_val[i] - lo_val[i];
  return out;
}

namespace {

// Canonical disjoint components of a finite union on the interval algebra.
std::vector<IntervalSpec> normalize_union(std::vector<IntervalSpec> ivs) {
  std::erase_if(ivs, [](const IntervalSpec& iv) {
    return iv.lo > iv.hi || (iv.lo == iv.hi && !(iv.lo_closed && iv.hi_closed));
  });
  std::sort(ivs.begin(), ivs.end(), [](const IntervalSpec& x, const IntervalSpec& y) {
    if (x.lo != y.lo) return x.lo < y.lo;
    return x.lo_closed && !y.lo_closed;
  });
  std::vector<IntervalSpec> out;
  for (const IntervalSpec& iv : ivs) {
    if (!out.empty()) {
      IntervalSpec& last = out.back();
      bool overlap = iv.lo < last.hi ||
                     (iv.lo == last.hi && (iv.lo_closed || last.hi_closed));
      if (overlap) {
        if (iv.hi > last.hi ||
            (iv.hi == last.hi && iv.hi_closed && !last.hi_closed)) {
          last.hi = iv.hi;
          last.hi_closed = iv.hi_closed;
        }
        continue;
      }
    }
    out.push_back(iv);
  }
  return out;
}

}  // namespace

std::vector<Rational> IntervalMeasureFromPath::of_union(
    const std::vector<IntervalSpec>& ivs) const {
  std::vector<Rational> acc(static_cast<std::size_t>(src_.dim()), Rational(0));
  for (const IntervalSpec& iv : normalize_union(ivs)) {
    std::vector<Rational> part = of(iv);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
  }
  return acc;
}

namespace {

// Cumulative length alpha with one-sided evaluation.
double alpha_at(const Polyline& f, const Rational& t, int side) {
  // side: -1 left limit, +1 right limit
  if (f.interp == Interp::Linear) {
    return path_length_to(f, std::clamp(t, f.a(), f.b())).approx;
  }
  double acc = 0;
  for (std::size_t i = 1; i < f.knots.size(); ++i) {
    std::vector<Rational> d(f.points[i].size());
    for (std::size_t c = 0; c < d.size(); ++c)
      d[c] = f.points[i][c] - f.points[i - 1][c];
    double seg = f.norm.eval(d).approx;
    bool counted;
    if (f.interp == Interp::JumpRight) {
      // the i-th jump lands exactly at knot i
      counted = side >= 0 ? f.knots[i] <= t : f.knots[i] < t;
    } else {
      // left-continuous: the i-th jump happens just after knot i-1
      counted = side > 0 ? f.knots[i - 1] <= t : f.knots[i - 1] < t;
    }
    if (counted) acc += seg;
  }
  return acc;
}

}  // namespace

double IntervalMeasureFromPath::alpha_mass(const IntervalSpec& iv) const {
  double hi = iv.hi_closed ? alpha_at(src_, iv.hi, +1) : alpha_at(src_, iv.hi, -1);
  double lo = iv.lo_closed ? alpha_at(src_, iv.lo, -1) : alpha_at(src_, iv.lo, +1);
  return hi - lo;
}

bool IntervalMeasureFromPath::dominated(const IntervalSpec& iv) const {
  std::vector<Rational> v = of(iv);
  NormEval e = src_.norm.eval(v);
  return e.approx <= alpha_mass(iv) + tolerance();
}

PiecewisePoly PiecewisePoly::poly(std::vector<Rational> c) {
  PiecewisePoly p;
  p.coeffs.push_back(std::move(c));
  return p;
}

std::optional<PiecewisePoly> PiecewisePoly::parse(const std::string& expr) {
  // sum of terms: [coef] [* ] [t [^k]]
  std::vector<Rational> coeffs;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i;
  };
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= expr.size()) break;
    int sign = 1;
    if (expr[i] == '+' || expr[i] == '-') {
      sign = expr[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      return std::nullopt;
    }
    skip_ws();
    Rational coef = 1;
    bool have_coef = false;
    std::size_t start = i;
    while (i < expr.size() &&
           (std::isdigit(static_cast<unsigned char>(expr[i])) || expr[i] == '/' ||
            expr[i] == '.'))
      ++i;
    if (i > start) {
      auto r = rat_parse(expr.substr(start, i - start));
      if (!r) return std::nullopt;
      coef = *r;
      have_coef = true;
    }
    skip_ws();
    if (i < expr.size() && expr[i] == '*') {
      ++i;
      skip_ws();
    }
    long power = 0;
    if (i < expr.size() && expr[i] == 't') {
      ++i;
      power = 1;
      if (i < expr.size() && expr[i] == '^') {
        ++i;
        std::size_t ps = i;
        while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i])))
          ++i;
        if (i == ps) return std::nullopt;
        power = std::stol(expr.substr(ps, i - ps));
      }
    } else if (!have_coef) {
      return std::nullopt;
    }
    if (static_cast<std::size_t>(power) >= coeffs.size())
      coeffs.resize(static_cast<std::size_t>(power) + 1, Rational(0));
    coeffs[static_cast<std::size_t>(power)] += sign * coef;
    first = false;
  }
  if (coeffs.empty()) return std::nullopt;
  return poly(std::move(coeffs));
}

namespace {

const std::vector<Rational>& piece_for(const PiecewisePoly& p, const Rational& t) {
  if (p.breaks.empty() || p.coeffs.size() == 1) return p.coeffs.front();
  std::size_t idx = 0;
  for (std::size_t i = 0; i + 1 < p.breaks.size(); ++i)
    if (p.breaks[i] <= t) idx = i;
  return p.coeffs[std::min(idx, p.coeffs.size() - 1)];
}

}  // namespace

Rational PiecewisePoly::eval(const Rational& t) const {
  const std::vector<Rational>& c = piece_for(*this, t);
  Rational acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * t + c[k];
  return acc;
}

double PiecewisePoly::sup_deriv(const Rational& lo, const Rational& hi) const {
  double m = std::max(std::fabs(rat_dbl(lo)), std::fabs(rat_dbl(hi)));
  double best = 0;
  for (const auto& c : coeffs) {
    double acc = 0;
    for (std::size_t k = 1; k < c.size(); ++k)
      acc += static_cast<double>(k) * std::fabs(rat_dbl(c[k])) *
             std::pow(m, static_cast<double>(k - 1));
    best = std::max(best, acc);
  }
  return best;
}

double PiecewisePoly::sup_abs(const Rational& lo, const Rational& hi) const {
  double m = std::max(std::fabs(rat_dbl(lo)), std::fabs(rat_dbl(hi)));
  double best = 0;
  for (const auto& c : coeffs) {
    double acc = 0;
    for (std::size_t k = 0; k < c.size(); ++k)
      acc += std::fabs(rat_dbl(c[k])) * std::pow(m, static_cast<double>(k));
    best = std::max(best, acc);
  }
  return best;
}

StieltjesResult riemann_stieltjes(const PiecewisePoly& phi, const Polyline& f,
                                  const Rational& delta) {
  if (delta <= 0) throw DomainError("riemann_stieltjes: mesh width > 0");
  std::vector<Rational> mesh = f.knots;
  for (const Rational& br : phi.breaks)
    if (br > f.a() && br < f.b()) mesh.push_back(br);
  Rational t = f.a();
  while (t < f.b()) {
    t += delta;
    if (t < f.b()) mesh.push_back(t);
  }
  std::sort(mesh.begin(), mesh.end());
  mesh.erase(std::unique(mesh.begin(), mesh.end()), mesh.end());

  StieltjesResult res;
  res.mesh_points = static_cast<long>(mesh.size());
  res.value.assign(static_cast<std::size_t>(f.dim()), Rational(0));
  Rational width = 0;
  for (std::size_t j = 1; j < mesh.size(); ++j) {
    width = std::max(width, Rational(mesh[j] - mesh[j - 1]));
    Rational r = (mesh[j] + mesh[j - 1]) / 2;
    Rational pr = phi.eval(r);
    std::vector<Rational> inc_hi = f.at(mesh[j]);
    std::vector<Rational> inc_lo = f.at(mesh[j - 1]);
    for (std::size_t c = 0; c < res.value.size(); ++c)
      res.value[c] += pr * (inc_hi[c] - inc_lo[c]);
  }
  res.mesh_width = rat_dbl(width);
  // |phi(r) - phi(r')| <= sup|phi'| |r - r'| <= sup|phi'| * width on each
  // mesh cell, so the sum is within omega * Lambda of the integral.
  double omega = phi.sup_deriv(f.a(), f.b()) * res.mesh_width;
  res.error_bound = omega * path_length(f).approx;
  return res;
}

namespace {

std::vector<std::vector<double>> sphere_grid(const NormDescriptor& norm,
                                             int dim, long G) {
  std::vector<std::vector<double>> pts;
  if (dim == 2) {
    for (long i = 0; i < G; ++i) {
      double th = 2 * std::numbers::pi * static_cast<double>(i) /
                  static_cast<double>(G);
      std::vector<double> v = {std::cos(th), std::sin(th)};
      double n = norm.eval_dbl(v);
      pts.push_back({v[0] / n, v[1] / n});
    }
  } else {
    // Fibonacci sphere
    const double ga = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (long i = 0; i < G; ++i) {
      double z = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(G);
      double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      double th = ga * static_cast<double>(i);
      std::vector<double> v = {r * std::cos(th), r * std::sin(th), z};
      double n = norm.eval_dbl(v);
      pts.push_back({v[0] / n, v[1] / n, v[2] / n});
    }
  }
  return pts;
}

double norm_of(const NormDescriptor& nd, const std::vector<double>& v) {
  return nd.eval_dbl(v);
}

}  // namespace

std::vector<ModulusEntry> uniform_convexity_modulus(
    const NormDescriptor& norm, int dim, const std::vector<double>& eps_grid,
    long G) {
  if (dim < 2 || dim > 3)
    throw DomainError("uniform_convexity_modulus: dimension 2 or 3");
  if (G < 8) throw DomainError("uniform_convexity_modulus: grid too small");
  for (double e : eps_grid)
    if (!(e > 0) || e > 2)
      throw DomainError("uniform_convexity_modulus: eps in (0, 2]");

  const long coarse = std::min<long>(G, dim == 2 ? 2048 : 512);
  std::vector<std::vector<double>> pts = sphere_grid(norm, dim, coarse);

  std::vector<ModulusEntry> table;
  for (double eps : eps_grid) {
    double best = -1;
    std::vector<double> bv, bw;
    auto consider = [&](const std::vector<double>& v, const std::vector<double>& w) {
      std::vector<double> diff(v.size()), mid(v.size());
      for (std::size_t c = 0; c < v.size(); ++c) {
        diff[c] = v[c] - w[c];
        mid[c] = (v[c] + w[c]) / 2;
      }
      if (norm_of(norm, diff) < eps) return;
      double m = norm_of(norm, mid);
      if (m > best) {
        best = m;
        bv = v;
        bw = w;
      }
    };
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) consider(pts[i], pts[j]);

    // Local refinement down to the G-grid scale and beyond; every
    // candidate evaluated is a genuine admissible pair, so the maximum
    // stays a lower bound for the true sup and delta_hat an upper bound
    // for the true modulus.
    if (best >= 0) {
      Rng rng(0xc0ffee);
      double radius = 2.0 * std::numbers::pi / static_cast<double>(coarse);
      const double floor_radius =
          0.02 * std::numbers::pi / static_cast<double>(G);
      while (radius > floor_radius) {
        bool improved = false;
        for (int trial = 0; trial < 64; ++trial) {
          auto perturb = [&](const std::vector<double>& base) {
            std::vector<double> p(base.size());
            for (std::size_t c = 0; c < p.size(); ++c)
              p[c] = base[c] + radius * (2 * rng.unit() - 1);
            double n = norm_of(norm, p);
            for (double& x : p) x /= n;
            return p;
          };
          std::vector<double> v = perturb(bv), w = perturb(bw);
          std::vector<double> diff(v.size()), mid(v.size());
          for (std::size_t c = 0; c < v.size(); ++c) {
            diff[c] = v[c] - w[c];
            mid[c] = (v[c] + w[c]) / 2;
          }
          if (norm_of(norm, diff) < eps) continue;
          double m = norm_of(norm, mid);
          if (m > best) {
            best = m;
            bv = v;
            bw = w;
            improved = true;
          }
        }
        if (!improved) radius *= 0.5;
      }
    }
    table.push_back({eps, best < 0 ? 1.0 : 1.0 - best});
  }
  return table;
}

AveragedConvexityReport averaged_convexity_check(
    const NormDescriptor& norm, const std::vector<std::vector<Rational>>& vs,
    const std::vector<Rational>& weights, double eps, double eta) {
  if (vs.size() != weights.size())
    throw DomainError("averaged_convexity_check: vector/weight mismatch");
  Rational wsum = 0;
  for (const Rational& w : weights) {
    if (w < 0) throw DomainError("averaged_convexity_check: negative weight");
    wsum += w;
  }
  if (wsum != 1)
    throw DomainError("averaged_convexity_check: weights must sum to 1");

  const std::size_t d = vs.front().size();
  std::vector<Rational> a(d, Rational(0));
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t c = 0; c < d; ++c) a[c] += weights[j] * vs[j][c];

  AveragedConvexityReport rep;
  rep.a_norm = norm.eval(a).approx;
  for (std::size_t j = 0; j < vs.size(); ++j) {
    std::vector<Rational> diff(d);
    for (std::size_t c = 0; c < d; ++c) diff[c] = vs[j][c] - a[c];
    rep.weighted_distance += rat_dbl(weights[j]) * norm.eval(diff).approx;
  }
  rep.premise = rep.a_norm > 1 - eta;
  rep.conclusion = rep.weighted_distance < eps;
  rep.counterexample = rep.premise && !rep.conclusion;
  return rep;
}

double l2_averaged_eta(double eps) {
  // delta for eps/2 from the parallelogram law, then eta = eps*delta/4.
  double delta2 = 1.0 - std::sqrt(1.0 - eps * eps / 16.0);
  return eps * delta2 / 4.0;
}

StrictConvexityResult strict_convexity_witness(const NormDescriptor& norm,
                                               int dim, long G) {
  if (dim < 2 || dim > 3)
    throw DomainError("strict_convexity_witness: dimension 2 or 3");
  std::vector<std::vector<double>> pts = sphere_grid(norm, dim, G);
  StrictConvexityResult res;
  double best = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      std::vector<double> mid(pts[i].size());
      for (std::size_t c = 0; c < mid.size(); ++c)
        mid[c] = (pts[i][c] + pts[j][c]) / 2;
      double m = norm_of(norm, mid);
      if (m > best) {
        best = m;
        res.v = pts[i];
        res.w = pts[j];
        res.midpoint_norm = m;
      }
    }
  }
  res.witness_found = best >= 1.0 - tolerance();
  return res;
}

}  // namespace summa
