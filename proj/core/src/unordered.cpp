#include "summa/unordered.hpp"

#include "summa/errors.hpp"
#include "summa/rng.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <set>

namespace summa {

namespace {
std::atomic<long> g_subset_guard{24};
}

long subset_guard() { return g_subset_guard.load(std::memory_order_relaxed); }

void set_subset_guard(long guard) {
  if (guard < 1 || guard > 30)
    throw DomainError("subset guard must lie in 1..30");
  g_subset_guard.store(guard, std::memory_order_relaxed);
}

SignPattern SignPattern::alternating(std::size_t n) {
  SignPattern p;
  p.signs.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.signs[i] = i % 2 == 0 ? 1 : -1;
  return p;
}

Value IndexedFamily::term(long j) const {
  if (j < 1) throw DomainError("IndexedFamily: indices are 1-based");
  if (kind == Kind::Finite) {
    if (j > static_cast<long>(terms.size()))
      throw DomainError("IndexedFamily: index out of range");
    return terms[static_cast<std::size_t>(j - 1)];
  }
  return gen(j);
}

IndexedFamily IndexedFamily::finite_real(std::vector<Rational> t) {
  IndexedFamily f;
  f.kind = Kind::Finite;
  f.vkind = ValueKind::Real;
  for (Rational& r : t) f.terms.push_back(Value::real(std::move(r)));
  return f;
}

IndexedFamily IndexedFamily::finite_complex(
    std::vector<std::pair<Rational, Rational>> t) {
  IndexedFamily f;
  f.kind = Kind::Finite;
  f.vkind = ValueKind::Complex;
  f.name = "finite-complex";
  for (auto& [re, im] : t)
    f.terms.push_back(Value::complex(std::move(re), std::move(im)));
  return f;
}

IndexedFamily IndexedFamily::finite_vector(std::vector<std::vector<Rational>> t,
                                           NormDescriptor nd) {
  IndexedFamily f;
  f.kind = Kind::Finite;
  f.vkind = ValueKind::Vector;
  f.norm = std::move(nd);
  f.name = "finite-vector";
  const std::size_t d = t.empty() ? 0 : t.front().size();
  for (auto& v : t) {
    if (v.size() != d) throw DomainError("IndexedFamily: ragged vector terms");
    f.terms.push_back(Value::vector(std::move(v)));
  }
  f.dim = f.terms.empty() ? 0 : f.terms.front().dim();
  return f;
}

IndexedFamily IndexedFamily::geometric(const Rational& ratio,
                                       const Rational& scale, long horizon) {
  if (rat_abs(ratio) >= 1)
    throw DomainError("geometric family needs |ratio| < 1");
  IndexedFamily f;
  f.kind = Kind::Streamed;
  f.vkind = ValueKind::Real;
  f.name = "geometric";
  f.horizon = horizon;
  f.gen = [ratio, scale](long j) {
    return Value::real(scale * rat_pow(ratio, j));
  };
  // sup over B in (l, inf) of |sum_B| <= |scale| |r|^(l+1) / (1 - |r|)
  Rational a = rat_abs(ratio), s = rat_abs(scale);
  f.tail_bound_pow = [a, s](long l) {
    return Rational(s * rat_pow(a, l + 1) / (1 - a));
  };
  f.tail_power = 1;
  f.tail_abs_bound = f.tail_bound_pow;
  return f;
}

IndexedFamily IndexedFamily::alternating_harmonic(long horizon) {
  IndexedFamily f;
  f.kind = Kind::Streamed;
  f.vkind = ValueKind::Real;
  f.name = "alternating-harmonic";
  f.horizon = horizon;
  f.gen = [](long j) {
    Rational r(1, j);
    return Value::real(j % 2 == 0 ? r : -r);
  };
  return f;  // no tail certificate: not absolutely summable
}

IndexedFamily IndexedFamily::orthogonal_decay(long horizon) {
  IndexedFamily f;
  f.kind = Kind::Streamed;
  f.vkind = ValueKind::Vector;
  f.dim = static_cast<int>(horizon);
  f.norm = NormDescriptor::l2();
  f.name = "orthogonal-decay";
  f.horizon = horizon;
  long d = horizon;
  f.gen = [d](long j) {
    std::vector<Rational> v(static_cast<std::size_t>(d), Rational(0));
    if (j <= d) v[static_cast<std::size_t>(j - 1)] = Rational(1, j);
    return Value::vector(std::move(v));
  };
  // ||sum_B v||_2^2 = sum_B 1/j^2 <= sum_{j>l} 1/j^2 < 1/l.
  f.tail_bound_pow = [](long l) { return l >= 1 ? Rational(1, l) : Rational(2); };
  f.tail_power = 2;
  return f;
}

IndexedFamily IndexedFamily::geometric_vector(const Rational& ratio,
                                              const Rational& scale,
                                              long horizon, int dim) {
  if (rat_abs(ratio) >= 1)
    throw DomainError("geometric family needs |ratio| < 1");
  IndexedFamily f;
  f.kind = Kind::Streamed;
  f.vkind = ValueKind::Vector;
  f.dim = dim;
  f.norm = NormDescriptor::l2();
  f.name = "geometric-vector";
  f.horizon = horizon;
  f.gen = [ratio, scale, dim](long j) {
    std::vector<Rational> v(static_cast<std::size_t>(dim), Rational(0));
    v[0] = scale * rat_pow(ratio, j);
    return Value::vector(std::move(v));
  };
  Rational a = rat_abs(ratio), s = rat_abs(scale);
  auto tb = [a, s](long l) { return Rational(s * rat_pow(a, l + 1) / (1 - a)); };
  f.tail_bound_pow = tb;
  f.tail_power = 1;
  f.tail_abs_bound = tb;
  return f;
}

IndexedFamily IndexedFamily::zeros(long horizon) {
  IndexedFamily f;
  f.kind = Kind::Streamed;
  f.vkind = ValueKind::Real;
  f.name = "zeros";
  f.horizon = horizon;
  f.gen = [](long) { return Value::real(0); };
  f.tail_bound_pow = [](long) { return Rational(0); };
  f.tail_power = 1;
  f.tail_abs_bound = f.tail_bound_pow;
  return f;
}

Value subset_sum(const IndexedFamily& F, const std::vector<long>& B) {
  Value acc = Value::zero_like(F.size() > 0 ? F.term(1)
                                            : Value::real(0));
  for (long j : B) acc += F.term(j);
  return acc;
}

namespace {

Value zero_of(const IndexedFamily& F) {
  return F.size() > 0 ? Value::zero_like(F.term(1)) : Value::real(0);
}

Scalar norm_scalar(const NormEval& e) {
  if (e.exact() && e.power == 1) return Scalar(*e.pow_val);
  return Scalar::flt(e.approx);
}

}  // namespace

SupNormResult y_norm(const IndexedFamily& F) {
  const long m = F.size();
  if (m > subset_guard())
    throw GuardError("y_norm: family too large for exhaustive enumeration "
                     "(m <= " + std::to_string(subset_guard()) +
                     "); use sampling mode or raise --guard-subsets");
  SupNormResult res;
  res.eval = NormEval{};  // zero
  res.eval.pow_val = Rational(0);
  res.norm = Scalar(0);
  if (m == 0) return res;

  std::vector<Value> terms;
  for (long j = 1; j <= m; ++j) terms.push_back(F.term(j));

  Value run = zero_of(F);
  std::vector<bool> in(static_cast<std::size_t>(m), false);
  bool have = false;
  std::uint64_t total = std::uint64_t(1) << m;
  for (std::uint64_t i = 1; i < total; ++i) {
    int b = std::countr_zero(i);
    in[b] = !in[b];
    if (in[b])
      run += terms[static_cast<std::size_t>(b)];
    else
      run -= terms[static_cast<std::size_t>(b)];
    NormEval e = value_norm(run, F.norm);
    if (!have || norm_cmp(e, res.eval) > 0) {
      have = true;
      res.eval = e;
      res.argmax.clear();
      for (long j = 0; j < m; ++j)
        if (in[static_cast<std::size_t>(j)]) res.argmax.push_back(j + 1);
    }
  }
  res.norm = norm_scalar(res.eval);
  return res;
}

SupNormResult z_norm(const IndexedFamily& F) {
  const long m = F.size();
  SupNormResult res;
  res.eval.pow_val = Rational(0);
  res.norm = Scalar(0);
  if (m == 0) return res;

  if (F.vkind == ValueKind::Real) {
    // Signs align with the terms: sup = sum |f_j|, attained on the full set.
    Rational acc = 0;
    for (long j = 1; j <= m; ++j) {
      Rational v = F.term(j).re;
      acc += rat_abs(v);
      res.argmax.push_back(j);
      res.arg_coeff.push_back(v >= 0 ? 1 : -1);
    }
    res.eval.pow_val = acc;
    res.eval.power = 1;
    res.eval.approx = rat_dbl(acc);
    res.norm = Scalar(acc);
    return res;
  }

  if (m > kSignedSubsetGuard)
    throw GuardError("z_norm: family too large for signed-subset enumeration "
                     "(m <= 16 for non-scalar terms); use sampling mode");

  std::vector<Value> terms;
  for (long j = 1; j <= m; ++j) terms.push_back(F.term(j));
  std::vector<int> state(static_cast<std::size_t>(m), 0);  // 0 = out, 1, -1
  Value run = zero_of(F);
  bool have = false;

  // DFS over {out, +1, -1}^m with incremental sums.
  std::function<void(long)> rec = [&](long idx) {
    if (idx == m) {
      if (std::all_of(state.begin(), state.end(), [](int s) { return s == 0; }))
        return;
      NormEval e = value_norm(run, F.norm);
      if (!have || norm_cmp(e, res.eval) > 0) {
        have = true;
        res.eval = e;
        res.argmax.clear();
        res.arg_coeff.clear();
        for (long j = 0; j < m; ++j) {
          if (state[static_cast<std::size_t>(j)] != 0) {
            res.argmax.push_back(j + 1);
            res.arg_coeff.push_back(state[static_cast<std::size_t>(j)]);
          }
        }
      }
      return;
    }
    auto& t = terms[static_cast<std::size_t>(idx)];
    state[static_cast<std::size_t>(idx)] = 0;
    rec(idx + 1);
    state[static_cast<std::size_t>(idx)] = 1;
    run += t;
    rec(idx + 1);
    run -= t;
    state[static_cast<std::size_t>(idx)] = -1;
    run -= t;
    rec(idx + 1);
    run += t;
    state[static_cast<std::size_t>(idx)] = 0;
  };
  rec(0);
  res.norm = norm_scalar(res.eval);
  return res;
}

SupNormResult w_norm(const IndexedFamily& F, int K) {
  if (F.vkind != ValueKind::Complex)
    throw DomainError("w_norm: complex scalar terms required");
  if (K < 2) throw DomainError("w_norm: need K >= 2");
  const long m = F.size();
  if (m > kWNormGuard)
    throw GuardError("w_norm: family too large (m <= 12)");

  SupNormResult res;
  res.norm = Scalar(0);
  res.eval.approx = 0;
  if (m == 0) return res;

  // W(K) = max over u on the unit circle of
  //   sum_j max_r Re(conj(u) w^r f_j),
  // where the per-term maxima are >= |f_j| cos(pi/K) >= 0, so the full
  // index set is always optimal and no subset maximization is needed.
  // The optimal root assignment is constant between consecutive
  // "boundary" angles arg f_j + (2r+1) pi / K; on each sector the best
  // candidate value is |sum_j w^{r_j} f_j| for that sector's assignment,
  // and the global optimum is attained at one of these assignments.
  const double twopi = 2 * std::numbers::pi;
  std::vector<std::complex<double>> f(static_cast<std::size_t>(m));
  for (long j = 1; j <= m; ++j) {
    const Value v = F.term(j);
    f[static_cast<std::size_t>(j - 1)] = {rat_dbl(v.re), rat_dbl(v.im)};
  }
  std::vector<double> bounds;
  for (long j = 0; j < m; ++j) {
    if (std::abs(f[static_cast<std::size_t>(j)]) == 0) continue;
    double phi = std::arg(f[static_cast<std::size_t>(j)]);
    for (int r = 0; r < K; ++r) {
      double b = std::fmod(phi + (2 * r + 1) * std::numbers::pi / K, twopi);
      if (b < 0) b += twopi;
      bounds.push_back(b);
    }
  }
  if (bounds.empty()) return res;  // all terms zero
  std::sort(bounds.begin(), bounds.end());

  double best = -1;
  std::vector<int> best_roots;
  auto eval_at = [&](double theta) {
    std::complex<double> S = 0;
    std::vector<int> roots(static_cast<std::size_t>(m), 0);
    for (long j = 0; j < m; ++j) {
      const auto& z = f[static_cast<std::size_t>(j)];
      if (std::abs(z) == 0) continue;
      double bestre = -1e300;
      int bestr = 0;
      for (int r = 0; r < K; ++r) {
        std::complex<double> w = std::polar(1.0, twopi * r / K);
        double re = (std::conj(std::polar(1.0, theta)) * w * z).real();
        if (re > bestre) {
          bestre = re;
          bestr = r;
        }
      }
      roots[static_cast<std::size_t>(j)] = bestr;
      S += std::polar(1.0, twopi * bestr / K) * z;
    }
    if (std::abs(S) > best) {
      best = std::abs(S);
      best_roots = roots;
    }
  };
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    double next = i + 1 < bounds.size() ? bounds[i + 1] : bounds[0] + twopi;
    eval_at((bounds[i] + next) / 2);
  }

  res.norm = Scalar::flt(best);
  res.eval.approx = best;
  for (long j = 1; j <= m; ++j) res.argmax.push_back(j);
  res.arg_coeff = best_roots;
  return res;
}

namespace {

// sup over subsets of (l, hi] of ||sum_B f||, exact; empty range -> 0.
NormEval window_subset_sup(const IndexedFamily& F, long l, long hi,
                           std::vector<long>* arg = nullptr) {
  NormEval best;
  best.pow_val = Rational(0);
  best.power = 1;
  best.approx = 0;
  long w = hi - l;
  if (w <= 0) return best;

  if (F.vkind == ValueKind::Real) {
    Rational pos = 0, neg = 0;
    std::vector<long> parg, narg;
    for (long j = l + 1; j <= hi; ++j) {
      Rational v = F.term(j).re;
      if (v > 0) {
        pos += v;
        parg.push_back(j);
      } else if (v < 0) {
        neg -= v;
        narg.push_back(j);
      }
    }
    best.pow_val = std::max(pos, neg);
    best.approx = rat_dbl(*best.pow_val);
    if (arg) *arg = pos >= neg ? parg : narg;
    return best;
  }

  if (w > 20)
    throw GuardError("window_subset_sup: window too large for enumeration");
  std::vector<Value> terms;
  for (long j = l + 1; j <= hi; ++j) terms.push_back(F.term(j));
  Value run = Value::zero_like(terms.front());
  std::vector<bool> in(static_cast<std::size_t>(w), false);
  bool have = false;
  for (std::uint64_t i = 1; i < (std::uint64_t(1) << w); ++i) {
    int b = std::countr_zero(i);
    in[b] = !in[b];
    if (in[b])
      run += terms[static_cast<std::size_t>(b)];
    else
      run -= terms[static_cast<std::size_t>(b)];
    NormEval e = value_norm(run, F.norm);
    if (!have || norm_cmp(e, best) > 0) {
      have = true;
      best = e;
      if (arg) {
        arg->clear();
        for (long j = 0; j < w; ++j)
          if (in[static_cast<std::size_t>(j)]) arg->push_back(l + 1 + j);
      }
    }
  }
  return best;
}

// Compare ||.||^power representation against a Scalar threshold: value < eps.
bool norm_pow_lt(const Rational& pow_val, int power, const Scalar& eps) {
  if (eps.exact()) {
    Rational e = eps.rat();
    if (e <= 0) return false;
    return pow_val < rat_pow(e, power);
  }
  return std::pow(rat_dbl(pow_val), 1.0 / power) < eps.dbl();
}

bool norm_eval_lt(const NormEval& e, const Scalar& eps) {
  if (e.exact()) return norm_pow_lt(*e.pow_val, e.power, eps);
  return e.approx < eps.dbl();
}

bool norm_eval_geq(const NormEval& e, const Scalar& eps) {
  return !norm_eval_lt(e, eps);
}

}  // namespace

CauchyVerdict generalized_cauchy_check(const IndexedFamily& F,
                                       const Scalar& eps, long N) {
  if (!(eps > Scalar(0))) throw DomainError("generalized_cauchy_check: eps > 0");
  CauchyVerdict v;
  const long n = std::min(N, F.size());

  // Pass: smallest prefix with a certified sup over disjoint finite sets.
  if (F.kind == IndexedFamily::Kind::Finite) {
    auto tail_ok = [&](long l) {
      if (F.vkind == ValueKind::Real || n - l <= 20)
        return norm_eval_lt(window_subset_sup(F, l, n), eps);
      // scalar reduction: sum of term norms over the tail
      RootSum acc;
      for (long j = l + 1; j <= n; ++j) {
        NormEval e = value_norm(F.term(j), F.norm);
        if (!e.exact()) return false;
        acc.add(1, *e.pow_val, static_cast<unsigned>(e.power));
      }
      return rat_dbl(acc.bounds(64).second) < eps.dbl();
    };
    for (long l = 0; l <= n; ++l) {
      if (tail_ok(l)) {
        v.status = CauchyVerdict::Status::Pass;
        v.prefix = l;
        v.certificate = "finite family: all subset sums beyond prefix stay below eps";
        return v;
      }
    }
  } else if (F.tail_bound_pow) {
    for (long l = 0; l <= n; ++l) {
      if (norm_pow_lt(F.tail_bound_pow(l), F.tail_power, eps)) {
        v.status = CauchyVerdict::Status::Pass;
        v.prefix = l;
        v.certificate = "analytic tail bound " +
                        rat_str(F.tail_bound_pow(l)) +
                        (F.tail_power == 2 ? " on the squared norm" : "") +
                        " below eps at prefix " + std::to_string(l);
        return v;
      }
    }
  }

  // Fail: witnesses along a geometric prefix ladder.  A Fail verdict means
  // every prefix on the ladder (up to l*, with l* at least N/4) admits a
  // disjoint finite B with ||sum_B f|| >= eps; the strongest witness is
  // reported.  Finite horizons cannot certify divergence outright.
  std::vector<long> ladder = {0};
  for (long l = 1; l <= n / 2; l *= 2) ladder.push_back(l);
  long lstar = -1;
  std::vector<long> best_witness;
  double best_norm = 0;
  for (long l : ladder) {
    std::vector<long> arg;
    bool found = false;
    if (F.vkind == ValueKind::Real) {
      NormEval sup = window_subset_sup(F, l, n, &arg);
      found = norm_eval_geq(sup, eps) && sup.approx > 0;
      if (found) best_norm = sup.approx;
    } else if (n - l <= 20) {
      NormEval sup = window_subset_sup(F, l, n, &arg);
      found = norm_eval_geq(sup, eps) && sup.approx > 0;
      if (found) best_norm = sup.approx;
    } else {
      // sampled subset search
      Rng rng(0x5eedULL + static_cast<std::uint64_t>(l));
      for (int trial = 0; trial < 200 && !found; ++trial) {
        std::vector<long> b;
        for (long j = l + 1; j <= n; ++j)
          if (rng.coin()) b.push_back(j);
        if (b.empty()) continue;
        NormEval e = value_norm(subset_sum(F, b), F.norm);
        if (norm_eval_geq(e, eps)) {
          found = true;
          arg = b;
          best_norm = e.approx;
        }
      }
    }
    if (!found) break;
    lstar = l;
    best_witness = arg;
  }
  if (lstar >= std::max<long>(1, n / 4)) {
    v.status = CauchyVerdict::Status::Fail;
    v.witness = best_witness;
    v.witness_refutes_prefix = lstar;
    v.witness_norm = best_norm;
    v.certificate = "within the horizon, every tested prefix up to " +
                    std::to_string(lstar) +
                    " admits a disjoint subset with sum >= eps";
    return v;
  }

  v.status = CauchyVerdict::Status::Inconclusive;
  v.certificate = F.kind == IndexedFamily::Kind::Streamed && !F.tail_bound_pow
                      ? "no analytic tail bound attached; finite evidence only"
                      : "no certificate at this horizon";
  return v;
}

SumResult unordered_sum_eval(const IndexedFamily& F, const Scalar& eps) {
  CauchyVerdict v = generalized_cauchy_check(F, eps, F.size());
  if (v.status != CauchyVerdict::Status::Pass)
    throw PreconditionError(
        "unordered_sum_eval: generalized Cauchy check did not pass at eps");
  SumResult r;
  r.value = zero_of(F);
  for (long j = 1; j <= v.prefix; ++j) r.value += F.term(j);
  r.error_bound = eps;
  r.terms_used = v.prefix;
  return r;
}

namespace {

void check_permutation(const std::vector<long>& perm, long n) {
  if (static_cast<long>(perm.size()) != n)
    throw DomainError("rearrangement_test: permutation length mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (long p : perm) {
    if (p < 1 || p > n || seen[static_cast<std::size_t>(p - 1)])
      throw DomainError("rearrangement_test: not a bijection");
    seen[static_cast<std::size_t>(p - 1)] = true;
  }
}

}  // namespace

RearrangementReport rearrangement_test(const IndexedFamily& F,
                                       const std::vector<long>& perm,
                                       const Scalar& eps) {
  const long n = F.size();
  check_permutation(perm, n);
  RearrangementReport rep;

  if (F.kind == IndexedFamily::Kind::Finite) {
    Value s = zero_of(F), ps = zero_of(F);
    for (long j = 1; j <= n; ++j) s += F.term(j);
    for (long j = 0; j < n; ++j) ps += F.term(perm[static_cast<std::size_t>(j)]);
    rep.sum = s;
    rep.permuted_sum = ps;
    rep.exact = true;
    rep.agree = s == ps;
    return rep;
  }

  CauchyVerdict v = generalized_cauchy_check(F, eps, n);
  if (v.status == CauchyVerdict::Status::Pass) {
    Value s = zero_of(F);
    for (long j = 1; j <= v.prefix; ++j) s += F.term(j);
    // Shortest permuted prefix containing A_eps = {1..prefix}.
    long lp = 0;
    for (long j = 0; j < n; ++j)
      if (perm[static_cast<std::size_t>(j)] <= v.prefix) lp = j + 1;
    Value ps = zero_of(F);
    for (long j = 0; j < lp; ++j) ps += F.term(perm[static_cast<std::size_t>(j)]);
    rep.sum = s;
    rep.permuted_sum = ps;
    NormEval diff = value_norm(s - ps, F.norm);
    const Scalar two_eps = eps + eps;
    if (diff.exact() && two_eps.exact())
      rep.agree = *diff.pow_val <= rat_pow(two_eps.rat(), diff.power);
    else
      rep.agree = diff.approx <= two_eps.dbl();
    return rep;
  }

  rep.sum = zero_of(F);
  rep.permuted_sum = rep.sum;
  rep.agree = false;
  if (v.status != CauchyVerdict::Status::Fail || F.vkind != ValueKind::Real)
    return rep;

  // Witness mode: build a rearrangement whose partial sums oscillate.
  // Blocks B_k of disjoint indices with ||sum_{B_k}|| >= eps are packed
  // after initial segments A_k; both are filled first-fit by index.
  std::vector<long> order;
  std::set<long> used;
  long cover = 0;  // A_k = {1..cover} plus whatever blocks consumed
  std::vector<double> block_norms;
  for (int k = 0; k < 4; ++k) {
    long next_cover = std::min<long>(n, cover + 1);
    for (long j = 1; j <= next_cover; ++j)
      if (used.insert(j).second) order.push_back(j);
    cover = next_cover;
    std::vector<long> block;
    Rational pos = 0, neg = 0;
    std::vector<long> parg, narg;
    bool done = false;
    for (long j = cover + 1; j <= n && !done; ++j) {
      if (used.count(j)) continue;
      Rational val = F.term(j).re;
      if (val > 0) {
        pos += val;
        parg.push_back(j);
        if (!eps.exact() ? rat_dbl(pos) >= eps.dbl() : pos >= eps.rat()) {
          block = parg;
          done = true;
        }
      } else if (val < 0) {
        neg -= val;
        narg.push_back(j);
        if (!eps.exact() ? rat_dbl(neg) >= eps.dbl() : neg >= eps.rat()) {
          block = narg;
          done = true;
        }
      }
    }
    if (block.empty()) break;
    for (long j : block) {
      used.insert(j);
      order.push_back(j);
    }
    NormEval e = value_norm(subset_sum(F, block), F.norm);
    block_norms.push_back(e.approx);
    cover = *std::max_element(block.begin(), block.end());
  }
  rep.divergent_prefix = order;
  rep.block_norms = block_norms;
  return rep;
}

SignUniformVerdict sign_uniform_convergence_check(const IndexedFamily& F,
                                                  const Scalar& eps, long N,
                                                  bool allow_sampled) {
  SignUniformVerdict out;
  const long n = std::min(N, F.size());
  CauchyVerdict cv = generalized_cauchy_check(F, eps, n);
  if (cv.status != CauchyVerdict::Status::Pass) {
    out.status = SignUniformVerdict::Status::Inconclusive;
    out.note = "generalized Cauchy verdict unavailable: " + cv.certificate;
    return out;
  }
  const long L = cv.prefix;
  out.L_eps = L;
  const Scalar two_eps = eps + eps;

  // Any signed window sum over (l, n] with l >= L splits into two disjoint
  // subset sums, each < eps by the Cauchy certificate; the checks below
  // re-verify that numerically.
  if (F.tail_bound_pow && F.kind == IndexedFamily::Kind::Streamed) {
    // sup ||sum_B (+-)v|| <= 2 sup ||sum_B v|| handled per split; the
    // analytic bound applies to each split separately.
    Rational tb = F.tail_bound_pow(L);
    if (norm_pow_lt(tb, F.tail_power, eps)) {
      out.status = SignUniformVerdict::Status::Pass;
      out.method = "tail-bound";
      out.note = "each signed half stays below eps beyond prefix " +
                 std::to_string(L);
      return out;
    }
  }

  if (F.tail_abs_bound || F.vkind == ValueKind::Real || n - L <= 40) {
    // scalar reduction: sum of term norms over the tail
    RootSum acc;
    bool exact_ok = true;
    for (long j = L + 1; j <= n; ++j) {
      NormEval e = value_norm(F.term(j), F.norm);
      if (!e.exact()) {
        exact_ok = false;
        break;
      }
      acc.add(1, *e.pow_val, static_cast<unsigned>(e.power));
    }
    if (exact_ok) {
      Rational hi = acc.bounds(64).second;
      if (F.tail_abs_bound) hi += F.tail_abs_bound(n);
      if ((two_eps.exact() && hi < two_eps.rat()) ||
          (!two_eps.exact() && rat_dbl(hi) < two_eps.dbl())) {
        out.status = SignUniformVerdict::Status::Pass;
        out.method = "scalar-reduction";
        out.note = "termwise norm tail below 2 eps";
        return out;
      }
    }
  }

  const long w = n - L;
  if (w <= kSignWindowGuard) {
    // Ternary enumeration covers every window (l, m] with L <= l < m <= n
    // and every sign pattern on it: each such signed sum is a difference
    // of two disjoint subset sums inside (L, n].
    IndexedFamily window = F;
    window.kind = IndexedFamily::Kind::Finite;
    window.terms.clear();
    for (long j = L + 1; j <= n; ++j) window.terms.push_back(F.term(j));
    window.gen = nullptr;
    SupNormResult z = z_norm(window);
    bool ok = two_eps.exact() && z.eval.exact()
                  ? rat_pow(two_eps.rat(), z.eval.power) > *z.eval.pow_val
                  : z.eval.approx < two_eps.dbl();
    out.status = ok ? SignUniformVerdict::Status::Pass
                    : SignUniformVerdict::Status::Fail;
    out.method = "exhaustive";
    return out;
  }

  if (!allow_sampled)
    throw GuardError("sign_uniform_convergence_check: window too large for "
                     "exhaustive mode without the sampling flag");
  Rng rng(0xab5eedULL);
  for (int trial = 0; trial < 2000; ++trial) {
    long l = L + static_cast<long>(rng.below(static_cast<std::uint64_t>(w)));
    long m = l + 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(n - l)));
    Value acc = zero_of(F);
    for (long j = l + 1; j <= m; ++j) {
      Value t = F.term(j);
      acc += rng.coin() ? t : -t;
    }
    NormEval e = value_norm(acc, F.norm);
    if (!norm_eval_lt(e, two_eps)) {
      out.status = SignUniformVerdict::Status::Fail;
      out.method = "sampled";
      out.note = "violating signed window found";
      return out;
    }
  }
  out.status = SignUniformVerdict::Status::Pass;
  out.method = "sampled";
  out.note = "no witness found";
  return out;
}

}  // namespace summa
