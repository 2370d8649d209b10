// Acceptance gate: runs every criterion at its stated tolerance and
// prints one pass/fail line per criterion.  Exit status 0 iff all pass.

#include "summa/cli.hpp"
#include "summa/dyadic.hpp"
#include "summa/json_io.hpp"
#include "summa/martingale.hpp"
#include "summa/measure.hpp"
#include "summa/paths.hpp"
#include "summa/rng.hpp"
#include "summa/rootsum.hpp"
#include "summa/suites.hpp"
#include "summa/unordered.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace summa;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, bool ok,
               const std::string& detail = "") {
  std::printf("[%2d] %-58s %s%s%s\n", number, name.c_str(),
              ok ? "PASS" : "FAIL", detail.empty() ? "" : "  ", detail.c_str());
  if (!ok) ++g_failures;
  std::fflush(stdout);
}

// 1. Khintchine exactness: enumeration = multinomial = 3(sum a^2)^2 - 2 sum a^4,
//    zero tolerance, 10^3 random instances with n <= 12.
void criterion_1() {
  Rng rng(101);
  bool ok = true;
  for (int i = 0; i < 1000 && ok; ++i) {
    int n = static_cast<int>(rng.range(1, 12));
    std::vector<Rational> a;
    for (int k = 0; k < n; ++k) a.push_back(rng.rational(-9, 9, 6));
    Rational enu = rademacher_moment_enumerate(a, 4);
    Rational mul = rademacher_moment_multinomial(a, 4);
    Rational s2 = 0, s4 = 0;
    for (const Rational& x : a) {
      s2 += x * x;
      s4 += rat_pow(x, 4);
    }
    ok &= enu == mul && enu == 3 * s2 * s2 - 2 * s4;
  }
  criterion(1, "Khintchine p=4 exactness (enumeration = multinomial = closed form)", ok);
}

// 2. L2 and Linf Rademacher identities, exact, n <= 12.
void criterion_2() {
  Rng rng(102);
  bool ok = true;
  for (int i = 0; i < 400 && ok; ++i) {
    int n = static_cast<int>(rng.range(1, 12));
    std::vector<Rational> a;
    Rational s2 = 0, sabs = 0;
    for (int k = 0; k < n; ++k) {
      a.push_back(rng.rational(-9, 9, 6));
      s2 += a.back() * a.back();
      sabs += rat_abs(a.back());
    }
    // build the actual step function and integrate
    DyadicStep f = DyadicStep::constant(0, n);
    for (int l = 1; l <= n; ++l)
      f = f + rademacher(l, n).scaled(a[static_cast<std::size_t>(l - 1)]);
    ok &= f.lp_pow(2) == s2;
    ok &= f.linf() == sabs;
    ok &= rademacher_moment(a, 2) == s2;
    SignAverageReport rep = khintchine_report(a, Exponent::infinity());
    ok &= rep.moment.exact() && rep.moment.rat() == sabs;
  }
  criterion(2, "Rademacher identities ||f||_2^2 = sum a^2, ||f||_inf = sum|a|", ok);
}

// 3. Dyadic weak-type strictness on 10^3 random measures and a t-grid;
//    HL grid variant bounded by 2 mu / t.
void criterion_3() {
  Rng rng(103);
  bool ok = true;
  int nonempty = 0;
  for (int i = 0; i < 1000 && ok; ++i) {
    int lev = static_cast<int>(rng.range(2, 5));
    std::vector<Rational> dens;
    for (long c = 0; c < (1L << lev); ++c) dens.push_back(rng.rational(0, 6, 4));
    std::vector<PointMass> atoms;
    if (rng.coin())
      atoms.push_back({Rational(rng.range(0, 31), 32), rng.rational(1, 4, 3)});
    DyadicMeasure mu = DyadicMeasure::from(
        DyadicStep::from_values(lev, std::move(dens)), std::move(atoms));
    for (const Rational& t :
         {Rational(1, 2), Rational(1), Rational(2), Rational(4), Rational(8)}) {
      LevelSetReport rep = maximal_level_sets(mu, t, 7);
      if (!rep.intervals.empty()) {
        ++nonempty;
        ok &= rep.strict_certified && t * rep.lebesgue < rep.mass;
      }
    }
    if (i % 10 == 0) {
      HlReport hl = hl_maximal_weak_type(mu, Rational(3), 5);
      ok &= hl.holds_lower && hl.holds_upper_with_slack;
    }
  }
  criterion(3, "dyadic weak type strict (t|E_t| < mu(E_t)); HL constant 2", ok,
            "nonempty level sets: " + std::to_string(nonempty));
}

// 4. Measure decompositions on exhaustive subset lattices, n <= 12, exact.
void criterion_4() {
  Rng rng(104);
  bool ok = true;
  for (int round = 0; round < 60 && ok; ++round) {
    const int n = static_cast<int>(rng.range(1, 12));
    auto sp = std::make_shared<AtomSpace>(AtomSpace::uniform(n));
    std::vector<Rational> w, nuw;
    for (int a = 0; a < n; ++a) {
      w.push_back(rng.rational(-9, 9, 6));
      nuw.push_back(rng.range(0, 4) == 0 ? Rational(0) : rng.rational(1, 6, 4));
    }
    SignedMeasure mu = SignedMeasure::real(sp, w);
    SignedMeasure nu = SignedMeasure::real(sp, nuw);
    JordanParts jp = jordan_decompose(mu);
    HahnParts h = hahn_decompose(mu);
    LebesgueParts lp = lebesgue_decompose(mu, nu);
    std::vector<bool> inP(static_cast<std::size_t>(n), false);
    for (int a : h.P) inP[static_cast<std::size_t>(a)] = true;

    for (std::uint64_t A = 0; A < (std::uint64_t(1) << n) && ok; ++A) {
      Rational muA = 0, tv = 0, pos = 0, neg = 0, muP = 0, muQ = 0;
      Rational acA = 0, sgA = 0, recon = 0;
      for (int a = 0; a < n; ++a) {
        if (!(A >> a & 1)) continue;
        const Rational& x = w[static_cast<std::size_t>(a)];
        muA += x;
        tv += rat_abs(x);
        pos += jp.pos.weights[static_cast<std::size_t>(a)].re;
        neg += jp.neg.weights[static_cast<std::size_t>(a)].re;
        (inP[static_cast<std::size_t>(a)] ? muP : muQ) += x;
        acA += lp.ac.weights[static_cast<std::size_t>(a)].re;
        sgA += lp.sing.weights[static_cast<std::size_t>(a)].re;
        recon += lp.density[static_cast<std::size_t>(a)] *
                 nuw[static_cast<std::size_t>(a)];
      }
      ok &= pos - neg == muA && pos + neg == tv;       // Jordan
      ok &= pos == muP && neg == -muQ;                 // Hahn
      ok &= acA + sgA == muA && recon == acA;          // Lebesgue + density
      // two-set TV over all splits of A
      Rational best = 0;
      for (std::uint64_t B = A;; B = (B - 1) & A) {
        Rational mb = 0;
        for (int a = 0; a < n; ++a)
          if ((A >> a & 1) && (B >> a & 1)) mb += w[static_cast<std::size_t>(a)];
        best = std::max(best, Rational(rat_abs(mb) + rat_abs(muA - mb)));
        if (B == 0) break;
      }
      ok &= best == tv;
    }
  }
  criterion(4, "measure decompositions exact on exhaustive lattices (n <= 12)", ok);
}

// 5. Martingale identities with zero error on 10^3 random filtrations.
void criterion_5() {
  Rng rng(105);
  bool ok = true;
  for (int i = 0; i < 1000 && ok; ++i) {
    // random refining chain, <= 5 stages, <= 32 atoms
    const int n = static_cast<int>(rng.range(2, 32));
    std::vector<Rational> bw;
    Rational tot = 0;
    for (int a = 0; a < n; ++a) {
      bw.push_back(rng.rational(1, 4, 1));
      tot += bw.back();
    }
    for (Rational& x : bw) x /= tot;
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) labels.push_back("a" + std::to_string(a));
    auto sp = std::make_shared<AtomSpace>(AtomSpace::weighted(labels, bw));
    std::vector<std::vector<int>> cells = {{}};
    for (int a = 0; a < n; ++a) cells[0].push_back(a);
    std::vector<PartitionAlgebra> parts;
    int stages = static_cast<int>(rng.range(1, 5));
    for (int s = 0; s < stages; ++s) {
      std::vector<std::vector<int>> next;
      for (auto& cell : cells) {
        if (cell.size() >= 2 && rng.coin()) {
          std::size_t cut = 1 + rng.below(cell.size() - 1);
          next.emplace_back(cell.begin(), cell.begin() + static_cast<long>(cut));
          next.emplace_back(cell.begin() + static_cast<long>(cut), cell.end());
        } else {
          next.push_back(cell);
        }
      }
      cells = next;
      parts.push_back(PartitionAlgebra::from_cells(cells, n));
    }
    auto filt = std::make_shared<Filtration>(Filtration::make(sp, parts));

    std::vector<Value> f;
    for (int a = 0; a < n; ++a) f.push_back(Value::real(rng.rational(-9, 9, 5)));
    AdaptedSequence seq = AdaptedSequence::from_final(filt, f);
    const int N = seq.n_stages();

    // tower
    int j = static_cast<int>(rng.range(1, N));
    int k = static_cast<int>(rng.range(j, N));
    auto ek = condition_to_stage(*filt, f, k);
    auto ekj = condition_to_stage(*filt, ek, j);
    auto ej = condition_to_stage(*filt, f, j);
    for (int a = 0; a < n; ++a)
      ok &= ekj[static_cast<std::size_t>(a)].re == ej[static_cast<std::size_t>(a)].re;

    // conditional Jensen (square) and product rule
    std::vector<Value> sq;
    for (const Value& v : f) sq.push_back(Value::real(v.re * v.re));
    auto esq = condition_to_stage(*filt, sq, j);
    for (int a = 0; a < n; ++a)
      ok &= ej[static_cast<std::size_t>(a)].re * ej[static_cast<std::size_t>(a)].re <=
            esq[static_cast<std::size_t>(a)].re;
    std::vector<Value> g(static_cast<std::size_t>(n), Value::real(0));
    for (const auto& cell : filt->stage(j).cells) {
      Rational c = rng.rational(-3, 3, 2);
      for (int a : cell) g[static_cast<std::size_t>(a)] = Value::real(c);
    }
    std::vector<Value> fg;
    for (int a = 0; a < n; ++a)
      fg.push_back(Value::real(f[static_cast<std::size_t>(a)].re *
                               g[static_cast<std::size_t>(a)].re));
    auto efg = condition_to_stage(*filt, fg, j);
    for (int a = 0; a < n; ++a)
      ok &= efg[static_cast<std::size_t>(a)].re ==
            ej[static_cast<std::size_t>(a)].re * g[static_cast<std::size_t>(a)].re;

    // orthogonality and Pythagoras
    auto inner = [&](const std::vector<Value>& x, const std::vector<Value>& y) {
      Rational acc = 0;
      for (int a = 0; a < n; ++a)
        acc += filt->atom_mass(a) * x[static_cast<std::size_t>(a)].re *
               y[static_cast<std::size_t>(a)].re;
      return acc;
    };
    Rational pyth = inner(seq.values[0], seq.values[0]);
    for (int s = 1; s < N; ++s) {
      std::vector<Value> d;
      for (int a = 0; a < n; ++a)
        d.push_back(seq.stage(s + 1)[static_cast<std::size_t>(a)] -
                    seq.stage(s)[static_cast<std::size_t>(a)]);
      ok &= inner(seq.values[0], d) == 0;
      pyth += inner(d, d);
    }
    ok &= pyth == inner(seq.values[static_cast<std::size_t>(N - 1)],
                        seq.values[static_cast<std::size_t>(N - 1)]);

    // Doob round trip on |f_j| + drift
    std::vector<std::vector<Value>> subv;
    Rational drift = 0;
    for (int s = 1; s <= N; ++s) {
      std::vector<Value> row;
      for (int a = 0; a < n; ++a)
        row.push_back(Value::real(
            rat_abs(seq.stage(s)[static_cast<std::size_t>(a)].re) + drift));
      subv.push_back(std::move(row));
      drift += 1;
    }
    AdaptedSequence sub = AdaptedSequence::make(filt, std::move(subv));
    DoobParts parts2 = doob_decompose(sub);
    ok &= classify(parts2.martingale).cls == SequenceClass::Martingale;
    for (int s = 1; s <= N; ++s)
      for (int a = 0; a < n; ++a)
        ok &= parts2.martingale.stage(s)[static_cast<std::size_t>(a)].re +
                  parts2.predictable.stage(s)[static_cast<std::size_t>(a)].re ==
              sub.stage(s)[static_cast<std::size_t>(a)].re;

    // stopping: first passage truncated; stopped sequence; optional stopping
    StoppingTime tau =
        StoppingTime::first_passage(seq, rng.rational(1, 6, 2)).truncated(N);
    ok &= classify(stopped_sequence(seq, tau)).cls == SequenceClass::Martingale;
    ok &= optional_stopping_check(seq, tau).holds;
  }
  criterion(5, "martingale identities exact on 10^3 random filtrations", ok);
}

// 6. Doob Lp bound for p in {2, 3/2} on 10^4 random nonnegative dyadic
//    submartingales, certified rational comparison.
void criterion_6() {
  Rng rng(106);
  bool ok = true;
  int certified = 0;
  for (int i = 0; i < 10000 && ok; ++i) {
    int lev = static_cast<int>(rng.range(1, 3));
    std::vector<Rational> dens;
    for (long c = 0; c < (1L << lev); ++c) dens.push_back(rng.rational(0, 8, 4));
    AdaptedSequence mart =
        AdaptedSequence::dyadic_martingale(DyadicStep::from_values(lev, dens));
    // random nonnegative submartingale: |martingale| plus a drift
    std::vector<std::vector<Value>> subv;
    Rational drift = 0;
    for (int s = 1; s <= mart.n_stages(); ++s) {
      std::vector<Value> row;
      for (const Value& v : mart.stage(s))
        row.push_back(Value::real(rat_abs(v.re) + drift));
      subv.push_back(std::move(row));
      if (rng.coin()) drift += rng.rational(0, 1, 2);
    }
    AdaptedSequence sub = AdaptedSequence::make(mart.filt, std::move(subv));
    const Exponent p = rng.coin() ? Exponent(2) : Exponent(Rational(3, 2));
    DoobLpReport rep = doob_lp_check(sub, p);
    ok &= rep.holds;
    certified += rep.certified;
  }
  criterion(6, "Doob Lp bound, p in {2, 3/2}, certified exact comparisons", ok,
            "certified: " + std::to_string(certified) + "/10000");
}

// 7. dirac_singular with 8 stages: unit L1 norms, eventual zero at samples.
void criterion_7() {
  ExperimentTrace tr = run_experiment("dirac_singular", {{"stages", "8"}});
  bool ok = tr.assertions_hold && tr.rows.size() == 8;
  for (const auto& row : tr.rows) ok &= row[1] == "1";
  // f_j(x) = 0 for j > k at x = 1 - 2^-k (columns: samples 0, 1/2, 3/4, 7/8)
  for (std::size_t r = 0; r < tr.rows.size(); ++r) {
    long stage = static_cast<long>(r) + 1;
    if (stage > 1) ok &= tr.rows[r][5] == "0";
    if (stage > 2) ok &= tr.rows[r][6] == "0";
    if (stage > 3) ok &= tr.rows[r][7] == "0";
  }
  criterion(7, "dirac_singular: ||f_j||_1 = 1, pointwise escape at samples", ok);
}

// 8. Norm sandwiches: y <= z <= 2y exactly and complex z <= w(K) <= 2z for
//    K in {4, 8, 16}, exhaustively over families with m <= 12 (scalar
//    collapse makes the real case exact at any m; complex enumerated).
void criterion_8() {
  Rng rng(108);
  bool ok = true;
  for (int i = 0; i < 150 && ok; ++i) {
    int m = static_cast<int>(rng.range(1, 6));
    // real family: exact sandwich
    std::vector<Rational> t;
    for (int k = 0; k < m; ++k) t.push_back(rng.rational(-9, 9, 5));
    IndexedFamily F = IndexedFamily::finite_real(t);
    SupNormResult y = y_norm(F), z = z_norm(F);
    ok &= *y.eval.pow_val <= *z.eval.pow_val;
    ok &= *z.eval.pow_val <= 2 * *y.eval.pow_val;

    // complex family: z <= w(K) <= 2z within float tolerance of the
    // sector-scan w; w monotone along K | 2K
    std::vector<std::pair<Rational, Rational>> ct;
    for (int k = 0; k < m; ++k)
      ct.push_back({rng.rational(-6, 6, 4), rng.rational(-6, 6, 4)});
    IndexedFamily C = IndexedFamily::finite_complex(ct);
    SupNormResult zy = y_norm(C), zz = z_norm(C);
    ok &= norm_cmp(zy.eval, zz.eval) <= 0;
    double zval = zz.eval.approx;
    double prev = 0;
    for (int K : {4, 8, 16}) {
      double w = w_norm(C, K).norm.dbl();
      ok &= zval <= w + 1e-9;
      ok &= w <= 2 * zval + 1e-9;
      ok &= w + 1e-9 >= prev;
      prev = w;
    }
  }
  // one exhaustive family at the guard: m = 12 real
  std::vector<Rational> big;
  for (int k = 0; k < 12; ++k) big.push_back(rng.rational(-5, 5, 3));
  IndexedFamily big_f = IndexedFamily::finite_real(big);
  SupNormResult by = y_norm(big_f), bz = z_norm(big_f);
  ok &= *by.eval.pow_val <= *bz.eval.pow_val &&
        *bz.eval.pow_val <= 2 * *by.eval.pow_val;
  criterion(8, "norm sandwiches y <= z <= 2y and z <= w(K) <= 2z", ok);
}

// 9. Path identities with zero error on 10^4 random rational polylines.
void criterion_9() {
  Rng rng(109);
  bool ok = true;
  for (int i = 0; i < 10000 && ok; ++i) {
    int m = static_cast<int>(rng.range(2, 8));
    std::vector<Rational> knots;
    std::vector<std::vector<Rational>> pts;
    Rational t = rng.rational(-4, 4, 3);
    for (int k = 0; k < m; ++k) {
      knots.push_back(t);
      t += rng.rational(1, 4, 3);
      pts.push_back({rng.rational(-9, 9, 6)});
    }
    Polyline f = Polyline::make(knots, pts);
    Variation v = pos_neg_variation(f);
    Rational lambda = path_length(f).length.rat();
    ok &= v.pos + v.neg == lambda;
    ok &= v.pos - v.neg == pts.back()[0] - pts.front()[0];
    if (m > 2) {
      std::size_t cut = 1 + rng.below(static_cast<std::uint64_t>(m - 2));
      Polyline left = Polyline::make(
          {knots.begin(), knots.begin() + static_cast<long>(cut) + 1},
          {pts.begin(), pts.begin() + static_cast<long>(cut) + 1});
      Polyline right = Polyline::make(
          {knots.begin() + static_cast<long>(cut), knots.end()},
          {pts.begin() + static_cast<long>(cut), pts.end()});
      ok &= path_length(left).length.rat() + path_length(right).length.rat() ==
            lambda;
    }
    // monotone variant: Lambda = f(b) - f(a)
    std::vector<std::vector<Rational>> mono;
    Rational val = pts.front()[0];
    for (int k = 0; k < m; ++k) {
      mono.push_back({val});
      val += rng.rational(0, 3, 2);
    }
    Polyline mf = Polyline::make(knots, mono);
    ok &= path_length(mf).length.rat() == mono.back()[0] - mono.front()[0];
  }
  criterion(9, "path identities P+N, P-N, additivity, monotone, exact", ok);
}

// 10. Lacunary moment: the pinned example and 10^2 random instances
//     against the independent tuple-enumeration oracle, exact.
void criterion_10() {
  bool ok = lacunary_moment({1, 2}, {{1, 0}, {1, 0}}, 2).moment == 6;
  Rng rng(110);
  for (int round = 0; round < 100 && ok; ++round) {
    int m = static_cast<int>(rng.range(1, 6));
    std::vector<long> freqs;
    long fr = rng.range(1, 5);
    for (int k = 0; k < m; ++k) {
      freqs.push_back(fr);
      fr += rng.range(1, 9);
      if (fr > 50) fr = 50;  // keep frequencies <= 50
    }
    // strictly increasing; clamp may collide, rebuild if so
    bool increasing = true;
    for (std::size_t k = 1; k < freqs.size(); ++k)
      increasing &= freqs[k] > freqs[k - 1];
    if (!increasing) continue;
    std::vector<std::pair<Rational, Rational>> coeffs;
    for (int k = 0; k < m; ++k)
      coeffs.push_back({rng.rational(-4, 4, 3), rng.rational(-4, 4, 3)});
    int kk = static_cast<int>(rng.range(1, 2));
    const int h = 1 << (kk - 1);
    // oracle: ordered tuples with matching frequency sums
    Rational oracle = 0;
    long tuples = 1;
    for (int x = 0; x < h; ++x) tuples *= m;
    std::vector<long> sums(static_cast<std::size_t>(tuples));
    std::vector<std::pair<Rational, Rational>> prods(
        static_cast<std::size_t>(tuples));
    for (long code = 0; code < tuples; ++code) {
      long c = code, s = 0;
      Rational re = 1, im = 0;
      for (int x = 0; x < h; ++x) {
        int idx = static_cast<int>(c % m);
        c /= m;
        s += freqs[static_cast<std::size_t>(idx)];
        Rational nr = re * coeffs[static_cast<std::size_t>(idx)].first -
                      im * coeffs[static_cast<std::size_t>(idx)].second;
        im = re * coeffs[static_cast<std::size_t>(idx)].second +
             im * coeffs[static_cast<std::size_t>(idx)].first;
        re = nr;
      }
      sums[static_cast<std::size_t>(code)] = s;
      prods[static_cast<std::size_t>(code)] = {re, im};
    }
    for (long a = 0; a < tuples; ++a)
      for (long b2 = 0; b2 < tuples; ++b2)
        if (sums[static_cast<std::size_t>(a)] == sums[static_cast<std::size_t>(b2)])
          oracle += prods[static_cast<std::size_t>(a)].first *
                        prods[static_cast<std::size_t>(b2)].first +
                    prods[static_cast<std::size_t>(a)].second *
                        prods[static_cast<std::size_t>(b2)].second;
    ok &= lacunary_moment(freqs, coeffs, kk).moment == oracle;
  }
  criterion(10, "lacunary moment: pinned value 6 and enumeration oracle", ok);
}

// 11. Convexity modulus within 1e-4 of the l2 closed form at G = 10^4;
//     l1 and linf produce strict-convexity witnesses.
void criterion_11() {
  auto table = uniform_convexity_modulus(NormDescriptor::l2(), 2,
                                         {0.5, 1.0, 1.5}, 10000);
  bool ok = true;
  std::ostringstream detail;
  for (const ModulusEntry& e : table) {
    double expect = 1.0 - std::sqrt(1.0 - e.eps * e.eps / 4.0);
    ok &= std::fabs(e.delta_hat - expect) <= 1e-4;
    detail << " " << std::fabs(e.delta_hat - expect);
  }
  ok &= strict_convexity_witness(NormDescriptor::l1(), 2, 10000).witness_found;
  ok &= strict_convexity_witness(NormDescriptor::linf(), 2, 10000).witness_found;
  criterion(11, "l2 modulus within 1e-4 of closed form; l1/linf witnesses", ok,
            "errors:" + detail.str());
}

// 12. Determinism: identical bytes for `suite all --seed 1` run twice.
void criterion_12() {
  SuiteOptions opts;
  opts.seed = 1;
  opts.divisor = 10;  // the full-size battery runs under ctest separately
  std::string a = run_suite("all", opts).render("json");
  std::string b = run_suite("all", opts).render("json");
  bool ok = a == b && !a.empty();
  // the CLI surface goes through the same renderer on identical bytes
  std::ostringstream out1, err1, out2, err2;
  int c1 = run_cli({"suite", "measures", "--seed", "1", "--quick",
                    "--format", "json"},
                   out1, err1);
  int c2 = run_cli({"suite", "measures", "--seed", "1", "--quick",
                    "--format", "json"},
                   out2, err2);
  ok &= c1 == 0 && c2 == 0 && out1.str() == out2.str();
  criterion(12, "byte-identical reports for suite runs at a fixed seed", ok);
}

}  // namespace

int main() {
  std::printf("acceptance criteria\n-------------------\n");
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  std::printf("-------------------\n%s (%d failure%s)\n",
              g_failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED",
              g_failures, g_failures == 1 ? "" : "s");
  return g_failures == 0 ? 0 : 1;
}
