#include "summa/cli.hpp"
#include <functional>

#include "summa/errors.hpp"
#include "summa/json_io.hpp"
#include "summa/report.hpp"
#include "summa/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace summa {

namespace {

std::vector<long> parse_index_list(const std::string& csv) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stol(tok));
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto r = rat_parse(tok);
    if (!r) throw ParseError("bad rational '" + tok + "'");
    out.push_back(*r);
  }
  return out;
}

Rational require_rational(const std::string& s, const std::string& what) {
  auto r = rat_parse(s);
  if (!r) throw ParseError("bad " + what + " '" + s + "'");
  return *r;
}

Exponent require_exponent(const std::string& s) {
  auto p = Exponent::parse(s);
  if (!p) throw ParseError("bad exponent '" + s + "'");
  return *p;
}

Json norm_eval_json(const NormEval& e) {
  Json j;
  if (e.exact()) {
    j["value_pow"] = rat_str(*e.pow_val);
    j["power"] = e.power;
  }
  j["approx"] = e.approx;
  return j;
}

Json value_json(const Value& v) {
  switch (v.kind) {
    case ValueKind::Real:
      return rat_str(v.re);
    case ValueKind::Complex: {
      Json p = Json::array();
      p.push_back(rat_str(v.re));
      p.push_back(rat_str(v.im));
      return p;
    }
    case ValueKind::Vector: {
      Json p = Json::array();
      for (const Rational& x : v.vec) p.push_back(rat_str(x));
      return p;
    }
  }
  return {};
}

struct Cli {
  RunConfig cfg;
  Report report;

  IndexedFamily family_from_flags(const std::string& file,
                                  const std::string& generator,
                                  const std::string& ratio,
                                  const std::string& scale, long horizon,
                                  const std::string& terms_csv) {
    if (!file.empty()) return family_from_json(load_json_file(file));
    if (!terms_csv.empty()) {
      // --terms takes a JSON file or an inline comma-separated list
      if (std::ifstream probe(terms_csv); probe.good()) {
        Json j = load_json_file(terms_csv);
        if (j.is_array()) {
          Json wrapped;
          wrapped["kind"] = "finite";
          wrapped["terms"] = j;
          return family_from_json(wrapped);
        }
        return family_from_json(j);
      }
      return IndexedFamily::finite_real(parse_rational_list(terms_csv));
    }
    if (generator == "geometric")
      return IndexedFamily::geometric(require_rational(ratio, "ratio"),
                                      require_rational(scale, "scale"), horizon);
    if (generator == "alternating-harmonic")
      return IndexedFamily::alternating_harmonic(horizon);
    if (generator == "orthogonal-decay")
      return IndexedFamily::orthogonal_decay(horizon);
    if (generator == "zeros") return IndexedFamily::zeros(horizon);
    throw ParseError("no family given: pass --in, --terms, or --family");
  }
};

void emit(const Report& report, const RunConfig& cfg, std::ostream& out) {
  std::string text = report.render(cfg.format);
  if (!cfg.out_file.empty()) {
    std::ofstream f(cfg.out_file, std::ios::binary);
    if (!f) throw ParseError("cannot write '" + cfg.out_file + "'");
    f << text;
  } else {
    out << text;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"summa: executable rearrangement, measure, dyadic, martingale, "
               "and path machinery"};
  app.require_subcommand(1);

  Cli cli;
  RunConfig& cfg = cli.cfg;
  if (const char* env_seed = std::getenv("SUMMA_SEED"))
    cfg.seed = std::strtoull(env_seed, nullptr, 10);
  app.add_option("--format", cfg.format, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized sweeps");
  // applied as soon as the tokens are consumed, ahead of any callback
  app.add_option_function<double>(
      "--tol", [](double t) { set_tolerance(t); },
      "float comparison tolerance");
  app.add_option_function<long>(
      "--guard-subsets", [](long g) { set_subset_guard(g); },
      "override the subset-enumeration guard (1..30)");
  app.add_option("--out", cfg.out_file, "write the report to a file");

  Report& rep = cli.report;
  auto add_check = [&rep](bool ok) {
    ++rep.checks;
    if (!ok) ++rep.failures;
    return ok;
  };

  // ---- norms ----------------------------------------------------------
  auto* norms = app.add_subcommand("norms", "scalar/sequence norm toolkit");
  {
    auto* lp = norms->add_subcommand("lp", "lp norm of a sequence");
    auto vec = std::make_shared<std::string>();
    auto pstr = std::make_shared<std::string>("2");
    auto coeffs = std::make_shared<std::string>();
    lp->add_option("--vec", *vec, "JSON file with the sequence");
    lp->add_option("--coeffs", *coeffs, "inline comma-separated entries");
    lp->add_option("--p", *pstr, "exponent in (0, inf]");
    lp->callback([&, vec, pstr, coeffs] {
      SeqVector v = coeffs->empty()
                        ? seqvector_from_json(load_json_file(*vec))
                        : SeqVector::from_rationals(parse_rational_list(*coeffs));
      Scalar n = lp_norm(v, require_exponent(*pstr));
      rep.payload["p"] = *pstr;
      rep.payload["norm"] = n.str();
      rep.payload["exact"] = n.exact();
    });

    auto* hol = norms->add_subcommand("holder", "Hoelder inequality check");
    auto fns = std::make_shared<std::vector<std::string>>(4);
    hol->add_option("--f", (*fns)[0], "JSON file, first sequence")->required();
    hol->add_option("--g", (*fns)[1], "JSON file, second sequence")->required();
    hol->add_option("--p", (*fns)[2], "exponent p")->required();
    hol->add_option("--q", (*fns)[3], "conjugate exponent q")->required();
    hol->callback([&, fns] {
      HolderReport r = holder_verify(seqvector_from_json(load_json_file((*fns)[0])),
                                     seqvector_from_json(load_json_file((*fns)[1])),
                                     require_exponent((*fns)[2]),
                                     require_exponent((*fns)[3]));
      rep.payload["lhs"] = r.lhs.str();
      rep.payload["rhs"] = r.rhs.str();
      rep.payload["equality_within_tol"] = r.equality_within_tol;
      add_check(r.holds);
      rep.payload["holds"] = r.holds;
    });

    auto* itp = norms->add_subcommand("interp", "lp log-convexity check");
    auto ia = std::make_shared<std::vector<std::string>>(4);
    itp->add_option("--vec", (*ia)[0])->required();
    itp->add_option("--p", (*ia)[1])->required();
    itp->add_option("--q", (*ia)[2])->required();
    itp->add_option("--r", (*ia)[3])->required();
    itp->callback([&, ia] {
      InterpolationReport r = lp_interpolate(
          seqvector_from_json(load_json_file((*ia)[0])),
          require_exponent((*ia)[1]), require_exponent((*ia)[2]),
          require_exponent((*ia)[3]));
      rep.payload["t"] = r.t;
      rep.payload["lhs"] = r.lhs.str();
      rep.payload["rhs"] = r.rhs.str();
      add_check(r.holds);
      rep.payload["holds"] = r.holds;
    });

    auto* ps = norms->add_subcommand("psub", "p-subadditivity check");
    auto pa = std::make_shared<std::vector<std::string>>(3);
    ps->add_option("--a", (*pa)[0])->required();
    ps->add_option("--b", (*pa)[1])->required();
    ps->add_option("--p", (*pa)[2])->required();
    ps->callback([&, pa] {
      bool ok = p_subadditivity_check(Scalar(require_rational((*pa)[0], "a")),
                                      Scalar(require_rational((*pa)[1], "b")),
                                      require_exponent((*pa)[2]));
      add_check(ok);
      rep.payload["holds"] = ok;
    });
  }

  // ---- sums -----------------------------------------------------------
  auto* sums = app.add_subcommand("sums", "unordered summation machinery");
  {
    auto in = std::make_shared<std::string>();
    auto terms = std::make_shared<std::string>();
    auto generator = std::make_shared<std::string>();
    auto ratio = std::make_shared<std::string>("1/2");
    auto scale = std::make_shared<std::string>("1");
    auto horizon = std::make_shared<long>(64);
    auto add_family_flags = [&](CLI::App* cmd) {
      cmd->add_option("--in", *in, "family JSON file");
      cmd->add_option("--terms", *terms, "inline finite real terms");
      cmd->add_option("--family", *generator,
                      "generator: geometric | alternating-harmonic | "
                      "orthogonal-decay | zeros");
      cmd->add_option("--ratio", *ratio);
      cmd->add_option("--scale", *scale);
      cmd->add_option("--horizon", *horizon);
    };
    auto get_family = [&, in, terms, generator, ratio, scale, horizon] {
      return cli.family_from_flags(*in, *generator, *ratio, *scale, *horizon,
                                   *terms);
    };

    for (const char* which : {"ynorm", "znorm"}) {
      auto* cmd = sums->add_subcommand(which, std::string(which) +
                                                  " by exhaustive enumeration");
      add_family_flags(cmd);
      bool zmode = std::string(which) == "znorm";
      cmd->callback([&, get_family, zmode] {
        IndexedFamily F = get_family();
        SupNormResult r = zmode ? z_norm(F) : y_norm(F);
        rep.payload["norm"] = r.norm.str();
        rep.payload["eval"] = norm_eval_json(r.eval);
        rep.payload["argmax"] = r.argmax;
        if (zmode) rep.payload["signs"] = r.arg_coeff;
      });
    }

    auto* wn = sums->add_subcommand("wnorm", "W-norm on a root-of-unity grid");
    add_family_flags(wn);
    auto kgrid = std::make_shared<int>(8);
    wn->add_option("--k", *kgrid, "number of roots of unity");
    wn->callback([&, get_family, kgrid] {
      SupNormResult r = w_norm(get_family(), *kgrid);
      rep.payload["k"] = *kgrid;
      rep.payload["norm"] = r.norm.str();
      rep.payload["roots"] = r.arg_coeff;
    });

    auto* sub = sums->add_subcommand("subset", "exact subset sum");
    add_family_flags(sub);
    auto idx = std::make_shared<std::string>();
    sub->add_option("--indices", *idx, "1-based indices, comma separated")
        ->required();
    sub->callback([&, get_family, idx] {
      Value v = subset_sum(get_family(), parse_index_list(*idx));
      rep.payload["sum"] = value_json(v);
    });

    auto* ca = sums->add_subcommand("cauchy", "generalized Cauchy criterion");
    add_family_flags(ca);
    auto eps = std::make_shared<std::string>("1/100");
    ca->add_option("--eps", *eps)->required();
    ca->callback([&, get_family, eps] {
      IndexedFamily F = get_family();
      Scalar e(require_rational(*eps, "eps"));
      CauchyVerdict v = generalized_cauchy_check(F, e, F.size());
      const char* status = v.status == CauchyVerdict::Status::Pass   ? "pass"
                           : v.status == CauchyVerdict::Status::Fail ? "fail"
                                                                     : "inconclusive";
      rep.payload["status"] = status;
      rep.payload["certificate"] = v.certificate;
      if (v.status == CauchyVerdict::Status::Pass)
        rep.payload["prefix"] = v.prefix;
      if (v.status == CauchyVerdict::Status::Fail) {
        rep.payload["witness"] = v.witness;
        rep.payload["witness_refutes_prefix"] = v.witness_refutes_prefix;
      }
      add_check(v.status != CauchyVerdict::Status::Fail);
    });

    auto* ev = sums->add_subcommand("eval", "unordered sum at certified eps");
    add_family_flags(ev);
    auto eps2 = std::make_shared<std::string>("1/1000000");
    ev->add_option("--eps", *eps2)->required();
    ev->callback([&, get_family, eps2] {
      SumResult r = unordered_sum_eval(get_family(),
                                       Scalar(require_rational(*eps2, "eps")));
      rep.payload["sum"] = value_json(r.value);
      rep.payload["error_bound"] = r.error_bound.str();
      rep.payload["terms_used"] = r.terms_used;
    });

    auto* re = sums->add_subcommand("rearrange", "rearrangement test");
    add_family_flags(re);
    auto eps3 = std::make_shared<std::string>("1/1000000");
    auto permcsv = std::make_shared<std::string>();
    auto swap_adjacent = std::make_shared<bool>(false);
    re->add_option("--eps", *eps3);
    re->add_option("--perm", *permcsv, "explicit permutation, comma separated");
    re->add_flag("--swap-adjacent", *swap_adjacent, "swap 2k-1 <-> 2k");
    re->callback([&, get_family, eps3, permcsv, swap_adjacent] {
      IndexedFamily F = get_family();
      std::vector<long> perm;
      if (!permcsv->empty()) {
        perm = parse_index_list(*permcsv);
      } else {
        perm.resize(static_cast<std::size_t>(F.size()));
        for (long j = 0; j < F.size(); ++j) perm[static_cast<std::size_t>(j)] = j + 1;
        if (*swap_adjacent)
          for (std::size_t j = 0; j + 1 < perm.size(); j += 2)
            std::swap(perm[j], perm[j + 1]);
      }
      RearrangementReport r =
          rearrangement_test(F, perm, Scalar(require_rational(*eps3, "eps")));
      rep.payload["sum"] = value_json(r.sum);
      rep.payload["permuted_sum"] = value_json(r.permuted_sum);
      rep.payload["exact"] = r.exact;
      if (r.divergent_prefix) {
        rep.payload["divergent_prefix"] = *r.divergent_prefix;
        rep.payload["block_norms"] = r.block_norms;
      }
      add_check(r.agree);
      rep.payload["agree"] = r.agree;
    });

    auto* su = sums->add_subcommand("signuniform",
                                    "uniform convergence across sign choices");
    add_family_flags(su);
    auto eps4 = std::make_shared<std::string>("1/10");
    su->add_option("--eps", *eps4)->required();
    su->callback([&, get_family, eps4] {
      IndexedFamily F = get_family();
      SignUniformVerdict v = sign_uniform_convergence_check(
          F, Scalar(require_rational(*eps4, "eps")), F.size());
      const char* status = v.status == SignUniformVerdict::Status::Pass ? "pass"
                           : v.status == SignUniformVerdict::Status::Fail
                               ? "fail"
                               : "inconclusive";
      rep.payload["status"] = status;
      rep.payload["L_eps"] = v.L_eps;
      rep.payload["method"] = v.method;
      if (!v.note.empty()) rep.payload["note"] = v.note;
      add_check(v.status != SignUniformVerdict::Status::Fail);
    });
  }

  // ---- measures -------------------------------------------------------
  auto* meas = app.add_subcommand("measures", "signed measures on finite spaces");
  {
    auto mfile = std::make_shared<std::string>();
    auto pfile = std::make_shared<std::string>();
    auto setcsv = std::make_shared<std::string>();
    auto add_measure_flags = [&](CLI::App* cmd) {
      cmd->add_option("--measure", *mfile, "measure JSON file")->required();
    };
    auto get_measure = [mfile] { return measure_from_json(load_json_file(*mfile)); };

    auto* tv = meas->add_subcommand("tv", "total variation on a partition");
    add_measure_flags(tv);
    tv->add_option("--partition", *pfile, "partition JSON (default discrete)");
    tv->add_option("--set", *setcsv, "atom indices (default all)");
    tv->callback([&, get_measure, pfile, setcsv] {
      SignedMeasure mu = get_measure();
      PartitionAlgebra P = pfile->empty()
                               ? PartitionAlgebra::discrete(mu.n_atoms())
                               : partition_from_json(load_json_file(*pfile),
                                                     mu.n_atoms());
      std::vector<int> A;
      if (setcsv->empty()) {
        for (int a = 0; a < mu.n_atoms(); ++a) A.push_back(a);
      } else {
        for (long i : parse_index_list(*setcsv)) A.push_back(static_cast<int>(i));
      }
      rep.payload["total_variation"] = total_variation(mu, P, A).str();
    });

    auto* jd = meas->add_subcommand("jordan", "Jordan decomposition");
    add_measure_flags(jd);
    jd->callback([&, get_measure] {
      JordanParts parts = jordan_decompose(get_measure());
      rep.payload["positive"] = measure_to_json(parts.pos)["weights"];
      rep.payload["negative"] = measure_to_json(parts.neg)["weights"];
    });

    auto* hd = meas->add_subcommand("hahn", "Hahn decomposition");
    add_measure_flags(hd);
    hd->callback([&, get_measure] {
      HahnParts h = hahn_decompose(get_measure());
      rep.payload["P"] = h.P;
      rep.payload["Q"] = h.Q;
    });

    auto nufile = std::make_shared<std::string>();
    auto* rn = meas->add_subcommand("rn", "Radon-Nikodym density");
    add_measure_flags(rn);
    rn->add_option("--nu", *nufile, "reference measure JSON")->required();
    rn->callback([&, get_measure, nufile] {
      std::vector<Rational> h =
          radon_nikodym(get_measure(), measure_from_json(load_json_file(*nufile)));
      Json arr = Json::array();
      for (const Rational& x : h) arr.push_back(rat_str(x));
      rep.payload["density"] = arr;
    });

    auto* lb = meas->add_subcommand("lebesgue", "Lebesgue decomposition");
    add_measure_flags(lb);
    lb->add_option("--nu", *nufile, "reference measure JSON")->required();
    lb->callback([&, get_measure, nufile] {
      LebesgueParts parts = lebesgue_decompose(
          get_measure(), measure_from_json(load_json_file(*nufile)));
      rep.payload["absolutely_continuous"] = measure_to_json(parts.ac)["weights"];
      rep.payload["singular"] = measure_to_json(parts.sing)["weights"];
      Json arr = Json::array();
      for (const Rational& x : parts.density) arr.push_back(rat_str(x));
      rep.payload["density"] = arr;
    });

    auto acsv = std::make_shared<std::string>();
    auto bcsv = std::make_shared<std::string>();
    auto* sd = meas->add_subcommand("symdiff", "symmetric-difference distance");
    add_measure_flags(sd);
    sd->add_option("--a", *acsv)->required();
    sd->add_option("--b", *bcsv)->required();
    sd->callback([&, get_measure, acsv, bcsv] {
      std::vector<int> A, B;
      for (long i : parse_index_list(*acsv)) A.push_back(static_cast<int>(i));
      for (long i : parse_index_list(*bcsv)) B.push_back(static_cast<int>(i));
      rep.payload["distance"] = rat_str(symdiff_distance(get_measure(), A, B));
    });
  }

  // ---- dyadic ---------------------------------------------------------
  auto* dyadic = app.add_subcommand("dyadic", "dyadic analysis on [0,1)");
  {
    auto mfile = std::make_shared<std::string>();
    auto t = std::make_shared<std::string>("1");
    auto depth = std::make_shared<int>(8);

    auto* mx = dyadic->add_subcommand("maximal", "dyadic maximal function");
    mx->add_option("--measure", *mfile)->required();
    mx->add_option("--t", *t, "level-set threshold");
    mx->add_option("--depth", *depth);
    mx->callback([&, mfile, t, depth] {
      DyadicMeasure mu = dyadic_measure_from_json(load_json_file(*mfile));
      DyadicStep m = dyadic_maximal(mu, *depth);
      rep.payload["maximal"] = step_to_json(m);
      LevelSetReport ls =
          maximal_level_sets(mu, require_rational(*t, "t"), *depth);
      Json intervals = Json::array();
      for (auto [l, j] : ls.intervals) {
        Json e;
        e["level"] = l;
        e["index"] = j;
        intervals.push_back(e);
      }
      rep.payload["level_set"] = intervals;
      rep.payload["lebesgue"] = rat_str(ls.lebesgue);
      rep.payload["mass"] = rat_str(ls.mass);
      if (!ls.intervals.empty())
        add_check(ls.strict_certified);
      rep.payload["strict_certified"] = ls.strict_certified;
    });

    auto* hl = dyadic->add_subcommand("hl", "Hardy-Littlewood weak type on a grid");
    hl->add_option("--measure", *mfile)->required();
    hl->add_option("--t", *t)->required();
    hl->add_option("--depth", *depth);
    hl->callback([&, mfile, t, depth] {
      HlReport r = hl_maximal_weak_type(
          dyadic_measure_from_json(load_json_file(*mfile)),
          require_rational(*t, "t"), *depth);
      rep.payload["lower"] = rat_str(r.lower);
      rep.payload["upper"] = rat_str(r.upper);
      rep.payload["bound"] = rat_str(r.bound);
      rep.payload["slack"] = rat_str(r.slack);
      add_check(r.holds_lower);
      add_check(r.holds_upper_with_slack);
      rep.payload["holds_lower"] = r.holds_lower;
      rep.payload["holds_upper_with_slack"] = r.holds_upper_with_slack;
    });

    auto sfile = std::make_shared<std::string>();
    auto level = std::make_shared<int>(0);
    auto* avg = dyadic->add_subcommand("average", "dyadic averaging operator");
    avg->add_option("--step", *sfile)->required();
    avg->add_option("--level", *level)->required();
    avg->callback([&, sfile, level] {
      DyadicStep f = step_from_json(load_json_file(*sfile));
      rep.payload["average"] = step_to_json(dyadic_average(f, *level));
    });

    auto ell = std::make_shared<int>(1);
    auto* rad = dyadic->add_subcommand("rademacher", "Rademacher function");
    rad->add_option("--l", *ell)->required();
    rad->add_option("--level", *level);
    rad->callback([&, ell, level] {
      int lv = *level > 0 ? *level : *ell;
      rep.payload["step"] = step_to_json(rademacher(*ell, lv));
    });

    auto setcsv = std::make_shared<std::string>();
    auto* wal = dyadic->add_subcommand("walsh", "Walsh function");
    wal->add_option("--set", *setcsv, "factor indices, comma separated");
    wal->add_option("--level", *level);
    wal->callback([&, setcsv, level] {
      std::set<int> I;
      for (long i : parse_index_list(*setcsv)) I.insert(static_cast<int>(i));
      int lv = *level > 0 ? *level : (I.empty() ? 1 : *I.rbegin());
      rep.payload["step"] = step_to_json(walsh(I, lv));
    });

    auto coeffs = std::make_shared<std::string>();
    auto pexp = std::make_shared<std::string>("4");
    auto* mo = dyadic->add_subcommand("moment", "exact Rademacher moment");
    mo->add_option("--coeffs", *coeffs)->required();
    mo->add_option("--p", *pexp);
    mo->callback([&, coeffs, pexp] {
      std::vector<Rational> a = parse_rational_list(*coeffs);
      long p = std::stol(*pexp);
      rep.payload["p"] = p;
      rep.payload["moment"] = rat_str(rademacher_moment(a, p));
    });

    auto* kh = dyadic->add_subcommand("khintchine", "sign-average report");
    kh->add_option("--coeffs", *coeffs)->required();
    kh->add_option("--p", *pexp);
    kh->callback([&, coeffs, pexp] {
      SignAverageReport r =
          khintchine_report(parse_rational_list(*coeffs), require_exponent(*pexp));
      rep.payload["n"] = r.n;
      rep.payload["p"] = r.p.str();
      rep.payload["moment"] = r.moment.str();
      rep.payload["comparison"] = r.comparison.str();
      rep.payload["ratio"] = r.ratio;
      add_check(r.monotone_vs_l2);
    });

    auto freqs = std::make_shared<std::string>();
    auto kk = std::make_shared<int>(2);
    auto* lac = dyadic->add_subcommand("lacunary", "exact lacunary moment");
    lac->add_option("--freqs", *freqs)->required();
    lac->add_option("--coeffs", *coeffs)->required();
    lac->add_option("--k", *kk);
    lac->callback([&, freqs, coeffs, kk] {
      std::vector<Rational> a = parse_rational_list(*coeffs);
      std::vector<std::pair<Rational, Rational>> cs;
      for (const Rational& x : a) cs.push_back({x, Rational(0)});
      LacunaryResult r = lacunary_moment(parse_index_list(*freqs), cs, *kk);
      rep.payload["moment"] = rat_str(r.moment);
      rep.payload["collapse_held"] = r.collapse_held;
      rep.payload["gap_q"] = r.gap_q;
    });

    auto ifile = std::make_shared<std::string>();
    auto* cov = dyadic->add_subcommand("cover", "covering reduction");
    cov->add_option("--intervals", *ifile,
                    "JSON array of [lo, hi] open intervals")
        ->required();
    cov->callback([&, ifile] {
      Json j = load_json_file(*ifile);
      std::vector<RatInterval> ivs;
      for (const Json& e : j)
        ivs.push_back({rational_from_json(e.at(0)), rational_from_json(e.at(1))});
      std::vector<RatInterval> red = covering_reduce(ivs);
      Json arr = Json::array();
      for (const RatInterval& iv : red) {
        Json e = Json::array();
        e.push_back(rat_str(iv.lo));
        e.push_back(rat_str(iv.hi));
        arr.push_back(e);
      }
      rep.payload["reduced"] = arr;
      rep.payload["kept"] = red.size();
    });
  }

  // ---- mart -----------------------------------------------------------
  auto* mart = app.add_subcommand("mart", "martingale machinery");
  {
    auto sfile = std::make_shared<std::string>();
    auto* cls = mart->add_subcommand("classify", "martingale classification");
    cls->add_option("--seq", *sfile)->required();
    cls->callback([&, sfile] {
      ClassifyReport r = classify(adapted_from_json(load_json_file(*sfile)));
      rep.payload["class"] = r.detail;
      if (r.witness_stage >= 0) {
        rep.payload["witness_stage"] = r.witness_stage;
        rep.payload["witness_cell"] = r.witness_cell;
      }
    });

    auto* db = mart->add_subcommand("doob", "Doob decomposition");
    db->add_option("--seq", *sfile)->required();
    db->callback([&, sfile] {
      DoobParts parts = doob_decompose(adapted_from_json(load_json_file(*sfile)));
      rep.payload["martingale"] = adapted_to_json(parts.martingale)["values"];
      rep.payload["predictable"] = adapted_to_json(parts.predictable)["values"];
    });

    auto t = std::make_shared<std::string>("1");
    auto* wt = mart->add_subcommand("weaktype", "maximal weak type check");
    wt->add_option("--seq", *sfile)->required();
    wt->add_option("--t", *t)->required();
    wt->callback([&, sfile, t] {
      WeakTypeReport r = weak_type_check(adapted_from_json(load_json_file(*sfile)),
                                         require_rational(*t, "t"));
      rep.payload["level_set_mass"] = rat_str(r.level_set_mass);
      rep.payload["lhs"] = r.lhs;
      rep.payload["rhs"] = r.rhs;
      rep.payload["certified"] = r.certified;
      add_check(r.holds);
      rep.payload["holds"] = r.holds;
    });

    auto pexp = std::make_shared<std::string>("2");
    auto* dl = mart->add_subcommand("dooblp", "Doob Lp maximal bound");
    dl->add_option("--seq", *sfile)->required();
    dl->add_option("--p", *pexp)->required();
    dl->callback([&, sfile, pexp] {
      DoobLpReport r = doob_lp_check(adapted_from_json(load_json_file(*sfile)),
                                     require_exponent(*pexp));
      rep.payload["lhs"] = r.lhs;
      rep.payload["rhs"] = r.rhs;
      rep.payload["constant"] = r.constant;
      rep.payload["ratio"] = r.ratio;
      rep.payload["certified"] = r.certified;
      add_check(r.holds);
      rep.payload["holds"] = r.holds;
    });

    auto thr = std::make_shared<std::string>("1");
    auto* st = mart->add_subcommand("stop", "first-passage stopping");
    st->add_option("--seq", *sfile)->required();
    st->add_option("--threshold", *thr);
    st->callback([&, sfile, thr] {
      AdaptedSequence seq = adapted_from_json(load_json_file(*sfile));
      StoppingTime tau =
          StoppingTime::first_passage(seq, require_rational(*thr, "threshold"))
              .truncated(seq.n_stages());
      StopResult r = stop(seq, tau);
      Json vals = Json::array();
      for (const Value& v : r.stopped) vals.push_back(value_json(v));
      rep.payload["tau"] = tau.tau;
      rep.payload["stopped"] = vals;
      Json classes = Json::array();
      for (const auto& c : r.classes) classes.push_back(c);
      rep.payload["b_tau_classes"] = classes;
      if (classify(seq).cls == SequenceClass::Martingale) {
        OptionalStoppingReport os = optional_stopping_check(seq, tau);
        add_check(os.holds);
        rep.payload["optional_stopping_holds"] = os.holds;
      }
    });

    auto stages = std::make_shared<long>(8);
    auto* ex = mart->add_subcommand("experiment", "named experiments");
    auto name = std::make_shared<std::string>();
    ex->add_option("name", *name,
                   "dirac_singular | unit_square | slln_average | doubling")
        ->required();
    ex->add_option("--stages", *stages);
    auto nparam = std::make_shared<long>(64);
    ex->add_option("--n", *nparam);
    ex->callback([&, name, stages, nparam] {
      std::map<std::string, std::string> params;
      params["stages"] = std::to_string(*stages);
      params["n"] = std::to_string(*nparam);
      params["seed"] = std::to_string(cfg.seed);
      ExperimentTrace tr = run_experiment(*name, params);
      Json tbl;
      tbl["columns"] = tr.columns;
      Json rows = Json::array();
      for (const auto& row : tr.rows) rows.push_back(row);
      tbl["rows"] = rows;
      rep.payload["experiment"] = tr.name;
      rep.payload["trace"] = tbl;
      rep.payload["notes"] = tr.notes;
      add_check(tr.assertions_hold);
    });
  }

  // ---- path -----------------------------------------------------------
  auto* path = app.add_subcommand("path", "polylines, variation, Stieltjes");
  {
    auto pfile = std::make_shared<std::string>();
    auto* len = path->add_subcommand("length", "path length");
    len->add_option("--in", *pfile)->required();
    len->callback([&, pfile] {
      Polyline f = polyline_from_json(load_json_file(*pfile));
      LengthResult r = path_length(f);
      rep.payload["length"] = r.length.str();
      rep.payload["exact"] = r.length.exact();
      if (f.dim() == 1) {
        Variation v = pos_neg_variation(f);
        rep.payload["positive_variation"] = rat_str(v.pos);
        rep.payload["negative_variation"] = rat_str(v.neg);
        add_check(r.length.exact() && v.total == r.length.rat());
      }
    });

    auto lo = std::make_shared<std::string>();
    auto hi = std::make_shared<std::string>();
    auto lo_open = std::make_shared<bool>(false);
    auto hi_open = std::make_shared<bool>(false);
    auto* pm = path->add_subcommand("measure", "interval measure of the path");
    pm->add_option("--in", *pfile)->required();
    pm->add_option("--lo", *lo)->required();
    pm->add_option("--hi", *hi)->required();
    pm->add_flag("--lo-open", *lo_open);
    pm->add_flag("--hi-open", *hi_open);
    pm->callback([&, pfile, lo, hi, lo_open, hi_open] {
      IntervalMeasureFromPath nu =
          path_measure(polyline_from_json(load_json_file(*pfile)));
      IntervalSpec iv{require_rational(*lo, "lo"), require_rational(*hi, "hi"),
                      !*lo_open, !*hi_open};
      std::vector<Rational> v = nu.of(iv);
      Json arr = Json::array();
      for (const Rational& x : v) arr.push_back(rat_str(x));
      rep.payload["nu"] = arr;
      add_check(nu.dominated(iv));
    });

    auto phi = std::make_shared<std::string>("t");
    auto mesh = std::make_shared<std::string>("1/1024");
    auto* rs = path->add_subcommand("stieltjes", "Riemann-Stieltjes sum");
    rs->add_option("--in", *pfile)->required();
    rs->add_option("--phi", *phi, "polynomial in t, e.g. \"t^2\"");
    rs->add_option("--mesh", *mesh);
    rs->callback([&, pfile, phi, mesh] {
      auto poly = PiecewisePoly::parse(*phi);
      if (!poly) throw ParseError("cannot parse phi '" + *phi + "'");
      StieltjesResult r =
          riemann_stieltjes(*poly, polyline_from_json(load_json_file(*pfile)),
                            require_rational(*mesh, "mesh"));
      Json arr = Json::array();
      for (const Rational& x : r.value) arr.push_back(rat_str(x));
      rep.payload["integral"] = arr;
      rep.payload["error_bound"] = r.error_bound;
      rep.payload["mesh_points"] = r.mesh_points;
    });
  }

  // ---- convexity ------------------------------------------------------
  auto* cvx = app.add_subcommand("convexity", "uniform/strict convexity");
  {
    auto normstr = std::make_shared<std::string>("l2");
    auto dim = std::make_shared<int>(2);
    auto grid = std::make_shared<long>(4096);
    auto epscsv = std::make_shared<std::string>("1/2,1,3/2");

    auto* mod = cvx->add_subcommand("modulus", "modulus of convexity table");
    mod->add_option("--norm", *normstr);
    mod->add_option("--dim", *dim);
    mod->add_option("--grid", *grid);
    mod->add_option("--eps", *epscsv);
    mod->callback([&, normstr, dim, grid, epscsv] {
      std::vector<double> eps;
      for (const Rational& r : parse_rational_list(*epscsv))
        eps.push_back(rat_dbl(r));
      auto table = uniform_convexity_modulus(norm_from_json(Json(*normstr)),
                                             *dim, eps, *grid);
      Json tbl;
      tbl["columns"] = Json::array({"eps", "delta_hat"});
      Json rows = Json::array();
      for (const ModulusEntry& e : table)
        rows.push_back(Json::array({e.eps, e.delta_hat}));
      tbl["rows"] = rows;
      rep.payload["modulus"] = tbl;
    });

    auto* sw = cvx->add_subcommand("strict", "strict convexity witness search");
    sw->add_option("--norm", *normstr);
    sw->add_option("--dim", *dim);
    sw->add_option("--grid", *grid);
    sw->callback([&, normstr, dim, grid] {
      StrictConvexityResult r =
          strict_convexity_witness(norm_from_json(Json(*normstr)), *dim, *grid);
      rep.payload["witness_found"] = r.witness_found;
      if (r.witness_found) {
        rep.payload["v"] = r.v;
        rep.payload["w"] = r.w;
        rep.payload["t"] = r.t;
        rep.payload["midpoint_norm"] = r.midpoint_norm;
      }
    });
  }

  // ---- suite ----------------------------------------------------------
  auto* suite = app.add_subcommand("suite", "named verification suites");
  {
    auto name = std::make_shared<std::string>("all");
    suite->add_option("name", *name,
                      "inequalities | measures | dyadic | martingales | "
                      "paths | all");
    auto quick = std::make_shared<bool>(false);
    suite->add_flag("--quick", *quick, "reduced instance counts");
    suite->callback([&, name, quick] {
      SuiteOptions opts;
      opts.seed = cfg.seed;
      opts.divisor = *quick ? 20 : 1;
      Report sr = run_suite(*name, opts);
      rep.payload = sr.payload;
      rep.checks += sr.checks;
      rep.failures += sr.failures;
    });
  }

  // global flags (--format, --seed, ...) may follow the subcommand
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands({})) {
      sub->fallthrough(true);
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const GuardError& e) {
    err << "guard exceeded: " << e.what() << '\n';
    return kExitGuard;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kExitCheckFailed;
  }

  cli.report.command = argv;
  try {
    emit(cli.report, cli.cfg, out);
  } catch (const ParseError& e) {
    err << "output error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return cli.report.pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace summa
