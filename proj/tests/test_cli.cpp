#include <doctest.h>

#include "summa/cli.hpp"
#include "summa/json_io.hpp"
#include "summa/suites.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace summa;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path =
      (std::filesystem::temp_directory_path() / ("summa_cli_" + name)).string();
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("dispatch: khintchine moment") {
  CliRun r = run({"dyadic", "khintchine", "--coeffs", "1,1", "--p", "4",
                  "--format", "json"});
  CHECK(r.code == kExitOk);
  Json j = Json::parse(r.out);
  CHECK(j["payload"]["moment"] == "8");
}

TEST_CASE("dispatch: dirac_singular experiment emits unit L1 column") {
  CliRun r = run({"mart", "experiment", "dirac_singular", "--stages", "6",
                  "--format", "json"});
  CHECK(r.code == kExitOk);
  Json j = Json::parse(r.out);
  const Json& rows = j["payload"]["trace"]["rows"];
  REQUIRE(rows.size() == 6);
  for (const Json& row : rows) CHECK(row[1] == "1");
}

TEST_CASE("dispatch: csv format for experiments") {
  CliRun r = run({"mart", "experiment", "dirac_singular", "--stages", "4",
                  "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("stage,") != std::string::npos);
  CHECK(r.out.find("\r\n") != std::string::npos);  // RFC-4180 line ends
}

TEST_CASE("exit codes") {
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);

  std::string bad = write_temp("bad.json", "{ not json");
  CHECK(run({"sums", "ynorm", "--in", bad}).code == kExitBadInput);

  std::string big = write_temp("big.json", [] {
    Json j;
    j["kind"] = "finite";
    Json terms = Json::array();
    for (int i = 0; i < 30; ++i) terms.push_back(1);
    j["terms"] = terms;
    return j.dump();
  }());
  CHECK(run({"sums", "ynorm", "--in", big}).code == kExitGuard);
}

TEST_CASE("sums cauchy from the command line") {
  CliRun r = run({"sums", "cauchy", "--family", "geometric", "--ratio", "1/2",
                  "--eps", "1/10", "--format", "json"});
  CHECK(r.code == kExitOk);
  Json j = Json::parse(r.out);
  CHECK(j["payload"]["status"] == "pass");
  CHECK(j["payload"]["prefix"] == 4);
}

TEST_CASE("ynorm from inline terms") {
  CliRun r = run({"sums", "ynorm", "--terms", "1,-2,3", "--format", "json"});
  CHECK(r.code == kExitOk);
  Json j = Json::parse(r.out);
  CHECK(j["payload"]["norm"] == "4");
}

TEST_CASE("report determinism in-process") {
  SuiteOptions opts;
  opts.seed = 1;
  opts.divisor = 50;
  Report a = run_suite("measures", opts);
  Report b = run_suite("measures", opts);
  CHECK(a.render("json") == b.render("json"));
  CHECK(a.render("csv") == b.render("csv"));
  CHECK(a.failures == 0);
}

TEST_CASE("fault injection trips the harness") {
  SuiteOptions opts;
  opts.seed = 1;
  opts.divisor = 50;
  opts.fault_injection = true;
  Report r = run_suite("measures", opts);
  CHECK(r.failures > 0);
  // the failing check carries a witness payload
  CHECK(r.render("json").find("witness") != std::string::npos);
}

TEST_CASE("serialization round trips") {
  // measures
  Json mj = Json::parse(R"({"atoms": ["x","y","z"],
                            "weights": ["1/2","-3","1/6"]})");
  SignedMeasure mu = measure_from_json(mj);
  SignedMeasure mu2 = measure_from_json(measure_to_json(mu));
  CHECK(mu2.weights[0].re == Rational(1, 2));
  CHECK(mu2.weights[1].re == -3);

  // polylines
  Json pj = Json::parse(R"({"knots": ["0","1/2","1"],
                            "points": [[0,0],[1,0],[1,1]],
                            "interp": "linear",
                            "norm": "l2"})");
  Polyline f = polyline_from_json(pj);
  Polyline f2 = polyline_from_json(polyline_to_json(f));
  CHECK(f2.knots == f.knots);
  CHECK(f2.points == f.points);

  // dyadic measures
  Json dj = Json::parse(R"({"density": {"level": 1, "values": ["1","0"]},
                            "atoms": [{"loc": "3/2^2", "mass": "1/3"}]})");
  DyadicMeasure dm = dyadic_measure_from_json(dj);
  CHECK(dm.total() == Rational(1, 2) + Rational(1, 3));
  DyadicMeasure dm2 = dyadic_measure_from_json(dyadic_measure_to_json(dm));
  CHECK(dm2.total() == dm.total());

  // filtrations and adapted sequences
  AdaptedSequence seq =
      AdaptedSequence::dyadic_martingale(DyadicStep::from_values(1, {2, 0}));
  AdaptedSequence seq2 = adapted_from_json(adapted_to_json(seq));
  CHECK(seq2.n_stages() == seq.n_stages());
  CHECK(seq2.stage(1)[0].re == 1);
}
