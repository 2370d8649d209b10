#include "summa/json_io.hpp"

#include "summa/errors.hpp"

#include <fstream>

namespace summa {

Json rational_to_json(const Rational& r) { return rat_str(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) {
    auto r = rat_parse(std::to_string(j.get<double>()));
    if (r) return *r;
  }
  if (j.is_string()) {
    auto r = rat_parse(j.get<std::string>());
    if (r) return *r;
  }
  throw ParseError("expected a rational (\"p/q\" string or number), got " +
                   j.dump());
}

Json seqvector_to_json(const SeqVector& v) {
  Json arr = Json::array();
  for (const CScalar& c : v.entries) {
    if (c.is_real()) {
      if (c.re.exact())
        arr.push_back(rat_str(c.re.rat()));
      else
        arr.push_back(c.re.dbl());
    } else {
      Json pair = Json::array();
      pair.push_back(c.re.exact() ? Json(rat_str(c.re.rat())) : Json(c.re.dbl()));
      pair.push_back(c.im.exact() ? Json(rat_str(c.im.rat())) : Json(c.im.dbl()));
      arr.push_back(pair);
    }
  }
  return arr;
}

SeqVector seqvector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("SeqVector: expected an array");
  SeqVector v;
  for (const Json& e : j) {
    if (e.is_array()) {
      if (e.size() != 2) throw ParseError("SeqVector: complex entries are [re, im]");
      v.entries.push_back(
          {Scalar(rational_from_json(e[0])), Scalar(rational_from_json(e[1]))});
    } else if (e.is_number_float()) {
      v.entries.push_back(CScalar(Scalar::flt(e.get<double>())));
    } else {
      v.entries.push_back(CScalar(Scalar(rational_from_json(e))));
    }
  }
  return v;
}

Json norm_to_json(const NormDescriptor& nd) {
  Json j;
  switch (nd.kind()) {
    case NormDescriptor::Kind::Lp:
      j["kind"] = "lp";
      j["p"] = nd.p().str();
      break;
    case NormDescriptor::Kind::WeightedLp: {
      j["kind"] = "weighted-lp";
      j["p"] = nd.p().str();
      Json w = Json::array();
      for (const Rational& r : nd.weights()) w.push_back(rat_str(r));
      j["weights"] = w;
      break;
    }
    case NormDescriptor::Kind::CustomTable:
      j["kind"] = "custom-table";
      break;
  }
  return j;
}

namespace {

NormDescriptor norm_from_shorthand(const std::string& s) {
  if (s == "l1") return NormDescriptor::l1();
  if (s == "l2") return NormDescriptor::l2();
  if (s == "linf" || s == "loo") return NormDescriptor::linf();
  if (s.size() > 1 && s[0] == 'l') {
    auto p = Exponent::parse(s.substr(1));
    if (p) return NormDescriptor::lp(*p);
  }
  throw ParseError("unknown norm shorthand '" + s + "'");
}

}  // namespace

NormDescriptor norm_from_json(const Json& j) {
  if (j.is_string()) return norm_from_shorthand(j.get<std::string>());
  if (!j.is_object()) throw ParseError("norm: expected object or shorthand");
  std::string kind = j.value("kind", "lp");
  if (kind == "lp") {
    auto p = Exponent::parse(j.at("p").is_string()
                                 ? j.at("p").get<std::string>()
                                 : j.at("p").dump());
    if (!p) throw ParseError("norm: bad exponent");
    return NormDescriptor::lp(*p);
  }
  if (kind == "weighted-lp") {
    auto p = Exponent::parse(j.at("p").is_string()
                                 ? j.at("p").get<std::string>()
                                 : j.at("p").dump());
    if (!p) throw ParseError("norm: bad exponent");
    std::vector<Rational> w;
    for (const Json& e : j.at("weights")) w.push_back(rational_from_json(e));
    return NormDescriptor::weighted_lp(*p, std::move(w));
  }
  if (kind == "custom-table") {
    std::vector<double> scales;
    for (const Json& e : j.at("scales")) scales.push_back(e.get<double>());
    return NormDescriptor::custom_table(std::move(scales));
  }
  throw ParseError("norm: unknown kind '" + kind + "'");
}

namespace {

Json value_to_json(const Value& v) {
  switch (v.kind) {
    case ValueKind::Real:
      return rational_to_json(v.re);
    case ValueKind::Complex: {
      Json pair = Json::array();
      pair.push_back(rat_str(v.re));
      pair.push_back(rat_str(v.im));
      return pair;
    }
    case ValueKind::Vector: {
      Json arr = Json::array();
      for (const Rational& x : v.vec) arr.push_back(rat_str(x));
      return arr;
    }
  }
  return {};
}

Value value_from_json(const Json& j, ValueKind kind) {
  switch (kind) {
    case ValueKind::Real:
      return Value::real(rational_from_json(j));
    case ValueKind::Complex:
      if (!j.is_array() || j.size() != 2)
        throw ParseError("complex value: expected [re, im]");
      return Value::complex(rational_from_json(j[0]), rational_from_json(j[1]));
    case ValueKind::Vector: {
      if (!j.is_array()) throw ParseError("vector value: expected an array");
      std::vector<Rational> v;
      for (const Json& e : j) v.push_back(rational_from_json(e));
      return Value::vector(std::move(v));
    }
  }
  throw ParseError("bad value kind");
}

ValueKind deduce_kind(const Json& terms, bool complex_hint) {
  for (const Json& e : terms) {
    if (e.is_array()) {
      if (e.size() == 2 && complex_hint) return ValueKind::Complex;
      return e.size() == 2 ? ValueKind::Complex : ValueKind::Vector;
    }
    return ValueKind::Real;
  }
  return ValueKind::Real;
}

}  // namespace

Json family_to_json(const IndexedFamily& f) {
  Json j;
  if (f.kind == IndexedFamily::Kind::Finite) {
    j["kind"] = "finite";
    Json terms = Json::array();
    for (const Value& v : f.terms) terms.push_back(value_to_json(v));
    j["terms"] = terms;
    if (f.vkind == ValueKind::Vector) j["norm"] = norm_to_json(f.norm);
    if (f.vkind == ValueKind::Complex) j["complex"] = true;
  } else {
    j["kind"] = "streamed";
    j["generator"] = f.name;
    j["horizon"] = f.horizon;
  }
  return j;
}

IndexedFamily family_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("family: expected an object");
  std::string kind = j.value("kind", "finite");
  if (kind == "finite") {
    const Json& terms = j.at("terms");
    if (!terms.is_array()) throw ParseError("family: terms must be an array");
    ValueKind vk = deduce_kind(terms, j.value("complex", false));
    if (vk == ValueKind::Real) {
      std::vector<Rational> t;
      for (const Json& e : terms) t.push_back(rational_from_json(e));
      return IndexedFamily::finite_real(std::move(t));
    }
    if (vk == ValueKind::Complex) {
      std::vector<std::pair<Rational, Rational>> t;
      for (const Json& e : terms)
        t.push_back({rational_from_json(e.at(0)), rational_from_json(e.at(1))});
      return IndexedFamily::finite_complex(std::move(t));
    }
    std::vector<std::vector<Rational>> t;
    for (const Json& e : terms) {
      std::vector<Rational> row;
      for (const Json& x : e) row.push_back(rational_from_json(x));
      t.push_back(std::move(row));
    }
    NormDescriptor nd = j.contains("norm") ? norm_from_json(j.at("norm"))
                                           : NormDescriptor::l2();
    return IndexedFamily::finite_vector(std::move(t), std::move(nd));
  }
  if (kind == "streamed") {
    std::string gen = j.at("generator").get<std::string>();
    long horizon = j.at("horizon").get<long>();
    if (gen == "geometric") {
      Rational ratio = rational_from_json(j.value("ratio", Json("1/2")));
      Rational scale = rational_from_json(j.value("scale", Json(1)));
      return IndexedFamily::geometric(ratio, scale, horizon);
    }
    if (gen == "alternating-harmonic")
      return IndexedFamily::alternating_harmonic(horizon);
    if (gen == "orthogonal-decay") return IndexedFamily::orthogonal_decay(horizon);
    if (gen == "zeros") return IndexedFamily::zeros(horizon);
    throw ParseError("family: unknown generator '" + gen + "'");
  }
  throw ParseError("family: unknown kind '" + kind + "'");
}

Json measure_to_json(const SignedMeasure& m) {
  Json j;
  j["atoms"] = m.space->labels;
  Json w = Json::array();
  for (const Value& v : m.weights) w.push_back(value_to_json(v));
  j["weights"] = w;
  if (m.kind == ValueKind::Vector) j["norm"] = norm_to_json(m.norm);
  if (m.kind == ValueKind::Complex) j["complex"] = true;
  if (m.space->base_weights) {
    Json bw = Json::array();
    for (const Rational& r : *m.space->base_weights) bw.push_back(rat_str(r));
    j["base_weights"] = bw;
  }
  return j;
}

SignedMeasure measure_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("measure: expected an object");
  std::vector<std::string> labels;
  if (j.contains("atoms"))
    for (const Json& e : j.at("atoms")) labels.push_back(e.get<std::string>());
  const Json& weights = j.at("weights");
  if (!weights.is_array() || weights.empty())
    throw ParseError("measure: nonempty weights array required");
  if (labels.empty())
    for (std::size_t i = 0; i < weights.size(); ++i)
      labels.push_back("a" + std::to_string(i));

  auto space = std::make_shared<AtomSpace>();
  space->labels = labels;
  if (j.contains("base_weights")) {
    std::vector<Rational> bw;
    for (const Json& e : j.at("base_weights")) bw.push_back(rational_from_json(e));
    *space = AtomSpace::weighted(labels, std::move(bw));
  }

  ValueKind vk = deduce_kind(weights, j.value("complex", false));
  if (vk == ValueKind::Real) {
    std::vector<Rational> w;
    for (const Json& e : weights) w.push_back(rational_from_json(e));
    return SignedMeasure::real(space, std::move(w));
  }
  if (vk == ValueKind::Complex) {
    std::vector<std::pair<Rational, Rational>> w;
    for (const Json& e : weights)
      w.push_back({rational_from_json(e.at(0)), rational_from_json(e.at(1))});
    return SignedMeasure::complex(space, std::move(w));
  }
  std::vector<std::vector<Rational>> w;
  for (const Json& e : weights) {
    std::vector<Rational> row;
    for (const Json& x : e) row.push_back(rational_from_json(x));
    w.push_back(std::move(row));
  }
  NormDescriptor nd = j.contains("norm") ? norm_from_json(j.at("norm"))
                                         : NormDescriptor::l2();
  return SignedMeasure::vector(space, std::move(w), std::move(nd));
}

Json partition_to_json(const PartitionAlgebra& p) {
  Json j = Json::array();
  for (const auto& cell : p.cells) j.push_back(cell);
  return j;
}

PartitionAlgebra partition_from_json(const Json& j, int n_atoms) {
  if (!j.is_array()) throw ParseError("partition: expected an array of cells");
  std::vector<std::vector<int>> cells;
  for (const Json& c : j) {
    std::vector<int> cell;
    for (const Json& a : c) cell.push_back(a.get<int>());
    cells.push_back(std::move(cell));
  }
  return PartitionAlgebra::from_cells(std::move(cells), n_atoms);
}

Json step_to_json(const DyadicStep& s) {
  Json j;
  j["level"] = s.level;
  Json vals = Json::array();
  for (const Rational& v : s.values) vals.push_back(rat_str(v));
  j["values"] = vals;
  return j;
}

DyadicStep step_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("dyadic step: expected an object");
  int level = j.at("level").get<int>();
  std::vector<Rational> values;
  for (const Json& e : j.at("values")) values.push_back(rational_from_json(e));
  return DyadicStep::from_values(level, std::move(values));
}

Json dyadic_measure_to_json(const DyadicMeasure& m) {
  Json j;
  j["density"] = step_to_json(m.density);
  Json atoms = Json::array();
  for (const PointMass& a : m.atoms) {
    Json e;
    e["loc"] = rat_str(a.loc);
    e["mass"] = rat_str(a.mass);
    atoms.push_back(e);
  }
  j["atoms"] = atoms;
  return j;
}

DyadicMeasure dyadic_measure_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("dyadic measure: expected an object");
  DyadicStep density = j.contains("density") ? step_from_json(j.at("density"))
                                             : DyadicStep::constant(0);
  std::vector<PointMass> atoms;
  if (j.contains("atoms")) {
    for (const Json& e : j.at("atoms"))
      atoms.push_back({rational_from_json(e.at("loc")),
                       rational_from_json(e.at("mass"))});
  }
  return DyadicMeasure::from(std::move(density), std::move(atoms));
}

Json filtration_to_json(const Filtration& f) {
  Json j;
  j["atoms"] = f.space->labels;
  Json bw = Json::array();
  for (const Rational& r : *f.space->base_weights) bw.push_back(rat_str(r));
  j["weights"] = bw;
  Json stages = Json::array();
  for (const auto& p : f.stages) stages.push_back(partition_to_json(p));
  j["stages"] = stages;
  return j;
}

Filtration filtration_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("filtration: expected an object");
  std::vector<std::string> labels;
  for (const Json& e : j.at("atoms")) labels.push_back(e.get<std::string>());
  std::vector<Rational> weights;
  for (const Json& e : j.at("weights")) weights.push_back(rational_from_json(e));
  auto space = std::make_shared<AtomSpace>(
      AtomSpace::weighted(std::move(labels), std::move(weights)));
  std::vector<PartitionAlgebra> stages;
  for (const Json& s : j.at("stages"))
    stages.push_back(partition_from_json(s, space->size()));
  return Filtration::make(std::move(space), std::move(stages));
}

Json adapted_to_json(const AdaptedSequence& s) {
  Json j = filtration_to_json(*s.filt);
  Json values = Json::array();
  for (const auto& stage : s.values) {
    Json row = Json::array();
    for (const Value& v : stage) row.push_back(value_to_json(v));
    values.push_back(row);
  }
  j["values"] = values;
  if (s.vkind == ValueKind::Vector) j["norm"] = norm_to_json(s.norm);
  if (s.vkind == ValueKind::Complex) j["complex"] = true;
  return j;
}

AdaptedSequence adapted_from_json(const Json& j) {
  auto filt = std::make_shared<Filtration>(filtration_from_json(j));
  const Json& values = j.at("values");
  if (!values.is_array() || values.empty())
    throw ParseError("adapted sequence: values per stage required");
  ValueKind vk = deduce_kind(values.at(0), j.value("complex", false));
  std::vector<std::vector<Value>> out;
  for (const Json& row : values) {
    std::vector<Value> stage;
    for (const Json& e : row) stage.push_back(value_from_json(e, vk));
    out.push_back(std::move(stage));
  }
  NormDescriptor nd = j.contains("norm") ? norm_from_json(j.at("norm"))
                                         : NormDescriptor::l2();
  return AdaptedSequence::make(std::move(filt), std::move(out), std::move(nd));
}

Json polyline_to_json(const Polyline& p) {
  Json j;
  Json knots = Json::array();
  for (const Rational& k : p.knots) knots.push_back(rat_str(k));
  j["knots"] = knots;
  Json pts = Json::array();
  for (const auto& pt : p.points) {
    Json row = Json::array();
    for (const Rational& x : pt) row.push_back(rat_str(x));
    pts.push_back(row);
  }
  j["points"] = pts;
  j["interp"] = p.interp == Interp::Linear      ? "linear"
                : p.interp == Interp::JumpLeft ? "jump-left"
                                               : "jump-right";
  j["norm"] = norm_to_json(p.norm);
  return j;
}

Polyline polyline_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("polyline: expected an object");
  std::vector<Rational> knots;
  for (const Json& e : j.at("knots")) knots.push_back(rational_from_json(e));
  std::vector<std::vector<Rational>> points;
  for (const Json& row : j.at("points")) {
    std::vector<Rational> pt;
    if (row.is_array())
      for (const Json& x : row) pt.push_back(rational_from_json(x));
    else
      pt.push_back(rational_from_json(row));
    points.push_back(std::move(pt));
  }
  std::string interp = j.value("interp", "linear");
  Interp ip = interp == "linear"      ? Interp::Linear
              : interp == "jump-left" ? Interp::JumpLeft
              : interp == "jump-right"
                  ? Interp::JumpRight
                  : throw ParseError("polyline: bad interp '" + interp + "'");
  NormDescriptor nd = j.contains("norm") ? norm_from_json(j.at("norm"))
                                         : NormDescriptor::l2();
  return Polyline::make(std::move(knots), std::move(points), ip, std::move(nd));
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace summa
