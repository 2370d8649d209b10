#pragma once

#include "summa/dyadic.hpp"
#include "summa/martingale.hpp"
#include "summa/measure.hpp"
#include "summa/norms.hpp"
#include "summa/paths.hpp"
#include "summa/unordered.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace summa {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings (plain integers without the /q);
// floats as JSON numbers.

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json seqvector_to_json(const SeqVector& v);
SeqVector seqvector_from_json(const Json& j);

Json norm_to_json(const NormDescriptor& nd);
// Accepts {"kind": "lp", "p": ...}, {"kind": "weighted-lp", ...},
// {"kind": "custom-table", "scales": [...]}, or shorthand strings
// "l1" / "l2" / "linf" / "l1.5".
NormDescriptor norm_from_json(const Json& j);

Json family_to_json(const IndexedFamily& f);
// {"kind": "finite", "terms": [...]} with terms rationals, [re, im]
// pairs, or vectors (plus optional "norm"); or
// {"kind": "streamed", "generator": name, "horizon": N, ...params}.
IndexedFamily family_from_json(const Json& j);

Json measure_to_json(const SignedMeasure& m);
// {"atoms": [labels], "weights": [...], "norm": "l1|l2|linf",
//  "base_weights": optional}
SignedMeasure measure_from_json(const Json& j);

Json partition_to_json(const PartitionAlgebra& p);
PartitionAlgebra partition_from_json(const Json& j, int n_atoms);

Json step_to_json(const DyadicStep& s);
DyadicStep step_from_json(const Json& j);

Json dyadic_measure_to_json(const DyadicMeasure& m);
DyadicMeasure dyadic_measure_from_json(const Json& j);

Json filtration_to_json(const Filtration& f);
Filtration filtration_from_json(const Json& j);

Json adapted_to_json(const AdaptedSequence& s);
AdaptedSequence adapted_from_json(const Json& j);

Json polyline_to_json(const Polyline& p);
Polyline polyline_from_json(const Json& j);

Json load_json_file(const std::string& path);  // ParseError on failure

}  // namespace summa
