#pragma once

// On-disk formats. All numbers are serialised as rational strings, never
// floats; reports add a 12-significant-digit decimal rendering next to the
// exact field where a human wants one. Emission uses insertion-ordered JSON
// so identical inputs produce byte-identical files.

#include "gptcones/bb84.hpp"
#include "gptcones/cone.hpp"
#include "gptcones/sandwich.hpp"
#include "gptcones/tensor.hpp"
#include "gptcones/witness.hpp"

#include <json.hpp>

#include <string>

namespace gptcones {

using Json = nlohmann::ordered_json;

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j);

// {"dim": int, "kind": "poly_v"|"poly_h"|"lorentz", "vectors": [[...]]},
// "vectors" omitted for "lorentz"; an optional "unit" array carries the
// order unit for files that describe a full system.
Json cone_to_json(const ConeRep& c);
ConeRep cone_from_json(const Json& j);
Json system_to_json(const GptSystem& s);
// Uses the stored unit when present, otherwise default_unit.
GptSystem system_from_json(const Json& j);

// {"dims": [d1, d2], "entries": [[...]]} row-major.
Json tensor_to_json(const TensorElement& t);
TensorElement tensor_from_json(const Json& j);

// {"alpha": [4], "psi": dim x 3 row-major, "phi": 3 x dim}.
Json sandwich_to_json(const KiteSandwich& s);
KiteSandwich sandwich_from_json(const Json& j);

// Eight named vectors x0, x1, xp, xm, f0, f1, fp, fm.
Json witness_to_json(const IncompatibilityWitness& w);
IncompatibilityWitness witness_from_json(const Json& j);

// Adds "<key>" (exact string) and "<key>_float" (12 significant digits).
void add_rat_field(Json& j, const std::string& key, const Rat& value);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace gptcones
