#pragma once

#include <json.hpp>

#include "pmaya/chain.hpp"
#include "pmaya/painleve.hpp"

namespace pmaya {

// Serialization uses ordered JSON objects so that re-serializing a parsed
// document reproduces it byte for byte (canonical field order, canonical
// rational strings).
using Json = nlohmann::ordered_json;

// Rationals are "num" or "num/den" strings; a value with a surd part becomes
// {"a": rational, "b": rational, "m": radicand}.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// Integer-valued scalars are emitted as JSON numbers when they fit.
Json scalar_to_json_compact(const Scalar& s);

Json poly_to_json(const Poly& p);  // array of coefficients, ascending degree
Poly poly_from_json(const Json& j);

Json ratfunc_to_json(const RatFunc& r);  // {"num": poly, "den": poly}
RatFunc ratfunc_from_json(const Json& j);

Json maya_to_json(const MayaDiagram& m);  // {"minus": [...], "plus": [...]}
MayaDiagram maya_from_json(const Json& j);

Json kblocks_to_json(const KBlockCoordinates& kb);  // {"k": ..., "blocks": [[...]]}
KBlockCoordinates kblocks_from_json(const Json& j);

Json tau_to_json(const TauFunction& t);  // {"diagram": ..., "poly": ..., "degree": ...}
TauFunction tau_from_json(const Json& j);

Json cycle_spec_to_json(const CycleSpec& spec);
CycleSpec cycle_spec_from_json(const Json& j);

Json chain_to_json(const ChainSolution& sol);
ChainSolution chain_from_json(const Json& j);

Json ny_to_json(const NYSolution& ny);
NYSolution ny_from_json(const Json& j);

Json p4_to_json(const P4Solution& sol, const CycleSpec& source);
P4Solution p4_from_json(const Json& j);

Json p5_to_json(const P5Solution& sol, const CycleSpec& source);
P5Solution p5_from_json(const Json& j);

// The full document emitted by `solve --json`: cycle spec, chain solution,
// Noumi-Yamada form, and the scalar reduction when p is 3 or 4.
Json solve_document(const CycleSpec& spec);

// Re-run every verifier on a parsed solve document; returns true when all
// checks pass.
bool verify_document(const Json& doc);

}  // namespace pmaya
