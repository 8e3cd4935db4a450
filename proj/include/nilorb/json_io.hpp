#pragma once

#include <string>

#include "nilorb/blockdata.hpp"
#include "nilorb/eolp.hpp"
#include "nilorb/invariants.hpp"
#include "nilorb/matrix.hpp"
#include "nilorb/poset.hpp"
#include "vendor_json_fwd.hpp"

namespace nilorb {

using nlohmann::json;

// {"rows": r, "cols": c, "entries": [["p/q" | integer, ...], ...]}
json matrix_to_json(const Mat& m);
Mat matrix_from_json(const json& j);

// {"blocks": [...], "arrows": [{"from": j, "to": i, "mult": m}, ...],
//  "dots": [...]}; vertices are 1-based.
json eolp_to_json(const Eolp& e, const BlockData& blocks);
std::pair<Eolp, BlockData> eolp_from_json(const json& j);

// {"a": [...], "a_prime": [...], "polys": [[[c0, c1, ...], ...], ...]} with
// coefficients as exact strings or integers, or {"builtin": name, "n": n,
// "i": i, "j": j}.
json datum_to_json(const SemiInvDatum& d);
SemiInvDatum datum_from_json(const json& j);

// {"elements": [Eolp...], "covers": [[i, j], ...], "dims": [...]} with
// 0-based indices into elements.
json poset_to_json(const OrbitPoset& poset, const BlockData& blocks);

json weight_to_json(const Weight& w);

}  // namespace nilorb
