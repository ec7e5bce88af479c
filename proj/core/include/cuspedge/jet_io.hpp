#pragma once

#include <json.hpp>

#include "cuspedge/jet.hpp"

// Wire format for jets:
//   {"deg": d, "terms": [{"m": [i,j,k], "c": "num/den"}, ...]}
// with terms in the canonical (graded lexicographic, u > v > w) order.
// A jet map is {"deg": d, "components": [[...terms...], ...]}.

namespace cuspedge {

nlohmann::json jet_to_json(const Jet& j);
Jet jet_from_json(const nlohmann::json& js);

nlohmann::json jetmap_to_json(const JetMap& g);
JetMap jetmap_from_json(const nlohmann::json& js);

} // namespace cuspedge
