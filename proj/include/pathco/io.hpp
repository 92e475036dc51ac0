#pragma once

#include <json.hpp>

#include "pathco/galois.hpp"

namespace pathco {

nlohmann::json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const CoalgElement& x);
CoalgElement element_from_json(const PathSpacePtr& space, const nlohmann::json& j);

nlohmann::json algebra_element_to_json(const TruncatedAlgebraElement& x);
TruncatedAlgebraElement algebra_element_from_json(const PathSpacePtr& space, const nlohmann::json& j);

/// {"vertex_map": {...}, "primitives": {"a.b": {"c": "3/2", "arrows": {"g": "1"}}}}
/// Omitted paths mean the zero primitive. With require_arrows set, an arrow
/// without an entry is reported (automorphism-intended data must pin arrows).
nlohmann::json datum_to_json(const TransDatum& mu);
TransDatum datum_from_json(const PathSpacePtr& source, const PathSpacePtr& target,
                           const nlohmann::json& j, bool require_arrows);

/// {"images": {"<path-spec>": element-map, ...}}; every path needs an image.
nlohmann::json map_to_json(const LinearCoalgMap& f);
LinearCoalgMap map_from_json(const PathSpacePtr& source, const PathSpacePtr& target,
                             const nlohmann::json& j);

/// {"generators": [element-map, ...]}: the large subcoalgebra generated by
/// kQ_{<=1} and the listed elements.
LargeSubcoalgebra subcoalgebra_from_json(const PathSpacePtr& space, const nlohmann::json& j);
nlohmann::json subcoalgebra_to_json(const LargeSubcoalgebra& d);

nlohmann::json dual_algebra_to_json(const DualAlgebra& b);

/// Built-in example quivers: "an" (directed A_n), "kronecker" (K_n),
/// "subspace" (n-subspace star), "loop" (one vertex, one loop),
/// "two-cycle" (1 <-> 2).
Quiver builtin_quiver(const std::string& name, int n);

}  // namespace pathco
