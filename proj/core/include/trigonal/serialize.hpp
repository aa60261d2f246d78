#ifndef TRIGONAL_SERIALIZE_HPP
#define TRIGONAL_SERIALIZE_HPP

#include <nlohmann/json.hpp>
#include <string>

#include "trigonal/correspondence.hpp"
#include "trigonal/eisenstein.hpp"
#include "trigonal/lattice.hpp"
#include "trigonal/monodromy.hpp"
#include "trigonal/permutation.hpp"
#include "trigonal/symplectic.hpp"

namespace trigonal {

// a + b tau is [a, b]; vectors are arrays of those; matrices are row-major nested arrays.
void to_json(nlohmann::json& j, const EisensteinInt& x);
void from_json(const nlohmann::json& j, EisensteinInt& x);
void to_json(nlohmann::json& j, const LatticeVector& v);
void from_json(const nlohmann::json& j, LatticeVector& v);
void to_json(nlohmann::json& j, const UnitaryMatrix& m);
void from_json(const nlohmann::json& j, UnitaryMatrix& m);
void to_json(nlohmann::json& j, const F3Vector& v);
void from_json(const nlohmann::json& j, F3Vector& v);

nlohmann::json gram_json();
/// {"generators": k, "degree": n, "images": [[...], ...]}
nlohmann::json permutations_json(const PermutationAction& action);
/// {"roots", "size", "max_depth", "points", "parent", "generator"}; parent and
/// generator are -1 / 0 for roots and points outside the orbit.
nlohmann::json orbit_json(const SchreierTree& tree);
/// Orbit graph: tree edges solid, other generator edges dashed; self-loops omitted.
std::string orbit_dot(const SchreierTree& tree, const PermutationAction& action, const std::string& name);
/// {"count", "raw_count", "classes": [{"index", "tuple"}, ...]}
nlohmann::json classes_json(const ClassTable& classes);
/// {"forward", "generators_checked", "edges_verified", "base_pair", ...}
nlohmann::json bijection_json(const Correspondence& corr, const ProjectiveSpace& space, const ClassTable& classes);

/// Compact dump followed by a newline; byte-identical for identical input.
std::string dump(const nlohmann::json& j);

}  // namespace trigonal

#endif
