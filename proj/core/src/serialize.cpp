#include "trigonal/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace trigonal {

using nlohmann::json;

void to_json(json& j, const EisensteinInt& x) { j = json::array({x.re_part(), x.tau_part()}); }

void from_json(const json& j, EisensteinInt& x) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw std::invalid_argument("Eisenstein integer must be a two-element integer array");
  x = EisensteinInt(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
}

void to_json(json& j, const LatticeVector& v) {
  j = json::array();
  for (const auto& c : v.coords()) j.push_back(c);
}

void from_json(const json& j, LatticeVector& v) {
  if (!j.is_array() || j.size() != kRank) throw std::invalid_argument("lattice vector must have 10 coordinates");
  for (std::size_t k = 0; k < kRank; ++k) v[k] = j[k].get<EisensteinInt>();
}

void to_json(json& j, const UnitaryMatrix& m) {
  j = json::array();
  for (const auto& row : m.entries()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x);
    j.push_back(std::move(r));
  }
}

void from_json(const json& j, UnitaryMatrix& m) {
  if (!j.is_array() || j.size() != kRank) throw std::invalid_argument("matrix must have 10 rows");
  EisMatrix e{};
  for (std::size_t r = 0; r < kRank; ++r) {
    if (!j[r].is_array() || j[r].size() != kRank) throw std::invalid_argument("matrix row must have 10 entries");
    for (std::size_t c = 0; c < kRank; ++c) e[r][c] = j[r][c].get<EisensteinInt>();
  }
  m = UnitaryMatrix(e);
}

void to_json(json& j, const F3Vector& v) {
  j = json::array();
  for (std::size_t k = 0; k < kRank; ++k) j.push_back(static_cast<int>(v[k].value()));
}

void from_json(const json& j, F3Vector& v) {
  if (!j.is_array() || j.size() != kRank) throw std::invalid_argument("F3 vector must have 10 entries");
  for (std::size_t k = 0; k < kRank; ++k) {
    const int x = j[k].get<int>();
    if (x < 0 || x > 2) throw std::invalid_argument("F3 entry must be 0, 1 or 2");
    v[k] = F3(x);
  }
}

json gram_json() {
  json j = json::array();
  for (const auto& row : gram_matrix()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x);
    j.push_back(std::move(r));
  }
  return j;
}

json permutations_json(const PermutationAction& action) {
  json images = json::array();
  for (const auto& g : action.generators()) images.push_back(g.images());
  return {{"generators", action.generator_count()}, {"degree", action.degree()}, {"images", std::move(images)}};
}

json orbit_json(const SchreierTree& tree) {
  const std::size_t n = [&] {
    std::size_t m = 0;
    for (auto p : tree.points()) m = std::max<std::size_t>(m, p + 1);
    return m;
  }();
  json parent = json::array();
  json generator = json::array();
  for (Point p = 0; p < n; ++p) {
    const bool inner = tree.contains(p) && tree.generator(p) != 0;
    parent.push_back(inner ? static_cast<std::int64_t>(tree.parent(p)) : std::int64_t{-1});
    generator.push_back(tree.contains(p) ? tree.generator(p) : 0);
  }
  return {{"roots", tree.roots()},     {"size", tree.size()},       {"max_depth", tree.max_depth()},
          {"points", tree.points()},   {"parent", std::move(parent)}, {"generator", std::move(generator)}};
}

std::string orbit_dot(const SchreierTree& tree, const PermutationAction& action, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (Point p : tree.points()) {
    for (int g = 1; g <= static_cast<int>(action.generator_count()); ++g) {
      const Point q = action.generator(g)(p);
      if (q == p) continue;
      const bool tree_edge = tree.parent(q) == p && tree.generator(q) == g;
      os << "  " << p << " -> " << q << " [label=" << g << (tree_edge ? "" : ",style=dashed") << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

json classes_json(const ClassTable& classes) {
  json list = json::array();
  for (std::size_t k = 0; k < classes.size(); ++k)
    list.push_back({{"index", k}, {"tuple", classes.classes()[k].to_string()}});
  return {{"count", classes.size()}, {"raw_count", classes.raw_count()}, {"classes", std::move(list)}};
}

json bijection_json(const Correspondence& corr, const ProjectiveSpace& space, const ClassTable& classes) {
  json base = {{"point_index", corr.base_point},
               {"point", space.point(corr.base_point).rep().to_string()},
               {"class_index", corr.base_class},
               {"class", classes.at(corr.base_class).to_string()}};
  return {{"forward", corr.forward},
          {"generators_checked", kRank},
          {"edges_verified", corr.edges_verified},
          {"base_pair", std::move(base)},
          {"candidates_after_pruning", corr.candidates_after_pruning},
          {"candidates_verified", corr.candidates_verified}};
}

std::string dump(const json& j) { return j.dump() + "\n"; }

}  // namespace trigonal
