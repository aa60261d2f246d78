#include "trigonal/correspondence.hpp"

#include <sstream>

namespace trigonal {

MonodromyClass base_class() {
  MonodromyTuple t{};
  t.fill(Transposition::T23);
  t[0] = t[1] = Transposition::T12;
  if (!product_is_identity(t)) throw std::logic_error("base tuple violates the product relation");
  return MonodromyClass(t);
}

BraidActions BraidActions::build(const ProjectiveSpace& space, const ClassTable& classes) {
  return {space.transvection_action(), classes.hurwitz_action()};
}

std::vector<GeneratorWord> stabilizer_words(Point seed, Side side, const BraidActions& actions,
                                            std::size_t budget) {
  const auto& action = actions.on(side);
  const auto tree = orbit(std::span<const Point>(&seed, 1), action);
  return schreier_generators(tree, action, budget);
}

EquivarianceCheck verify_equivariance(const std::vector<Point>& forward, const BraidActions& actions) {
  EquivarianceCheck check;
  for (int g = 1; g <= static_cast<int>(actions.lattice.generator_count()); ++g) {
    const auto& sigma = actions.lattice.generator(g);
    const auto& braid = actions.monodromy.generator(g);
    for (Point p = 0; p < forward.size(); ++p) {
      ++check.edges_checked;
      const Point expected = braid(forward[p]);
      const Point actual = forward[sigma(p)];
      if (expected != actual && !check.first_failure) check.first_failure = EdgeFailure{g, p, expected, actual};
    }
  }
  return check;
}

std::size_t fixed_point_mismatches(const std::vector<Point>& forward, const BraidActions& actions) {
  std::size_t bad = 0;
  for (int g = 1; g <= static_cast<int>(actions.lattice.generator_count()); ++g)
    for (Point p = 0; p < forward.size(); ++p) {
      const bool lattice_fixed = actions.lattice.generator(g)(p) == p;
      const bool monodromy_fixed = actions.monodromy.generator(g)(forward[p]) == forward[p];
      bad += lattice_fixed != monodromy_fixed;
    }
  return bad;
}

namespace {

// Transport rho_0 along the tree rooted at the candidate; empty on a conflict.
std::optional<std::vector<Point>> transport(Point anchor, Point anchor_image, const BraidActions& actions,
                                            std::size_t n) {
  const auto tree = orbit(std::span<const Point>(&anchor, 1), actions.lattice);
  if (tree.size() != n) return std::nullopt;
  std::vector<Point> forward(n, SchreierTree::kNone);
  forward[anchor] = anchor_image;
  for (Point p : tree.points()) {
    if (p == anchor) continue;
    forward[p] = actions.monodromy.generator(tree.generator(p))(forward[tree.parent(p)]);
  }
  return forward;
}

std::optional<std::vector<Point>> invert(const std::vector<Point>& forward) {
  std::vector<Point> backward(forward.size(), SchreierTree::kNone);
  for (Point p = 0; p < forward.size(); ++p) {
    if (forward[p] >= forward.size() || backward[forward[p]] != SchreierTree::kNone) return std::nullopt;
    backward[forward[p]] = p;
  }
  return backward;
}

}  // namespace

Correspondence build_bijection(const ProjectiveSpace& space, const ClassTable& classes, const BraidActions& actions,
                               std::size_t pruning_budget) {
  const std::size_t n = space.size();
  if (classes.size() != n) throw NoEquivariantBijection("point and class counts differ", std::nullopt);

  const Point rho0 = classes.index_of(base_class());
  const auto words = stabilizer_words(rho0, Side::Monodromy, actions, pruning_budget);

  Correspondence result;
  result.base_class = rho0;
  result.pruning_words = words.size();

  std::optional<EdgeFailure> first_edge;
  bool found = false;
  for (Point candidate = 0; candidate < n; ++candidate) {
    bool fixed = true;
    for (const auto& w : words)
      if (actions.lattice.apply(w, candidate) != candidate) {
        fixed = false;
        break;
      }
    if (!fixed) continue;
    ++result.candidates_after_pruning;

    auto forward = transport(candidate, rho0, actions, n);
    if (!forward) continue;
    const auto check = verify_equivariance(*forward, actions);
    if (!check.ok()) {
      if (!first_edge) first_edge = check.first_failure;
      continue;
    }
    auto backward = invert(*forward);
    if (!backward) continue;
    ++result.candidates_verified;
    if (!found) {
      found = true;
      result.forward = std::move(*forward);
      result.backward = std::move(*backward);
      result.base_point = candidate;
      result.edges_verified = check.edges_checked;
    }
  }
  if (!found) {
    std::ostringstream os;
    os << "no equivariant bijection found (" << result.candidates_after_pruning << " candidates after pruning)";
    if (first_edge)
      os << "; first failing edge: generator " << first_edge->generator << " at point " << first_edge->point;
    throw NoEquivariantBijection(os.str(), first_edge);
  }
  return result;
}

CrossValidationReport cross_validate_classification(const Correspondence& corr, const ProjectiveSpace& space,
                                                    const ClassTable& classes) {
  CrossValidationReport report;
  for (Point r = 0; r < classes.size(); ++r) {
    const auto& ell = space.point(corr.backward.at(r));
    for (int i = 1; i <= kRank; ++i) {
      const auto comb = classify_confluence(classes.at(r), i);
      const auto symp = classify_line(ProjPoint(F3Vector::basis(i)), ell);
      ++report.checks;
      ++report.counts[static_cast<std::size_t>(comb)][static_cast<std::size_t>(symp)];
      if (comb == symp) ++report.agreements;
      else if (!report.first_disagreement) report.first_disagreement = Disagreement{r, i, comb, symp};
    }
  }
  return report;
}

}  // namespace trigonal
