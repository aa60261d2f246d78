#ifndef TRIGONAL_CORRESPONDENCE_HPP
#define TRIGONAL_CORRESPONDENCE_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigonal/monodromy.hpp"
#include "trigonal/permutation.hpp"
#include "trigonal/symplectic.hpp"

namespace trigonal {

/// The separating-node cover type: t_0 = t_1 = (12), t_2 = ... = t_11 = (23).
MonodromyClass base_class();

enum class Side { Lattice, Monodromy };

/// Both permutation actions of the ten braid generators, indexed alike.
struct BraidActions {
  PermutationAction lattice;    // projective transvections on P^9(F3)
  PermutationAction monodromy;  // Hurwitz moves on cover types

  static BraidActions build(const ProjectiveSpace& space, const ClassTable& classes);
  const PermutationAction& on(Side side) const { return side == Side::Lattice ? lattice : monodromy; }
};

/// Schreier generators of the stabilizer of seed, shortest first, at most budget.
std::vector<GeneratorWord> stabilizer_words(Point seed, Side side, const BraidActions& actions, std::size_t budget);

struct EdgeFailure {
  int generator = 0;  // 1-based
  Point point = 0;    // lattice-side point
  Point expected = 0; // B_g(forward[p])
  Point actual = 0;   // forward[sigma_g(p)]
};

struct EquivarianceCheck {
  std::size_t edges_checked = 0;
  std::optional<EdgeFailure> first_failure;
  bool ok() const { return !first_failure.has_value(); }
};

/// forward[sigma_g(p)] == B_g(forward[p]) for every generator g and every point p.
EquivarianceCheck verify_equivariance(const std::vector<Point>& forward, const BraidActions& actions);

/// sigma_g fixes p exactly when B_g fixes forward[p]; returns the number of
/// (generator, point) pairs where this fails.
std::size_t fixed_point_mismatches(const std::vector<Point>& forward, const BraidActions& actions);

struct Correspondence {
  std::vector<Point> forward;   // point index -> class index
  std::vector<Point> backward;  // class index -> point index
  Point base_point = 0;
  Point base_class = 0;
  std::size_t edges_verified = 0;
  std::size_t pruning_words = 0;
  std::size_t candidates_after_pruning = 0;
  /// Base points whose transported map passed full verification.
  std::size_t candidates_verified = 0;
};

class NoEquivariantBijection : public std::runtime_error {
public:
  NoEquivariantBijection(const std::string& what, std::optional<EdgeFailure> edge)
      : std::runtime_error(what), edge_(edge) {}
  const std::optional<EdgeFailure>& edge() const { return edge_; }

private:
  std::optional<EdgeFailure> edge_;
};

/// Default number of monodromy-side Schreier generators used to prune base points.
inline constexpr std::size_t kPruningBudget = 64;

/// Anchors base_class() at a lattice-side point found by search and transports the
/// anchor along the breadth-first tree of that point. Base points are pruned by
/// requiring them to be fixed by the stabilizer words of the base class; every
/// survivor is transported and verified on all edges, and the first passing one
/// is returned. Throws NoEquivariantBijection if none passes.
Correspondence build_bijection(const ProjectiveSpace& space, const ClassTable& classes, const BraidActions& actions,
                               std::size_t pruning_budget = kPruningBudget);

struct Disagreement {
  Point class_index = 0;
  int position = 0;
  Confluence combinatorial = Confluence::H;
  Confluence symplectic = Confluence::H;
};

struct CrossValidationReport {
  std::size_t checks = 0;
  std::size_t agreements = 0;
  /// counts[combinatorial][symplectic], indexed by Confluence.
  std::array<std::array<std::size_t, 3>, 3> counts{};
  std::optional<Disagreement> first_disagreement;
  bool all_agree() const { return checks > 0 && agreements == checks; }
};

/// Compares classify_confluence(rho, i) with classify_line([alpha_i], phi^{-1}(rho))
/// for every class rho and i = 1..10. Positions 0 and 11 have no basis line and are
/// not compared.
CrossValidationReport cross_validate_classification(const Correspondence& corr, const ProjectiveSpace& space,
                                                    const ClassTable& classes);

}  // namespace trigonal

#endif
