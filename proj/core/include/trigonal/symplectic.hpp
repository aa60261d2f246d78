#ifndef TRIGONAL_SYMPLECTIC_HPP
#define TRIGONAL_SYMPLECTIC_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "trigonal/confluence_type.hpp"
#include "trigonal/f3.hpp"
#include "trigonal/lattice.hpp"
#include "trigonal/permutation.hpp"

namespace trigonal {

/// (3^10 - 1) / 2 points of P^9(F3).
inline constexpr std::uint32_t kProjCount = 29524;
/// Nonzero vectors of F3^10.
inline constexpr std::uint32_t kNonzeroVectorCount = kVectorCount - 1;

/// Coordinatewise reduction L -> L / theta L = F3^10.
F3Vector reduce_vector(const LatticeVector& x);

/// The reduction mod theta of the skew form h' on the basis alpha_1..alpha_10.
class SympForm {
public:
  static const SympForm& standard();

  F3 operator()(const F3Vector& x, const F3Vector& y) const;
  const F3Matrix& matrix() const { return m_; }
  bool is_alternating() const;
  int rank() const { return m_.rank(); }

private:
  SympForm();
  F3Matrix m_;
};

/// symp(alpha_i, alpha_{i+1}) = 1.
inline F3 symp(const F3Vector& x, const F3Vector& y) { return SympForm::standard()(x, y); }

/// Matrix of x -> x - symp(x, alpha_i) alpha_i, the reduction of triflection(i).
F3Matrix transvection(int i);
F3Vector transvect(int i, const F3Vector& x, int power = 1);

/// A line of F3^10, represented by its vector whose first nonzero entry is 1.
class ProjPoint {
public:
  /// Throws std::invalid_argument for the zero vector.
  explicit ProjPoint(const F3Vector& v);

  const F3Vector& rep() const { return rep_; }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;

private:
  F3Vector rep_;
};

/// All points of P^9(F3), ordered by the code of their canonical representatives (alpha_1 first).
class ProjectiveSpace {
public:
  ProjectiveSpace();

  std::size_t size() const { return points_.size(); }
  const std::vector<ProjPoint>& points() const { return points_; }
  const ProjPoint& point(Point idx) const { return points_.at(idx); }

  Point index_of(const ProjPoint& p) const { return index_by_code_[p.rep().code()]; }
  /// Index of the line through a nonzero vector.
  Point index_of(const F3Vector& v) const { return index_of(ProjPoint(v)); }

  /// Induced permutation of points; throws std::invalid_argument if m is singular.
  Permutation permutation_of(const F3Matrix& m) const;
  /// The ten projective transvections, generator i at position i-1.
  PermutationAction transvection_action() const;

private:
  std::vector<ProjPoint> points_;
  std::vector<Point> index_by_code_;
};

std::vector<ProjPoint> enumerate_proj();

/// Action of an invertible matrix on the nonzero vectors; vector v is point code(v) - 1.
Permutation vector_permutation_of(const F3Matrix& m);
PermutationAction transvection_vector_action();

/// H if m = ell, RM if m lies in ell-perp, SG otherwise.
Confluence classify_line(const ProjPoint& m, const ProjPoint& ell);

struct LineStratification {
  std::size_t h = 0;
  std::size_t rm = 0;
  std::size_t sg = 0;
  std::size_t total() const { return h + rm + sg; }
};

/// Sizes of the three classes of points relative to ell.
LineStratification stabilizer_orbit_sizes(const ProjectiveSpace& space, const ProjPoint& ell);

}  // namespace trigonal

#endif
