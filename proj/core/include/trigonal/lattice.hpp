#ifndef TRIGONAL_LATTICE_HPP
#define TRIGONAL_LATTICE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "trigonal/eisenstein.hpp"

namespace trigonal {

/// Rank of the Eisenstein lattice; also the number of braid generators.
inline constexpr int kRank = 10;

/// Throws std::out_of_range unless 1 <= i <= kRank.
void check_generator_index(int i);

/// A vector of the lattice, in coordinates with respect to a_1, ..., a_10.
class LatticeVector {
public:
  LatticeVector() = default;
  explicit LatticeVector(const std::array<EisensteinInt, kRank>& coords) : coords_(coords) {}

  /// The basis vector a_i, 1 <= i <= 10.
  static LatticeVector basis(int i);

  const EisensteinInt& operator[](std::size_t k) const { return coords_[k]; }
  EisensteinInt& operator[](std::size_t k) { return coords_[k]; }
  const std::array<EisensteinInt, kRank>& coords() const { return coords_; }

  bool is_zero() const;
  /// Sum of coordinate norms; used to order search frontiers.
  std::int64_t height() const;

  friend LatticeVector operator+(const LatticeVector& x, const LatticeVector& y);
  friend LatticeVector operator-(const LatticeVector& x, const LatticeVector& y);
  friend LatticeVector operator*(const EisensteinInt& s, const LatticeVector& x);
  LatticeVector operator-() const;

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

private:
  std::array<EisensteinInt, kRank> coords_{};
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& x);

using EisMatrix = std::array<std::array<EisensteinInt, kRank>, kRank>;

/// Gram entry h(a_i, a_j), 1-based: -3 on the diagonal, h(a_i, a_{i+1}) = theta,
/// h(a_{i+1}, a_i) = -theta, zero elsewhere.
EisensteinInt gram_entry(int i, int j);
EisMatrix gram_matrix();

/// Hermitian form: linear in the first slot, conjugate-linear in the second.
EisensteinInt herm(const LatticeVector& x, const LatticeVector& y);

/// Skew-hermitian form theta^{-1} h. Throws std::domain_error if h(x, y) is not
/// divisible by theta, which cannot happen for vectors of the lattice.
EisensteinInt skew(const LatticeVector& x, const LatticeVector& y);

/// An E-linear endomorphism of the lattice; column j holds the image of a_{j+1}.
class UnitaryMatrix {
public:
  UnitaryMatrix() = default;
  explicit UnitaryMatrix(const EisMatrix& entries) : m_(entries) {}

  static UnitaryMatrix identity();

  const EisMatrix& entries() const { return m_; }
  const EisensteinInt& at(std::size_t r, std::size_t c) const { return m_[r][c]; }

  LatticeVector column(std::size_t c) const;

  /// h(M a_i, M a_j) = h(a_i, a_j) for all basis pairs.
  bool preserves_form() const;

  /// Smallest k <= max_order with M^k = 1, or empty.
  std::optional<int> order(int max_order = 12) const;

  friend bool operator==(const UnitaryMatrix&, const UnitaryMatrix&) = default;

private:
  EisMatrix m_{};
};

LatticeVector apply(const UnitaryMatrix& m, const LatticeVector& x);
/// m after n: compose(m, n) applied to x equals apply(m, apply(n, x)).
UnitaryMatrix compose(const UnitaryMatrix& m, const UnitaryMatrix& n);

/// Matrix of the triflection x -> x + tau h'(x, a_i) a_i; sends a_i to tau^2 a_i.
UnitaryMatrix triflection(int i);

/// Applies the triflection for a_i (power 1 or 2, i.e. T_i or T_i^{-1}) without
/// forming the matrix.
LatticeVector triflect(int i, const LatticeVector& x, int power = 1);

struct RealificationCertificate {
  bool is_even = false;
  std::int64_t abs_det = 0;
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Integer Gram matrix of -(2/3) Re h on the Z-basis b_1, tau b_1, ..., b_10, tau b_10,
/// row-major 20x20. Throws std::domain_error on a non-integral entry.
std::vector<std::vector<std::int64_t>> realified_gram(std::span<const LatticeVector> basis);
std::vector<std::vector<std::int64_t>> realified_gram();

/// Evenness, |det| and signature of the realified Gram matrix, computed exactly.
RealificationCertificate realify_and_certify(std::span<const LatticeVector> basis);
RealificationCertificate realify_and_certify();

/// Default node budget for decompose_minus6.
inline constexpr std::size_t kDefaultMinus6SearchBound = 20000;

/// Splits a (-6)-vector as x + y with h(x,x) = h(y,y) = -3 and h(x,y) = theta.
/// Walks the triflection orbit of eps best-first by height, at most search_bound
/// vectors, looking for a unit multiple of a basis vector that splits off.
/// Empty means the budget ran out. Throws std::invalid_argument if h(eps,eps) != -6.
std::optional<std::pair<LatticeVector, LatticeVector>> decompose_minus6(
    const LatticeVector& eps, std::size_t search_bound = kDefaultMinus6SearchBound);

struct NonIntegralityWitness {
  int basis_index = 0;  // 1-based
  LatticeVector x;
  EisensteinInt value;  // h(eps, x), not divisible by 3
};

/// Finds a basis vector x with h(eps, x) outside 3E, so that the would-be
/// reflection x -> x + h(x,eps) eps / 3 leaves the lattice. Basis vectors outside
/// the support of eps are tried first. Empty when no basis vector is a witness.
std::optional<NonIntegralityWitness> check_minus6_reflection_nonintegral(const LatticeVector& eps);

}  // namespace trigonal

#endif
