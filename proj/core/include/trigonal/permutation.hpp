#ifndef TRIGONAL_PERMUTATION_HPP
#define TRIGONAL_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace trigonal {

using Point = std::uint32_t;

/// A permutation of {0, ..., n-1} stored as its image array.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);
  static Permutation identity(std::size_t n);

  std::size_t degree() const { return img_.size(); }
  Point operator()(Point p) const { return img_[p]; }
  const std::vector<Point>& images() const { return img_; }

  Permutation inverse() const;
  /// (*this) after other.
  Permutation after(const Permutation& other) const;
  bool is_identity() const;
  std::size_t fixed_point_count() const;
  /// Order of the permutation, assuming it divides max_order; 0 otherwise.
  int order(int max_order = 12) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<Point> img_;
};

/// Throws std::invalid_argument unless images form a permutation.
void validate_permutation(const std::vector<Point>& images);

/// One letter T_g^{exponent} of a braid word; generator is 1-based.
struct Letter {
  int generator = 1;
  int exponent = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A word in the generators, read left to right: the first letter acts first.
struct GeneratorWord {
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  GeneratorWord inverse() const;
  GeneratorWord operator*(const GeneratorWord& then) const;
  std::string to_string() const;

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

/// Generators of a permutation group together with their inverses.
class PermutationAction {
public:
  PermutationAction() = default;
  explicit PermutationAction(std::vector<Permutation> generators);

  std::size_t degree() const { return gens_.empty() ? 0 : gens_.front().degree(); }
  std::size_t generator_count() const { return gens_.size(); }
  const Permutation& generator(int g) const { return gens_.at(static_cast<std::size_t>(g - 1)); }
  const std::vector<Permutation>& generators() const { return gens_; }

  Point apply(const Letter& l, Point p) const;
  Point apply(const GeneratorWord& w, Point p) const;

private:
  std::vector<Permutation> gens_;
  std::vector<Permutation> inv_;
};

/// Breadth-first orbit with its spanning tree. Seeds are roots, generators are tried
/// in index order, so parents are chosen deterministically.
class SchreierTree {
public:
  static constexpr Point kNone = std::numeric_limits<Point>::max();

  std::size_t size() const { return order_.size(); }
  bool contains(Point p) const { return p < parent_.size() && depth_[p] != kNone; }
  /// Orbit points in discovery order.
  const std::vector<Point>& points() const { return order_; }
  const std::vector<Point>& roots() const { return roots_; }

  Point parent(Point p) const { return parent_[p]; }
  /// 1-based generator used to reach p, 0 for roots.
  int generator(Point p) const { return gen_[p]; }
  std::uint32_t depth(Point p) const { return depth_[p]; }
  std::uint32_t max_depth() const { return max_depth_; }
  Point root_of(Point p) const;

  /// Word carrying root_of(p) to p.
  GeneratorWord word_to(Point p) const;

private:
  friend SchreierTree orbit(std::span<const Point> seeds, const PermutationAction& action);

  std::vector<Point> parent_;
  std::vector<int> gen_;
  std::vector<std::uint32_t> depth_;
  std::vector<Point> order_;
  std::vector<Point> roots_;
  std::uint32_t max_depth_ = 0;
};

SchreierTree orbit(std::span<const Point> seeds, const PermutationAction& action);

/// Schreier generators word_to(p) * g * word_to(g(p))^{-1} for the non-tree edges of a
/// single-rooted tree, shortest first (ties by point, then generator), at most budget.
/// Each fixes the root.
std::vector<GeneratorWord> schreier_generators(const SchreierTree& tree, const PermutationAction& action,
                                               std::size_t budget);

}  // namespace trigonal

#endif
