#ifndef TRIGONAL_MONODROMY_HPP
#define TRIGONAL_MONODROMY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigonal/confluence_type.hpp"
#include "trigonal/permutation.hpp"

namespace trigonal {

/// Number of branch points, hence positions in a monodromy tuple.
inline constexpr int kBranchPoints = 12;
/// 3^12, the number of length-12 words over the three transpositions.
inline constexpr std::uint32_t kTupleCodeCount = 531441;
/// (3^11 - 3) / 6 cover types.
inline constexpr std::uint32_t kClassCount = 29524;

/// The transpositions of S3, with the fixed encoding (12) -> 0, (23) -> 1, (13) -> 2.
enum class Transposition : std::uint8_t { T12 = 0, T23 = 1, T13 = 2 };

/// v u v, the conjugate of u by the involution v.
constexpr Transposition conjugate(Transposition u, Transposition v) {
  if (u == v) return u;
  return static_cast<Transposition>(3 - static_cast<int>(u) - static_cast<int>(v));
}

/// Tuple (t_0, ..., t_11); position i is the value on the loop around branch point i.
using MonodromyTuple = std::array<Transposition, kBranchPoints>;

enum class TupleViolation { WrongLength, BadCharacter, Constant, ProductNotIdentity };

class InvalidTuple : public std::invalid_argument {
public:
  InvalidTuple(TupleViolation kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  TupleViolation kind() const { return kind_; }

private:
  TupleViolation kind_;
};

/// Twelve characters over {0,1,2}; throws InvalidTuple on bad length or characters.
MonodromyTuple parse_tuple(const std::string& text);
std::string to_string(const MonodromyTuple& t);

/// t_11 ... t_1 t_0 = 1 in S3 (composition, rightmost acts first).
bool product_is_identity(const MonodromyTuple& t);
/// Throws InvalidTuple if t is constant or violates the product relation.
void validate_tuple(const MonodromyTuple& t);

/// Least simultaneous S3-conjugate in lexicographic order.
MonodromyTuple canonicalize(const MonodromyTuple& t);

/// (u, v) at positions (i, i+1) becomes (v, v u v); 1 <= i <= 10.
MonodromyTuple hurwitz_move(int i, const MonodromyTuple& t);
MonodromyTuple hurwitz_move_inverse(int i, const MonodromyTuple& t);

/// An S3-conjugacy class of valid tuples, stored by its canonical representative.
class MonodromyClass {
public:
  /// Validates and canonicalizes.
  explicit MonodromyClass(const MonodromyTuple& t);
  static MonodromyClass parse(const std::string& text) { return MonodromyClass(parse_tuple(text)); }

  const MonodromyTuple& canon() const { return canon_; }
  Transposition operator[](std::size_t pos) const { return canon_[pos]; }
  /// Base-3 number of the canonical tuple, position 0 most significant.
  std::uint32_t code() const;
  std::string to_string() const { return trigonal::to_string(canon_); }

  friend bool operator==(const MonodromyClass&, const MonodromyClass&) = default;
  friend auto operator<=>(const MonodromyClass&, const MonodromyClass&) = default;

private:
  MonodromyTuple canon_;
};

MonodromyClass hurwitz_act(int i, const MonodromyClass& cls);
MonodromyClass hurwitz_act_inverse(int i, const MonodromyClass& cls);

/// The class with t_i = (12) for i even and (23) for i odd.
MonodromyClass alternating_class();

/// Collision of branch points pos and pos+1 (mod 12): RM if their transpositions
/// differ; otherwise H when the other ten are all equal, SG when they generate S3.
Confluence classify_confluence(const MonodromyClass& cls, int position);

struct ClassEnumeration {
  std::vector<MonodromyClass> classes;  // sorted
  std::size_t raw_count = 0;            // surjective tuples before the S3 quotient
};

/// Enumerates t_1..t_11 freely (non-constant), solves for t_0 and takes classes.
ClassEnumeration enumerate_classes();

/// The class set with index lookup and the Hurwitz permutations.
class ClassTable {
public:
  ClassTable();

  std::size_t size() const { return classes_.size(); }
  std::size_t raw_count() const { return raw_count_; }
  const std::vector<MonodromyClass>& classes() const { return classes_; }
  const MonodromyClass& at(Point idx) const { return classes_.at(idx); }
  /// Throws std::out_of_range for a class not in the table.
  Point index_of(const MonodromyClass& cls) const;

  /// The ten Hurwitz generators as permutations of class indices.
  PermutationAction hurwitz_action() const;

private:
  std::vector<MonodromyClass> classes_;
  std::vector<Point> index_by_code_;
  std::size_t raw_count_ = 0;
};

/// Breadth-first closure of a class under the Hurwitz generators.
SchreierTree orbit_R(const ClassTable& table, const PermutationAction& hurwitz, const MonodromyClass& seed);

}  // namespace trigonal

#endif
