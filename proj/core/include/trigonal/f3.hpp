#ifndef TRIGONAL_F3_HPP
#define TRIGONAL_F3_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "trigonal/eisenstein.hpp"
#include "trigonal/lattice.hpp"

namespace trigonal {

/// 3^10: number of vectors in F3^10.
inline constexpr std::uint32_t kVectorCount = 59049;

/// A vector of F3^10; entry k is the coefficient of alpha_{k+1}.
class F3Vector {
public:
  F3Vector() = default;
  explicit F3Vector(const std::array<F3, kRank>& entries) : e_(entries) {}

  /// alpha_i, the reduction of a_i, 1 <= i <= 10.
  static F3Vector basis(int i);
  /// Inverse of code().
  static F3Vector from_code(std::uint32_t code);
  /// Parses ten digits from {0,1,2}.
  static F3Vector from_string(const std::string& digits);

  F3 operator[](std::size_t k) const { return e_[k]; }
  F3& operator[](std::size_t k) { return e_[k]; }

  bool is_zero() const;
  /// Base-3 number with entry 0 least significant; alpha_1 has code 1.
  std::uint32_t code() const;
  std::string to_string() const;

  friend F3Vector operator+(const F3Vector& x, const F3Vector& y);
  friend F3Vector operator-(const F3Vector& x, const F3Vector& y);
  friend F3Vector operator*(F3 s, const F3Vector& x);

  friend bool operator==(const F3Vector&, const F3Vector&) = default;
  /// Ordered by code(), i.e. lexicographically from the last entry.
  friend std::strong_ordering operator<=>(const F3Vector& x, const F3Vector& y) { return x.code() <=> y.code(); }

private:
  std::array<F3, kRank> e_{};
};

std::ostream& operator<<(std::ostream& os, const F3Vector& x);

/// A 10x10 matrix over F3 acting on column vectors.
class F3Matrix {
public:
  F3Matrix() = default;
  static F3Matrix identity();

  F3 at(std::size_t r, std::size_t c) const { return m_[r][c]; }
  F3& at(std::size_t r, std::size_t c) { return m_[r][c]; }

  F3Vector apply(const F3Vector& x) const;
  /// (*this) after other.
  F3Matrix compose(const F3Matrix& other) const;
  std::optional<int> order(int max_order = 12) const;
  int rank() const;
  /// Gauss-Jordan inverse; empty when singular.
  std::optional<F3Matrix> inverse() const;
  bool is_invertible() const { return rank() == kRank; }

  friend bool operator==(const F3Matrix&, const F3Matrix&) = default;

private:
  std::array<std::array<F3, kRank>, kRank> m_{};
};

}  // namespace trigonal

#endif
