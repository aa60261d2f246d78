#ifndef TRIGONAL_EISENSTEIN_HPP
#define TRIGONAL_EISENSTEIN_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>

#include "trigonal/checked.hpp"

namespace trigonal {

/// Element of the prime field F3, stored as 0, 1 or 2.
class F3 {
public:
  constexpr F3() = default;
  constexpr explicit F3(int v) : v_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}

  constexpr std::uint8_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr F3 operator+(F3 a, F3 b) { return F3(a.v_ + b.v_); }
  friend constexpr F3 operator-(F3 a, F3 b) { return F3(a.v_ + 3 - b.v_); }
  friend constexpr F3 operator*(F3 a, F3 b) { return F3(a.v_ * b.v_); }
  constexpr F3 operator-() const { return F3(3 - v_); }
  F3& operator+=(F3 o) { return *this = *this + o; }
  F3& operator-=(F3 o) { return *this = *this - o; }

  /// Multiplicative inverse of a nonzero element (each is its own inverse).
  constexpr F3 inverse() const { return *this; }

  friend constexpr bool operator==(F3, F3) = default;
  friend constexpr auto operator<=>(F3, F3) = default;

private:
  std::uint8_t v_ = 0;
};

std::ostream& operator<<(std::ostream& os, F3 x);

/// An Eisenstein integer a + b*tau where tau is the primitive sixth root of
/// unity with tau^2 = tau - 1. All arithmetic is exact; leaving the 64-bit
/// range raises ArithmeticOverflow.
class EisensteinInt {
public:
  constexpr EisensteinInt() = default;
  constexpr EisensteinInt(std::int64_t re) : re_(re) {}  // NOLINT: integers embed implicitly
  constexpr EisensteinInt(std::int64_t re, std::int64_t tau) : re_(re), tau_(tau) {}

  static constexpr EisensteinInt zero() { return {0, 0}; }
  static constexpr EisensteinInt one() { return {1, 0}; }
  static constexpr EisensteinInt tau() { return {0, 1}; }
  /// theta = tau - conj(tau) = -1 + 2 tau, a square root of -3.
  static constexpr EisensteinInt theta() { return {-1, 2}; }

  constexpr std::int64_t re_part() const { return re_; }
  constexpr std::int64_t tau_part() const { return tau_; }
  constexpr bool is_zero() const { return re_ == 0 && tau_ == 0; }

  EisensteinInt conj() const;
  /// x * conj(x) = a^2 + ab + b^2.
  std::int64_t norm() const;
  bool is_unit() const { return norm() == 1; }

  friend EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y);
  friend EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y);
  friend EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y);
  EisensteinInt operator-() const;
  EisensteinInt& operator+=(const EisensteinInt& o) { return *this = *this + o; }
  EisensteinInt& operator-=(const EisensteinInt& o) { return *this = *this - o; }
  EisensteinInt& operator*=(const EisensteinInt& o) { return *this = *this * o; }

  friend constexpr bool operator==(const EisensteinInt&, const EisensteinInt&) = default;
  friend constexpr auto operator<=>(const EisensteinInt&, const EisensteinInt&) = default;

private:
  std::int64_t re_ = 0;
  std::int64_t tau_ = 0;
};

std::ostream& operator<<(std::ostream& os, const EisensteinInt& x);

inline EisensteinInt conj(const EisensteinInt& x) { return x.conj(); }
inline std::int64_t norm(const EisensteinInt& x) { return x.norm(); }
inline EisensteinInt mul(const EisensteinInt& x, const EisensteinInt& y) { return x * y; }

/// The six units {1, tau, tau^2, -1, -tau, -tau^2}, listed as powers of tau.
std::array<EisensteinInt, 6> units();

/// Exact quotient x / d if it lies in the ring. Throws std::invalid_argument for d = 0.
std::optional<EisensteinInt> exact_divide(const EisensteinInt& x, const EisensteinInt& d);

/// True iff x lies in the ideal d*E. Throws std::invalid_argument for d = 0.
bool divides(const EisensteinInt& d, const EisensteinInt& x);

/// Division by theta via theta^{-1} = -theta / 3; empty when x is not in theta*E.
std::optional<EisensteinInt> divide_by_theta(const EisensteinInt& x);

/// The ring map E -> E/theta*E = F3; tau goes to -1, so a + b*tau -> a - b.
F3 reduce_mod_theta(const EisensteinInt& x);

/// The representative 0, 1 or 2 of a residue class, as a rational integer.
inline EisensteinInt integer_lift(F3 x) { return EisensteinInt(x.value()); }

}  // namespace trigonal

template <>
struct std::hash<trigonal::EisensteinInt> {
  std::size_t operator()(const trigonal::EisensteinInt& x) const noexcept {
    auto h = std::hash<std::int64_t>{}(x.re_part());
    return h ^ (std::hash<std::int64_t>{}(x.tau_part()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

#endif
