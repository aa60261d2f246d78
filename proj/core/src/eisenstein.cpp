#include "trigonal/eisenstein.hpp"

#include <stdexcept>

namespace trigonal {

std::ostream& operator<<(std::ostream& os, F3 x) { return os << static_cast<int>(x.value()); }

EisensteinInt EisensteinInt::conj() const {
  // tau + conj(tau) = 1, so conj(a + b tau) = (a + b) - b tau
  return {checked::add(re_, tau_), checked::neg(tau_)};
}

std::int64_t EisensteinInt::norm() const {
  return checked::add(checked::add(checked::mul(re_, re_), checked::mul(re_, tau_)), checked::mul(tau_, tau_));
}

EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) {
  return {checked::add(x.re_, y.re_), checked::add(x.tau_, y.tau_)};
}

EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) {
  return {checked::sub(x.re_, y.re_), checked::sub(x.tau_, y.tau_)};
}

EisensteinInt EisensteinInt::operator-() const { return {checked::neg(re_), checked::neg(tau_)}; }

EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
  // (a + b t)(c + d t) = ac + (ad + bc) t + bd t^2 and t^2 = t - 1
  const auto ac = checked::mul(x.re_, y.re_);
  const auto bd = checked::mul(x.tau_, y.tau_);
  const auto cross = checked::add(checked::mul(x.re_, y.tau_), checked::mul(x.tau_, y.re_));
  return {checked::sub(ac, bd), checked::add(cross, bd)};
}

std::ostream& operator<<(std::ostream& os, const EisensteinInt& x) {
  if (x.tau_part() == 0) return os << x.re_part();
  if (x.re_part() != 0) os << x.re_part() << (x.tau_part() < 0 ? "-" : "+");
  else if (x.tau_part() < 0) os << "-";
  const auto b = x.tau_part() < 0 ? -x.tau_part() : x.tau_part();
  if (b != 1) os << b;
  return os << "t";
}

std::array<EisensteinInt, 6> units() {
  std::array<EisensteinInt, 6> out;
  EisensteinInt u = EisensteinInt::one();
  for (auto& slot : out) {
    slot = u;
    u = u * EisensteinInt::tau();
  }
  return out;
}

std::optional<EisensteinInt> exact_divide(const EisensteinInt& x, const EisensteinInt& d) {
  if (d.is_zero()) throw std::invalid_argument("division by zero Eisenstein integer");
  const auto n = d.norm();
  const auto num = x * d.conj();
  if (num.re_part() % n != 0 || num.tau_part() % n != 0) return std::nullopt;
  return EisensteinInt(num.re_part() / n, num.tau_part() / n);
}

bool divides(const EisensteinInt& d, const EisensteinInt& x) { return exact_divide(x, d).has_value(); }

std::optional<EisensteinInt> divide_by_theta(const EisensteinInt& x) {
  const auto num = -(x * EisensteinInt::theta());
  if (num.re_part() % 3 != 0 || num.tau_part() % 3 != 0) return std::nullopt;
  return EisensteinInt(num.re_part() / 3, num.tau_part() / 3);
}

F3 reduce_mod_theta(const EisensteinInt& x) {
  return F3(static_cast<int>(((x.re_part() % 3) - (x.tau_part() % 3) + 6) % 3));
}

}  // namespace trigonal
