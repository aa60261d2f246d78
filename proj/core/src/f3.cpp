#include "trigonal/f3.hpp"

#include <algorithm>
#include <stdexcept>

namespace trigonal {

F3Vector F3Vector::basis(int i) {
  check_generator_index(i);
  F3Vector v;
  v.e_[i - 1] = F3(1);
  return v;
}

F3Vector F3Vector::from_code(std::uint32_t code) {
  if (code >= kVectorCount) throw std::out_of_range("F3 vector code out of range");
  F3Vector v;
  for (std::size_t k = 0; k < kRank; ++k) {
    v.e_[k] = F3(static_cast<int>(code % 3));
    code /= 3;
  }
  return v;
}

F3Vector F3Vector::from_string(const std::string& digits) {
  if (digits.size() != kRank) throw std::invalid_argument("F3 vector needs exactly 10 digits");
  F3Vector v;
  for (std::size_t k = 0; k < kRank; ++k) {
    if (digits[k] < '0' || digits[k] > '2') throw std::invalid_argument("F3 digit must be 0, 1 or 2");
    v.e_[k] = F3(digits[k] - '0');
  }
  return v;
}

bool F3Vector::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](F3 x) { return x.is_zero(); });
}

std::uint32_t F3Vector::code() const {
  std::uint32_t c = 0;
  for (auto it = e_.rbegin(); it != e_.rend(); ++it) c = 3 * c + it->value();
  return c;
}

std::string F3Vector::to_string() const {
  std::string s;
  for (auto x : e_) s.push_back(static_cast<char>('0' + x.value()));
  return s;
}

F3Vector operator+(const F3Vector& x, const F3Vector& y) {
  F3Vector r;
  for (std::size_t k = 0; k < kRank; ++k) r.e_[k] = x.e_[k] + y.e_[k];
  return r;
}

F3Vector operator-(const F3Vector& x, const F3Vector& y) {
  F3Vector r;
  for (std::size_t k = 0; k < kRank; ++k) r.e_[k] = x.e_[k] - y.e_[k];
  return r;
}

F3Vector operator*(F3 s, const F3Vector& x) {
  F3Vector r;
  for (std::size_t k = 0; k < kRank; ++k) r.e_[k] = s * x.e_[k];
  return r;
}

std::ostream& operator<<(std::ostream& os, const F3Vector& x) { return os << x.to_string(); }

F3Matrix F3Matrix::identity() {
  F3Matrix m;
  for (std::size_t k = 0; k < kRank; ++k) m.m_[k][k] = F3(1);
  return m;
}

F3Vector F3Matrix::apply(const F3Vector& x) const {
  F3Vector r;
  for (std::size_t i = 0; i < kRank; ++i) {
    int acc = 0;
    for (std::size_t j = 0; j < kRank; ++j) acc += m_[i][j].value() * x[j].value();
    r[i] = F3(acc);
  }
  return r;
}

F3Matrix F3Matrix::compose(const F3Matrix& other) const {
  F3Matrix r;
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j) {
      int acc = 0;
      for (std::size_t k = 0; k < kRank; ++k) acc += m_[i][k].value() * other.m_[k][j].value();
      r.m_[i][j] = F3(acc);
    }
  return r;
}

std::optional<int> F3Matrix::order(int max_order) const {
  const auto id = identity();
  F3Matrix p = *this;
  for (int k = 1; k <= max_order; ++k) {
    if (p == id) return k;
    p = p.compose(*this);
  }
  return std::nullopt;
}

int F3Matrix::rank() const {
  auto a = m_;
  int rank = 0;
  for (std::size_t col = 0; col < kRank && rank < kRank; ++col) {
    std::size_t pivot = rank;
    while (pivot < kRank && a[pivot][col].is_zero()) ++pivot;
    if (pivot == kRank) continue;
    std::swap(a[pivot], a[rank]);
    const F3 inv = a[rank][col].inverse();
    for (auto& x : a[rank]) x = inv * x;
    for (std::size_t r = 0; r < kRank; ++r) {
      if (r == static_cast<std::size_t>(rank) || a[r][col].is_zero()) continue;
      const F3 f = a[r][col];
      for (std::size_t c = 0; c < kRank; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::optional<F3Matrix> F3Matrix::inverse() const {
  auto a = m_;
  auto inv = identity().m_;
  for (std::size_t col = 0; col < kRank; ++col) {
    std::size_t pivot = col;
    while (pivot < kRank && a[pivot][col].is_zero()) ++pivot;
    if (pivot == kRank) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const F3 s = a[col][col].inverse();
    for (std::size_t c = 0; c < kRank; ++c) {
      a[col][c] = s * a[col][c];
      inv[col][c] = s * inv[col][c];
    }
    for (std::size_t r = 0; r < kRank; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const F3 f = a[r][col];
      for (std::size_t c = 0; c < kRank; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  F3Matrix r;
  r.m_ = inv;
  return r;
}

}  // namespace trigonal
