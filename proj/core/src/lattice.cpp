#include "trigonal/lattice.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>

namespace trigonal {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

struct LatticeVectorHash {
  std::size_t operator()(const LatticeVector& v) const noexcept {
    std::size_t h = 0;
    std::hash<EisensteinInt> eh;
    for (const auto& c : v.coords()) h = h * 1000003u ^ eh(c);
    return h;
  }
};

int sign_of(const cpp_rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

cpp_int bareiss_determinant(const std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<cpp_int>> m(n, std::vector<cpp_int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  cpp_int sign = 1;
  cpp_int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Congruence diagonalization over Q; counts pivot signs.
std::tuple<int, int, int> rational_signature(const std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<cpp_rational>> m(n, std::vector<cpp_rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];

  auto swap_index = [&](std::size_t p, std::size_t q) {
    std::swap(m[p], m[q]);
    for (auto& row : m) std::swap(row[p], row[q]);
  };
  // basis change b_p <- b_p + b_q
  auto add_index = [&](std::size_t p, std::size_t q) {
    for (std::size_t j = 0; j < n; ++j) m[p][j] += m[q][j];
    for (std::size_t i = 0; i < n; ++i) m[i][p] += m[i][q];
  };

  int pos = 0, neg = 0, zero = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t j = k + 1;
      while (j < n && m[j][j] == 0) ++j;
      if (j < n) {
        swap_index(k, j);
      } else {
        j = k + 1;
        while (j < n && m[k][j] == 0) ++j;
        if (j == n) {
          ++zero;
          continue;
        }
        add_index(k, j);
      }
    }
    const cpp_rational pivot = m[k][k];
    (sign_of(pivot) > 0 ? pos : neg) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const cpp_rational f = m[i][k] / pivot;
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] -= f * m[k][j];
      m[i][k] = 0;
    }
    for (std::size_t j = k + 1; j < n; ++j) m[k][j] = 0;
  }
  return {pos, neg, zero};
}

}  // namespace

void check_generator_index(int i) {
  if (i < 1 || i > kRank) throw std::out_of_range("generator index " + std::to_string(i) + " outside 1..10");
}

LatticeVector LatticeVector::basis(int i) {
  check_generator_index(i);
  LatticeVector v;
  v.coords_[i - 1] = EisensteinInt::one();
  return v;
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const auto& c) { return c.is_zero(); });
}

std::int64_t LatticeVector::height() const {
  std::int64_t h = 0;
  for (const auto& c : coords_) h = checked::add(h, c.norm());
  return h;
}

LatticeVector operator+(const LatticeVector& x, const LatticeVector& y) {
  LatticeVector r;
  for (std::size_t k = 0; k < kRank; ++k) r.coords_[k] = x.coords_[k] + y.coords_[k];
  return r;
}

LatticeVector operator-(const LatticeVector& x, const LatticeVector& y) {
  LatticeVector r;
  for (std::size_t k = 0; k < kRank; ++k) r.coords_[k] = x.coords_[k] - y.coords_[k];
  return r;
}

LatticeVector operator*(const EisensteinInt& s, const LatticeVector& x) {
  LatticeVector r;
  for (std::size_t k = 0; k < kRank; ++k) r.coords_[k] = s * x.coords_[k];
  return r;
}

LatticeVector LatticeVector::operator-() const { return EisensteinInt(-1) * *this; }

std::ostream& operator<<(std::ostream& os, const LatticeVector& x) {
  os << "(";
  for (std::size_t k = 0; k < kRank; ++k) os << (k ? ", " : "") << x[k];
  return os << ")";
}

EisensteinInt gram_entry(int i, int j) {
  check_generator_index(i);
  check_generator_index(j);
  if (i == j) return EisensteinInt(-3);
  if (j == i + 1) return EisensteinInt::theta();
  if (i == j + 1) return -EisensteinInt::theta();
  return EisensteinInt::zero();
}

EisMatrix gram_matrix() {
  EisMatrix g{};
  for (int i = 1; i <= kRank; ++i)
    for (int j = 1; j <= kRank; ++j) g[i - 1][j - 1] = gram_entry(i, j);
  return g;
}

EisensteinInt herm(const LatticeVector& x, const LatticeVector& y) {
  // Tridiagonal Gram; sum x_i conj(y_j) G_ij over |i - j| <= 1.
  EisensteinInt acc;
  for (int i = 0; i < kRank; ++i) {
    if (x[i].is_zero()) continue;
    EisensteinInt row;
    for (int j = std::max(0, i - 1); j <= std::min(kRank - 1, i + 1); ++j) {
      if (y[j].is_zero()) continue;
      row += y[j].conj() * gram_entry(i + 1, j + 1);
    }
    acc += x[i] * row;
  }
  return acc;
}

EisensteinInt skew(const LatticeVector& x, const LatticeVector& y) {
  auto q = divide_by_theta(herm(x, y));
  if (!q) throw std::domain_error("hermitian value not divisible by theta");
  return *q;
}

UnitaryMatrix UnitaryMatrix::identity() {
  EisMatrix m{};
  for (std::size_t k = 0; k < kRank; ++k) m[k][k] = EisensteinInt::one();
  return UnitaryMatrix(m);
}

LatticeVector UnitaryMatrix::column(std::size_t c) const {
  LatticeVector v;
  for (std::size_t r = 0; r < kRank; ++r) v[r] = m_[r][c];
  return v;
}

bool UnitaryMatrix::preserves_form() const {
  for (int i = 1; i <= kRank; ++i)
    for (int j = 1; j <= kRank; ++j)
      if (herm(column(i - 1), column(j - 1)) != gram_entry(i, j)) return false;
  return true;
}

std::optional<int> UnitaryMatrix::order(int max_order) const {
  const auto id = identity();
  UnitaryMatrix p = *this;
  for (int k = 1; k <= max_order; ++k) {
    if (p == id) return k;
    p = compose(p, *this);
  }
  return std::nullopt;
}

LatticeVector apply(const UnitaryMatrix& m, const LatticeVector& x) {
  LatticeVector r;
  for (std::size_t i = 0; i < kRank; ++i) {
    EisensteinInt acc;
    for (std::size_t j = 0; j < kRank; ++j)
      if (!x[j].is_zero() && !m.at(i, j).is_zero()) acc += m.at(i, j) * x[j];
    r[i] = acc;
  }
  return r;
}

UnitaryMatrix compose(const UnitaryMatrix& m, const UnitaryMatrix& n) {
  EisMatrix out{};
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j) {
      EisensteinInt acc;
      for (std::size_t k = 0; k < kRank; ++k)
        if (!m.at(i, k).is_zero() && !n.at(k, j).is_zero()) acc += m.at(i, k) * n.at(k, j);
      out[i][j] = acc;
    }
  return UnitaryMatrix(out);
}

LatticeVector triflect(int i, const LatticeVector& x, int power) {
  check_generator_index(i);
  if (power != 1 && power != 2) throw std::invalid_argument("triflection power must be 1 or 2");
  const auto a = LatticeVector::basis(i);
  LatticeVector y = x;
  for (int p = 0; p < power; ++p) {
    const auto c = EisensteinInt::tau() * skew(y, a);
    y[i - 1] += c;
  }
  return y;
}

UnitaryMatrix triflection(int i) {
  check_generator_index(i);
  EisMatrix m{};
  for (int j = 1; j <= kRank; ++j) {
    const auto img = triflect(i, LatticeVector::basis(j));
    for (std::size_t r = 0; r < kRank; ++r) m[r][j - 1] = img[r];
  }
  return UnitaryMatrix(m);
}

std::vector<std::vector<std::int64_t>> realified_gram(std::span<const LatticeVector> basis) {
  if (basis.size() != kRank) throw std::invalid_argument("realification needs exactly 10 lattice vectors");
  std::vector<LatticeVector> zbasis;
  zbasis.reserve(2 * kRank);
  for (const auto& b : basis) {
    zbasis.push_back(b);
    zbasis.push_back(EisensteinInt::tau() * b);
  }
  const std::size_t n = zbasis.size();
  std::vector<std::vector<std::int64_t>> g(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // Re(a + b tau) = (2a + b) / 2, so -(2/3) Re = -(2a + b) / 3
      const auto h = herm(zbasis[i], zbasis[j]);
      const auto twice_re = checked::add(checked::mul(2, h.re_part()), h.tau_part());
      if (twice_re % 3 != 0) throw std::domain_error("non-integral entry in realified Gram matrix");
      g[i][j] = -twice_re / 3;
    }
  return g;
}

std::vector<std::vector<std::int64_t>> realified_gram() {
  std::vector<LatticeVector> basis;
  for (int i = 1; i <= kRank; ++i) basis.push_back(LatticeVector::basis(i));
  return realified_gram(basis);
}

RealificationCertificate realify_and_certify(std::span<const LatticeVector> basis) {
  const auto g = realified_gram(basis);
  RealificationCertificate cert;
  cert.is_even = true;
  for (std::size_t i = 0; i < g.size(); ++i) cert.is_even = cert.is_even && g[i][i] % 2 == 0;
  const cpp_int det = abs(bareiss_determinant(g));
  if (det > std::numeric_limits<std::int64_t>::max()) throw ArithmeticOverflow("determinant exceeds 64 bits");
  cert.abs_det = static_cast<std::int64_t>(det);
  std::tie(cert.positive, cert.negative, cert.zero) = rational_signature(g);
  return cert;
}

RealificationCertificate realify_and_certify() {
  std::vector<LatticeVector> basis;
  for (int i = 1; i <= kRank; ++i) basis.push_back(LatticeVector::basis(i));
  return realify_and_certify(basis);
}

std::optional<std::pair<LatticeVector, LatticeVector>> decompose_minus6(const LatticeVector& eps,
                                                                       std::size_t search_bound) {
  if (herm(eps, eps) != EisensteinInt(-6)) throw std::invalid_argument("decompose_minus6: h(eps, eps) != -6");

  const EisensteinInt target = EisensteinInt::theta() - EisensteinInt(3);  // h(x, eps) for a split x
  const auto unit_list = units();

  struct Node {
    LatticeVector v;
    std::int64_t parent;
    int generator;
    int power;
  };
  std::vector<Node> nodes;
  std::unordered_map<LatticeVector, std::size_t, LatticeVectorHash> seen;
  using Entry = std::pair<std::int64_t, std::size_t>;  // (height, node index), min-heap
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;

  nodes.push_back({eps, -1, 0, 0});
  seen.emplace(eps, 0);
  frontier.emplace(eps.height(), 0);

  std::size_t expanded = 0;
  while (!frontier.empty() && expanded < search_bound) {
    const std::size_t idx = frontier.top().second;
    frontier.pop();
    ++expanded;
    const LatticeVector v = nodes[idx].v;

    for (int k = 1; k <= kRank; ++k) {
      const auto hk = herm(LatticeVector::basis(k), v);
      for (const auto& u : unit_list) {
        if (u * hk != target) continue;
        LatticeVector x = u * LatticeVector::basis(k);
        // Undo the path back to eps; T^{-1} is T^2.
        for (auto n = static_cast<std::int64_t>(idx); nodes[n].parent >= 0; n = nodes[n].parent)
          x = triflect(nodes[n].generator, x, 3 - nodes[n].power);
        return std::make_pair(x, eps - x);
      }
    }

    for (int g = 1; g <= kRank; ++g)
      for (int p = 1; p <= 2; ++p) {
        LatticeVector w = triflect(g, v, p);
        if (seen.contains(w)) continue;
        const auto h = w.height();
        seen.emplace(w, nodes.size());
        nodes.push_back({std::move(w), static_cast<std::int64_t>(idx), g, p});
        frontier.emplace(h, nodes.size() - 1);
      }
  }
  return std::nullopt;
}

std::optional<NonIntegralityWitness> check_minus6_reflection_nonintegral(const LatticeVector& eps) {
  if (herm(eps, eps) != EisensteinInt(-6))
    throw std::invalid_argument("check_minus6_reflection_nonintegral: h(eps, eps) != -6");
  std::vector<int> order;
  for (int k = 1; k <= kRank; ++k)
    if (eps[k - 1].is_zero()) order.push_back(k);
  for (int k = 1; k <= kRank; ++k)
    if (!eps[k - 1].is_zero()) order.push_back(k);
  for (int k : order) {
    const auto x = LatticeVector::basis(k);
    const auto value = herm(eps, x);
    if (!divides(EisensteinInt(3), value)) return NonIntegralityWitness{k, x, value};
  }
  return std::nullopt;
}

}  // namespace trigonal
