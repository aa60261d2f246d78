#include "trigonal/symplectic.hpp"

#include <stdexcept>

namespace trigonal {

F3Vector reduce_vector(const LatticeVector& x) {
  F3Vector r;
  for (std::size_t k = 0; k < kRank; ++k) r[k] = reduce_mod_theta(x[k]);
  return r;
}

SympForm::SympForm() {
  for (int i = 1; i <= kRank; ++i)
    for (int j = 1; j <= kRank; ++j)
      m_.at(i - 1, j - 1) = reduce_mod_theta(skew(LatticeVector::basis(i), LatticeVector::basis(j)));
}

const SympForm& SympForm::standard() {
  static const SympForm form;
  return form;
}

F3 SympForm::operator()(const F3Vector& x, const F3Vector& y) const {
  int acc = 0;
  // only the two off-diagonal bands are nonzero
  for (std::size_t i = 0; i < kRank; ++i) {
    if (x[i].is_zero()) continue;
    if (i + 1 < kRank) acc += x[i].value() * m_.at(i, i + 1).value() * y[i + 1].value();
    if (i > 0) acc += x[i].value() * m_.at(i, i - 1).value() * y[i - 1].value();
  }
  return F3(acc);
}

bool SympForm::is_alternating() const {
  for (std::size_t i = 0; i < kRank; ++i) {
    if (!m_.at(i, i).is_zero()) return false;
    for (std::size_t j = 0; j < kRank; ++j)
      if (m_.at(i, j) != -m_.at(j, i)) return false;
  }
  return true;
}

F3Vector transvect(int i, const F3Vector& x, int power) {
  check_generator_index(i);
  const auto a = F3Vector::basis(i);
  F3Vector y = x;
  for (int p = 0; p < power; ++p) y = y - symp(y, a) * a;
  return y;
}

F3Matrix transvection(int i) {
  F3Matrix m;
  for (int j = 1; j <= kRank; ++j) {
    const auto img = transvect(i, F3Vector::basis(j));
    for (std::size_t r = 0; r < kRank; ++r) m.at(r, j - 1) = img[r];
  }
  return m;
}

namespace {

F3Vector canonical_rep(const F3Vector& v) {
  for (std::size_t k = 0; k < kRank; ++k)
    if (!v[k].is_zero()) return v[k].inverse() * v;
  throw std::invalid_argument("the zero vector spans no line");
}

}  // namespace

ProjPoint::ProjPoint(const F3Vector& v) : rep_(canonical_rep(v)) {}

ProjectiveSpace::ProjectiveSpace() : index_by_code_(kVectorCount, SchreierTree::kNone) {
  points_.reserve(kProjCount);
  for (std::uint32_t code = 1; code < kVectorCount; ++code) {
    const auto v = F3Vector::from_code(code);
    if (canonical_rep(v) == v) points_.emplace_back(v);
  }
  for (std::size_t k = 0; k < points_.size(); ++k) index_by_code_[points_[k].rep().code()] = static_cast<Point>(k);
  // every vector is indexed by the line it spans
  for (std::uint32_t code = 1; code < kVectorCount; ++code) {
    const auto v = F3Vector::from_code(code);
    index_by_code_[code] = index_by_code_[canonical_rep(v).code()];
  }
}

Permutation ProjectiveSpace::permutation_of(const F3Matrix& m) const {
  std::vector<Point> img(points_.size());
  for (std::size_t k = 0; k < points_.size(); ++k) {
    const auto w = m.apply(points_[k].rep());
    if (w.is_zero()) throw std::invalid_argument("singular matrix has no projective action");
    img[k] = index_by_code_[w.code()];
  }
  return Permutation(std::move(img));
}

PermutationAction ProjectiveSpace::transvection_action() const {
  std::vector<Permutation> gens;
  for (int i = 1; i <= kRank; ++i) gens.push_back(permutation_of(transvection(i)));
  return PermutationAction(std::move(gens));
}

std::vector<ProjPoint> enumerate_proj() { return ProjectiveSpace().points(); }

Permutation vector_permutation_of(const F3Matrix& m) {
  std::vector<Point> img(kNonzeroVectorCount);
  for (std::uint32_t code = 1; code < kVectorCount; ++code) {
    const auto w = m.apply(F3Vector::from_code(code));
    if (w.is_zero()) throw std::invalid_argument("singular matrix does not permute nonzero vectors");
    img[code - 1] = w.code() - 1;
  }
  return Permutation(std::move(img));
}

PermutationAction transvection_vector_action() {
  std::vector<Permutation> gens;
  for (int i = 1; i <= kRank; ++i) gens.push_back(vector_permutation_of(transvection(i)));
  return PermutationAction(std::move(gens));
}

Confluence classify_line(const ProjPoint& m, const ProjPoint& ell) {
  if (m == ell) return Confluence::H;
  return symp(m.rep(), ell.rep()).is_zero() ? Confluence::RM : Confluence::SG;
}

LineStratification stabilizer_orbit_sizes(const ProjectiveSpace& space, const ProjPoint& ell) {
  LineStratification s;
  for (const auto& m : space.points()) {
    switch (classify_line(m, ell)) {
      case Confluence::H: ++s.h; break;
      case Confluence::RM: ++s.rm; break;
      case Confluence::SG: ++s.sg; break;
    }
  }
  return s;
}

}  // namespace trigonal
