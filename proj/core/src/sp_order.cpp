#include "trigonal/sp_order.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <stdexcept>

#include "trigonal/symplectic.hpp"

namespace trigonal {

namespace {

using boost::multiprecision::cpp_int;

constexpr std::int32_t kOutside = -1;
constexpr std::int32_t kBasePoint = -2;

std::uint32_t image(const F3Matrix& m, std::uint32_t code) { return m.apply(F3Vector::from_code(code)).code(); }

F3Matrix inverse_of(const F3Matrix& m) {
  auto inv = m.inverse();
  if (!inv) throw std::invalid_argument("singular matrix in stabilizer chain");
  return *inv;
}

// One level of the stabilizer chain: orbit of the base point under its strong
// generators, with a Schreier vector for coset representatives.
class Level {
public:
  explicit Level(std::uint32_t base) : base_(base), label_(kVectorCount, kOutside), parent_(kVectorCount, 0) {
    label_[base] = kBasePoint;
    orbit_.push_back(base);
  }

  std::size_t orbit_size() const { return orbit_.size(); }
  std::size_t generator_count() const { return gens_.size(); }
  bool contains(std::uint32_t p) const { return label_[p] != kOutside; }

  void add_generator(const F3Matrix& g) {
    gens_.push_back(g);
    inv_.push_back(inverse_of(g));
    const auto s = static_cast<std::int32_t>(gens_.size() - 1);
    const std::size_t old = orbit_.size();
    for (std::size_t k = 0; k < old; ++k) visit(orbit_[k], s);
    for (std::size_t k = old; k < orbit_.size(); ++k)
      for (std::int32_t t = 0; t < static_cast<std::int32_t>(gens_.size()); ++t) visit(orbit_[k], t);
  }

  /// Multiplies g on the left by the inverse coset representative of g(base).
  F3Matrix strip(F3Matrix g, std::uint32_t b) const {
    while (b != base_) {
      const auto s = static_cast<std::size_t>(label_[b]);
      g = inv_[s].compose(g);
      b = parent_[b];
    }
    return g;
  }

  std::uint32_t base() const { return base_; }

private:
  void visit(std::uint32_t p, std::int32_t s) {
    const auto q = image(gens_[static_cast<std::size_t>(s)], p);
    if (label_[q] != kOutside) return;
    label_[q] = s;
    parent_[q] = p;
    orbit_.push_back(q);
  }

  std::uint32_t base_;
  std::vector<std::int32_t> label_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> orbit_;
  std::vector<F3Matrix> gens_;
  std::vector<F3Matrix> inv_;
};

cpp_int chain_order(const std::vector<Level>& levels) {
  cpp_int order = 1;
  for (const auto& l : levels) order *= l.orbit_size();
  return order;
}

}  // namespace

std::string symplectic_group_order(int n, int q) {
  if (n < 1 || q < 2) throw std::invalid_argument("symplectic_group_order: need n >= 1, q >= 2");
  cpp_int qq = q;
  cpp_int order = boost::multiprecision::pow(qq, static_cast<unsigned>(n * n));
  for (int i = 1; i <= n; ++i) order *= boost::multiprecision::pow(qq, static_cast<unsigned>(2 * i)) - 1;
  return order.str();
}

StabilizerChainResult randomized_schreier_sims(const std::vector<F3Matrix>& generators, std::uint64_t seed,
                                               const std::string& target_order, std::size_t patience) {
  if (generators.empty()) throw std::invalid_argument("randomized_schreier_sims: no generators");
  for (const auto& g : generators)
    if (!g.is_invertible()) throw std::invalid_argument("randomized_schreier_sims: singular generator");

  std::vector<Level> levels;
  for (int i = 1; i <= kRank; ++i) levels.emplace_back(F3Vector::basis(i).code());
  for (const auto& g : generators) levels[0].add_generator(g);
  std::size_t strong = generators.size();

  // product replacement
  std::mt19937_64 rng(seed);
  std::vector<F3Matrix> slots;
  for (std::size_t k = 0; k < std::max<std::size_t>(11, generators.size()); ++k)
    slots.push_back(generators[k % generators.size()]);
  F3Matrix accumulator = F3Matrix::identity();
  auto random_element = [&] {
    std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
    const auto a = pick(rng);
    auto b = pick(rng);
    while (b == a) b = pick(rng);
    slots[a] = (rng() & 1) ? slots[a].compose(slots[b]) : slots[b].compose(slots[a]);
    accumulator = accumulator.compose(slots[a]);
    return accumulator;
  };
  for (int k = 0; k < 60; ++k) random_element();

  const auto id = F3Matrix::identity();
  std::size_t sifts = 0;
  std::size_t quiet = 0;
  while (quiet < patience) {
    if (!target_order.empty() && chain_order(levels).str() == target_order) break;
    F3Matrix g = random_element();
    ++sifts;
    std::size_t k = 0;
    for (; k < levels.size(); ++k) {
      const auto b = image(g, levels[k].base());
      if (!levels[k].contains(b)) break;
      g = levels[k].strip(g, b);
    }
    if (k == levels.size() && g == id) {
      ++quiet;
      continue;
    }
    // g fixes the first k base points; it is a new strong generator for levels 0..k
    if (k == levels.size()) throw std::logic_error("nontrivial element fixes a basis");
    for (std::size_t j = 0; j <= k; ++j) levels[j].add_generator(g);
    ++strong;
    quiet = 0;
  }

  StabilizerChainResult result;
  for (const auto& l : levels) result.basic_orbit_lengths.push_back(l.orbit_size());
  result.order = chain_order(levels).str();
  result.strong_generators = strong;
  result.sifts = sifts;
  return result;
}

GroupOrderCertificate certify_transvection_group_order(std::uint64_t seed) {
  GroupOrderCertificate cert;
  cert.symplectic_order = symplectic_group_order(5, 3);

  std::vector<F3Matrix> gens;
  const auto& form = SympForm::standard();
  cert.generators_preserve_form = true;
  for (int i = 1; i <= kRank; ++i) {
    gens.push_back(transvection(i));
    for (int a = 1; a <= kRank; ++a)
      for (int b = 1; b <= kRank; ++b) {
        const auto x = F3Vector::basis(a), y = F3Vector::basis(b);
        if (form(gens.back().apply(x), gens.back().apply(y)) != form(x, y)) cert.generators_preserve_form = false;
      }
  }

  const auto chain = randomized_schreier_sims(gens, seed, cert.symplectic_order);
  cert.order_lower_bound = chain.order;
  cert.basic_orbit_lengths = chain.basic_orbit_lengths;
  cert.strong_generators = chain.strong_generators;
  cert.sifts = chain.sifts;
  return cert;
}

}  // namespace trigonal
