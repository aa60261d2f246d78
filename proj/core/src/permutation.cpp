#include "trigonal/permutation.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace trigonal {

void validate_permutation(const std::vector<Point>& images) {
  std::vector<bool> hit(images.size(), false);
  for (auto p : images) {
    if (p >= images.size() || hit[p]) throw std::invalid_argument("image array is not a permutation");
    hit[p] = true;
  }
}

Permutation::Permutation(std::vector<Point> images) : img_(std::move(images)) { validate_permutation(img_); }

Permutation Permutation::identity(std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t k = 0; k < n; ++k) img[k] = static_cast<Point>(k);
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k) inv[img_[k]] = static_cast<Point>(k);
  Permutation r;
  r.img_ = std::move(inv);
  return r;
}

Permutation Permutation::after(const Permutation& other) const {
  if (other.degree() != degree()) throw std::invalid_argument("permutation degrees differ");
  Permutation r;
  r.img_.resize(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k) r.img_[k] = img_[other.img_[k]];
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < img_.size(); ++k)
    if (img_[k] != k) return false;
  return true;
}

std::size_t Permutation::fixed_point_count() const {
  std::size_t n = 0;
  for (std::size_t k = 0; k < img_.size(); ++k) n += img_[k] == k;
  return n;
}

int Permutation::order(int max_order) const {
  Permutation p = *this;
  for (int k = 1; k <= max_order; ++k) {
    if (p.is_identity()) return k;
    p = p.after(*this);
  }
  return 0;
}

GeneratorWord GeneratorWord::inverse() const {
  GeneratorWord w;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back({it->generator, -it->exponent});
  return w;
}

GeneratorWord GeneratorWord::operator*(const GeneratorWord& then) const {
  GeneratorWord w = *this;
  w.letters.insert(w.letters.end(), then.letters.begin(), then.letters.end());
  return w;
}

std::string GeneratorWord::to_string() const {
  if (letters.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    os << (k ? " " : "") << "T" << letters[k].generator;
    if (letters[k].exponent < 0) os << "^-1";
  }
  return os.str();
}

PermutationAction::PermutationAction(std::vector<Permutation> generators) : gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (g.degree() != gens_.front().degree()) throw std::invalid_argument("generators act on different degrees");
    inv_.push_back(g.inverse());
  }
}

Point PermutationAction::apply(const Letter& l, Point p) const {
  const auto idx = static_cast<std::size_t>(l.generator - 1);
  return l.exponent >= 0 ? gens_.at(idx)(p) : inv_.at(idx)(p);
}

Point PermutationAction::apply(const GeneratorWord& w, Point p) const {
  for (const auto& l : w.letters) p = apply(l, p);
  return p;
}

Point SchreierTree::root_of(Point p) const {
  while (gen_[p] != 0) p = parent_[p];
  return p;
}

GeneratorWord SchreierTree::word_to(Point p) const {
  GeneratorWord w;
  while (gen_[p] != 0) {
    w.letters.push_back({gen_[p], 1});
    p = parent_[p];
  }
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

SchreierTree orbit(std::span<const Point> seeds, const PermutationAction& action) {
  SchreierTree t;
  std::size_t n = action.degree();
  for (auto s : seeds) n = std::max<std::size_t>(n, s + 1);
  t.parent_.assign(n, SchreierTree::kNone);
  t.gen_.assign(n, 0);
  t.depth_.assign(n, SchreierTree::kNone);

  std::deque<Point> queue;
  for (auto s : seeds) {
    if (t.depth_[s] != SchreierTree::kNone) continue;
    t.depth_[s] = 0;
    t.roots_.push_back(s);
    t.order_.push_back(s);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const Point p = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < action.generator_count(); ++g) {
      const Point q = action.generators()[g](p);
      if (t.depth_[q] != SchreierTree::kNone) continue;
      t.depth_[q] = t.depth_[p] + 1;
      t.parent_[q] = p;
      t.gen_[q] = static_cast<int>(g + 1);
      t.max_depth_ = std::max(t.max_depth_, t.depth_[q]);
      t.order_.push_back(q);
      queue.push_back(q);
    }
  }
  return t;
}

std::vector<GeneratorWord> schreier_generators(const SchreierTree& tree, const PermutationAction& action,
                                               std::size_t budget) {
  if (tree.roots().size() != 1) throw std::invalid_argument("Schreier generators need a single-rooted tree");
  std::vector<std::tuple<std::uint32_t, Point, int>> edges;  // (length, point, generator)
  for (Point p : tree.points())
    for (int g = 1; g <= static_cast<int>(action.generator_count()); ++g) {
      const Point q = action.generator(g)(p);
      if (tree.parent(q) == p && tree.generator(q) == g) continue;
      edges.emplace_back(tree.depth(p) + 1 + tree.depth(q), p, g);
    }
  std::sort(edges.begin(), edges.end());
  if (edges.size() > budget) edges.resize(budget);

  std::vector<GeneratorWord> out;
  out.reserve(edges.size());
  for (const auto& [len, p, g] : edges) {
    const Point q = action.generator(g)(p);
    out.push_back(tree.word_to(p) * GeneratorWord{{{g, 1}}} * tree.word_to(q).inverse());
  }
  return out;
}

}  // namespace trigonal
