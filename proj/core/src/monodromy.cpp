#include "trigonal/monodromy.hpp"

#include <algorithm>

#include "trigonal/lattice.hpp"

namespace trigonal {

namespace {

using Perm3 = std::array<std::uint8_t, 3>;

constexpr Perm3 kIdentity3{0, 1, 2};

constexpr Perm3 as_perm(Transposition t) {
  switch (t) {
    case Transposition::T12: return {1, 0, 2};
    case Transposition::T23: return {0, 2, 1};
    case Transposition::T13: return {2, 1, 0};
  }
  return kIdentity3;
}

// p after q
constexpr Perm3 after(const Perm3& p, const Perm3& q) { return {p[q[0]], p[q[1]], p[q[2]]}; }

Transposition as_transposition(const Perm3& p) {
  for (auto t : {Transposition::T12, Transposition::T23, Transposition::T13})
    if (as_perm(t) == p) return t;
  throw std::logic_error("odd permutation expected to be a transposition");
}

std::uint32_t tuple_code(const MonodromyTuple& t) {
  std::uint32_t c = 0;
  for (auto x : t) c = 3 * c + static_cast<std::uint32_t>(x);
  return c;
}

bool is_constant(const MonodromyTuple& t) {
  return std::all_of(t.begin(), t.end(), [&](Transposition x) { return x == t[0]; });
}

}  // namespace

MonodromyTuple parse_tuple(const std::string& text) {
  if (text.size() != kBranchPoints)
    throw InvalidTuple(TupleViolation::WrongLength, "tuple must have exactly 12 characters, got " +
                                                        std::to_string(text.size()));
  MonodromyTuple t{};
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '2')
      throw InvalidTuple(TupleViolation::BadCharacter,
                         std::string("invalid character '") + text[k] + "' at position " + std::to_string(k) +
                             " (expected 0, 1 or 2)");
    t[k] = static_cast<Transposition>(text[k] - '0');
  }
  return t;
}

std::string to_string(const MonodromyTuple& t) {
  std::string s;
  for (auto x : t) s.push_back(static_cast<char>('0' + static_cast<int>(x)));
  return s;
}

bool product_is_identity(const MonodromyTuple& t) {
  Perm3 p = kIdentity3;
  for (int k = kBranchPoints - 1; k >= 0; --k) p = after(p, as_perm(t[k]));
  return p == kIdentity3;
}

void validate_tuple(const MonodromyTuple& t) {
  if (is_constant(t)) throw InvalidTuple(TupleViolation::Constant, "monodromy not surjective (constant tuple)");
  if (!product_is_identity(t))
    throw InvalidTuple(TupleViolation::ProductNotIdentity, "product t11...t0 is not the identity");
}

MonodromyTuple canonicalize(const MonodromyTuple& t) {
  // The lexicographic minimum relabels symbols in order of first appearance;
  // every relabeling of the three transpositions is an inner automorphism.
  std::array<int, 3> relabel{-1, -1, -1};
  int next = 0;
  MonodromyTuple out{};
  for (std::size_t k = 0; k < t.size(); ++k) {
    auto& r = relabel[static_cast<std::size_t>(t[k])];
    if (r < 0) r = next++;
    out[k] = static_cast<Transposition>(r);
  }
  return out;
}

MonodromyTuple hurwitz_move(int i, const MonodromyTuple& t) {
  check_generator_index(i);
  MonodromyTuple r = t;
  const auto u = t[i], v = t[i + 1];
  r[i] = v;
  r[i + 1] = conjugate(u, v);
  return r;
}

MonodromyTuple hurwitz_move_inverse(int i, const MonodromyTuple& t) {
  check_generator_index(i);
  MonodromyTuple r = t;
  const auto u = t[i], v = t[i + 1];
  r[i] = conjugate(v, u);
  r[i + 1] = u;
  return r;
}

MonodromyClass::MonodromyClass(const MonodromyTuple& t) : canon_(canonicalize(t)) { validate_tuple(canon_); }

std::uint32_t MonodromyClass::code() const { return tuple_code(canon_); }

MonodromyClass hurwitz_act(int i, const MonodromyClass& cls) { return MonodromyClass(hurwitz_move(i, cls.canon())); }

MonodromyClass hurwitz_act_inverse(int i, const MonodromyClass& cls) {
  return MonodromyClass(hurwitz_move_inverse(i, cls.canon()));
}

MonodromyClass alternating_class() {
  MonodromyTuple t{};
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = k % 2 == 0 ? Transposition::T12 : Transposition::T23;
  return MonodromyClass(t);
}

Confluence classify_confluence(const MonodromyClass& cls, int position) {
  if (position < 0 || position >= kBranchPoints) throw std::out_of_range("position outside 0..11");
  const auto next = (position + 1) % kBranchPoints;
  const auto u = cls[static_cast<std::size_t>(position)];
  if (u != cls[static_cast<std::size_t>(next)]) return Confluence::RM;
  bool rest_constant = true;
  Transposition w{};
  bool have_w = false;
  for (int k = 0; k < kBranchPoints; ++k) {
    if (k == position || k == next) continue;
    const auto x = cls[static_cast<std::size_t>(k)];
    if (!have_w) {
      w = x;
      have_w = true;
    } else if (x != w) {
      rest_constant = false;
    }
  }
  return rest_constant ? Confluence::H : Confluence::SG;
}

ClassEnumeration enumerate_classes() {
  ClassEnumeration out;
  std::vector<bool> seen(kTupleCodeCount, false);
  MonodromyTuple t{};
  constexpr std::uint32_t kFree = kTupleCodeCount / 3;  // 3^11 choices of t_1..t_11
  for (std::uint32_t word = 0; word < kFree; ++word) {
    std::uint32_t w = word;
    for (int k = kBranchPoints - 1; k >= 1; --k) {
      t[static_cast<std::size_t>(k)] = static_cast<Transposition>(w % 3);
      w /= 3;
    }
    bool constant = true;
    for (int k = 2; k < kBranchPoints; ++k) constant = constant && t[static_cast<std::size_t>(k)] == t[1];
    if (constant) continue;
    ++out.raw_count;
    // t_0 = (t_11 ... t_1)^{-1}, an odd permutation of S3
    Perm3 p = kIdentity3;
    for (int k = kBranchPoints - 1; k >= 1; --k) p = after(p, as_perm(t[static_cast<std::size_t>(k)]));
    t[0] = as_transposition(p);
    const auto canon = canonicalize(t);
    const auto code = tuple_code(canon);
    if (seen[code]) continue;
    seen[code] = true;
    out.classes.emplace_back(canon);
  }
  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

ClassTable::ClassTable() : index_by_code_(kTupleCodeCount, SchreierTree::kNone) {
  auto e = enumerate_classes();
  classes_ = std::move(e.classes);
  raw_count_ = e.raw_count;
  for (std::size_t k = 0; k < classes_.size(); ++k) index_by_code_[classes_[k].code()] = static_cast<Point>(k);
}

Point ClassTable::index_of(const MonodromyClass& cls) const {
  const auto idx = index_by_code_[cls.code()];
  if (idx == SchreierTree::kNone) throw std::out_of_range("class not in table");
  return idx;
}

PermutationAction ClassTable::hurwitz_action() const {
  std::vector<Permutation> gens;
  for (int i = 1; i <= kRank; ++i) {
    std::vector<Point> img(classes_.size());
    for (std::size_t k = 0; k < classes_.size(); ++k) img[k] = index_of(hurwitz_act(i, classes_[k]));
    gens.emplace_back(std::move(img));
  }
  return PermutationAction(std::move(gens));
}

SchreierTree orbit_R(const ClassTable& table, const PermutationAction& hurwitz, const MonodromyClass& seed) {
  const Point s = table.index_of(seed);
  return orbit(std::span<const Point>(&s, 1), hurwitz);
}

}  // namespace trigonal
