#ifndef TRIGONAL_TESTS_GENERATORS_HPP
#define TRIGONAL_TESTS_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "trigonal/eisenstein.hpp"
#include "trigonal/f3.hpp"
#include "trigonal/lattice.hpp"
#include "trigonal/monodromy.hpp"

namespace trigonal::testing {

inline constexpr int kTrials = 500;

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_); }

  EisensteinInt eisenstein(std::int64_t bound = 1000) { return {integer(-bound, bound), integer(-bound, bound)}; }

  LatticeVector lattice_vector(std::int64_t bound = 20) {
    LatticeVector v;
    for (std::size_t k = 0; k < kRank; ++k) v[k] = eisenstein(bound);
    return v;
  }

  F3Vector f3_vector() { return F3Vector::from_code(static_cast<std::uint32_t>(integer(0, kVectorCount - 1))); }

  F3Vector nonzero_f3_vector() {
    return F3Vector::from_code(static_cast<std::uint32_t>(integer(1, kVectorCount - 1)));
  }

  int generator() { return static_cast<int>(integer(1, kRank)); }

  // Random valid tuple: t1..t11 free, t0 closes the product, resampled if constant.
  MonodromyTuple tuple() {
    for (;;) {
      MonodromyTuple t{};
      for (int k = 1; k < kBranchPoints; ++k) t[k] = static_cast<Transposition>(integer(0, 2));
      for (int c = 0; c < 3; ++c) {
        t[0] = static_cast<Transposition>(c);
        if (!product_is_identity(t)) continue;
        bool constant = true;
        for (auto x : t) constant = constant && x == t[0];
        if (!constant) return t;
      }
    }
  }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

}  // namespace trigonal::testing

#endif
