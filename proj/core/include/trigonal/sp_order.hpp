#ifndef TRIGONAL_SP_ORDER_HPP
#define TRIGONAL_SP_ORDER_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "trigonal/f3.hpp"

namespace trigonal {

/// |Sp_{2n}(F_q)| = q^{n^2} prod_{i=1..n} (q^{2i} - 1), in decimal.
std::string symplectic_group_order(int n, int q);

struct GroupOrderCertificate {
  /// Product of basic orbit lengths of the stabilizer chain; always <= |G|.
  std::string order_lower_bound;
  /// |Sp_10(F_3)|; an upper bound on |G| when every generator preserves the form.
  std::string symplectic_order;
  bool generators_preserve_form = false;
  std::vector<std::size_t> basic_orbit_lengths;
  std::size_t strong_generators = 0;
  std::size_t sifts = 0;

  /// Lower bound meets upper bound, so G is the full symplectic group.
  bool certified() const { return generators_preserve_form && order_lower_bound == symplectic_order; }
};

/// Randomized Schreier-Sims for the group generated by the given matrices acting on
/// nonzero vectors of F3^10, with base alpha_1..alpha_10. Stops once the order
/// reaches target_order (if nonempty) or after `patience` consecutive sifts that
/// produce nothing new.
struct StabilizerChainResult {
  std::vector<std::size_t> basic_orbit_lengths;
  std::string order;
  std::size_t strong_generators = 0;
  std::size_t sifts = 0;
};
StabilizerChainResult randomized_schreier_sims(const std::vector<F3Matrix>& generators, std::uint64_t seed,
                                               const std::string& target_order = {}, std::size_t patience = 40);

/// Order certificate for the group generated by the ten transvections.
GroupOrderCertificate certify_transvection_group_order(std::uint64_t seed = 0);

}  // namespace trigonal

#endif
