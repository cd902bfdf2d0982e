#pragma once

#include <map>
#include <vector>

#include "mdual/metaplectic.hpp"
#include "mdual/root_datum.hpp"

namespace mdual {

// Representations are taken of the group whose weight lattice is the lattice
// slot Z^rank of a RootDatum: its roots are the simple_coroots() vectors and
// their coroots the simple_roots() functionals. DualRootDatum::as_root_datum()
// has exactly this shape, with weights in Lambda_sharp coordinates.

using Character = std::map<IntVector, Int>;

/// Freudenthal recursion over the dominant weights below lambda, extended by
/// the Weyl group. Throws NotDominant.
Character weight_multiplicities(const RootDatum& d, const IntVector& lambda);
Character weight_multiplicities(const DualRootDatum& d, const IntVector& lambda);

/// Weyl dimension formula. Throws NotDominant.
Int dimension(const RootDatum& d, const IntVector& lambda);
Int dimension(const DualRootDatum& d, const IntVector& lambda);

/// Brauer-Klimyk: highest weight -> multiplicity in V(lambda) (x) V(mu).
std::map<IntVector, Int> tensor_decompose(const RootDatum& d, const IntVector& lambda,
                                          const IntVector& mu);
std::map<IntVector, Int> tensor_decompose(const DualRootDatum& d, const IntVector& lambda,
                                          const IntVector& mu);

/// Every weight nu of V(lambda) satisfies w nu <= lambda for every w in W.
bool verify_weight_bound(const RootDatum& d, const IntVector& lambda, std::size_t max_order = 384);
bool verify_weight_bound(const DualRootDatum& d, const IntVector& lambda,
                         std::size_t max_order = 384);

/// The dominant element of the W-orbit of x, with (-1)^(reflections used).
IntVector dominant_representative(const RootDatum& d, const IntVector& x, int* sign = nullptr);
std::vector<IntVector> weyl_orbit(const RootDatum& d, const IntVector& x);

struct RankOneWeights {
  std::vector<IntVector> candidates;  // lambda - k a_i, 0 <= k <= <lambda, a^_i>
  std::vector<IntVector> in_sharp;    // those lying in Lambda_sharp
};

/// lambda in Lambda. Throws NotDominant, NotInSharp.
RankOneWeights rank_one_weights(const MetaplecticDatum& md, std::size_t i, const IntVector& lambda);

/// (a + b) kappa_bar(a_i, a_i) / 2 mod N, in [0, N). Requires
/// a kappa_bar(a_i, a_i) in 2N Z, else PreconditionViolated.
Int monodromy_exponent(const MetaplecticDatum& md, std::size_t i, const Int& a, const Int& b);

}  // namespace mdual
