#pragma once

#include <optional>
#include <set>
#include <vector>

#include "mdual/forms.hpp"
#include "mdual/lattice.hpp"
#include "mdual/root_datum.hpp"

namespace mdual {

/// (root datum, beta, c, N) together with everything derived from it:
/// kappa_bar, Lambda_sharp = {x : kappa_bar(x) in N Lambda^}, and the
/// denominators delta_i of kappa_bar(a_i, a_i) / 2N.
class MetaplecticDatum {
 public:
  /// beta is given on Lambda_ab (ab_rank x ab_rank), c per Dynkin component.
  static MetaplecticDatum assemble(RootDatum rd, IntMatrix beta_ab, std::vector<Int> c, Int n);
  /// Any even W-invariant form. Throws OddDiagonal, FormNotInvariant.
  static MetaplecticDatum from_kappa_bar(RootDatum rd, SymmetricForm kappa_bar, Int n);

  const RootDatum& root_datum() const { return rd_; }
  const DynkinComponents& components() const { return dc_; }
  /// Empty when built from kappa_bar directly.
  const std::optional<IntMatrix>& beta_ab() const { return beta_ab_; }
  const std::vector<Int>& c() const { return c_; }
  const Int& level() const { return n_; }
  const SymmetricForm& kappa_bar() const { return kappa_bar_; }
  const Sublattice& lambda_sharp() const { return sharp_; }
  const std::vector<Int>& delta() const { return delta_; }
  const Int& delta(std::size_t i) const { return delta_.at(i); }

 private:
  MetaplecticDatum() = default;
  void derive();

  RootDatum rd_;
  DynkinComponents dc_;
  std::optional<IntMatrix> beta_ab_;
  std::vector<Int> c_;
  Int n_ = 1;
  SymmetricForm kappa_bar_;
  Sublattice sharp_;
  std::vector<Int> delta_;
};

Sublattice lambda_sharp(const MetaplecticDatum& md);
Int delta(const MetaplecticDatum& md, std::size_t i);
/// Denominator of kappa_bar(a, a) / 2N for any coroot a.
Int delta_root(const MetaplecticDatum& md, const IntVector& coroot);
/// Smallest b >= 1 with b kappa_bar(a_i, a_i) in 2N Z, by scanning.
Int delta_bruteforce(const MetaplecticDatum& md, std::size_t i);

/// The datum (Lambda_sharp, delta_i a_i, a^_i / delta_i). Lambda_sharp is
/// carried in its HNF basis S (rows); a vector x of Lambda_sharp has
/// coordinates y with x = S^T y, a functional f restricts to S f.
class DualRootDatum {
 public:
  DualRootDatum(Sublattice sharp, std::vector<IntVector> roots, std::vector<IntVector> coroots,
                std::vector<Int> delta, std::string name);

  const Sublattice& weight_lattice() const { return sharp_; }
  std::size_t rank() const { return sharp_.rank(); }
  std::size_t semisimple_rank() const { return roots_.size(); }
  /// delta_i a_i in Lambda_sharp coordinates.
  const std::vector<IntVector>& simple_roots() const { return roots_; }
  /// a^_i / delta_i as a functional in the dual coordinates.
  const std::vector<IntVector>& simple_coroots() const { return coroots_; }
  const std::vector<Int>& delta() const { return delta_; }

  /// <delta_j a_j, a^_i / delta_i>.
  IntMatrix cartan_matrix() const;
  /// The datum with Lambda_sharp in the lattice slot: delta_i a_i sit where
  /// the coroots of G sat. Weyl group, dominance and representations of
  /// the dual group are read off this form.
  RootDatum as_root_datum() const;
  /// The same datum as a group datum of G_zeta: Hom(Lambda_sharp, Z) as
  /// cocharacters, a^_i / delta_i as coroots, delta_i a_i as roots.
  RootDatum as_group_datum() const;
  /// Lambda_sharp coordinates -> Lambda.
  IntVector to_ambient(const IntVector& y) const;
  /// Lambda -> Lambda_sharp coordinates. Throws NotInSharp.
  IntVector from_ambient(const IntVector& x) const;

 private:
  Sublattice sharp_;
  std::vector<IntVector> roots_;
  std::vector<IntVector> coroots_;
  std::vector<Int> delta_;
  std::string name_;
};

/// Throws RootNotInSharp, CorootNotIntegral.
DualRootDatum dual_root_datum(const MetaplecticDatum& md);
/// {delta_a a : a a positive coroot of G}, in Lambda.
std::vector<IntVector> dual_positive_roots(const MetaplecticDatum& md);

/// W(G) restricted to Lambda_sharp, in Lambda_sharp coordinates.
std::set<IntMatrix> restricted_weyl_group(const MetaplecticDatum& md, const DualRootDatum& d,
                                          std::size_t max_order);
/// W(G)|Lambda_sharp == W(dual) as matrix sets. Throws OrderBoundExceeded.
bool weyl_equality_check(const MetaplecticDatum& md, std::size_t max_order = 384);

struct DualType {
  std::string cartan_type;        // e.g. "A1", "B2", "T"
  std::vector<Int> pi1_torsion;   // elementary divisors > 1
  std::size_t pi1_free_rank = 0;
  std::size_t central_rank = 0;
};

DualType identify_cartan_type(const DualRootDatum& d);

/// Same Lambda, kappa_bar and N; roots restricted to the subset.
MetaplecticDatum levi_metaplectic(const MetaplecticDatum& md, const std::vector<std::size_t>& subset);

struct LocalSystemData {
  bool in_sharp = false;
  Int half_norm;            // kappa_bar(lambda, lambda) / 2
  IntVector kappa_lambda;   // kappa_bar(lambda) in the weight lattice
};

/// Throws NotDominant.
LocalSystemData local_system_criterion(const MetaplecticDatum& md, const IntVector& lambda);

/// Hilbert basis of the monoid of dominant elements of Lambda_sharp, in
/// Lambda. Lines in the cone contribute +-basis vectors. Throws
/// BoundTooSmall when the enumeration box exceeds height_bound.
std::vector<IntVector> sharp_dominant_generators(const MetaplecticDatum& md, const Int& height_bound);

/// kappa_bar(l1, l2) mod 2 for l1, l2 in Lambda_sharp. Throws NotInSharp.
int commutator_on_sharp(const MetaplecticDatum& md, const IntVector& l1, const IntVector& l2);

/// Commutator of the extension restricted to Lambda_sharp, as exponents: the
/// sign is (-1)^e with e = kappa_bar mod 2, the mu_2N refinement is
/// kappa_bar * N mod 2N.
class CommutatorPairing {
 public:
  explicit CommutatorPairing(const MetaplecticDatum& md) : md_(&md) {}
  int sign_exponent(const IntVector& l1, const IntVector& l2) const;
  Int refined_exponent(const IntVector& l1, const IntVector& l2) const;

 private:
  const MetaplecticDatum* md_;
};

/// Upper-triangular B on Lambda_sharp coordinates with B + B^T equal to
/// kappa_bar restricted to Lambda_sharp.
IntMatrix sharp_splitting(const MetaplecticDatum& md);

}  // namespace mdual
