#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mdual/integer.hpp"
#include "mdual/lattice.hpp"

namespace mdual {

/// A split root datum in coordinates: the coweight lattice is Z^rank, the
/// weight lattice is Z^rank paired by the dot product. Simple coroots live
/// in the coweight lattice, simple roots in the weight lattice, both indexed
/// by the same set of simple indices.
///
/// The Cartan matrix is A[i][j] = <coroot_j, root_i>.
class RootDatum {
 public:
  RootDatum() = default;
  RootDatum(std::size_t rank, std::vector<IntVector> simple_coroots,
            std::vector<IntVector> simple_roots, std::string name = {});

  std::size_t rank() const { return rank_; }
  std::size_t semisimple_rank() const { return simple_coroots_.size(); }
  const std::string& name() const { return name_; }

  const std::vector<IntVector>& simple_coroots() const { return simple_coroots_; }
  const std::vector<IntVector>& simple_roots() const { return simple_roots_; }
  const IntVector& simple_coroot(std::size_t i) const { return simple_coroots_.at(i); }
  const IntVector& simple_root(std::size_t i) const { return simple_roots_.at(i); }

  IntMatrix cartan_matrix() const;
  /// rank x semisimple_rank matrix whose columns are the simple coroots.
  IntMatrix coroot_matrix() const;
  /// rank x semisimple_rank matrix whose columns are the simple roots.
  IntMatrix root_matrix() const;

  /// s_i on the coweight lattice: x - <x, root_i> coroot_i.
  IntMatrix reflection(std::size_t i) const;
  IntVector reflect(std::size_t i, const IntVector& x) const;

  /// Roots and coroots exchanged (the classical dual in coordinates).
  RootDatum swapped() const;
  /// Sub-datum on a subset of simple indices, same lattices.
  RootDatum levi(const std::vector<std::size_t>& subset) const;

  /// Coefficients of x in the simple coroots when x lies in their integral
  /// span.
  std::optional<IntVector> coroot_coefficients(const IntVector& x) const;

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.rank_ == b.rank_ && a.simple_coroots_ == b.simple_coroots_ &&
           a.simple_roots_ == b.simple_roots_;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<IntVector> simple_coroots_;
  std::vector<IntVector> simple_roots_;
  std::string name_;
  std::optional<IntegerSolver> coroot_solver_;
};

struct CartanComponent {
  std::vector<std::size_t> indices;  // sorted simple indices
  char family = 'A';                 // 'A'..'G'
  std::size_t rank = 0;

  std::string label() const;  // e.g. "A2", "C2", "G2"
};

struct DynkinComponents {
  std::vector<CartanComponent> components;  // ordered by smallest index

  std::string type_string() const;  // e.g. "A1xB2", or "T" with no roots
  /// Component containing simple index i.
  std::size_t component_of(std::size_t i) const;
};

/// Checks every root-datum axiom, classifies each Dynkin component.
/// Throws PairingViolation, NotFiniteType, RankMismatch.
DynkinComponents validate(const RootDatum& rd);

/// Order of the Weyl group of a classified datum.
Int weyl_group_order(const DynkinComponents& dc);

/// A positive coroot with its matching positive root, and its coefficients
/// in the simple coroots.
struct RootPair {
  IntVector coroot;        // in the coweight lattice
  IntVector root;          // in the weight lattice
  IntVector coefficients;  // coroot = sum c_i simple_coroot_i
};

std::vector<RootPair> positive_root_pairs(const RootDatum& rd);
std::vector<IntVector> positive_coroots(const RootDatum& rd);
std::vector<IntVector> positive_roots(const RootDatum& rd);
/// All roots (both signs) of one Dynkin component.
std::vector<IntVector> component_roots(const RootDatum& rd, const CartanComponent& c);

/// The Weyl group acting on the coweight lattice, as a canonically ordered
/// set of matrices. Throws OrderBoundExceeded when |W| > max_order.
std::set<IntMatrix> weyl_group(const RootDatum& rd, std::size_t max_order);

/// lhs <= rhs iff rhs - lhs is a nonnegative integral sum of simple coroots.
bool dominance_leq(const RootDatum& rd, const IntVector& lhs, const IntVector& rhs);
bool is_dominant(const RootDatum& rd, const IntVector& lambda);
/// {i : <lambda, root_i> = 0}
std::vector<std::size_t> stabilizer_weyl(const RootDatum& rd, const IntVector& lambda);
/// <theta, 2 rho_check> mod 2, where 2 rho_check is the sum of positive roots.
int parity(const RootDatum& rd, const IntVector& theta);

struct CowtLatticeQuotients {
  std::vector<Int> pi1_torsion;  // elementary divisors > 1 of Z^rank / coroot lattice
  std::size_t pi1_free_rank = 0;
  /// ab_rank x rank surjection onto the coweights of the abelianization; its
  /// rows are the HNF basis of the characters killing every coroot.
  IntMatrix projection;

  std::size_t ab_rank() const { return projection.rows(); }
};

CowtLatticeQuotients abelianization(const RootDatum& rd);

/// Catalog: SLn, GLn, PGLn, Sp2n, SOn, G2, Tn and products joined by 'x'
/// (e.g. "SL2xGL1"). Throws UnknownGroup.
RootDatum standard_datum(const std::string& name);
/// Human-readable list of catalog entries with their basis conventions.
std::vector<std::string> catalog_descriptions();
/// Catalog name of the Langlands dual group, factor by factor.
std::string classical_dual_name(const std::string& name);

/// Searches for g in GL(Z^rank) and a permutation of simple indices carrying
/// one datum onto the other. Exact when the central torus has rank <= 1;
/// otherwise the free part of g is searched in a bounded box.
bool isomorphic(const RootDatum& a, const RootDatum& b);

}  // namespace mdual
