#pragma once

#include <vector>

#include "mdual/integer.hpp"
#include "mdual/root_datum.hpp"

namespace mdual {

/// Integral symmetric bilinear form on Z^rank, also read as the map x -> M x
/// into the dual lattice.
class SymmetricForm {
 public:
  SymmetricForm() = default;
  /// Throws BetaNotSymmetric if m is not square and symmetric.
  explicit SymmetricForm(IntMatrix m);
  static SymmetricForm zero(std::size_t rank) { return SymmetricForm(IntMatrix(rank, rank)); }

  std::size_t rank() const { return m_.rows(); }
  const IntMatrix& matrix() const { return m_; }

  Int operator()(const IntVector& x, const IntVector& y) const;
  IntVector apply(const IntVector& x) const { return m_ * x; }
  bool is_even() const;

  friend SymmetricForm operator+(const SymmetricForm& a, const SymmetricForm& b);
  friend SymmetricForm operator*(const Int& s, const SymmetricForm& a);
  friend bool operator==(const SymmetricForm& a, const SymmetricForm& b) = default;

 private:
  IntMatrix m_;
};

/// Q(x) = sum_{i <= j} q_ij x_i x_j, stored as the upper-triangular q.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  explicit QuadraticForm(IntMatrix upper);

  std::size_t rank() const { return q_.rows(); }
  const IntMatrix& coefficients() const { return q_; }
  Int operator()(const IntVector& x) const;

 private:
  IntMatrix q_;
};

/// kappa(x, y) = Q(x + y) - Q(x) - Q(y), read off on basis pairs.
SymmetricForm bilinear_from_quadratic(const QuadraticForm& q);
bool quadratic_exists(const SymmetricForm& kappa);
/// Q(x) = kappa(x, x) / 2. Throws OddDiagonal.
QuadraticForm quadratic_from_bilinear(const SymmetricForm& kappa);

/// Sum of root (x) root over every root, both signs, of one component.
SymmetricForm killing_form(const RootDatum& rd, const CartanComponent& component);
std::vector<SymmetricForm> killing_forms(const RootDatum& rd, const DynkinComponents& dc);

/// Pulls a form on Lambda_ab back to Lambda through the abelianization.
SymmetricForm pullback_beta(const RootDatum& rd, const IntMatrix& beta_ab);
/// Inverse of pullback_beta. Throws FormNotInvariant when beta does not
/// vanish on the saturated coroot lattice.
IntMatrix descend_beta(const RootDatum& rd, const SymmetricForm& beta);

/// Checks beta on Lambda_ab: square of size ab_rank, symmetric, even.
/// Throws RankMismatch, BetaNotSymmetric, BetaNotEven.
void check_beta(const RootDatum& rd, const IntMatrix& beta_ab);

/// -beta(pr x, pr y) - sum_j c_j kappa_j(x, y).
SymmetricForm assemble_kappa_bar(const RootDatum& rd, const DynkinComponents& dc,
                                 const IntMatrix& beta_ab, const std::vector<Int>& c);

bool is_w_invariant(const RootDatum& rd, const SymmetricForm& f);

struct LeviForm {
  RootDatum levi;
  DynkinComponents components;
  SymmetricForm form;  // unchanged: the Levi shares Lambda
};

LeviForm restrict_form_to_levi(const RootDatum& rd, const SymmetricForm& f,
                               const std::vector<std::size_t>& subset);

}  // namespace mdual
