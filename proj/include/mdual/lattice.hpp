#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mdual/integer.hpp"

namespace mdual {

struct SmithForm {
  IntMatrix U;  // unimodular, rows x rows
  IntMatrix D;  // diagonal, d1 | d2 | ... >= 0
  IntMatrix V;  // unimodular, cols x cols
  std::size_t rank = 0;

  std::vector<Int> diagonal() const;
};

/// U * m * V = D with U, V unimodular and D in Smith normal form.
SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form of the row lattice of `m`: upper echelon,
/// positive pivots, entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Solves m * x = b over the integers. Precomputes a Smith form once so that
/// repeated solves against the same matrix cost a few matrix-vector products.
class IntegerSolver {
 public:
  explicit IntegerSolver(const IntMatrix& m);

  /// A particular integral solution, or nullopt if none exists.
  std::optional<IntVector> solve(const IntVector& b) const;
  /// Basis of the integral kernel {x : m x = 0} (empty when m is injective).
  std::vector<IntVector> kernel() const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  SmithForm snf_;
};

/// Basis of {x in Z^cols : m x = 0}.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

/// A sublattice of Z^n, stored by its Hermite-normal-form basis so that
/// equality of lattices is equality of data.
class Sublattice {
 public:
  Sublattice() = default;
  /// Lattice spanned by arbitrary (possibly dependent) generators.
  Sublattice(std::size_t ambient_rank, const std::vector<IntVector>& generators);

  static Sublattice full(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }
  /// Basis vectors as matrix rows.
  IntMatrix basis_matrix() const;
  bool is_full_rank() const { return rank() == ambient_rank_; }

  bool contains(const IntVector& v) const;
  /// Coordinates of v in the stored basis, or nullopt if v is not a member.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  bool contains(const Sublattice& other) const;

  /// Index [Z^n : L] for a full-rank lattice (|det| of the basis).
  Int index() const;

  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    return a.ambient_rank_ == b.ambient_rank_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_rank_ = 0;
  std::vector<IntVector> basis_;
  std::optional<IntegerSolver> solver_;
};

/// {x : every entry of m x is divisible by n}; contains n Z^cols.
Sublattice kernel_mod(const IntMatrix& m, const Int& n);

/// Rational closure of s inside its ambient lattice.
Sublattice saturate(const Sublattice& s);

/// True iff v is an integer combination of the basis of s.
bool member(const Sublattice& s, const IntVector& v);

/// Elementary divisors of the inclusion s in Z^n, padded with zeros for the
/// free part of the quotient: Z^n / s = (+) Z/d_i.
std::vector<Int> quotient_invariants(const Sublattice& s);

/// Reduced positive denominator; denominator(0) = 1.
Int denominator(const Rational& a);

}  // namespace mdual
