#include "mdual/lattice.hpp"

#include <algorithm>

#include "mdual/error.hpp"

namespace mdual {

namespace {

// Position of the nonzero entry of smallest absolute value in the
// submatrix d[t.., t..], or nullopt if that block is zero.
std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& d,
                                                                  std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Int best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Int a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
        if (best_abs == 1) return best;
      }
    }
  return best;
}

}  // namespace

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols()), 0};
  IntMatrix& d = s.D;
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::size_t t = 0;
  for (; t < limit; ++t) {
    auto pivot = smallest_entry(d, t);
    if (!pivot) break;
    for (;;) {
      d.swap_rows(t, pivot->first);
      s.U.swap_rows(t, pivot->first);
      d.swap_cols(t, pivot->second);
      s.V.swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Int q = floor_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        s.U.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Int q = floor_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -q);
        s.V.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // Remainders are smaller than the pivot; bring the smallest forward.
        std::pair<std::size_t, std::size_t> best{t, t};
        for (std::size_t i = t + 1; i < d.rows(); ++i)
          if (d(i, t) != 0 && abs(d(i, t)) < abs(d(best.first, best.second))) best = {i, t};
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(t, j) != 0 && abs(d(t, j)) < abs(d(best.first, best.second))) best = {t, j};
        pivot = best;
        continue;
      }
      // Divisibility: fold any row whose entries the pivot does not divide.
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, Int(1));
            s.U.add_row_multiple(t, i, Int(1));
            divides = false;
            break;
          }
      if (divides) break;
      pivot = std::pair<std::size_t, std::size_t>{t, t};
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
  }
  s.rank = t;
  return s;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < a.rows(); ++i)
        if (a(i, col) != 0 && (!best || abs(a(i, col)) < abs(a(*best, col)))) best = i;
      if (!best) break;
      a.swap_rows(r, *best);
      bool clean = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, col) == 0) continue;
        a.add_row_multiple(i, r, -floor_div(a(i, col), a(r, col)));
        if (a(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, col) == 0) continue;
    if (a(r, col) < 0) a.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) a.add_row_multiple(i, r, -floor_div(a(i, col), a(r, col)));
    ++r;
  }
  IntMatrix out(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

IntegerSolver::IntegerSolver(const IntMatrix& m)
    : rows_(m.rows()), cols_(m.cols()), snf_(smith_normal_form(m)) {}

std::optional<IntVector> IntegerSolver::solve(const IntVector& b) const {
  if (b.size() != rows_) fail(Errc::RankMismatch, "right-hand side has wrong length");
  IntVector ub = snf_.U * b;
  IntVector y(cols_, Int(0));
  for (std::size_t k = 0; k < rows_; ++k) {
    if (k < snf_.rank) {
      const Int& dk = snf_.D(k, k);
      if (ub[k] % dk != 0) return std::nullopt;
      y[k] = ub[k] / dk;
    } else if (ub[k] != 0) {
      return std::nullopt;
    }
  }
  return snf_.V * y;
}

std::vector<IntVector> IntegerSolver::kernel() const {
  std::vector<IntVector> out;
  for (std::size_t k = snf_.rank; k < cols_; ++k) out.push_back(snf_.V.col(k));
  return out;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) { return IntegerSolver(m).kernel(); }

Sublattice::Sublattice(std::size_t ambient_rank, const std::vector<IntVector>& generators)
    : ambient_rank_(ambient_rank) {
  if (!generators.empty()) {
    IntMatrix h = hermite_normal_form(IntMatrix::from_rows(generators, ambient_rank));
    basis_ = h.row_vectors();
  }
  if (!basis_.empty()) solver_.emplace(IntMatrix::from_columns(basis_, ambient_rank_));
}

Sublattice Sublattice::full(std::size_t ambient_rank) {
  return Sublattice(ambient_rank, IntMatrix::identity(ambient_rank).row_vectors());
}

IntMatrix Sublattice::basis_matrix() const { return IntMatrix::from_rows(basis_, ambient_rank_); }

std::optional<IntVector> Sublattice::coordinates(const IntVector& v) const {
  if (v.size() != ambient_rank_)
    fail(Errc::RankMismatch, "vector of length " + std::to_string(v.size()) +
                                 " tested against a lattice in rank " +
                                 std::to_string(ambient_rank_));
  if (basis_.empty()) {
    if (is_zero(v)) return IntVector{};
    return std::nullopt;
  }
  return solver_->solve(v);
}

bool Sublattice::contains(const IntVector& v) const { return coordinates(v).has_value(); }

bool Sublattice::contains(const Sublattice& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const IntVector& v) { return contains(v); });
}

Int Sublattice::index() const {
  if (!is_full_rank()) fail(Errc::InvalidArgument, "index of a lattice that is not of full rank");
  return abs(determinant(basis_matrix()));
}

Sublattice kernel_mod(const IntMatrix& m, const Int& n) {
  if (n < 1) fail(Errc::InvalidArgument, "modulus must be positive");
  SmithForm s = smith_normal_form(m);
  std::vector<IntVector> gens;
  for (std::size_t k = 0; k < m.cols(); ++k) {
    Int step = 1;
    if (k < s.rank) step = n / gcd(n, s.D(k, k));
    gens.push_back(step * s.V.col(k));
  }
  return Sublattice(m.cols(), gens);
}

Sublattice saturate(const Sublattice& s) {
  if (s.rank() == 0) return s;
  SmithForm f = smith_normal_form(IntMatrix::from_columns(s.basis(), s.ambient_rank()));
  // Columns of U^{-1} indexed below the rank span the rational closure; they
  // are the solutions of U x = e_k.
  IntegerSolver u(f.U);
  std::vector<IntVector> gens;
  for (std::size_t k = 0; k < f.rank; ++k) {
    IntVector e = zero_vector(s.ambient_rank());
    e[k] = 1;
    gens.push_back(*u.solve(e));
  }
  return Sublattice(s.ambient_rank(), gens);
}

bool member(const Sublattice& s, const IntVector& v) { return s.contains(v); }

std::vector<Int> quotient_invariants(const Sublattice& s) {
  std::vector<Int> out(s.ambient_rank(), Int(0));
  if (s.rank() == 0) return out;
  SmithForm f = smith_normal_form(s.basis_matrix());
  for (std::size_t k = 0; k < f.rank; ++k) out[k] = f.D(k, k);
  return out;
}

Int denominator(const Rational& a) { return boost::multiprecision::denominator(a); }

}  // namespace mdual
