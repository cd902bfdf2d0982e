#include "mdual/forms.hpp"

#include "mdual/error.hpp"

namespace mdual {

SymmetricForm::SymmetricForm(IntMatrix m) : m_(std::move(m)) {
  if (!m_.is_symmetric()) fail(Errc::BetaNotSymmetric, "form matrix is not symmetric: " + to_string(m_));
}

Int SymmetricForm::operator()(const IntVector& x, const IntVector& y) const {
  return dot(x, m_ * y);
}

bool SymmetricForm::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (m_(i, i) % 2 != 0) return false;
  return true;
}

SymmetricForm operator+(const SymmetricForm& a, const SymmetricForm& b) {
  return SymmetricForm(a.m_ + b.m_);
}

SymmetricForm operator*(const Int& s, const SymmetricForm& a) { return SymmetricForm(s * a.m_); }

QuadraticForm::QuadraticForm(IntMatrix upper) : q_(std::move(upper)) {
  if (!q_.is_square()) fail(Errc::RankMismatch, "quadratic form coefficients must be square");
  for (std::size_t i = 0; i < q_.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (q_(i, j) != 0) fail(Errc::InvalidArgument, "quadratic form coefficients must be upper triangular");
}

Int QuadraticForm::operator()(const IntVector& x) const {
  if (x.size() != rank()) fail(Errc::RankMismatch, "vector length differs from form rank");
  Int s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i; j < rank(); ++j) s += q_(i, j) * x[i] * x[j];
  return s;
}

SymmetricForm bilinear_from_quadratic(const QuadraticForm& q) {
  const std::size_t n = q.rank();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntVector ei = zero_vector(n), ej = zero_vector(n);
      ei[i] = 1;
      ej[j] = 1;
      m(i, j) = q(ei + ej) - q(ei) - q(ej);
    }
  return SymmetricForm(m);
}

bool quadratic_exists(const SymmetricForm& kappa) { return kappa.is_even(); }

QuadraticForm quadratic_from_bilinear(const SymmetricForm& kappa) {
  if (!kappa.is_even()) fail(Errc::OddDiagonal, "form has an odd diagonal entry");
  const std::size_t n = kappa.rank();
  IntMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    q(i, i) = kappa.matrix()(i, i) / 2;
    for (std::size_t j = i + 1; j < n; ++j) q(i, j) = kappa.matrix()(i, j);
  }
  return QuadraticForm(q);
}

SymmetricForm killing_form(const RootDatum& rd, const CartanComponent& component) {
  const std::size_t n = rd.rank();
  IntMatrix m(n, n);
  for (const auto& r : component_roots(rd, component))
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) m(a, b) += r[a] * r[b];
  return SymmetricForm(m);
}

std::vector<SymmetricForm> killing_forms(const RootDatum& rd, const DynkinComponents& dc) {
  std::vector<SymmetricForm> out;
  for (const auto& c : dc.components) out.push_back(killing_form(rd, c));
  return out;
}

void check_beta(const RootDatum& rd, const IntMatrix& beta_ab) {
  const std::size_t ab = abelianization(rd).ab_rank();
  if (beta_ab.rows() != ab || beta_ab.cols() != ab)
    fail(Errc::RankMismatch, "beta must be " + std::to_string(ab) + "x" + std::to_string(ab) +
                                 " on Lambda_ab, got " + std::to_string(beta_ab.rows()) + "x" +
                                 std::to_string(beta_ab.cols()));
  if (!beta_ab.is_symmetric()) fail(Errc::BetaNotSymmetric, "beta is not symmetric");
  for (std::size_t i = 0; i < ab; ++i)
    if (beta_ab(i, i) % 2 != 0)
      fail(Errc::BetaNotEven, "beta has odd diagonal entry at " + std::to_string(i));
}

SymmetricForm pullback_beta(const RootDatum& rd, const IntMatrix& beta_ab) {
  check_beta(rd, beta_ab);
  const IntMatrix p = abelianization(rd).projection;
  if (p.rows() == 0) return SymmetricForm::zero(rd.rank());
  return SymmetricForm(p.transpose() * beta_ab * p);
}

IntMatrix descend_beta(const RootDatum& rd, const SymmetricForm& beta) {
  const IntMatrix p = abelianization(rd).projection;
  const std::size_t ab = p.rows();
  IntMatrix out(ab, ab);
  if (ab > 0) {
    // A section s of the projection (p s = I) exists since p is onto.
    IntegerSolver solver(p);
    std::vector<IntVector> cols;
    for (std::size_t k = 0; k < ab; ++k) {
      IntVector e = zero_vector(ab);
      e[k] = 1;
      cols.push_back(*solver.solve(e));
    }
    IntMatrix s = IntMatrix::from_columns(cols, rd.rank());
    out = s.transpose() * beta.matrix() * s;
  }
  SymmetricForm back = ab ? SymmetricForm(p.transpose() * out * p) : SymmetricForm::zero(rd.rank());
  if (!(back == beta))
    fail(Errc::FormNotInvariant, "form does not factor through Lambda_ab");
  return out;
}

SymmetricForm assemble_kappa_bar(const RootDatum& rd, const DynkinComponents& dc,
                                 const IntMatrix& beta_ab, const std::vector<Int>& c) {
  if (c.size() != dc.components.size())
    fail(Errc::InvalidArgument, "expected " + std::to_string(dc.components.size()) +
                                    " Killing multipliers, got " + std::to_string(c.size()));
  SymmetricForm kb = Int(-1) * pullback_beta(rd, beta_ab);
  auto kappas = killing_forms(rd, dc);
  for (std::size_t j = 0; j < c.size(); ++j) kb = kb + Int(-c[j]) * kappas[j];
  return kb;
}

bool is_w_invariant(const RootDatum& rd, const SymmetricForm& f) {
  if (f.rank() != rd.rank()) fail(Errc::RankMismatch, "form rank differs from datum rank");
  for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
    IntMatrix s = rd.reflection(i);
    if (!(s.transpose() * f.matrix() * s == f.matrix())) return false;
  }
  return true;
}

LeviForm restrict_form_to_levi(const RootDatum& rd, const SymmetricForm& f,
                               const std::vector<std::size_t>& subset) {
  RootDatum m = rd.levi(subset);
  DynkinComponents dc = validate(m);
  return {std::move(m), std::move(dc), f};
}

}  // namespace mdual
