#include "mdual/tame_symbol.hpp"

#include <sstream>

namespace mdual {

namespace {

void same_field(const Fp& a, const Fp& b) {
  if (a.modulus() != b.modulus()) fail(Errc::InvalidArgument, "mixed prime fields");
}

bool is_prime(const Int& p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Fp::Fp(Int value, Int p) : v_(mod_floor(value, p)), p_(std::move(p)) {
  if (p_ < 2) fail(Errc::InvalidArgument, "prime field modulus must be at least 2");
}

Fp operator+(const Fp& a, const Fp& b) {
  same_field(a, b);
  return Fp(a.v_ + b.v_, a.p_);
}

Fp operator-(const Fp& a, const Fp& b) {
  same_field(a, b);
  return Fp(a.v_ - b.v_, a.p_);
}

Fp operator-(const Fp& a) { return Fp(-a.v_, a.p_); }

Fp operator*(const Fp& a, const Fp& b) {
  same_field(a, b);
  return Fp(a.v_ * b.v_, a.p_);
}

Fp operator/(const Fp& a, const Fp& b) {
  same_field(a, b);
  if (b.v_ == 0) fail(Errc::InvalidArgument, "division by zero in F_p");
  // Fermat: b^{p-2} = b^{-1}.
  Int inv = powm(b.v_, a.p_ - 2, a.p_);
  return Fp(a.v_ * inv, a.p_);
}

void check_characteristic(const Int& p, const Int& n) {
  if (!is_prime(p)) fail(Errc::InvalidArgument, p.str() + " is not prime");
  if ((2 * n) % p == 0)
    fail(Errc::InvalidArgument, "characteristic " + p.str() + " divides 2N = " + Int(2 * n).str());
}

std::string element_string(const Rational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string element_string(const Fp& x) { return x.value().str() + " mod " + x.modulus().str(); }

CocycleB::CocycleB(IntMatrix b, IntMatrix beta) : b_(std::move(b)), beta_(std::move(beta)) {
  if (!b_.is_square() || b_.rows() != beta_.rows() || !beta_.is_square())
    fail(Errc::RankMismatch, "cocycle and beta have different shapes");
  if (!(b_ + b_.transpose() == beta_)) fail(Errc::InvalidArgument, "B + B^T differs from beta");
}

CocycleB CocycleB::canonical(const IntMatrix& beta) {
  if (!beta.is_symmetric()) fail(Errc::BetaNotSymmetric, "beta is not symmetric");
  IntMatrix b(beta.rows(), beta.cols());
  for (std::size_t i = 0; i < beta.rows(); ++i) {
    if (beta(i, i) % 2 != 0) fail(Errc::OddDiagonal, "beta has an odd diagonal entry");
    b(i, i) = beta(i, i) / 2;
    for (std::size_t j = i + 1; j < beta.cols(); ++j) b(i, j) = beta(i, j);
  }
  return CocycleB(b, beta);
}

}  // namespace mdual
