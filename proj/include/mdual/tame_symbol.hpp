#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdual/error.hpp"
#include "mdual/integer.hpp"
#include "mdual/metaplectic.hpp"

namespace mdual {

/// Prime field element. Arithmetic between different moduli is an error.
class Fp {
 public:
  Fp() = default;
  Fp(Int value, Int p);

  const Int& value() const { return v_; }
  const Int& modulus() const { return p_; }

  friend Fp operator+(const Fp& a, const Fp& b);
  friend Fp operator-(const Fp& a, const Fp& b);
  friend Fp operator-(const Fp& a);
  friend Fp operator*(const Fp& a, const Fp& b);
  friend Fp operator/(const Fp& a, const Fp& b);
  friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_ && a.v_ == b.v_; }

 private:
  Int v_ = 0;
  Int p_ = 0;
};

/// Refuses p that is not prime or divides 2N.
void check_characteristic(const Int& p, const Int& n);

inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Fp one_like(const Fp& x) { return Fp(1, x.modulus()); }
inline Fp zero_like(const Fp& x) { return Fp(0, x.modulus()); }
inline bool is_zero_element(const Rational& x) { return x == 0; }
inline bool is_zero_element(const Fp& x) { return x.value() == 0; }
std::string element_string(const Rational& x);
std::string element_string(const Fp& x);

template <class K>
K field_pow(const K& x, const Int& e) {
  if (e < 0) return field_pow(one_like(x) / x, -e);
  K result = one_like(x);
  K base = x;
  Int n = e;
  while (n > 0) {
    if ((n & 1) != 0) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

/// f = t^v (u_0 + u_1 t + ...), u_0 != 0. With `precision` set only u_0 ..
/// u_{precision-1} are known; without it the listed coefficients are exact
/// and everything beyond is zero. precision == 0 means the valuation itself
/// is only a lower bound and no coefficient is known.
template <class K>
class Laurent {
 public:
  Laurent() = default;

  static Laurent monomial(const K& c, long long v) {
    if (is_zero_element(c)) fail(Errc::InvalidArgument, "zero is not a Laurent unit");
    Laurent f;
    f.v_ = v;
    f.u_ = {c};
    return f;
  }
  static Laurent constant(const K& c) { return monomial(c, 0); }
  static Laurent t(const K& like) { return monomial(one_like(like), 1); }
  /// t^v * sum coeffs[k] t^k; leading zeros are absorbed into the valuation.
  static Laurent series(long long v, std::vector<K> coeffs,
                        std::optional<std::size_t> precision = std::nullopt) {
    Laurent f;
    f.v_ = v;
    f.u_ = std::move(coeffs);
    f.prec_ = precision;
    if (f.prec_ && f.u_.size() > *f.prec_) f.u_.resize(*f.prec_);
    f.normalize();
    return f;
  }

  long long valuation() const { return v_; }
  const std::vector<K>& unit() const { return u_; }
  const std::optional<std::size_t>& precision() const { return prec_; }
  bool exact() const { return !prec_.has_value(); }
  /// Absolute order t^n to which the element is known, if not exact.
  std::optional<long long> absolute_precision() const {
    if (!prec_) return std::nullopt;
    return v_ + static_cast<long long>(*prec_);
  }
  const K& leading() const {
    if (prec_ && *prec_ == 0) fail(Errc::InsufficientPrecision, "leading coefficient is unknown");
    return u_.front();
  }

  friend Laurent operator*(const Laurent& f, const Laurent& g) {
    Laurent h;
    h.v_ = f.v_ + g.v_;
    std::optional<std::size_t> p;
    if (f.prec_) p = *f.prec_;
    if (g.prec_) p = p ? std::min(*p, *g.prec_) : *g.prec_;
    if (p && *p == 0) {
      h.prec_ = 0;
      return h;
    }
    std::size_t len = f.u_.size() + g.u_.size() - 1;
    if (p) len = std::min(len, *p);
    h.u_.assign(len, zero_like(f.u_.front()));
    for (std::size_t a = 0; a < f.u_.size() && a < len; ++a)
      for (std::size_t b = 0; b < g.u_.size() && a + b < len; ++b)
        h.u_[a + b] = h.u_[a + b] + f.u_[a] * g.u_[b];
    h.prec_ = p;
    return h;
  }

  friend Laurent operator-(const Laurent& f) {
    Laurent h = f;
    for (auto& c : h.u_) c = -c;
    return h;
  }

  friend Laurent operator+(const Laurent& f, const Laurent& g) {
    const long long lo = std::min(f.v_, g.v_);
    std::optional<long long> hi;
    if (auto a = f.absolute_precision()) hi = *a;
    if (auto b = g.absolute_precision()) hi = hi ? std::min(*hi, *b) : *b;
    long long top = std::max(f.v_ + static_cast<long long>(f.u_.size()),
                             g.v_ + static_cast<long long>(g.u_.size()));
    Laurent h;
    if (hi && *hi <= lo) {
      h.v_ = *hi;
      h.prec_ = 0;
      return h;
    }
    if (hi) top = std::min(top, *hi);
    const K zero = zero_like(f.u_.empty() ? g.u_.front() : f.u_.front());
    h.v_ = lo;
    for (long long n = lo; n < top; ++n) {
      K c = zero;
      if (n >= f.v_ && n - f.v_ < static_cast<long long>(f.u_.size())) c = c + f.u_[n - f.v_];
      if (n >= g.v_ && n - g.v_ < static_cast<long long>(g.u_.size())) c = c + g.u_[n - g.v_];
      h.u_.push_back(c);
    }
    if (hi) h.prec_ = static_cast<std::size_t>(*hi - lo);
    h.normalize();
    return h;
  }
  friend Laurent operator-(const Laurent& f, const Laurent& g) { return f + (-g); }

  /// Multiplicative inverse, computed to at most `budget` unit coefficients.
  Laurent inverse(std::size_t budget) const {
    const K& c0 = leading();
    Laurent h;
    h.v_ = -v_;
    if (exact() && u_.size() == 1) {
      h.u_ = {one_like(c0) / c0};
      return h;
    }
    std::size_t len = std::max<std::size_t>(budget, 1);
    if (prec_) len = std::min(len, *prec_);
    const K inv0 = one_like(c0) / c0;
    h.u_.assign(len, zero_like(c0));
    h.u_[0] = inv0;
    for (std::size_t n = 1; n < len; ++n) {
      K s = zero_like(c0);
      for (std::size_t k = 1; k <= n && k < u_.size(); ++k) s = s + u_[k] * h.u_[n - k];
      h.u_[n] = -(s * inv0);
    }
    h.prec_ = len;
    return h;
  }

  /// f^e; negative exponents go through inverse(budget). The result keeps at
  /// most `budget` unit coefficients unless it is an exact monomial.
  Laurent pow(const Int& e, std::size_t budget) const {
    if (e < 0) return inverse(budget).pow(-e, budget);
    Laurent base = *this;
    if (!base.exact() || base.u_.size() > 1) base = base.truncated(budget);
    Laurent result = monomial(one_like(leading()), 0);
    Int n = e;
    while (n > 0) {
      if ((n & 1) != 0) result = (result * base).truncated(budget);
      base = (base * base).truncated(budget);
      n >>= 1;
    }
    return result;
  }

  /// Keeps at most `budget` unit coefficients.
  Laurent truncated(std::size_t budget) const {
    if (u_.size() <= budget) return *this;
    Laurent h = *this;
    h.u_.resize(budget);
    h.prec_ = prec_ ? std::min(*prec_, budget) : budget;
    return h;
  }

  /// Coefficient of t^0. Throws InsufficientPrecision when it is not known.
  K constant_term() const {
    if (prec_ && v_ + static_cast<long long>(*prec_) <= 0)
      fail(Errc::InsufficientPrecision, "constant term lies beyond the known precision");
    if (u_.empty()) fail(Errc::InsufficientPrecision, "no coefficient is known");
    const K zero = zero_like(u_.front());
    if (v_ > 0) return zero;
    const long long k = -v_;
    if (k < static_cast<long long>(u_.size())) return u_[k];
    return zero;
  }

  friend bool operator==(const Laurent& f, const Laurent& g) {
    return f.v_ == g.v_ && f.u_ == g.u_ && f.prec_ == g.prec_;
  }

 private:
  void normalize() {
    std::size_t lead = 0;
    while (lead < u_.size() && is_zero_element(u_[lead])) ++lead;
    if (lead == u_.size()) {
      if (!prec_) fail(Errc::InvalidArgument, "zero is not a Laurent unit");
      v_ += static_cast<long long>(*prec_);
      u_.clear();
      prec_ = 0;
      return;
    }
    u_.erase(u_.begin(), u_.begin() + static_cast<std::ptrdiff_t>(lead));
    v_ += static_cast<long long>(lead);
    if (prec_) *prec_ -= lead;
    if (!prec_)
      while (u_.size() > 1 && is_zero_element(u_.back())) u_.pop_back();
  }

  long long v_ = 0;
  std::vector<K> u_;
  std::optional<std::size_t> prec_;
};

/// (f, g) = (-1)^{v(f) v(g)} (g^{v(f)} f^{-v(g)})(0).
template <class K>
K tame(const Laurent<K>& f, const Laurent<K>& g) {
  const Int vf = f.valuation(), vg = g.valuation();
  // The product is a unit, so one coefficient decides its constant term.
  const Laurent<K> prod = g.pow(vf, 1) * f.pow(-vg, 1);
  K c = prod.constant_term();
  if ((vf * vg) % 2 != 0) c = -c;
  return c;
}

/// Formal product of pure tensors lambda (x) f, lambda in Lambda_ab.
template <class K>
struct TorusElement {
  std::vector<std::pair<IntVector, Laurent<K>>> factors;

  static TorusElement identity() { return {}; }
  static TorusElement pure(IntVector lambda, Laurent<K> f) {
    TorusElement u;
    u.factors.emplace_back(std::move(lambda), std::move(f));
    return u;
  }
  friend TorusElement operator*(const TorusElement& a, const TorusElement& b) {
    TorusElement u = a;
    u.factors.insert(u.factors.end(), b.factors.begin(), b.factors.end());
    return u;
  }
};

/// Bilinear B on Lambda_ab with B + B^T = beta.
class CocycleB {
 public:
  /// Throws InvalidArgument unless B + B^T == beta.
  CocycleB(IntMatrix b, IntMatrix beta);
  /// Upper triangular choice with diagonal beta_ii / 2. Throws OddDiagonal.
  static CocycleB canonical(const IntMatrix& beta);

  const IntMatrix& matrix() const { return b_; }
  const IntMatrix& beta() const { return beta_; }
  Int operator()(const IntVector& x, const IntVector& y) const { return dot(x, b_ * y); }

 private:
  IntMatrix b_;
  IntMatrix beta_;
};

/// prod over factor pairs of (f_k, g_l)^{-B(lambda_k, mu_l)}; `like` fixes
/// the coefficient field for the empty product.
template <class K>
K cocycle(const CocycleB& b, const TorusElement<K>& u1, const TorusElement<K>& u2, const K& like) {
  K out = one_like(like);
  for (const auto& [l1, f1] : u1.factors)
    for (const auto& [l2, f2] : u2.factors) {
      const Int e = -b(l1, l2);
      if (e != 0) out = out * field_pow(tame(f1, f2), e);
    }
  return out;
}

template <class K>
K commutator(const CocycleB& b, const TorusElement<K>& u1, const TorusElement<K>& u2, const K& like) {
  return cocycle(b, u1, u2, like) / cocycle(b, u2, u1, like);
}

/// f(t^lambda, c^lambda), checked against c^{-beta(lambda, lambda) / 2}.
/// Throws OddDiagonal.
template <class K>
K loop_rotation_character(const CocycleB& b, const IntVector& lambda, const K& c) {
  const Int n = dot(lambda, b.beta() * lambda);
  if (n % 2 != 0) fail(Errc::OddDiagonal, "beta(lambda, lambda) is odd");
  const K value = cocycle(b, TorusElement<K>::pure(lambda, Laurent<K>::t(c)),
                          TorusElement<K>::pure(lambda, Laurent<K>::constant(c)), c);
  if (!(value == field_pow(c, -(n / 2))))
    fail(Errc::FormNotInvariant, "loop rotation character disagrees with c^{-beta/2}");
  return value;
}

/// (z, u) in the central extension with (z1, u1)(z2, u2) = (z1 z2 f(u1, u2), u1 u2).
template <class K>
struct ExtElement {
  K scalar;
  TorusElement<K> point;
};

template <class K>
ExtElement<K> multiply(const CocycleB& b, const ExtElement<K>& x, const ExtElement<K>& y) {
  return {x.scalar * y.scalar * cocycle(b, x.point, y.point, x.scalar), x.point * y.point};
}

/// Commutator of lambda1 (x) f1 and lambda2 (x) f2 (lambda_i in Lambda) in
/// the extension attached to component j: (f1, f2)^{-kappa_j}. Without j,
/// the summed extension, whose exponent -beta - sum c_j kappa_j is kappa_bar.
template <class K>
K kappa_commutator(const MetaplecticDatum& md, std::optional<std::size_t> j, const IntVector& l1,
                   const Laurent<K>& f1, const IntVector& l2, const Laurent<K>& f2) {
  Int e;
  if (j) {
    if (*j >= md.components().components.size())
      fail(Errc::InvalidArgument, "component index out of range");
    e = -killing_form(md.root_datum(), md.components().components[*j])(l1, l2);
  } else {
    e = md.kappa_bar()(l1, l2);
  }
  return field_pow(tame(f1, f2), e);
}

}  // namespace mdual
