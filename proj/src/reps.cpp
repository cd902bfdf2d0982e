#include "mdual/reps.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "mdual/error.hpp"

namespace mdual {

namespace {

struct Setup {
  std::vector<IntVector> positive;  // positive roots in the lattice
  IntVector two_rho;
  IntMatrix gram;                   // sum of f f^T over positive coroot functionals f

  Int q(const IntVector& x, const IntVector& y) const { return dot(x, gram * y); }
};

Setup make_setup(const RootDatum& d) {
  Setup s;
  const std::size_t r = d.rank();
  s.two_rho = zero_vector(r);
  s.gram = IntMatrix(r, r);
  for (const auto& p : positive_root_pairs(d)) {
    s.positive.push_back(p.coroot);
    s.two_rho = s.two_rho + p.coroot;
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) s.gram(a, b) += p.root[a] * p.root[b];
  }
  return s;
}

void require_dominant(const RootDatum& d, const IntVector& lambda) {
  if (lambda.size() != d.rank()) fail(Errc::RankMismatch, "weight has wrong length");
  if (!is_dominant(d, lambda)) fail(Errc::NotDominant, to_string(lambda) + " is not dominant");
}

Int height_below(const RootDatum& d, const IntVector& lambda, const IntVector& mu) {
  auto c = d.coroot_coefficients(lambda - mu);
  return std::accumulate(c->begin(), c->end(), Int(0));
}

}  // namespace

IntVector dominant_representative(const RootDatum& d, const IntVector& x, int* sign) {
  IntVector v = x;
  int sg = 1;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < d.semisimple_rank(); ++i) {
      if (dot(v, d.simple_root(i)) < 0) {
        v = d.reflect(i, v);
        sg = -sg;
        moved = true;
      }
    }
  }
  if (sign) *sign = sg;
  return v;
}

std::vector<IntVector> weyl_orbit(const RootDatum& d, const IntVector& x) {
  std::set<IntVector> seen{x};
  std::deque<IntVector> queue{x};
  while (!queue.empty()) {
    IntVector v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < d.semisimple_rank(); ++i) {
      IntVector w = d.reflect(i, v);
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }
  return {seen.begin(), seen.end()};
}

Character weight_multiplicities(const RootDatum& d, const IntVector& lambda) {
  require_dominant(d, lambda);
  const Setup s = make_setup(d);

  // Dominant weights below lambda are linked by single positive-root steps.
  std::set<IntVector> dominant{lambda};
  std::deque<IntVector> queue{lambda};
  while (!queue.empty()) {
    IntVector mu = queue.front();
    queue.pop_front();
    for (const auto& a : s.positive) {
      IntVector nu = mu - a;
      if (is_dominant(d, nu) && dominant.insert(nu).second) queue.push_back(std::move(nu));
    }
  }
  std::vector<std::pair<Int, IntVector>> order;
  for (const auto& mu : dominant) order.emplace_back(height_below(d, lambda, mu), mu);
  std::sort(order.begin(), order.end());

  std::map<IntVector, Int> dom_mult;
  const IntVector lr = lambda + lambda + s.two_rho;
  for (const auto& [h, mu] : order) {
    if (h == 0) {
      dom_mult[mu] = 1;
      continue;
    }
    Int num = 0;
    for (const auto& a : s.positive) {
      IntVector nu = mu + a;
      for (;;) {
        auto it = dom_mult.find(dominant_representative(d, nu));
        if (it == dom_mult.end()) break;
        num += it->second * s.q(nu, a);
        nu = nu + a;
      }
    }
    // (lambda+rho)^2 - (mu+rho)^2 = (lambda - mu, lambda + mu + 2 rho)
    const Int den = s.q(lambda - mu, lr - lambda + mu);
    if (den == 0 || (2 * num) % den != 0)
      fail(Errc::InvalidArgument, "Freudenthal recursion produced a non-integral multiplicity");
    Int m = 2 * num / den;
    if (m != 0) dom_mult[mu] = m;
  }

  Character out;
  for (const auto& [mu, m] : dom_mult)
    for (const auto& nu : weyl_orbit(d, mu)) out[nu] = m;
  return out;
}

Int dimension(const RootDatum& d, const IntVector& lambda) {
  require_dominant(d, lambda);
  const Setup s = make_setup(d);
  const IntVector lr = lambda + lambda + s.two_rho;
  Rational dim = 1;
  for (const auto& p : positive_root_pairs(d)) dim *= Rational(dot(lr, p.root), dot(s.two_rho, p.root));
  if (denominator(dim) != 1) fail(Errc::InvalidArgument, "Weyl dimension is not integral");
  return boost::multiprecision::numerator(dim);
}

std::map<IntVector, Int> tensor_decompose(const RootDatum& d, const IntVector& lambda,
                                          const IntVector& mu) {
  require_dominant(d, lambda);
  require_dominant(d, mu);
  const bool swap = dimension(d, lambda) < dimension(d, mu);
  const IntVector& big = swap ? mu : lambda;
  const IntVector& small = swap ? lambda : mu;
  const Setup s = make_setup(d);

  std::map<IntVector, Int> out;
  for (const auto& [nu, m] : weight_multiplicities(d, small)) {
    int sign = 1;
    IntVector x = dominant_representative(d, big + big + nu + nu + s.two_rho, &sign);
    bool wall = false;
    for (const auto& f : d.simple_roots()) wall = wall || dot(x, f) == 0;
    if (wall) continue;
    IntVector hw = x - s.two_rho;
    for (auto& c : hw) {
      if (c % 2 != 0) fail(Errc::InvalidArgument, "dot action left the weight lattice");
      c /= 2;
    }
    out[hw] += sign * m;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second < 0) fail(Errc::InvalidArgument, "negative tensor multiplicity");
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

bool verify_weight_bound(const RootDatum& d, const IntVector& lambda, std::size_t max_order) {
  const Character ch = weight_multiplicities(d, lambda);
  const auto w = weyl_group(d, max_order);
  for (const auto& [nu, m] : ch)
    for (const auto& g : w)
      if (!dominance_leq(d, g * nu, lambda)) return false;
  return true;
}

Character weight_multiplicities(const DualRootDatum& d, const IntVector& lambda) {
  return weight_multiplicities(d.as_root_datum(), lambda);
}
Int dimension(const DualRootDatum& d, const IntVector& lambda) {
  return dimension(d.as_root_datum(), lambda);
}
std::map<IntVector, Int> tensor_decompose(const DualRootDatum& d, const IntVector& lambda,
                                          const IntVector& mu) {
  return tensor_decompose(d.as_root_datum(), lambda, mu);
}
bool verify_weight_bound(const DualRootDatum& d, const IntVector& lambda, std::size_t max_order) {
  return verify_weight_bound(d.as_root_datum(), lambda, max_order);
}

RankOneWeights rank_one_weights(const MetaplecticDatum& md, std::size_t i, const IntVector& lambda) {
  const RootDatum& rd = md.root_datum();
  if (i >= rd.semisimple_rank()) fail(Errc::InvalidSubset, "simple index out of range");
  const Int p = dot(lambda, rd.simple_root(i));
  if (p < 0) fail(Errc::NotDominant, to_string(lambda) + " pairs negatively with a^_" + std::to_string(i));
  if (!md.lambda_sharp().contains(lambda)) fail(Errc::NotInSharp, to_string(lambda) + " is not in Lambda_sharp");
  RankOneWeights out;
  for (Int k = 0; k <= p; ++k) {
    IntVector nu = lambda - k * rd.simple_coroot(i);
    if (md.lambda_sharp().contains(nu)) out.in_sharp.push_back(nu);
    out.candidates.push_back(std::move(nu));
  }
  return out;
}

Int monodromy_exponent(const MetaplecticDatum& md, std::size_t i, const Int& a, const Int& b) {
  const RootDatum& rd = md.root_datum();
  if (i >= rd.semisimple_rank()) fail(Errc::InvalidSubset, "simple index out of range");
  const IntVector& al = rd.simple_coroot(i);
  const Int k = md.kappa_bar()(al, al);
  const Int& n = md.level();
  if ((a * k) % (2 * n) != 0)
    fail(Errc::PreconditionViolated, "a kappa_bar(a_i, a_i) = " + Int(a * k).str() +
                                         " is not in 2N Z");
  // kappa_bar is even, so k / 2 is exact.
  return mod_floor((a + b) * (k / 2), n);
}

}  // namespace mdual
