#include "mdual/metaplectic.hpp"

#include <algorithm>

#include "mdual/error.hpp"

namespace mdual {

MetaplecticDatum MetaplecticDatum::assemble(RootDatum rd, IntMatrix beta_ab, std::vector<Int> c,
                                            Int n) {
  if (n < 1) fail(Errc::InvalidArgument, "level N must be at least 1, got " + n.str());
  MetaplecticDatum md;
  md.dc_ = validate(rd);
  md.kappa_bar_ = assemble_kappa_bar(rd, md.dc_, beta_ab, c);
  md.rd_ = std::move(rd);
  md.beta_ab_ = std::move(beta_ab);
  md.c_ = std::move(c);
  md.n_ = std::move(n);
  md.derive();
  return md;
}

MetaplecticDatum MetaplecticDatum::from_kappa_bar(RootDatum rd, SymmetricForm kappa_bar, Int n) {
  if (n < 1) fail(Errc::InvalidArgument, "level N must be at least 1, got " + n.str());
  if (kappa_bar.rank() != rd.rank())
    fail(Errc::RankMismatch, "form of rank " + std::to_string(kappa_bar.rank()) +
                                 " on a datum of rank " + std::to_string(rd.rank()));
  MetaplecticDatum md;
  md.dc_ = validate(rd);
  if (!kappa_bar.is_even()) fail(Errc::OddDiagonal, "kappa_bar is not even");
  if (!is_w_invariant(rd, kappa_bar)) fail(Errc::FormNotInvariant, "kappa_bar is not W-invariant");
  md.rd_ = std::move(rd);
  md.kappa_bar_ = std::move(kappa_bar);
  md.n_ = std::move(n);
  md.derive();
  return md;
}

void MetaplecticDatum::derive() {
  sharp_ = kernel_mod(kappa_bar_.matrix(), n_);
  delta_.clear();
  for (const auto& a : rd_.simple_coroots())
    delta_.push_back(denominator(Rational(kappa_bar_(a, a), 2 * n_)));
}

Sublattice lambda_sharp(const MetaplecticDatum& md) { return md.lambda_sharp(); }

Int delta(const MetaplecticDatum& md, std::size_t i) { return md.delta(i); }

Int delta_root(const MetaplecticDatum& md, const IntVector& coroot) {
  return denominator(Rational(md.kappa_bar()(coroot, coroot), 2 * md.level()));
}

Int delta_bruteforce(const MetaplecticDatum& md, std::size_t i) {
  const IntVector& a = md.root_datum().simple_coroot(i);
  const Int k = md.kappa_bar()(a, a);
  const Int two_n = 2 * md.level();
  for (Int b = 1;; ++b)
    if ((b * k) % two_n == 0) return b;
}

// ---------------------------------------------------------------------------

DualRootDatum::DualRootDatum(Sublattice sharp, std::vector<IntVector> roots,
                             std::vector<IntVector> coroots, std::vector<Int> delta, std::string name)
    : sharp_(std::move(sharp)),
      roots_(std::move(roots)),
      coroots_(std::move(coroots)),
      delta_(std::move(delta)),
      name_(std::move(name)) {}

IntMatrix DualRootDatum::cartan_matrix() const { return as_root_datum().cartan_matrix(); }

RootDatum DualRootDatum::as_root_datum() const {
  return RootDatum(rank(), roots_, coroots_, name_);
}

RootDatum DualRootDatum::as_group_datum() const {
  return RootDatum(rank(), coroots_, roots_, name_);
}

IntVector DualRootDatum::to_ambient(const IntVector& y) const {
  if (y.size() != rank()) fail(Errc::RankMismatch, "coordinate vector has wrong length");
  IntVector x = zero_vector(sharp_.ambient_rank());
  for (std::size_t k = 0; k < y.size(); ++k) x = x + y[k] * sharp_.basis()[k];
  return x;
}

IntVector DualRootDatum::from_ambient(const IntVector& x) const {
  auto y = sharp_.coordinates(x);
  if (!y) fail(Errc::NotInSharp, to_string(x) + " is not in Lambda_sharp");
  return *y;
}

DualRootDatum dual_root_datum(const MetaplecticDatum& md) {
  const RootDatum& rd = md.root_datum();
  const Sublattice& sharp = md.lambda_sharp();
  std::vector<IntVector> roots, coroots;
  for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
    const Int& d = md.delta(i);
    auto y = sharp.coordinates(d * rd.simple_coroot(i));
    if (!y)
      fail(Errc::RootNotInSharp, "delta_" + std::to_string(i) + " a_" + std::to_string(i) +
                                     " is not in Lambda_sharp");
    roots.push_back(std::move(*y));
    IntVector f;
    for (const auto& s : sharp.basis()) {
      Int v = dot(s, rd.simple_root(i));
      if (v % d != 0)
        fail(Errc::CorootNotIntegral, "a^_" + std::to_string(i) + " / " + d.str() +
                                          " is not integral on Lambda_sharp");
      f.push_back(v / d);
    }
    coroots.push_back(std::move(f));
  }
  return DualRootDatum(sharp, std::move(roots), std::move(coroots), md.delta(),
                       rd.name().empty() ? "dual" : "dual(" + rd.name() + ")");
}

std::vector<IntVector> dual_positive_roots(const MetaplecticDatum& md) {
  std::vector<IntVector> out;
  for (const auto& a : positive_coroots(md.root_datum())) out.push_back(delta_root(md, a) * a);
  return out;
}

std::set<IntMatrix> restricted_weyl_group(const MetaplecticDatum& md, const DualRootDatum& d,
                                          std::size_t max_order) {
  const IntMatrix st = IntMatrix::from_columns(d.weight_lattice().basis(), md.root_datum().rank());
  IntegerSolver solver(st);
  std::set<IntMatrix> out;
  for (const auto& w : weyl_group(md.root_datum(), max_order)) {
    IntMatrix image = w * st;
    std::vector<IntVector> cols;
    for (std::size_t k = 0; k < image.cols(); ++k) {
      auto c = solver.solve(image.col(k));
      if (!c) fail(Errc::NotInSharp, "a Weyl element does not preserve Lambda_sharp");
      cols.push_back(std::move(*c));
    }
    out.insert(IntMatrix::from_columns(cols, d.rank()));
  }
  return out;
}

bool weyl_equality_check(const MetaplecticDatum& md, std::size_t max_order) {
  DualRootDatum d = dual_root_datum(md);
  return restricted_weyl_group(md, d, max_order) == weyl_group(d.as_root_datum(), max_order);
}

DualType identify_cartan_type(const DualRootDatum& d) {
  RootDatum g = d.as_group_datum();
  DualType t;
  t.cartan_type = validate(g).type_string();
  CowtLatticeQuotients q = abelianization(g);
  t.pi1_torsion = q.pi1_torsion;
  t.pi1_free_rank = q.pi1_free_rank;
  t.central_rank = g.rank() - g.semisimple_rank();
  return t;
}

MetaplecticDatum levi_metaplectic(const MetaplecticDatum& md, const std::vector<std::size_t>& subset) {
  return MetaplecticDatum::from_kappa_bar(md.root_datum().levi(subset), md.kappa_bar(), md.level());
}

LocalSystemData local_system_criterion(const MetaplecticDatum& md, const IntVector& lambda) {
  const RootDatum& rd = md.root_datum();
  if (!is_dominant(rd, lambda)) fail(Errc::NotDominant, to_string(lambda) + " is not dominant");
  LocalSystemData out;
  out.kappa_lambda = md.kappa_bar().apply(lambda);
  const Int norm = dot(lambda, out.kappa_lambda);
  out.half_norm = norm / 2;
  out.in_sharp = md.lambda_sharp().contains(lambda);
  if (out.in_sharp) {
    const Int& n = md.level();
    bool ok = norm % n == 0;
    for (const auto& v : out.kappa_lambda) ok = ok && v % n == 0;
    for (std::size_t i : stabilizer_weyl(rd, lambda)) ok = ok && dot(out.kappa_lambda, rd.simple_coroot(i)) == 0;
    if (!ok) fail(Errc::FormNotInvariant, "twisting data of " + to_string(lambda) + " is inconsistent");
  }
  return out;
}

namespace {

IntVector reduce_mod_lines(const IntVector& x, const std::vector<IntVector>& rev_hnf) {
  IntVector v(x.rbegin(), x.rend());
  for (const auto& row : rev_hnf) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    v = v - floor_div(v[p], row[p]) * row;
  }
  return IntVector(v.rbegin(), v.rend());
}

}  // namespace

std::vector<IntVector> sharp_dominant_generators(const MetaplecticDatum& md, const Int& height_bound) {
  if (height_bound < 1) fail(Errc::InvalidArgument, "height bound must be at least 1");
  const RootDatum& rd = md.root_datum();
  const std::vector<IntVector>& s = md.lambda_sharp().basis();
  const std::size_t r = rd.rank();
  const std::size_t l = rd.semisimple_rank();
  auto ambient = [&](const IntVector& y) {
    IntVector x = zero_vector(r);
    for (std::size_t k = 0; k < r; ++k) x = x + y[k] * s[k];
    return x;
  };

  // Pairings of the Lambda_sharp basis with the simple roots.
  IntMatrix rt(l, r);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t k = 0; k < r; ++k) rt(i, k) = dot(s[k], rd.simple_root(i));

  std::vector<IntVector> lines;
  for (const auto& y : integer_kernel(rt)) lines.push_back(ambient(y));
  const Sublattice line_lattice(r, lines);
  std::vector<IntVector> rev;
  for (const auto& b : line_lattice.basis()) rev.emplace_back(b.rbegin(), b.rend());
  const std::vector<IntVector> rev_hnf =
      rev.empty() ? std::vector<IntVector>{} : hermite_normal_form(IntMatrix::from_rows(rev, r)).row_vectors();

  std::vector<IntVector> pointed;
  if (l > 0) {
    const Sublattice image(l, rt.col_vectors());
    const IntMatrix bt = image.basis_matrix().transpose();
    IntegerSolver image_solver(bt);
    const Int index = image.index();
    std::vector<Int> m(l);
    for (std::size_t i = 0; i < l; ++i) {
      IntVector e = zero_vector(l);
      e[i] = index;
      IntVector z = *image_solver.solve(e);
      Int g = index;
      for (const auto& zk : z) g = gcd(g, zk);
      m[i] = index / g;
    }
    Int max_m = *std::max_element(m.begin(), m.end());
    Int box = 0;
    for (const auto& mi : m) box += mi - 1;
    if (std::max(max_m, box) > height_bound)
      fail(Errc::BoundTooSmall, "dominant cone needs height " + std::max(max_m, box).str() +
                                    " > bound " + height_bound.str());

    std::vector<IntVector> candidates;
    for (std::size_t i = 0; i < l; ++i) {
      IntVector e = zero_vector(l);
      e[i] = m[i];
      candidates.push_back(e);
    }
    IntVector v = zero_vector(l);
    for (;;) {
      std::size_t k = 0;
      while (k < l && v[k] == m[k] - 1) v[k++] = 0;
      if (k == l) break;
      ++v[k];
      if (image.contains(v)) candidates.push_back(v);
    }
    std::vector<IntVector> irreducible;
    for (const auto& x : candidates) {
      bool reducible = false;
      for (const auto& y : candidates) {
        if (y == x) continue;
        IntVector d = x - y;
        if (std::all_of(d.begin(), d.end(), [](const Int& t) { return t >= 0; })) {
          reducible = true;
          break;
        }
      }
      if (!reducible) irreducible.push_back(x);
    }
    IntegerSolver lift(rt);
    for (const auto& g : irreducible) pointed.push_back(reduce_mod_lines(ambient(*lift.solve(g)), rev_hnf));
    std::sort(pointed.begin(), pointed.end());
  }

  std::vector<IntVector> out = pointed;
  for (const auto& b : line_lattice.basis()) {
    out.push_back(b);
    out.push_back(-b);
  }
  return out;
}

int commutator_on_sharp(const MetaplecticDatum& md, const IntVector& l1, const IntVector& l2) {
  for (const auto* l : {&l1, &l2})
    if (!md.lambda_sharp().contains(*l)) fail(Errc::NotInSharp, to_string(*l) + " is not in Lambda_sharp");
  const Int k = md.kappa_bar()(l1, l2);
  if (k % md.level() != 0) fail(Errc::NotInSharp, "kappa_bar(l1, l2) not divisible by N");
  const int e = static_cast<int>(mod_floor(k, Int(2)));
  if (md.level() % 2 == 0 && e != 0) fail(Errc::NotInSharp, "commutator on Lambda_sharp is not trivial");
  return e;
}

int CommutatorPairing::sign_exponent(const IntVector& l1, const IntVector& l2) const {
  return commutator_on_sharp(*md_, l1, l2);
}

Int CommutatorPairing::refined_exponent(const IntVector& l1, const IntVector& l2) const {
  const Int& n = md_->level();
  return mod_floor(md_->kappa_bar()(l1, l2) * n, 2 * n);
}

IntMatrix sharp_splitting(const MetaplecticDatum& md) {
  const auto& s = md.lambda_sharp().basis();
  const std::size_t r = s.size();
  IntMatrix b(r, r);
  for (std::size_t k = 0; k < r; ++k) {
    b(k, k) = md.kappa_bar()(s[k], s[k]) / 2;
    for (std::size_t l = k + 1; l < r; ++l) b(k, l) = md.kappa_bar()(s[k], s[l]);
  }
  return b;
}

}  // namespace mdual
