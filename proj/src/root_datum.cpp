#include "mdual/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "mdual/error.hpp"

namespace mdual {

// ---------------------------------------------------------------------------
// RootDatum

RootDatum::RootDatum(std::size_t rank, std::vector<IntVector> simple_coroots,
                     std::vector<IntVector> simple_roots, std::string name)
    : rank_(rank),
      simple_coroots_(std::move(simple_coroots)),
      simple_roots_(std::move(simple_roots)),
      name_(std::move(name)) {
  if (simple_coroots_.size() != simple_roots_.size())
    fail(Errc::RankMismatch, "different numbers of simple coroots and simple roots");
  for (std::size_t i = 0; i < simple_coroots_.size(); ++i) {
    if (simple_coroots_[i].size() != rank_ || simple_roots_[i].size() != rank_)
      fail(Errc::RankMismatch, "simple (co)root " + std::to_string(i) + " is not of length " +
                                   std::to_string(rank_));
  }
  if (!simple_coroots_.empty()) coroot_solver_.emplace(coroot_matrix());
}

IntMatrix RootDatum::cartan_matrix() const {
  const std::size_t l = semisimple_rank();
  IntMatrix a(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) a(i, j) = dot(simple_coroots_[j], simple_roots_[i]);
  return a;
}

IntMatrix RootDatum::coroot_matrix() const {
  return IntMatrix::from_columns(simple_coroots_, rank_);
}

IntMatrix RootDatum::root_matrix() const { return IntMatrix::from_columns(simple_roots_, rank_); }

IntMatrix RootDatum::reflection(std::size_t i) const {
  IntMatrix s = IntMatrix::identity(rank_);
  const IntVector& a = simple_coroot(i);
  const IntVector& r = simple_root(i);
  for (std::size_t p = 0; p < rank_; ++p)
    for (std::size_t q = 0; q < rank_; ++q) s(p, q) -= a[p] * r[q];
  return s;
}

IntVector RootDatum::reflect(std::size_t i, const IntVector& x) const {
  return x - dot(x, simple_root(i)) * simple_coroot(i);
}

RootDatum RootDatum::swapped() const {
  return RootDatum(rank_, simple_roots_, simple_coroots_, name_.empty() ? "" : name_ + "^");
}

RootDatum RootDatum::levi(const std::vector<std::size_t>& subset) const {
  std::vector<std::size_t> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(Errc::InvalidSubset, "repeated simple index in Levi subset");
  std::vector<IntVector> cor, rts;
  for (std::size_t i : sorted) {
    if (i >= semisimple_rank())
      fail(Errc::InvalidSubset, "simple index " + std::to_string(i) + " out of range");
    cor.push_back(simple_coroots_[i]);
    rts.push_back(simple_roots_[i]);
  }
  return RootDatum(rank_, std::move(cor), std::move(rts), name_);
}

std::optional<IntVector> RootDatum::coroot_coefficients(const IntVector& x) const {
  if (x.size() != rank_) fail(Errc::RankMismatch, "vector length differs from the rank");
  if (!coroot_solver_) {
    if (is_zero(x)) return IntVector{};
    return std::nullopt;
  }
  return coroot_solver_->solve(x);
}

// ---------------------------------------------------------------------------
// Classification

std::string CartanComponent::label() const {
  return std::string(1, family) + std::to_string(rank);
}

std::string DynkinComponents::type_string() const {
  if (components.empty()) return "T";
  std::string out;
  for (const auto& c : components) {
    if (!out.empty()) out += "x";
    out += c.label();
  }
  return out;
}

std::size_t DynkinComponents::component_of(std::size_t i) const {
  for (std::size_t k = 0; k < components.size(); ++k)
    if (std::binary_search(components[k].indices.begin(), components[k].indices.end(), i))
      return k;
  fail(Errc::InvalidArgument, "simple index " + std::to_string(i) + " is in no component");
}

namespace {

// Symmetrizer d with d_i A_ij = d_j A_ji on a connected component, then
// Sylvester's criterion on the integral symmetric matrix d_i A_ij.
bool positive_definite(const IntMatrix& a, const std::vector<std::size_t>& idx) {
  const std::size_t n = idx.size();
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u || a(idx[u], idx[v]) == 0 || d[v] != 0) continue;
      d[v] = d[u] * Rational(a(idx[u], idx[v])) / Rational(a(idx[v], idx[u]));
      queue.push_back(v);
    }
  }
  Int scale = 1;
  for (const auto& x : d) scale = boost::multiprecision::lcm(scale, denominator(x));
  IntMatrix b(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    Rational dp = d[p] * Rational(scale);
    for (std::size_t q = 0; q < n; ++q)
      b(p, q) = boost::multiprecision::numerator(dp * Rational(a(idx[p], idx[q])));
  }
  if (!b.is_symmetric()) return false;
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix minor(k, k);
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = 0; q < k; ++q) minor(p, q) = b(p, q);
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

CartanComponent classify(const IntMatrix& a, const std::vector<std::size_t>& idx) {
  const std::size_t n = idx.size();
  CartanComponent c;
  c.indices = idx;
  c.rank = n;
  auto not_finite = [&](const std::string& why) -> CartanComponent {
    std::ostringstream os;
    os << "component {";
    for (std::size_t k = 0; k < n; ++k) os << (k ? "," : "") << idx[k];
    os << "}: " << why;
    fail(Errc::NotFiniteType, os.str());
  };
  if (n == 1) {
    c.family = 'A';
    return c;
  }
  struct Edge {
    std::size_t u, v;
    Int mult;
  };
  std::vector<Edge> edges;
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      Int p = a(idx[u], idx[v]) * a(idx[v], idx[u]);
      if (p == 0) continue;
      if (p > 3) return not_finite("bond of multiplicity " + p.str());
      edges.push_back({u, v, p});
      ++degree[u];
      ++degree[v];
    }
  if (edges.size() != n - 1) return not_finite("Dynkin diagram contains a cycle");
  if (!positive_definite(a, idx)) return not_finite("Cartan matrix is not positive definite");

  const std::size_t max_degree = *std::max_element(degree.begin(), degree.end());
  std::vector<Edge> multi;
  for (const auto& e : edges)
    if (e.mult > 1) multi.push_back(e);

  // Root u is longer than its neighbour v iff |A[u][v]| > 1.
  auto is_long = [&](std::size_t u, std::size_t v) { return abs(a(idx[u], idx[v])) > 1; };

  if (!multi.empty()) {
    if (multi.size() > 1 || max_degree > 2) return not_finite("unrecognised multiply laced diagram");
    const Edge& e = multi.front();
    if (e.mult == 3) {
      if (n != 2) return not_finite("triple bond in rank > 2");
      c.family = 'G';
      return c;
    }
    if (n == 2) {
      // Bourbaki labelling: the lower index is node 1; B2 has node 1 long.
      c.family = is_long(0, 1) ? 'B' : 'C';
      return c;
    }
    std::size_t terminal, other;
    if (degree[e.u] == 1) {
      terminal = e.u;
      other = e.v;
    } else if (degree[e.v] == 1) {
      terminal = e.v;
      other = e.u;
    } else {
      if (n != 4) return not_finite("interior double bond outside rank 4");
      c.family = 'F';
      return c;
    }
    c.family = is_long(terminal, other) ? 'C' : 'B';
    return c;
  }

  if (max_degree <= 2) {
    c.family = 'A';
    return c;
  }
  std::vector<std::size_t> branch;
  for (std::size_t u = 0; u < n; ++u)
    if (degree[u] == 3) branch.push_back(u);
  if (branch.size() != 1 || max_degree > 3) return not_finite("unrecognised simply laced diagram");
  // Arm lengths from the branch node.
  std::vector<std::size_t> arms;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (std::size_t start : adj[branch[0]]) {
    std::size_t len = 1, prev = branch[0], cur = start;
    while (adj[cur].size() == 2) {
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) {
    c.family = 'D';
  } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
    c.family = 'E';
  } else {
    return not_finite("unrecognised branched diagram");
  }
  return c;
}

std::size_t matrix_rank(const IntMatrix& m) { return smith_normal_form(m).rank; }

}  // namespace

DynkinComponents validate(const RootDatum& rd) {
  const std::size_t l = rd.semisimple_rank();
  IntMatrix a = rd.cartan_matrix();
  for (std::size_t i = 0; i < l; ++i)
    if (a(i, i) != 2)
      fail(Errc::PairingViolation, "<alpha_" + std::to_string(i) + ", alpha_check_" +
                                       std::to_string(i) + "> = " + a(i, i).str() + ", expected 2");
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0)
        fail(Errc::NotFiniteType, "positive off-diagonal Cartan entry at (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")");
      if ((a(i, j) == 0) != (a(j, i) == 0))
        fail(Errc::NotFiniteType, "Cartan entries (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") and transpose disagree on zero");
    }

  // Connected components, ordered by smallest index.
  DynkinComponents out;
  std::vector<bool> seen(l, false);
  for (std::size_t s = 0; s < l; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> idx;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      idx.push_back(u);
      for (std::size_t v = 0; v < l; ++v)
        if (!seen[v] && v != u && a(u, v) != 0) {
          seen[v] = true;
          queue.push_back(v);
        }
    }
    std::sort(idx.begin(), idx.end());
    out.components.push_back(classify(a, idx));
  }

  // Finite type forces a nonsingular Cartan matrix, hence independence; keep
  // the explicit check so a bad datum fails with a precise message.
  if (l > 0) {
    if (matrix_rank(rd.coroot_matrix()) != l)
      fail(Errc::InvalidArgument, "simple coroots are linearly dependent");
    if (matrix_rank(rd.root_matrix()) != l)
      fail(Errc::InvalidArgument, "simple roots are linearly dependent");
  }
  return out;
}

Int weyl_group_order(const DynkinComponents& dc) {
  Int order = 1;
  for (const auto& c : dc.components) {
    Int fact = 1;
    for (std::size_t k = 2; k <= c.rank; ++k) fact *= k;
    const Int two_pow = Int(1) << c.rank;
    switch (c.family) {
      case 'A': order *= fact * (c.rank + 1); break;
      case 'B':
      case 'C': order *= two_pow * fact; break;
      case 'D': order *= (two_pow / 2) * fact; break;
      case 'E':
        order *= c.rank == 6 ? Int(51840) : c.rank == 7 ? Int(2903040) : Int(696729600);
        break;
      case 'F': order *= 1152; break;
      case 'G': order *= 12; break;
      default: fail(Errc::NotFiniteType, "unknown family");
    }
  }
  return order;
}

// ---------------------------------------------------------------------------
// Roots

std::vector<RootPair> positive_root_pairs(const RootDatum& rd) {
  const std::size_t l = rd.semisimple_rank();
  const IntMatrix a = rd.cartan_matrix();
  constexpr std::size_t kRootCap = 100000;

  // Orbit of (coroot coefficients, root coefficients) under simple reflections.
  std::map<IntVector, IntVector> seen;
  std::deque<IntVector> queue;
  for (std::size_t i = 0; i < l; ++i) {
    IntVector e = zero_vector(l);
    e[i] = 1;
    if (seen.emplace(e, e).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVector c = queue.front();
    queue.pop_front();
    const IntVector d = seen.at(c);
    for (std::size_t i = 0; i < l; ++i) {
      Int pc = 0, pd = 0;
      for (std::size_t j = 0; j < l; ++j) {
        pc += a(i, j) * c[j];
        pd += a(j, i) * d[j];
      }
      IntVector c2 = c, d2 = d;
      c2[i] -= pc;
      d2[i] -= pd;
      if (seen.emplace(c2, d2).second) {
        if (seen.size() > kRootCap) fail(Errc::NotFiniteType, "root system is not finite");
        queue.push_back(std::move(c2));
      }
    }
  }

  std::vector<RootPair> out;
  const IntMatrix cm = rd.coroot_matrix();
  const IntMatrix rm = rd.root_matrix();
  for (const auto& [c, d] : seen) {
    if (std::any_of(c.begin(), c.end(), [](const Int& x) { return x < 0; })) continue;
    out.push_back({cm * c, rm * d, c});
  }
  std::sort(out.begin(), out.end(), [](const RootPair& x, const RootPair& y) {
    Int hx = std::accumulate(x.coefficients.begin(), x.coefficients.end(), Int(0));
    Int hy = std::accumulate(y.coefficients.begin(), y.coefficients.end(), Int(0));
    if (hx != hy) return hx < hy;
    return x.coefficients > y.coefficients;
  });
  return out;
}

std::vector<IntVector> positive_coroots(const RootDatum& rd) {
  std::vector<IntVector> out;
  for (auto& p : positive_root_pairs(rd)) out.push_back(std::move(p.coroot));
  return out;
}

std::vector<IntVector> positive_roots(const RootDatum& rd) {
  std::vector<IntVector> out;
  for (auto& p : positive_root_pairs(rd)) out.push_back(std::move(p.root));
  return out;
}

std::vector<IntVector> component_roots(const RootDatum& rd, const CartanComponent& comp) {
  std::vector<IntVector> out;
  for (const auto& p : positive_root_pairs(rd)) {
    bool inside = false;
    for (std::size_t i : comp.indices) inside = inside || p.coefficients[i] != 0;
    if (!inside) continue;
    out.push_back(p.root);
    out.push_back(-p.root);
  }
  return out;
}

std::set<IntMatrix> weyl_group(const RootDatum& rd, std::size_t max_order) {
  const DynkinComponents dc = validate(rd);
  if (weyl_group_order(dc) > max_order)
    fail(Errc::OrderBoundExceeded, "|W| = " + weyl_group_order(dc).str() + " exceeds bound " +
                                       std::to_string(max_order));
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) gens.push_back(rd.reflection(i));
  std::set<IntMatrix> group{IntMatrix::identity(rd.rank())};
  std::deque<IntMatrix> queue{IntMatrix::identity(rd.rank())};
  while (!queue.empty()) {
    IntMatrix w = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      IntMatrix sw = s * w;
      if (group.insert(sw).second) {
        if (group.size() > max_order)
          fail(Errc::OrderBoundExceeded, "Weyl group enumeration exceeded bound " +
                                             std::to_string(max_order));
        queue.push_back(std::move(sw));
      }
    }
  }
  return group;
}

bool dominance_leq(const RootDatum& rd, const IntVector& lhs, const IntVector& rhs) {
  auto coeffs = rd.coroot_coefficients(rhs - lhs);
  if (!coeffs) return false;
  return std::all_of(coeffs->begin(), coeffs->end(), [](const Int& x) { return x >= 0; });
}

bool is_dominant(const RootDatum& rd, const IntVector& lambda) {
  for (const auto& r : rd.simple_roots())
    if (dot(lambda, r) < 0) return false;
  return true;
}

std::vector<std::size_t> stabilizer_weyl(const RootDatum& rd, const IntVector& lambda) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rd.semisimple_rank(); ++i)
    if (dot(lambda, rd.simple_root(i)) == 0) out.push_back(i);
  return out;
}

int parity(const RootDatum& rd, const IntVector& theta) {
  IntVector two_rho = zero_vector(rd.rank());
  for (const auto& r : positive_roots(rd)) two_rho = two_rho + r;
  return static_cast<int>(mod_floor(dot(theta, two_rho), Int(2)));
}

CowtLatticeQuotients abelianization(const RootDatum& rd) {
  CowtLatticeQuotients q;
  const std::size_t r = rd.rank();
  const std::size_t l = rd.semisimple_rank();
  // Characters vanishing on every coroot form a saturated sublattice of the
  // weights; its HNF basis gives canonical coordinates on Lambda_ab.
  std::vector<IntVector> annihilator;
  if (l == 0) {
    annihilator = IntMatrix::identity(r).row_vectors();
  } else {
    annihilator = integer_kernel(rd.coroot_matrix().transpose());
  }
  Sublattice ann(r, annihilator);
  q.projection = ann.rank() ? ann.basis_matrix() : IntMatrix(0, r);

  for (const Int& d : quotient_invariants(Sublattice(r, rd.simple_coroots()))) {
    if (d == 0)
      ++q.pi1_free_rank;
    else if (d > 1)
      q.pi1_torsion.push_back(d);
  }
  return q;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

IntMatrix cartan_a(std::size_t n) {
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = 2;
    if (i + 1 < n) a(i, i + 1) = a(i + 1, i) = -1;
  }
  return a;
}

RootDatum simply_connected(const IntMatrix& a, const std::string& name) {
  return RootDatum(a.rows(), IntMatrix::identity(a.rows()).row_vectors(), a.row_vectors(), name);
}

RootDatum adjoint(const IntMatrix& a, const std::string& name) {
  return RootDatum(a.rows(), a.col_vectors(), IntMatrix::identity(a.rows()).row_vectors(), name);
}

IntVector unit(std::size_t n, std::size_t i, long long s = 1) {
  IntVector v = zero_vector(n);
  v[i] = s;
  return v;
}

IntVector diff(std::size_t n, std::size_t i, std::size_t j) { return unit(n, i) - unit(n, j); }

struct Factor {
  std::string family;
  std::size_t n = 0;
};

std::optional<Factor> parse_factor(const std::string& s) {
  static const std::vector<std::string> families{"PGL", "SL", "GL", "Sp", "SO", "G", "T"};
  for (const auto& f : families) {
    if (s.rfind(f, 0) != 0) continue;
    std::string digits = s.substr(f.size());
    if (digits.empty() && f == "T") return Factor{f, 1};
    if (digits.empty() || digits.size() > 3 ||
        !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
      return std::nullopt;
    return Factor{f, static_cast<std::size_t>(std::stoul(digits))};
  }
  return std::nullopt;
}

std::vector<std::string> split_factors(const std::string& name) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : name) {
    if (ch == 'x' || ch == '*') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

RootDatum factor_datum(const std::string& s) {
  auto f = parse_factor(s);
  auto unknown = [&]() -> RootDatum { fail(Errc::UnknownGroup, "unknown group '" + s + "'"); };
  if (!f) return unknown();
  const std::size_t n = f->n;
  if (f->family == "SL" && n >= 2) return simply_connected(cartan_a(n - 1), s);
  if (f->family == "PGL" && n >= 2) return adjoint(cartan_a(n - 1), s);
  if (f->family == "GL" && n >= 1) {
    std::vector<IntVector> simple;
    for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(diff(n, i, i + 1));
    return RootDatum(n, simple, simple, s);
  }
  if (f->family == "Sp" && n >= 2 && n % 2 == 0) {
    const std::size_t m = n / 2;
    std::vector<IntVector> roots, coroots;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      roots.push_back(diff(m, i, i + 1));
      coroots.push_back(diff(m, i, i + 1));
    }
    roots.push_back(unit(m, m - 1, 2));
    coroots.push_back(unit(m, m - 1));
    return RootDatum(m, coroots, roots, s);
  }
  if (f->family == "SO" && n >= 3) {
    const std::size_t m = n / 2;
    std::vector<IntVector> roots, coroots;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      roots.push_back(diff(m, i, i + 1));
      coroots.push_back(diff(m, i, i + 1));
    }
    if (n % 2 == 1) {
      roots.push_back(unit(m, m - 1));
      coroots.push_back(unit(m, m - 1, 2));
    } else {
      IntVector v = unit(m, m - 2) + unit(m, m - 1);
      roots.push_back(v);
      coroots.push_back(v);
    }
    return RootDatum(m, coroots, roots, s);
  }
  if (f->family == "G" && n == 2) return simply_connected(IntMatrix{{2, -1}, {-3, 2}}, s);
  if (f->family == "T" && n >= 1) return RootDatum(n, {}, {}, s);
  return unknown();
}

RootDatum product(const RootDatum& a, const RootDatum& b, const std::string& name) {
  std::vector<IntVector> cor, rts;
  auto pad = [](const IntVector& v, std::size_t before, std::size_t after) {
    IntVector out = zero_vector(before);
    out.insert(out.end(), v.begin(), v.end());
    out.resize(before + v.size() + after, Int(0));
    return out;
  };
  for (std::size_t i = 0; i < a.semisimple_rank(); ++i) {
    cor.push_back(pad(a.simple_coroot(i), 0, b.rank()));
    rts.push_back(pad(a.simple_root(i), 0, b.rank()));
  }
  for (std::size_t i = 0; i < b.semisimple_rank(); ++i) {
    cor.push_back(pad(b.simple_coroot(i), a.rank(), 0));
    rts.push_back(pad(b.simple_root(i), a.rank(), 0));
  }
  return RootDatum(a.rank() + b.rank(), cor, rts, name);
}

}  // namespace

RootDatum standard_datum(const std::string& name) {
  auto factors = split_factors(name);
  RootDatum out = factor_datum(factors.front());
  for (std::size_t k = 1; k < factors.size(); ++k) out = product(out, factor_datum(factors[k]), name);
  return RootDatum(out.rank(), out.simple_coroots(), out.simple_roots(), name);
}

std::vector<std::string> catalog_descriptions() {
  return {
      "SLn   (n>=2)  simply connected A(n-1); coweights = coroot lattice, coroot_i = e_i",
      "PGLn  (n>=2)  adjoint A(n-1); weights = root lattice, root_i = e_i",
      "GLn   (n>=1)  Z^n; coroot_i = root_i = e_i - e_(i+1)",
      "Sp2n  (n>=1)  Z^n; roots e_i - e_(i+1), 2e_n; coroots e_i - e_(i+1), e_n",
      "SO2n+1(n>=1)  Z^n; roots e_i - e_(i+1), e_n; coroots e_i - e_(i+1), 2e_n",
      "SO2n  (n>=2)  Z^n; roots = coroots = e_i - e_(i+1), e_(n-1) + e_n",
      "G2            simply connected; Cartan [[2,-1],[-3,2]] (root 1 short)",
      "Tn    (n>=1)  split torus of rank n, no roots",
      "AxB           direct product, coordinates concatenated (e.g. SL2xGL1)",
  };
}

std::string classical_dual_name(const std::string& name) {
  std::string out;
  for (const auto& s : split_factors(name)) {
    factor_datum(s);  // validates the factor
    auto f = *parse_factor(s);
    std::string d;
    if (f.family == "SL") d = "PGL" + std::to_string(f.n);
    else if (f.family == "PGL") d = "SL" + std::to_string(f.n);
    else if (f.family == "Sp") d = "SO" + std::to_string(f.n + 1);
    else if (f.family == "SO" && f.n % 2 == 1) d = "Sp" + std::to_string(f.n - 1);
    else d = s;
    if (!out.empty()) out += "x";
    out += d;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism

bool isomorphic(const RootDatum& a, const RootDatum& b) {
  const std::size_t r = a.rank();
  const std::size_t l = a.semisimple_rank();
  if (b.rank() != r || b.semisimple_rank() != l) return false;
  if (r == 0) return true;
  const IntMatrix ca = a.cartan_matrix();
  const IntMatrix cb = b.cartan_matrix();

  std::vector<std::size_t> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (std::size_t i = 0; i < l && same; ++i)
      for (std::size_t j = 0; j < l && same; ++j) same = cb(perm[i], perm[j]) == ca(i, j);
    if (!same) continue;

    // Unknown g, flattened g(p,q) -> p*r+q:  g a_i = b_pi(i),  g^T b^_pi(i) = a^_i.
    const std::size_t unknowns = r * r;
    std::vector<IntVector> eqs;
    IntVector rhs;
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t p = 0; p < r; ++p) {
        IntVector row = zero_vector(unknowns);
        for (std::size_t q = 0; q < r; ++q) row[p * r + q] = a.simple_coroot(i)[q];
        eqs.push_back(row);
        rhs.push_back(b.simple_coroot(perm[i])[p]);
      }
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t q = 0; q < r; ++q) {
        IntVector row = zero_vector(unknowns);
        for (std::size_t p = 0; p < r; ++p) row[p * r + q] = b.simple_root(perm[i])[p];
        eqs.push_back(row);
        rhs.push_back(a.simple_root(i)[q]);
      }
    IntMatrix sys = eqs.empty() ? IntMatrix(0, unknowns) : IntMatrix::from_rows(eqs, unknowns);
    std::optional<IntVector> x0;
    std::vector<IntVector> kernel;
    if (eqs.empty()) {
      x0 = zero_vector(unknowns);
      kernel = IntMatrix::identity(unknowns).row_vectors();
    } else {
      IntegerSolver solver(sys);
      x0 = solver.solve(rhs);
      kernel = solver.kernel();
    }
    if (!x0) continue;
    auto as_matrix = [r](const IntVector& v) {
      IntMatrix g(r, r);
      for (std::size_t p = 0; p < r; ++p)
        for (std::size_t q = 0; q < r; ++q) g(p, q) = v[p * r + q];
      return g;
    };
    const IntMatrix g0 = as_matrix(*x0);
    if (kernel.empty()) {
      if (is_unimodular(g0)) return true;
      continue;
    }
    if (kernel.size() == 1 && smith_normal_form(as_matrix(kernel[0])).rank <= 1) {
      // det(g0 + t k) is affine in t when k has rank one.
      const Int d0 = determinant(g0);
      const Int slope = determinant(g0 + as_matrix(kernel[0])) - d0;
      for (int target : {1, -1}) {
        if (slope == 0 ? d0 == target : (Int(target) - d0) % slope == 0) return true;
      }
      continue;
    }
    const int bound = kernel.size() <= 4 ? 2 : 1;
    std::vector<int> t(kernel.size(), -bound);
    for (;;) {
      IntVector x = *x0;
      for (std::size_t k = 0; k < kernel.size(); ++k) x = x + Int(t[k]) * kernel[k];
      if (is_unimodular(as_matrix(x))) return true;
      std::size_t k = 0;
      while (k < t.size() && t[k] == bound) t[k++] = -bound;
      if (k == t.size()) break;
      ++t[k];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace mdual
