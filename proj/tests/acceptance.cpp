// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include "instances.hpp"
#include "mdual/cli.hpp"
#include "mdual/error.hpp"
#include "mdual/reps.hpp"
#include "mdual/tame_symbol.hpp"
#include "oracles.hpp"

#ifndef MDUAL_SOURCE_DIR
#define MDUAL_SOURCE_DIR "."
#endif

using namespace mdual;
namespace o = mdual::oracle;
using test::Instance;
using test::uniform;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_ms;  // 0: no limit
  std::function<Outcome()> body;
};

// --- 1 -----------------------------------------------------------------------

struct ClassicalDual {
  const char* group;
  const char* dual;
  std::vector<IntVector> coroots, roots;
};

Outcome classical_degeneration() {
  // Langlands duals written out in the catalog's coordinates.
  const std::vector<ClassicalDual> table{
      {"SL2", "PGL2", {make_vector({2})}, {make_vector({1})}},
      {"PGL2", "SL2", {make_vector({1})}, {make_vector({2})}},
      {"GL2", "GL2", {make_vector({1, -1})}, {make_vector({1, -1})}},
      {"GL3", "GL3", {make_vector({1, -1, 0}), make_vector({0, 1, -1})},
       {make_vector({1, -1, 0}), make_vector({0, 1, -1})}},
      {"SL3", "PGL3", {make_vector({2, -1}), make_vector({-1, 2})}, {make_vector({1, 0}), make_vector({0, 1})}},
      {"Sp4", "SO5", {make_vector({1, -1}), make_vector({0, 2})}, {make_vector({1, -1}), make_vector({0, 1})}},
      {"G2", "G2", {make_vector({2, -1}), make_vector({-3, 2})}, {make_vector({1, 0}), make_vector({0, 1})}},
  };
  Outcome out;
  for (const auto& e : table) {
    const RootDatum rd = standard_datum(e.group);
    const std::size_t nj = validate(rd).components.size();
    const std::size_t ab = abelianization(rd).ab_rank();
    const auto md = MetaplecticDatum::assemble(rd, IntMatrix(ab, ab), std::vector<Int>(nj, 1), 1);
    const std::string g = e.group;
    for (const auto& d : md.delta())
      if (d != 1) out.fail(g + ": delta != 1");
    if (!(md.lambda_sharp() == Sublattice::full(rd.rank()))) out.fail(g + ": Lambda_sharp != Lambda");
    const RootDatum dual = dual_root_datum(md).as_group_datum();
    if (dual.simple_coroots() != e.coroots || dual.simple_roots() != e.roots)
      out.fail(g + ": dual datum differs from the stored dual");
    if (dual.cartan_matrix() != rd.cartan_matrix().transpose()) out.fail(g + ": Cartan matrix not transposed");
    if (!isomorphic(dual, standard_datum(e.dual))) out.fail(g + ": dual not isomorphic to " + e.dual);
  }
  return out;
}

// --- 2 -----------------------------------------------------------------------

/// kappa_bar(x, x) rebuilt from the orbit-closure Killing forms.
o::LL oracle_norm(const Instance& in, const IntVector& x) {
  const RootDatum rd = standard_datum(in.group);
  const DynkinComponents dc = validate(rd);
  const IntMatrix p = abelianization(rd).projection;
  o::LL v = 0;
  if (in.beta.rows()) {
    const IntVector px = p * x;
    v -= o::ll(dot(px, in.beta * px));
  }
  const o::V xl = o::ll(x);
  for (std::size_t j = 0; j < dc.components.size(); ++j)
    v -= o::ll(in.c[j]) * o::dotl(xl, o::apply(o::killing(rd, dc.components[j].indices), xl));
  return v;
}

Outcome denominator_oracle() {
  Outcome out;
  std::mt19937_64 rng(2024);
  int count = 0;
  while (count < 320) {
    const Instance in = test::random_instance(rng, test::small_groups(), 12);
    const auto md = in.datum();
    for (std::size_t i = 0; i < md.root_datum().semisimple_rank(); ++i) {
      const o::LL k = oracle_norm(in, md.root_datum().simple_coroot(i));
      if (delta(md, i) != o::delta_scan(k, o::ll(in.n))) out.fail(in.label() + " index " + std::to_string(i));
    }
    ++count;
  }
  out.detail = out.ok ? std::to_string(count) + " instances" : out.detail;
  return out;
}

// --- 3 -----------------------------------------------------------------------

Outcome sharp_oracle() {
  Outcome out;
  std::mt19937_64 rng(77);
  std::size_t points = 0;
  const int instances = 60;
  for (int t = 0; t < instances; ++t) {
    const Instance in = test::random_instance(rng, test::small_groups(), 12);
    const auto md = in.datum();
    const o::M kb = o::ll(md.kappa_bar().matrix());
    const o::LL n = o::ll(in.n);
    o::M basis;
    for (const auto& b : md.lambda_sharp().basis()) basis.push_back(o::ll(b));
    std::size_t k = 0;
    o::box(md.root_datum().rank(), 2 * n, [&](const o::V& x) {
      const bool want = o::divisible_image(kb, n, x);
      if (o::echelon_member(basis, x) != want) out.fail(in.label() + " at " + to_string(o::big(x)));
      // The library's own membership test on a sample.
      if (k++ % 97 == 0 && md.lambda_sharp().contains(o::big(x)) != want)
        out.fail(in.label() + " contains() at " + to_string(o::big(x)));
      ++points;
    });
  }
  if (out.ok) out.detail = std::to_string(instances) + " instances, " + std::to_string(points) + " points";
  return out;
}

// --- 4 -----------------------------------------------------------------------

Outcome weyl_equality() {
  Outcome out;
  std::vector<std::string> groups = test::small_groups();
  for (const char* g : {"SL4", "PGL4", "SL2xSL3", "SL2xSL2xSL2", "GL4", "SL2xG2", "SL2xSp4"}) groups.push_back(g);
  std::mt19937_64 rng(5);
  int count = 0;
  for (int t = 0; t < 80; ++t) {
    const Instance in = test::random_instance(rng, groups, 12);
    const RootDatum rd = standard_datum(in.group);
    if (weyl_group_order(validate(rd)) > 48) continue;
    if (!weyl_equality_check(in.datum(), 48)) out.fail(in.label());
    ++count;
  }
  if (out.ok) out.detail = std::to_string(count) + " instances";
  return out;
}

// --- 5 and 6 -----------------------------------------------------------------

struct Weights {
  DualRootDatum dual;
  std::vector<IntVector> lambdas;
};

std::vector<std::pair<std::shared_ptr<Weights>, std::pair<IntVector, IntVector>>> rep_pairs() {
  static std::vector<std::pair<std::shared_ptr<Weights>, std::pair<IntVector, IntVector>>> cache;
  if (!cache.empty()) return cache;
  std::vector<std::pair<std::shared_ptr<Weights>, std::pair<IntVector, IntVector>>> pairs;
  const std::vector<std::string> groups{"SL2", "PGL2", "GL2", "SL3", "PGL3", "Sp4", "SO5", "G2",
                                        "SL2xGL1", "SL2xSL2", "T2"};
  std::mt19937_64 rng(99);
  while (pairs.size() < 150) {
    const Instance in = test::random_instance(rng, groups, 12);
    const auto md = in.datum();
    auto w = std::make_shared<Weights>(Weights{dual_root_datum(md), {}});
    const RootDatum d = w->dual.as_root_datum();
    o::box(d.rank(), 6, [&](const o::V& y) {
      const IntVector v = o::big(y);
      if (!is_dominant(d, v)) return;
      Int h = 0;
      for (const auto& f : d.simple_roots()) h += dot(v, f);
      if (h <= 6) w->lambdas.push_back(v);
    });
    for (int k = 0; k < 3; ++k) {
      const auto& a = w->lambdas[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(w->lambdas.size()) - 1))];
      const auto& b = w->lambdas[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(w->lambdas.size()) - 1))];
      pairs.push_back({w, {a, b}});
    }
  }
  cache = pairs;
  return cache;
}

Outcome multiplicity_one() {
  Outcome out;
  std::size_t count = 0, nontrivial = 0;
  for (const auto& [w, lm] : rep_pairs()) {
    const auto& [lambda, mu] = lm;
    nontrivial += !is_zero(lambda) && !is_zero(mu);
    const RootDatum d = w->dual.as_root_datum();
    const auto dec = tensor_decompose(w->dual, lambda, mu);
    auto it = dec.find(lambda + mu);
    if (it == dec.end() || it->second != 1) out.fail("mult(lambda+mu) != 1 for " + to_string(lambda) + ", " + to_string(mu));
    o::Characters oc = o::Characters::of(d);
    const o::V l = o::ll(lambda), m = o::ll(mu);
    const auto want = oc.decompose(o::Characters::product(oc.character(l), oc.character(m)));
    std::map<o::V, o::LL> got;
    for (const auto& [hw, k] : dec) got[o::ll(hw)] = o::ll(k);
    if (got != want) out.fail("decomposition differs for " + to_string(lambda) + ", " + to_string(mu));
    ++count;
  }
  if (count < 100) out.fail("only " + std::to_string(count) + " pairs");
  if (out.ok) out.detail = std::to_string(count) + " pairs, " + std::to_string(nontrivial) + " with both weights nonzero";
  return out;
}

Outcome weight_bound() {
  Outcome out;
  std::size_t count = 0;
  for (const auto& [w, lm] : rep_pairs()) {
    const RootDatum d = w->dual.as_root_datum();
    o::Characters oc = o::Characters::of(d);
    for (const IntVector& lambda : {lm.first, lm.second}) {
      if (!verify_weight_bound(w->dual, lambda)) out.fail("library bound fails at " + to_string(lambda));
      // The weight set is W-stable, so checking every weight covers every w nu.
      for (const auto& [nu, k] : oc.character(o::ll(lambda))) {
        const auto c = o::solve_columns(d.simple_coroots(), lambda - o::big(nu));
        bool ok = c.has_value();
        if (ok)
          for (const auto& x : *c) ok = ok && x >= 0 && denominator(x) == 1;
        if (!ok) out.fail(to_string(o::big(nu)) + " not below " + to_string(lambda));
      }
      ++count;
    }
  }
  if (count < 200) out.fail("only " + std::to_string(count) + " representations");
  if (out.ok) out.detail = std::to_string(count) + " representations";
  return out;
}

// --- 7 and 8 -----------------------------------------------------------------

using L = Laurent<Rational>;

struct RandomFunction {
  L f;
  long long v;
  Rational c0;
};

/// c t^v p(t) / q(t) with p(0), q(0) nonzero; q enters through an inexact inverse.
RandomFunction random_function(std::mt19937_64& rng) {
  const long long v = uniform(rng, -3, 3);
  const Rational c(uniform(rng, 1, 9) * (uniform(rng, 0, 1) ? 1 : -1), uniform(rng, 1, 4));
  std::vector<Rational> p{Rational(uniform(rng, 1, 5))}, q{Rational(uniform(rng, 1, 5) * (uniform(rng, 0, 1) ? 1 : -1))};
  for (int k = 0; k < 3; ++k) {
    p.push_back(Rational(uniform(rng, -4, 4)));
    q.push_back(Rational(uniform(rng, -4, 4)));
  }
  const L f = L::monomial(c, v) * L::series(0, p) * L::series(0, q).inverse(8);
  return {f, v, c * p[0] / q[0]};
}

IntMatrix random_antisymmetric(std::mt19937_64& rng, std::size_t n) {
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = uniform(rng, -3, 3);
      a(j, i) = -a(i, j);
    }
  return a;
}

IntVector random_vector(std::mt19937_64& rng, std::size_t n, long long r) {
  IntVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(uniform(rng, -r, r));
  return v;
}

Outcome tame_identities() {
  Outcome out;
  std::mt19937_64 rng(31);
  const Rational one(1);
  using T = TorusElement<Rational>;
  int count = 0;
  for (; count < 240; ++count) {
    const auto f = random_function(rng), g = random_function(rng), h = random_function(rng);
    const std::string at = "pair " + std::to_string(count);
    const Rational fg = tame(f.f, g.f);
    if (fg != o::tame_closed(f.v, f.c0, g.v, g.c0)) out.fail(at + ": closed form");
    if (fg * tame(g.f, f.f) != 1) out.fail(at + ": skew-symmetry");
    if (tame(f.f * h.f, g.f) != fg * tame(h.f, g.f)) out.fail(at + ": bimultiplicativity (left)");
    if (tame(f.f, g.f * h.f) != fg * tame(f.f, h.f)) out.fail(at + ": bimultiplicativity (right)");
    try {
      const L s = L::constant(one) - f.f;
      if (tame(f.f, s) != 1) out.fail(at + ": Steinberg");
    } catch (const Error& e) {
      if (e.code() != Errc::InsufficientPrecision) throw;
    }
    // Steinberg with 1 - f of positive valuation.
    const L u = L::constant(one) + L::monomial(f.c0, 1 + count % 3) * g.f * L::monomial(one, -g.v);
    if (tame(u, L::constant(one) - u) != 1) out.fail(at + ": Steinberg (unit)");

    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const IntMatrix beta = test::random_even_symmetric(rng, n, 4);
    const CocycleB b = CocycleB::canonical(beta);
    const CocycleB b2(b.matrix() + random_antisymmetric(rng, n), beta);
    const IntVector l1 = random_vector(rng, n, 3), l2 = random_vector(rng, n, 3), l3 = random_vector(rng, n, 3);
    const auto u1 = T::pure(l1, f.f), u2 = T::pure(l2, g.f);
    const Rational want = field_pow(fg, -dot(l1, beta * l2));
    if (commutator(b, u1, u2, one) != want) out.fail(at + ": commutator formula");
    if (commutator(b2, u1, u2, one) != want) out.fail(at + ": commutator depends on B");
    const auto v1 = u1 * T::pure(l3, h.f);
    Rational prod = want * field_pow(tame(h.f, g.f), -dot(l3, beta * l2));
    if (commutator(b, v1, u2, one) != prod || commutator(b2, v1, u2, one) != prod)
      out.fail(at + ": commutator on products");
  }
  if (out.ok) out.detail = std::to_string(count) + " pairs";
  return out;
}

Outcome loop_rotation() {
  Outcome out;
  std::mt19937_64 rng(8);
  int count = 0;
  for (; count < 150; ++count) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const IntMatrix beta = test::random_even_symmetric(rng, n, 6);
    const IntVector lambda = random_vector(rng, n, 3);
    const Rational b(uniform(rng, 1, 7) * (uniform(rng, 0, 1) ? 1 : -1), uniform(rng, 1, 7));
    const o::LL e = o::ll(dot(lambda, beta * lambda)) / 2;
    Rational want = 1;
    for (o::LL k = 0; k < std::abs(e); ++k) want *= e > 0 ? 1 / b : b;
    const CocycleB c1 = CocycleB::canonical(beta);
    const CocycleB c2(c1.matrix() + random_antisymmetric(rng, n), beta);
    if (loop_rotation_character(c1, lambda, b) != want || loop_rotation_character(c2, lambda, b) != want)
      out.fail("lambda " + to_string(lambda) + " beta " + to_string(beta));
  }
  if (out.ok) out.detail = std::to_string(count) + " triples";
  return out;
}

// --- 9 -----------------------------------------------------------------------

Outcome even_abelian() {
  Outcome out;
  std::mt19937_64 rng(12);
  int count = 0;
  for (; count < 80; ++count) {
    Instance in = test::random_instance(rng, test::small_groups(), 6);
    in.n *= 2;
    const auto md = in.datum();
    const o::M kb = o::ll(md.kappa_bar().matrix());
    const auto& s = md.lambda_sharp().basis();
    for (const auto& x : s)
      for (const auto& y : s) {
        if (o::dotl(o::ll(x), o::apply(kb, o::ll(y))) % 2 != 0) out.fail(in.label() + ": odd pairing");
        if (commutator_on_sharp(md, x, y) != 0) out.fail(in.label() + ": nonzero commutator");
      }
  }
  if (out.ok) out.detail = std::to_string(count) + " instances";
  return out;
}

// --- 10 ----------------------------------------------------------------------

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome golden() {
  Outcome out;
  const std::string want = slurp(MDUAL_SOURCE_DIR "/tests/data/sl2_level3.json");
  const std::string spec = slurp(MDUAL_SOURCE_DIR "/specs/sl2_level3.spec");
  const auto start = std::chrono::steady_clock::now();
  const Report r = run(parse_spec(spec), VerifyLevel::none);
  const std::string got = emit_json(r);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (got != want) out.fail("report differs from the frozen file");
  if (r.sharp_basis != std::vector<IntVector>{make_vector({3})} || r.delta != std::vector<Int>{3} || r.dual_type != "A1")
    out.fail("unexpected content");
  if (ms >= 100) out.fail("report took " + std::to_string(ms) + " ms");
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "classical degeneration", 1000, classical_degeneration},
      {2, "denominator oracle", 1000, denominator_oracle},
      {3, "Lambda_sharp oracle", 5000, sharp_oracle},
      {4, "Weyl equality", 10000, weyl_equality},
      {5, "multiplicity one", 30000, multiplicity_one},
      {6, "weight bound", 0, weight_bound},
      {7, "tame-symbol identities", 5000, tame_identities},
      {8, "loop-rotation character", 0, loop_rotation},
      {9, "N-even abelianness", 0, even_abelian},
      {10, "SL2/N=3 golden file", 0, golden},
  };
  // Criterion 5 and 6 share their instances; build them outside the clock.
  try {
    rep_pairs();
  } catch (const std::exception&) {
    // reported by criteria 5 and 6
  }
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_ms > 0 && ms >= c.limit_ms)
      out.fail("took " + std::to_string(static_cast<long>(ms)) + " ms, limit " + std::to_string(static_cast<long>(c.limit_ms)));
    failed += !out.ok;
    std::cout << "criterion " << c.id << " (" << c.name << "): " << (out.ok ? "PASS" : "FAIL") << " ["
              << static_cast<long>(ms) << " ms] " << out.detail << "\n";
  }
  return failed ? 1 : 0;
}
