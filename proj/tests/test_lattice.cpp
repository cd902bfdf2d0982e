#include <random>

#include "doctest.h"
#include "mdual/error.hpp"
#include "mdual/lattice.hpp"
#include "oracles.hpp"

using namespace mdual;
namespace o = mdual::oracle;

TEST_SUITE("lattice") {

TEST_CASE("smith form of diag(2,3)") {
  const IntMatrix m{{2, 0}, {0, 3}};
  const SmithForm s = smith_normal_form(m);
  CHECK(s.D == IntMatrix{{1, 0}, {0, 6}});
  CHECK(s.rank == 2);
  CHECK(o::smith_certificate(m, s));
}

TEST_CASE("smith form of identity and zero") {
  const SmithForm id = smith_normal_form(IntMatrix::identity(3));
  CHECK(id.D == IntMatrix::identity(3));
  const SmithForm z = smith_normal_form(IntMatrix(2, 3));
  CHECK(z.D.is_zero());
  CHECK(z.rank == 0);
  CHECK(o::smith_certificate(IntMatrix(2, 3), z));
}

TEST_CASE("smith form on random rectangular matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long long>(rng() % 19) - 9;
    const SmithForm s = smith_normal_form(m);
    CHECK(o::smith_certificate(m, s));
  }
}

TEST_CASE("hermite form is echelon with reduced columns") {
  const IntMatrix h = hermite_normal_form(IntMatrix{{2, 2}, {0, 4}, {4, 6}});
  CHECK(h == IntMatrix{{2, 0}, {0, 2}});
  CHECK(hermite_normal_form(IntMatrix(2, 2)).rows() == 0);
}

TEST_CASE("integer solver") {
  IntegerSolver s(IntMatrix{{2, 4}, {0, 3}});
  auto x = s.solve(make_vector({2, 3}));
  REQUIRE(x);
  CHECK(IntMatrix{{2, 4}, {0, 3}} * *x == make_vector({2, 3}));
  CHECK_FALSE(s.solve(make_vector({1, 0})));
  CHECK(integer_kernel(IntMatrix{{1, -1}}).size() == 1);
}

TEST_CASE("kernel_mod examples") {
  const Sublattice a = kernel_mod(IntMatrix{{-8}}, 3);
  CHECK(a.basis() == std::vector<IntVector>{make_vector({3})});
  CHECK(kernel_mod(IntMatrix{{5, 1}, {1, 7}}, 1) == Sublattice::full(2));

  const IntMatrix m{{2, 0}, {0, 2}};
  const Sublattice b = kernel_mod(m, 4);
  CHECK(b.basis() == std::vector<IntVector>{make_vector({2, 0}), make_vector({0, 2})});
  const o::M mm = o::ll(m);
  o::box(2, 8, [&](const o::V& x) { CHECK(b.contains(o::big(x)) == o::divisible_image(mm, 4, x)); });

  const Sublattice c = kernel_mod(IntMatrix{{-8}}, 3);
  for (long long x = -10; x <= 10; ++x) CHECK(c.contains(make_vector({x})) == (8 * x % 3 == 0));
}

TEST_CASE("saturate") {
  const Sublattice s = saturate(Sublattice(2, {make_vector({2, 0})}));
  CHECK(s.basis() == std::vector<IntVector>{make_vector({1, 0})});
  CHECK(saturate(s) == s);
  const Sublattice t = saturate(Sublattice(2, {make_vector({2, 2}), make_vector({0, 4})}));
  CHECK(t == Sublattice::full(2));
  const Sublattice u = saturate(Sublattice(3, {make_vector({2, 4, 6}), make_vector({0, 0, 3})}));
  // Everything in the rational span on a box is caught.
  o::box(3, 4, [&](const o::V& x) {
    const bool in_span = o::solve_columns({make_vector({2, 4, 6}), make_vector({0, 0, 3})}, o::big(x)).has_value();
    CHECK(u.contains(o::big(x)) == in_span);
  });
}

TEST_CASE("membership") {
  const Sublattice s(1, {make_vector({3})});
  CHECK(member(s, make_vector({6})));
  CHECK_FALSE(member(s, make_vector({4})));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<IntVector> gens;
    for (int g = 0; g < 2; ++g) {
      IntVector v;
      for (int i = 0; i < 3; ++i) v.push_back(static_cast<long long>(rng() % 11) - 5);
      gens.push_back(v);
    }
    const Sublattice l(3, gens);
    const Int a = static_cast<long long>(rng() % 7) - 3, b = static_cast<long long>(rng() % 7) - 3;
    CHECK(member(l, a * gens[0] + b * gens[1]));
  }
}

TEST_CASE("quotient invariants and index") {
  CHECK(quotient_invariants(Sublattice(2, {make_vector({2, 0}), make_vector({0, 3})})) ==
        std::vector<Int>{1, 6});
  CHECK(quotient_invariants(Sublattice(2, {make_vector({1, -1})})) == std::vector<Int>{1, 0});
  CHECK(Sublattice(2, {make_vector({2, 0}), make_vector({1, 3})}).index() == 6);
}

TEST_CASE("denominator") {
  CHECK(denominator(Rational(8, 6)) == 3);
  CHECK(denominator(Rational(-4, 3)) == 3);
  CHECK(denominator(Rational(0)) == 1);
}

TEST_CASE("determinant and unimodularity") {
  CHECK(determinant(IntMatrix{{2, 1}, {7, 4}}) == 1);
  CHECK(is_unimodular(IntMatrix{{2, 1}, {7, 4}}));
  CHECK_FALSE(is_unimodular(IntMatrix{{2, 0}, {0, 1}}));
}

}
