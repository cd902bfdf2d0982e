#include <random>

#include "doctest.h"
#include "instances.hpp"
#include "mdual/error.hpp"
#include "mdual/forms.hpp"
#include "oracles.hpp"

using namespace mdual;
namespace o = mdual::oracle;

TEST_SUITE("forms") {

TEST_CASE("killing forms") {
  const RootDatum sl2 = standard_datum("SL2");
  const auto k = killing_forms(sl2, validate(sl2));
  REQUIRE(k.size() == 1);
  CHECK(k[0].matrix() == IntMatrix{{8}});
  const RootDatum sl3 = standard_datum("SL3");
  const auto k3 = killing_forms(sl3, validate(sl3));
  CHECK(k3[0](sl3.simple_coroot(0), sl3.simple_coroot(0)) == 12);
  const RootDatum t2 = standard_datum("T2");
  CHECK(killing_forms(t2, validate(t2)).empty());
}

TEST_CASE("killing forms agree with the orbit oracle and are invariant") {
  for (const char* g : {"SL2", "PGL2", "GL3", "Sp4", "SO5", "G2", "SO6", "Sp6", "SO7", "SO8", "GL4",
                        "SL2xSL3", "SL2xSp4"}) {
    const RootDatum rd = standard_datum(g);
    const DynkinComponents dc = validate(rd);
    for (const auto& comp : dc.components) {
      const SymmetricForm k = killing_form(rd, comp);
      CHECK_MESSAGE(o::ll(k.matrix()) == o::killing(rd, comp.indices), g);
      CHECK(k.is_even());
      CHECK(is_w_invariant(rd, k));
    }
  }
}

TEST_CASE("assembled kappa_bar") {
  const RootDatum sl2 = standard_datum("SL2");
  CHECK(assemble_kappa_bar(sl2, validate(sl2), IntMatrix(0, 0), {1}).matrix() == IntMatrix{{-8}});
  const RootDatum gl1 = standard_datum("GL1");
  CHECK(assemble_kappa_bar(gl1, validate(gl1), IntMatrix{{2}}, {}).matrix() == IntMatrix{{-2}});
  const RootDatum sp4 = standard_datum("Sp4");
  CHECK(assemble_kappa_bar(sp4, validate(sp4), IntMatrix(0, 0), {0}).matrix().is_zero());
  CHECK_THROWS_AS(assemble_kappa_bar(sl2, validate(sl2), IntMatrix(0, 0), {1, 2}), Error);
}

TEST_CASE("kappa_bar on random instances") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto in = test::random_instance(rng, test::small_groups(), 12);
    const RootDatum rd = standard_datum(in.group);
    const DynkinComponents dc = validate(rd);
    const SymmetricForm kb = assemble_kappa_bar(rd, dc, in.beta, in.c);
    CHECK(kb.is_even());
    CHECK(is_w_invariant(rd, kb));
    // -P^T beta P - sum c_j kappa_j, with kappa_j from the orbit oracle.
    const IntMatrix p = abelianization(rd).projection;
    o::M want = o::ll(in.beta.rows() ? IntMatrix(-(p.transpose() * in.beta * p)) : IntMatrix(rd.rank(), rd.rank()));
    for (std::size_t j = 0; j < dc.components.size(); ++j) {
      const o::M k = o::killing(rd, dc.components[j].indices);
      for (std::size_t a = 0; a < rd.rank(); ++a)
        for (std::size_t b = 0; b < rd.rank(); ++b) want[a][b] -= o::ll(in.c[j]) * k[a][b];
    }
    CHECK_MESSAGE(o::ll(kb.matrix()) == want, in.label());
    // The beta part never sees a coroot.
    const SymmetricForm bp = pullback_beta(rd, in.beta);
    for (const auto& a : rd.simple_coroots()) CHECK(is_zero(bp.apply(a)));
    CHECK(descend_beta(rd, bp) == in.beta);
  }
}

TEST_CASE("beta checks") {
  const RootDatum gl2 = standard_datum("GL2");
  CHECK_NOTHROW(check_beta(gl2, IntMatrix{{2}}));
  CHECK_THROWS_AS(check_beta(gl2, IntMatrix{{1}}), Error);
  try {
    check_beta(gl2, IntMatrix{{1}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BetaNotEven);
  }
  try {
    check_beta(gl2, IntMatrix{{2, 0}, {0, 2}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RankMismatch);
  }
  const RootDatum t2 = standard_datum("T2");
  try {
    check_beta(t2, IntMatrix{{2, 1}, {0, 2}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BetaNotSymmetric);
  }
  try {
    descend_beta(gl2, SymmetricForm(IntMatrix{{2, 0}, {0, 0}}));
    FAIL("accepted a form that sees the coroots");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FormNotInvariant);
  }
}

TEST_CASE("quadratic forms") {
  const SymmetricForm k = bilinear_from_quadratic(QuadraticForm(IntMatrix{{1}}));
  CHECK(k.matrix() == IntMatrix{{2}});
  CHECK(quadratic_exists(k));
  CHECK(quadratic_from_bilinear(k).coefficients() == IntMatrix{{1}});
  CHECK_FALSE(quadratic_exists(SymmetricForm(IntMatrix{{1}})));
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const SymmetricForm f(test::random_even_symmetric(rng, 3, 6));
    CHECK(bilinear_from_quadratic(quadratic_from_bilinear(f)) == f);
  }
}

TEST_CASE("weyl invariance") {
  const RootDatum gl2 = standard_datum("GL2");
  CHECK_FALSE(is_w_invariant(gl2, SymmetricForm(IntMatrix{{1, 0}, {0, 0}})));
  CHECK(is_w_invariant(gl2, pullback_beta(gl2, IntMatrix{{2}})));
  CHECK(is_w_invariant(standard_datum("SL2"), SymmetricForm(IntMatrix{{1}})));
}

TEST_CASE("levi restriction keeps the matrix") {
  const RootDatum sl3 = standard_datum("SL3");
  const SymmetricForm kb = assemble_kappa_bar(sl3, validate(sl3), IntMatrix(0, 0), {1});
  CHECK(restrict_form_to_levi(sl3, kb, {0, 1}).form == kb);
  const LeviForm a1 = restrict_form_to_levi(sl3, kb, {0});
  CHECK(a1.form == kb);
  CHECK(a1.components.type_string() == "A1");
  CHECK(restrict_form_to_levi(sl3, kb, {}).components.components.empty());
}

}
