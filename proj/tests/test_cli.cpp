#include <random>

#include "doctest.h"
#include "instances.hpp"
#include "mdual/cli.hpp"
#include "mdual/error.hpp"

using namespace mdual;

namespace {

Errc code_of(std::string_view text) {
  try {
    parse_spec(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("spec accepted: " << text);
  return Errc::InvalidArgument;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("minimal spec") {
  const SpecFile s = parse_spec("# twisted SL2\ngroup: SL2\nc: [1]\nN: 3\n");
  CHECK(s.n == 3);
  CHECK(s.metaplectic().kappa_bar().matrix() == IntMatrix{{-8}});
  const SpecFile custom = parse_spec(
      "group: custom\nrank: 2\nsimple_coroots: [[1, -1]]\nsimple_roots: [[1, -1]]\nbeta: [[2]]\nc: [0]\nN: 2\n");
  CHECK(custom.beta_ab == IntMatrix{{2}});
  CHECK(validate(custom.datum).type_string() == "A1");
}

TEST_CASE("spec errors") {
  CHECK(code_of("group: SL2\nc: [1]\nN: 0\n") == Errc::SemanticError);
  CHECK(code_of("group: GL2\nbeta: [[1]]\nc: [1]\nN: 2\n") == Errc::SemanticError);
  CHECK(code_of("group: GL2\nbeta: [[2, 0], [0, 2]]\nc: [1]\nN: 2\n") == Errc::SemanticError);
  CHECK(code_of("group: SL2\nN: 3\n") == Errc::SemanticError);
  CHECK(code_of("group: SL2\nc: [1, 2]\nN: 3\n") == Errc::SemanticError);
  CHECK(code_of("group: XY7\nc: [1]\nN: 3\n") == Errc::SemanticError);
  CHECK(code_of("group: SL2\nfoo: 1\nc: [1]\nN: 3\n") == Errc::SemanticError);
  CHECK(code_of("group: SL2\nc: [1\nN: 3\n") == Errc::SyntaxError);
  CHECK(code_of("group SL2\n") == Errc::SyntaxError);
  CHECK(code_of("group: custom\nrank: 1\nsimple_coroots: [[1]]\nsimple_roots: [[3]]\nc: [1]\nN: 3\n") ==
        Errc::PairingViolation);
  try {
    parse_spec("group: SL2\nc: [1]\nN: 0\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("3:") != std::string::npos);
  }
}

TEST_CASE("run on the twisted SL2 example") {
  const Report r = run(parse_spec("group: SL2\nc: [1]\nN: 3\n"), VerifyLevel::full);
  CHECK(r.dual_type == "A1");
  CHECK(r.delta == std::vector<Int>{3});
  CHECK(r.sharp_basis == std::vector<IntVector>{make_vector({3})});
  CHECK(r.sharp_index == 3);
  CHECK(r.all_passed());
  CHECK(r.checks.size() == 11);
}

TEST_CASE("classical GL2") {
  const Report r = run(parse_spec("group: GL2\nc: [1]\nN: 1\n"), VerifyLevel::fast);
  CHECK(r.delta == std::vector<Int>{1});
  CHECK(r.dual_type == "A1");
  CHECK(r.dual_central_rank == 1);
  CHECK(r.all_passed());
}

TEST_CASE("torus spec") {
  const Report r = run(parse_spec("group: T2\nbeta: [[2, 0], [0, 4]]\nN: 4\n"), VerifyLevel::fast);
  CHECK(r.dual_type == "T");
  CHECK(r.sharp_index == 2);
  CHECK(r.all_passed());
}

TEST_CASE("json round trip and human output") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const auto in = test::random_instance(rng, test::small_groups(), 12);
    SpecFile s;
    s.group = in.group;
    s.datum = standard_datum(in.group);
    s.beta_ab = in.beta;
    s.c = in.c;
    s.n = in.n;
    const Report r = run(s, trial % 2 ? VerifyLevel::fast : VerifyLevel::none);
    const std::string js = emit_json(r);
    CHECK_MESSAGE(parse_report(js) == r, in.label());
    CHECK(emit_json(parse_report(js)) == js);
    CHECK(emit_human(r).find("delta_i") != std::string::npos);
  }
  const Report bare = run(parse_spec("group: SL2\nc: [1]\nN: 3\n"), VerifyLevel::none);
  CHECK(bare.checks.empty());
  CHECK(emit_json(bare).find("\"checks\": {}") != std::string::npos);
  CHECK_THROWS_AS(parse_report("{"), Error);
  CHECK_THROWS_AS(parse_report("{\"schema\": \"other\"}"), Error);
}

TEST_CASE("catalog listing") {
  CHECK(catalog_text().find("Sp2n") != std::string::npos);
}

}
