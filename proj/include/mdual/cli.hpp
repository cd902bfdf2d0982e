#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mdual/metaplectic.hpp"

namespace mdual {

/// A parsed and validated input file.
///
///   # comment
///   group: SL2            catalog name, or "custom" with the three keys below
///   rank: 2               custom only
///   simple_coroots: [[1, -1]]
///   simple_roots:   [[1, -1]]
///   beta: [[2]]           on Lambda_ab coordinates; default zero
///   c: [1]                one integer per Dynkin component
///   N: 3
struct SpecFile {
  std::string group;
  RootDatum datum;
  IntMatrix beta_ab;
  std::vector<Int> c;
  Int n;

  MetaplecticDatum metaplectic() const;
};

/// Throws SyntaxError ("line:col: ...") or SemanticError; errors raised while
/// validating the root datum propagate with their own codes.
SpecFile parse_spec(std::string_view text);
SpecFile parse_spec_file(const std::string& path);

enum class VerifyLevel { none, fast, full };
enum class CheckStatus { pass, fail, skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct PiOne {
  std::vector<Int> torsion;
  Int free_rank = 0;

  friend bool operator==(const PiOne&, const PiOne&) = default;
};

struct ComponentEntry {
  std::string type;
  std::vector<Int> indices;

  friend bool operator==(const ComponentEntry&, const ComponentEntry&) = default;
};

struct Report {
  // input
  std::string group;
  Int rank = 0;
  std::vector<IntVector> simple_coroots;
  std::vector<IntVector> simple_roots;
  std::vector<IntVector> beta;
  std::vector<Int> c;
  Int n = 1;
  // G
  std::string cartan_type;
  std::vector<ComponentEntry> components;
  PiOne pi1;
  // forms and lattices
  std::vector<IntVector> kappa_bar;
  std::vector<Int> simple_norms;  // kappa_bar(a_i, a_i)
  std::vector<IntVector> sharp_basis;
  Int sharp_index = 1;
  std::vector<Int> delta;
  // dual
  std::vector<IntVector> dual_roots;
  std::vector<IntVector> dual_coroots;
  std::vector<IntVector> dual_cartan;
  std::string dual_type;
  PiOne dual_pi1;
  Int dual_central_rank = 0;
  std::vector<IntVector> dual_positive_roots;  // in Lambda
  std::vector<CheckResult> checks;

  bool all_passed() const;
  friend bool operator==(const Report&, const Report&) = default;
};

inline constexpr std::string_view kReportSchema = "mdual.report/1";

Report run(const SpecFile& spec, VerifyLevel level);
std::string emit_json(const Report& report);
std::string emit_human(const Report& report);
/// Throws SyntaxError on malformed JSON, SemanticError on schema mismatch.
Report parse_report(std::string_view json);

std::string catalog_text();

}  // namespace mdual
