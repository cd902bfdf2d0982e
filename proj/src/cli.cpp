#include "mdual/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mdual/error.hpp"
#include "mdual/reps.hpp"
#include "mdual/tame_symbol.hpp"

namespace mdual {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Spec parsing

namespace {

struct Value {
  enum class Kind { integer, word, list } kind = Kind::integer;
  Int integer;
  std::string word;
  std::vector<Value> items;
  std::size_t line = 0, col = 0;
};

std::string at(std::size_t line, std::size_t col) {
  return std::to_string(line) + ":" + std::to_string(col) + ": ";
}

class SpecLexer {
 public:
  explicit SpecLexer(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  // Spaces, tabs and comments; newlines too when `newlines` is set.
  void skip_blank(bool newlines) {
    while (!done()) {
      char ch = peek();
      if (ch == '#') {
        while (!done() && peek() != '\n') advance();
      } else if (ch == ' ' || ch == '\t' || ch == '\r' || (newlines && ch == '\n')) {
        advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::SyntaxError, at(line_, col_) + msg);
  }

  std::string identifier() {
    std::string out;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      out += peek();
      advance();
    }
    return out;
  }

  Value value() {
    Value v;
    v.line = line_;
    v.col = col_;
    char ch = peek();
    if (ch == '[') {
      v.kind = Value::Kind::list;
      advance();
      skip_blank(true);
      if (peek() == ']') {
        advance();
        return v;
      }
      for (;;) {
        skip_blank(true);
        v.items.push_back(value());
        skip_blank(true);
        if (peek() == ',') {
          advance();
          continue;
        }
        if (peek() == ']') {
          advance();
          return v;
        }
        if (done()) error("unterminated '['");
        error(std::string("expected ',' or ']', found '") + peek() + "'");
      }
    }
    if (ch == '-' || ch == '+' || std::isdigit(static_cast<unsigned char>(ch))) {
      v.kind = Value::Kind::integer;
      std::string digits;
      if (ch == '-' || ch == '+') {
        digits += ch;
        advance();
      }
      while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
        digits += peek();
        advance();
      }
      if (digits.empty() || digits == "-" || digits == "+") error("expected digits");
      if (digits[0] == '+') digits.erase(0, 1);
      v.integer = Int(digits);
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      v.kind = Value::Kind::word;
      v.word = identifier();
      return v;
    }
    if (done()) error("expected a value, found end of input");
    error(std::string("unexpected character '") + ch + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

struct Entry {
  Value value;
  std::size_t line, col;
};

[[noreturn]] void semantic(const Value& v, const std::string& msg) {
  fail(Errc::SemanticError, at(v.line, v.col) + msg);
}

Int as_int(const Value& v, const std::string& key) {
  if (v.kind != Value::Kind::integer) semantic(v, key + ": expected an integer");
  return v.integer;
}

IntVector as_vector(const Value& v, const std::string& key) {
  if (v.kind != Value::Kind::list) semantic(v, key + ": expected a list of integers");
  IntVector out;
  for (const auto& item : v.items) out.push_back(as_int(item, key));
  return out;
}

std::vector<IntVector> as_rows(const Value& v, const std::string& key, std::size_t cols) {
  if (v.kind != Value::Kind::list) semantic(v, key + ": expected a matrix [[...], ...]");
  std::vector<IntVector> rows;
  for (const auto& item : v.items) {
    IntVector row = as_vector(item, key);
    if (row.size() != cols)
      semantic(item, key + ": row has " + std::to_string(row.size()) + " entries, expected " +
                         std::to_string(cols));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

MetaplecticDatum SpecFile::metaplectic() const {
  return MetaplecticDatum::assemble(datum, beta_ab, c, n);
}

SpecFile parse_spec(std::string_view text) {
  SpecLexer lex(text);
  std::map<std::string, Entry> entries;
  for (;;) {
    lex.skip_blank(true);
    if (lex.done()) break;
    const std::size_t line = lex.line(), col = lex.col();
    if (!std::isalpha(static_cast<unsigned char>(lex.peek()))) lex.error("expected a key");
    std::string key = lex.identifier();
    lex.skip_blank(false);
    if (lex.peek() != ':') lex.error("expected ':' after '" + key + "'");
    lex.advance();
    lex.skip_blank(false);
    if (lex.done() || lex.peek() == '\n') lex.error("missing value for '" + key + "'");
    Value v = lex.value();
    lex.skip_blank(false);
    if (!lex.done() && lex.peek() != '\n') lex.error("trailing characters after value");
    static const std::set<std::string> known{"group", "rank", "simple_coroots", "simple_roots",
                                             "beta", "c", "N"};
    if (!known.count(key)) fail(Errc::SemanticError, at(line, col) + "unknown key '" + key + "'");
    if (entries.count(key)) fail(Errc::SemanticError, at(line, col) + "duplicate key '" + key + "'");
    entries.emplace(key, Entry{std::move(v), line, col});
  }

  auto require = [&](const std::string& key) -> const Entry& {
    auto it = entries.find(key);
    if (it == entries.end()) fail(Errc::SemanticError, "missing required key '" + key + "'");
    return it->second;
  };

  SpecFile spec;
  const Value& g = require("group").value;
  if (g.kind != Value::Kind::word) semantic(g, "group: expected a name");
  spec.group = g.word;
  if (spec.group == "custom") {
    const Value& rv = require("rank").value;
    Int rank = as_int(rv, "rank");
    if (rank < 0 || rank > 64) semantic(rv, "rank: expected 0..64");
    const auto r = static_cast<std::size_t>(rank);
    auto cor = as_rows(require("simple_coroots").value, "simple_coroots", r);
    auto rts = as_rows(require("simple_roots").value, "simple_roots", r);
    if (cor.size() != rts.size())
      semantic(require("simple_roots").value, "simple_roots: expected " + std::to_string(cor.size()) +
                                                  " rows to match simple_coroots");
    spec.datum = RootDatum(r, std::move(cor), std::move(rts), "custom");
  } else {
    for (const char* key : {"rank", "simple_coroots", "simple_roots"})
      if (entries.count(key))
        fail(Errc::SemanticError, at(entries.at(key).line, entries.at(key).col) + "'" + key +
                                      "' is only allowed with group: custom");
    try {
      spec.datum = standard_datum(spec.group);
    } catch (const Error& e) {
      semantic(g, e.what());
    }
  }
  const DynkinComponents dc = validate(spec.datum);
  const std::size_t ab = abelianization(spec.datum).ab_rank();

  spec.beta_ab = IntMatrix(ab, ab);
  if (entries.count("beta")) {
    const Value& bv = entries.at("beta").value;
    auto rows = as_rows(bv, "beta", ab);
    if (rows.size() != ab)
      semantic(bv, "beta: expected a " + std::to_string(ab) + "x" + std::to_string(ab) +
                       " matrix on Lambda_ab");
    if (ab) spec.beta_ab = IntMatrix::from_rows(rows, ab);
    if (!spec.beta_ab.is_symmetric()) semantic(bv, "beta: matrix is not symmetric");
    for (std::size_t i = 0; i < ab; ++i)
      if (spec.beta_ab(i, i) % 2 != 0)
        semantic(bv, "beta: diagonal entry " + std::to_string(i) + " is odd; beta must be even");
  }

  const std::size_t nj = dc.components.size();
  if (entries.count("c")) {
    const Value& cv = entries.at("c").value;
    spec.c = as_vector(cv, "c");
    if (spec.c.size() != nj)
      semantic(cv, "c: expected " + std::to_string(nj) + " entries (one per Dynkin component " +
                       dc.type_string() + "), got " + std::to_string(spec.c.size()));
  } else if (nj > 0) {
    fail(Errc::SemanticError, "missing required key 'c' (" + std::to_string(nj) + " components)");
  }

  const Value& nv = require("N").value;
  spec.n = as_int(nv, "N");
  if (spec.n < 1) semantic(nv, "N: must be at least 1");
  return spec;
}

SpecFile parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::SemanticError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

// ---------------------------------------------------------------------------
// Pipeline

bool Report::all_passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

namespace {

std::vector<IntVector> rows_of(const IntMatrix& m) { return m.row_vectors(); }

std::set<IntVector> as_set(const std::vector<IntVector>& v) { return {v.begin(), v.end()}; }

class Checker {
 public:
  explicit Checker(std::vector<CheckResult>& out) : out_(out) {}

  // `body` returns the detail; throws or returns nullopt-as-failure via flag.
  void run(const std::string& name, const std::function<bool(std::string&)>& body) {
    CheckResult r{name, CheckStatus::pass, ""};
    try {
      if (!body(r.detail)) r.status = CheckStatus::fail;
    } catch (const Error& e) {
      r.status = e.code() == Errc::OrderBoundExceeded || e.code() == Errc::BoundTooSmall
                     ? CheckStatus::skip
                     : CheckStatus::fail;
      r.detail = e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::vector<CheckResult>& out_;
};

void fast_checks(const SpecFile& spec, const MetaplecticDatum& md, const DualRootDatum& d,
                 std::vector<CheckResult>& out) {
  Checker ch(out);
  const RootDatum& rd = md.root_datum();

  ch.run("delta_bruteforce", [&](std::string& detail) {
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i)
      if (delta_bruteforce(md, i) != md.delta(i)) {
        detail = "index " + std::to_string(i);
        return false;
      }
    detail = std::to_string(rd.semisimple_rank()) + " simple indices";
    return true;
  });

  ch.run("dual_root_datum", [&](std::string& detail) {
    const RootDatum dr = d.as_root_datum();
    validate(dr);
    const IntMatrix a = rd.cartan_matrix();
    const IntMatrix b = d.cartan_matrix();
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (b(i, j) * md.delta(i) != a(i, j) * md.delta(j)) {
          detail = "Cartan entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
          return false;
        }
    detail = "valid, Cartan entries (delta_j / delta_i) A_ij";
    return true;
  });

  ch.run("reflection_consistency", [&](std::string& detail) {
    const RootDatum dr = d.as_root_datum();
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i)
      for (std::size_t k = 0; k < d.rank(); ++k) {
        IntVector y = zero_vector(d.rank());
        y[k] = 1;
        if (d.to_ambient(dr.reflect(i, y)) != rd.reflect(i, d.to_ambient(y))) {
          detail = "reflection " + std::to_string(i);
          return false;
        }
      }
    detail = "dual reflections restrict G reflections";
    return true;
  });

  ch.run("dual_positive_roots", [&](std::string& detail) {
    std::vector<IntVector> closure;
    for (const auto& y : positive_coroots(d.as_root_datum())) closure.push_back(d.to_ambient(y));
    detail = std::to_string(closure.size()) + " positive roots";
    return as_set(closure) == as_set(dual_positive_roots(md));
  });

  if (md.level() == 1) {
    ch.run("classical_dual", [&](std::string& detail) {
      for (const auto& x : md.delta())
        if (x != 1) return false;
      if (!md.lambda_sharp().is_full_rank() || md.lambda_sharp().index() != 1) return false;
      const RootDatum g = d.as_group_datum();
      if (!(g == rd.swapped())) {
        detail = "dual datum differs from roots/coroots exchanged";
        return false;
      }
      if (spec.group != "custom") {
        const std::string name = classical_dual_name(spec.group);
        if (!isomorphic(g, standard_datum(name))) {
          detail = "not isomorphic to " + name;
          return false;
        }
        detail = "isomorphic to " + name;
      } else {
        detail = "roots and coroots exchanged";
      }
      return true;
    });
  }

  ch.run("commutator_on_sharp", [&](std::string& detail) {
    const auto& s = md.lambda_sharp().basis();
    for (const auto& a : s)
      for (const auto& b : s) commutator_on_sharp(md, a, b);
    detail = md.level() % 2 == 0 ? "trivial on Lambda_sharp (N even)" : "sign exponents computed";
    return true;
  });

  ch.run("tame_identities", [&](std::string& detail) {
    using L = Laurent<Rational>;
    const Rational one(1);
    const L t = L::t(one);
    const L f = L::series(1, {Rational(2), Rational(3), Rational(-1)});
    const L g = L::series(-2, {Rational(-5), Rational(1, 2)});
    if (tame(t, t) != -1 || tame(f, g) * tame(g, f) != 1) return false;
    if (tame(f * g, t) != tame(f, t) * tame(g, t)) return false;
    const L u = L::series(0, {Rational(3), Rational(1)});
    if (tame(u, L::constant(one) - u) != 1) return false;

    const IntMatrix beta = md.beta_ab() ? *md.beta_ab() : IntMatrix(0, 0);
    const std::size_t ab = beta.rows();
    if (ab > 0) {
      const CocycleB b = CocycleB::canonical(beta);
      for (std::size_t i = 0; i < ab; ++i)
        for (std::size_t j = 0; j < ab; ++j) {
          IntVector li = zero_vector(ab), lj = zero_vector(ab);
          li[i] = 1;
          lj[j] = 1;
          auto u1 = TorusElement<Rational>::pure(li, f);
          auto u2 = TorusElement<Rational>::pure(lj, g);
          if (commutator(b, u1, u2, one) != field_pow(tame(f, g), -beta(i, j))) return false;
          if (loop_rotation_character(b, li, Rational(2)) != field_pow(Rational(2), -(beta(i, i) / 2)))
            return false;
        }
    }
    const std::size_t r = rd.rank();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        IntVector li = zero_vector(r), lj = zero_vector(r);
        li[i] = 1;
        lj[j] = 1;
        Rational v = kappa_commutator<Rational>(md, std::nullopt, li, t, lj, t);
        if (v != (md.kappa_bar()(li, lj) % 2 == 0 ? 1 : -1)) return false;
      }
    detail = "skew, bimultiplicative, Steinberg, commutator, loop rotation";
    return true;
  });

  ch.run("local_systems", [&](std::string& detail) {
    const auto gens = sharp_dominant_generators(md, Int(256));
    for (const auto& l : gens)
      if (!local_system_criterion(md, l).in_sharp) return false;
    detail = std::to_string(gens.size()) + " dominant generators of Lambda_sharp";
    return true;
  });
}

void full_checks(const MetaplecticDatum& md, const DualRootDatum& d, std::vector<CheckResult>& out) {
  Checker ch(out);
  const RootDatum& rd = md.root_datum();

  ch.run("weyl_equality", [&](std::string& detail) {
    const auto wg = restricted_weyl_group(md, d, 384);
    const auto wd = weyl_group(d.as_root_datum(), 384);
    detail = "|W| = " + std::to_string(wg.size());
    return wg == wd;
  });

  ch.run("levi_compatibility", [&](std::string& detail) {
    std::vector<std::vector<std::size_t>> subsets{{}};
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) subsets.push_back({i});
    for (const auto& s : subsets) {
      const MetaplecticDatum m = levi_metaplectic(md, s);
      const DualRootDatum dm = dual_root_datum(m);
      if (!(dm.as_root_datum() == d.as_root_datum().levi(s))) return false;
      for (std::size_t k = 0; k < s.size(); ++k)
        if (m.delta(k) != md.delta(s[k])) return false;
    }
    detail = std::to_string(subsets.size()) + " Levi subsets";
    return true;
  });

  ch.run("monodromy", [&](std::string& detail) {
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
      const Int a = md.delta(i);
      Int b = 1;
      while (monodromy_exponent(md, i, a, b) != 0) ++b;
      if (b != md.delta(i)) return false;
    }
    detail = "first trivial monodromy at b = delta_i";
    return true;
  });

  ch.run("multiplicity_one", [&](std::string& detail) {
    const auto gens = sharp_dominant_generators(md, Int(64));
    std::vector<IntVector> sample;
    for (std::size_t k = 0; k < gens.size() && k < 4; ++k) sample.push_back(d.from_ambient(gens[k]));
    const std::size_t base = sample.size();
    for (std::size_t a = 0; a < base; ++a) sample.push_back(sample[a] + sample[a]);
    const RootDatum dr = d.as_root_datum();
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < sample.size(); ++a)
      for (std::size_t b = a; b < sample.size(); ++b) {
        if (dimension(dr, sample[a]) * dimension(dr, sample[b]) > 4000) continue;
        auto dec = tensor_decompose(dr, sample[a], sample[b]);
        if (dec[sample[a] + sample[b]] != 1) return false;
        if (!verify_weight_bound(dr, sample[a])) return false;
        ++pairs;
      }
    detail = std::to_string(pairs) + " tensor products";
    return true;
  });
}

}  // namespace

Report run(const SpecFile& spec, VerifyLevel level) {
  const MetaplecticDatum md = spec.metaplectic();
  const RootDatum& rd = md.root_datum();
  const DualRootDatum d = dual_root_datum(md);

  Report r;
  r.group = spec.group;
  r.rank = rd.rank();
  r.simple_coroots = rd.simple_coroots();
  r.simple_roots = rd.simple_roots();
  r.beta = rows_of(spec.beta_ab);
  r.c = spec.c;
  r.n = spec.n;

  r.cartan_type = md.components().type_string();
  for (const auto& comp : md.components().components) {
    ComponentEntry e{comp.label(), {}};
    for (auto i : comp.indices) e.indices.push_back(i);
    r.components.push_back(std::move(e));
  }
  const CowtLatticeQuotients q = abelianization(rd);
  r.pi1 = {q.pi1_torsion, q.pi1_free_rank};

  r.kappa_bar = rows_of(md.kappa_bar().matrix());
  for (const auto& a : rd.simple_coroots()) r.simple_norms.push_back(md.kappa_bar()(a, a));
  r.sharp_basis = md.lambda_sharp().basis();
  r.sharp_index = md.lambda_sharp().index();
  r.delta = md.delta();

  r.dual_roots = d.simple_roots();
  r.dual_coroots = d.simple_coroots();
  r.dual_cartan = rows_of(d.cartan_matrix());
  const DualType t = identify_cartan_type(d);
  r.dual_type = t.cartan_type;
  r.dual_pi1 = {t.pi1_torsion, t.pi1_free_rank};
  r.dual_central_rank = t.central_rank;
  r.dual_positive_roots = dual_positive_roots(md);

  if (level != VerifyLevel::none) fast_checks(spec, md, d, r.checks);
  if (level == VerifyLevel::full) full_checks(md, d, r.checks);
  return r;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

ordered_json num(const Int& x) { return x.str(); }

ordered_json vec(const std::vector<Int>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(num(x));
  return a;
}

ordered_json mat(const std::vector<IntVector>& m) {
  ordered_json a = ordered_json::array();
  for (const auto& row : m) a.push_back(vec(row));
  return a;
}

ordered_json pi1_json(const PiOne& p) {
  ordered_json o;
  o["torsion"] = vec(p.torsion);
  o["free_rank"] = num(p.free_rank);
  return o;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "fail";
}

[[noreturn]] void schema_error(const std::string& what) {
  fail(Errc::SemanticError, "report does not match " + std::string(kReportSchema) + ": " + what);
}

const ordered_json& field(const ordered_json& o, const char* key) {
  if (!o.is_object() || !o.contains(key)) schema_error(std::string("missing field '") + key + "'");
  return o.at(key);
}

Int read_num(const ordered_json& j) {
  if (!j.is_string()) schema_error("integers are encoded as decimal strings");
  const std::string s = j.get<std::string>();
  const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
  if (s.size() == start || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                        [](unsigned char c) { return std::isdigit(c); }))
    schema_error("'" + s + "' is not an integer");
  return Int(s);
}

std::vector<Int> read_vec(const ordered_json& j) {
  if (!j.is_array()) schema_error("expected an array");
  std::vector<Int> out;
  for (const auto& x : j) out.push_back(read_num(x));
  return out;
}

std::vector<IntVector> read_mat(const ordered_json& j) {
  if (!j.is_array()) schema_error("expected an array of arrays");
  std::vector<IntVector> out;
  for (const auto& x : j) out.push_back(read_vec(x));
  return out;
}

PiOne read_pi1(const ordered_json& j) {
  return {read_vec(field(j, "torsion")), read_num(field(j, "free_rank"))};
}

std::string read_str(const ordered_json& j) {
  if (!j.is_string()) schema_error("expected a string");
  return j.get<std::string>();
}

}  // namespace

std::string emit_json(const Report& r) {
  ordered_json o;
  o["schema"] = std::string(kReportSchema);

  ordered_json in;
  in["group"] = r.group;
  in["rank"] = num(r.rank);
  in["simple_coroots"] = mat(r.simple_coroots);
  in["simple_roots"] = mat(r.simple_roots);
  in["beta"] = mat(r.beta);
  in["c"] = vec(r.c);
  in["N"] = num(r.n);
  o["input"] = in;

  ordered_json g;
  g["cartan_type"] = r.cartan_type;
  g["components"] = ordered_json::array();
  for (const auto& c : r.components) {
    ordered_json e;
    e["type"] = c.type;
    e["indices"] = vec(c.indices);
    g["components"].push_back(e);
  }
  g["pi1"] = pi1_json(r.pi1);
  o["group"] = g;

  o["kappa_bar"] = mat(r.kappa_bar);
  o["simple_norms"] = vec(r.simple_norms);
  ordered_json ls;
  ls["basis"] = mat(r.sharp_basis);
  ls["index"] = num(r.sharp_index);
  o["lambda_sharp"] = ls;
  o["delta"] = vec(r.delta);

  ordered_json d;
  d["simple_roots"] = mat(r.dual_roots);
  d["simple_coroots"] = mat(r.dual_coroots);
  d["cartan_matrix"] = mat(r.dual_cartan);
  d["cartan_type"] = r.dual_type;
  d["pi1"] = pi1_json(r.dual_pi1);
  d["central_rank"] = num(r.dual_central_rank);
  d["positive_roots"] = mat(r.dual_positive_roots);
  o["dual"] = d;

  ordered_json checks = ordered_json::object();
  for (const auto& c : r.checks) {
    ordered_json e;
    e["status"] = status_name(c.status);
    e["detail"] = c.detail;
    checks[c.name] = e;
  }
  o["checks"] = checks;
  return o.dump(2) + "\n";
}

Report parse_report(std::string_view text) {
  ordered_json o;
  try {
    o = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::SyntaxError, e.what());
  }
  if (read_str(field(o, "schema")) != kReportSchema) schema_error("unknown schema version");
  Report r;
  const auto& in = field(o, "input");
  r.group = read_str(field(in, "group"));
  r.rank = read_num(field(in, "rank"));
  r.simple_coroots = read_mat(field(in, "simple_coroots"));
  r.simple_roots = read_mat(field(in, "simple_roots"));
  r.beta = read_mat(field(in, "beta"));
  r.c = read_vec(field(in, "c"));
  r.n = read_num(field(in, "N"));

  const auto& g = field(o, "group");
  r.cartan_type = read_str(field(g, "cartan_type"));
  for (const auto& e : field(g, "components"))
    r.components.push_back({read_str(field(e, "type")), read_vec(field(e, "indices"))});
  r.pi1 = read_pi1(field(g, "pi1"));

  r.kappa_bar = read_mat(field(o, "kappa_bar"));
  r.simple_norms = read_vec(field(o, "simple_norms"));
  r.sharp_basis = read_mat(field(field(o, "lambda_sharp"), "basis"));
  r.sharp_index = read_num(field(field(o, "lambda_sharp"), "index"));
  r.delta = read_vec(field(o, "delta"));

  const auto& d = field(o, "dual");
  r.dual_roots = read_mat(field(d, "simple_roots"));
  r.dual_coroots = read_mat(field(d, "simple_coroots"));
  r.dual_cartan = read_mat(field(d, "cartan_matrix"));
  r.dual_type = read_str(field(d, "cartan_type"));
  r.dual_pi1 = read_pi1(field(d, "pi1"));
  r.dual_central_rank = read_num(field(d, "central_rank"));
  r.dual_positive_roots = read_mat(field(d, "positive_roots"));

  const auto& checks = field(o, "checks");
  if (!checks.is_object()) schema_error("'checks' must be an object");
  for (const auto& [name, e] : checks.items()) {
    const std::string s = read_str(field(e, "status"));
    CheckStatus st = s == "pass" ? CheckStatus::pass : s == "skip" ? CheckStatus::skip : CheckStatus::fail;
    if (s != "pass" && s != "skip" && s != "fail") schema_error("unknown check status '" + s + "'");
    r.checks.push_back({name, st, read_str(field(e, "detail"))});
  }
  return r;
}

// ---------------------------------------------------------------------------
// Human format

namespace {

std::string pi1_text(const PiOne& p) {
  std::string out;
  for (const auto& t : p.torsion) out += (out.empty() ? "" : " x ") + std::string("Z/") + t.str();
  if (p.free_rank > 0) out += (out.empty() ? "" : " x ") + std::string("Z^") + p.free_rank.str();
  return out.empty() ? "1" : out;
}

std::string rows_text(const std::vector<IntVector>& rows) {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) out += (i ? ", " : "") + to_string(rows[i]);
  return out + "]";
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

}  // namespace

std::string emit_human(const Report& r) {
  std::ostringstream os;
  os << "group         " << r.group << "  (" << r.cartan_type << ", rank " << r.rank
     << ", pi1 = " << pi1_text(r.pi1) << ")\n";
  os << "level N       " << r.n << "\n";
  os << "c             " << to_string(r.c) << "\n";
  os << "kappa_bar     " << rows_text(r.kappa_bar) << "\n";
  os << "Lambda_sharp  " << rows_text(r.sharp_basis) << "  (index " << r.sharp_index << ")\n\n";

  os << "delta\n";
  os << "  " << pad("i", 4) << pad("a_i", 20) << pad("kappa_bar(a_i,a_i)", 20) << "delta_i\n";
  for (std::size_t i = 0; i < r.delta.size(); ++i)
    os << "  " << pad(std::to_string(i), 4) << pad(to_string(r.simple_coroots[i]), 20)
       << pad(r.simple_norms[i].str(), 20) << r.delta[i] << "\n";

  os << "\ndual group    " << r.dual_type << "  (pi1 = " << pi1_text(r.dual_pi1)
     << ", central rank " << r.dual_central_rank << ")\n";
  os << "  simple roots    " << rows_text(r.dual_roots) << "\n";
  os << "  simple coroots  " << rows_text(r.dual_coroots) << "\n";
  os << "  Cartan matrix   " << rows_text(r.dual_cartan) << "\n";
  os << "  positive roots  " << rows_text(r.dual_positive_roots) << "  (in Lambda)\n";

  if (!r.checks.empty()) {
    os << "\nchecks\n";
    for (const auto& c : r.checks)
      os << "  " << pad(status_name(c.status), 6) << pad(c.name, 24) << c.detail << "\n";
  }
  return os.str();
}

std::string catalog_text() {
  std::string out;
  for (const auto& line : catalog_descriptions()) out += line + "\n";
  return out;
}

}  // namespace mdual
