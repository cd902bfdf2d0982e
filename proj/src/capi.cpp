#include "mdual/mdual.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "mdual/cli.hpp"
#include "mdual/error.hpp"

struct mdual_datum {
  mdual::SpecFile spec;
  mdual::MetaplecticDatum md;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_kind;

void clear_error() {
  last_error.clear();
  last_kind.clear();
}

mdual_status record(mdual_status s, std::string kind, std::string msg) {
  last_kind = std::move(kind);
  last_error = std::move(msg);
  return s;
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
mdual_status guarded(F&& body) {
  clear_error();
  try {
    return body();
  } catch (const mdual::Error& e) {
    mdual_status s = MDUAL_ERR_MATH;
    if (e.code() == mdual::Errc::SyntaxError) s = MDUAL_ERR_SYNTAX;
    if (e.code() == mdual::Errc::SemanticError || e.code() == mdual::Errc::UnknownGroup ||
        e.code() == mdual::Errc::BetaNotEven || e.code() == mdual::Errc::BetaNotSymmetric)
      s = MDUAL_ERR_SEMANTIC;
    return record(s, std::string(mdual::errc_name(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return record(MDUAL_ERR_INTERNAL, "OutOfMemory", "out of memory");
  } catch (const std::exception& e) {
    return record(MDUAL_ERR_INTERNAL, "Internal", e.what());
  }
}

}  // namespace

extern "C" {

const char* mdual_last_error(void) { return last_error.c_str(); }
const char* mdual_last_error_kind(void) { return last_kind.c_str(); }
const char* mdual_version(void) { return "1.0.0"; }

mdual_status mdual_datum_from_spec(const char* text, mdual_datum** out) {
  if (!text || !out) return record(MDUAL_ERR_ARGUMENT, "InvalidArgument", "null argument");
  *out = nullptr;
  return guarded([&] {
    mdual::SpecFile spec = mdual::parse_spec(text);
    mdual::MetaplecticDatum md = spec.metaplectic();
    *out = new mdual_datum{std::move(spec), std::move(md)};
    return MDUAL_OK;
  });
}

void mdual_datum_free(mdual_datum* d) { delete d; }

size_t mdual_rank(const mdual_datum* d) { return d ? d->md.root_datum().rank() : 0; }

size_t mdual_semisimple_rank(const mdual_datum* d) {
  return d ? d->md.root_datum().semisimple_rank() : 0;
}

mdual_status mdual_delta(const mdual_datum* d, size_t i, char** out) {
  if (!d || !out) return record(MDUAL_ERR_ARGUMENT, "InvalidArgument", "null argument");
  if (i >= d->md.delta().size())
    return record(MDUAL_ERR_ARGUMENT, "InvalidArgument", "simple index out of range");
  return guarded([&] {
    *out = copy_out(d->md.delta(i).str());
    return MDUAL_OK;
  });
}

mdual_status mdual_dual_type(const mdual_datum* d, char** out) {
  if (!d || !out) return record(MDUAL_ERR_ARGUMENT, "InvalidArgument", "null argument");
  return guarded([&] {
    *out = copy_out(mdual::identify_cartan_type(mdual::dual_root_datum(d->md)).cartan_type);
    return MDUAL_OK;
  });
}

mdual_status mdual_report(const mdual_datum* d, mdual_verify verify, mdual_format format,
                          char** out, int* checks_failed) {
  if (!d || !out) return record(MDUAL_ERR_ARGUMENT, "InvalidArgument", "null argument");
  return guarded([&] {
    mdual::VerifyLevel level = verify == MDUAL_VERIFY_FULL   ? mdual::VerifyLevel::full
                               : verify == MDUAL_VERIFY_FAST ? mdual::VerifyLevel::fast
                                                             : mdual::VerifyLevel::none;
    mdual::Report r = mdual::run(d->spec, level);
    if (checks_failed) {
      *checks_failed = 0;
      for (const auto& c : r.checks) *checks_failed += c.status == mdual::CheckStatus::fail;
    }
    *out = copy_out(format == MDUAL_FORMAT_HUMAN ? mdual::emit_human(r) : mdual::emit_json(r));
    return MDUAL_OK;
  });
}

mdual_status mdual_json_normalize(const char* json, char** out) {
  if (!json || !out) return record(MDUAL_ERR_ARGUMENT, "InvalidArgument", "null argument");
  return guarded([&] {
    *out = copy_out(mdual::emit_json(mdual::parse_report(json)));
    return MDUAL_OK;
  });
}

mdual_status mdual_catalog(char** out) {
  if (!out) return record(MDUAL_ERR_ARGUMENT, "InvalidArgument", "null argument");
  return guarded([&] {
    *out = copy_out(mdual::catalog_text());
    return MDUAL_OK;
  });
}

void mdual_string_free(char* s) { std::free(s); }

}  // extern "C"
