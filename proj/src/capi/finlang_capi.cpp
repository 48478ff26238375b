#include "finlang/finlang.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "error.hpp"
#include "report.hpp"
#include "rootdata.hpp"

struct flc_group {
  finlang::GroupSpec spec;
};

struct flc_report {
  finlang::CountReport report;
  std::string json;
};

namespace {

thread_local std::string last_error;

flc_status fail(flc_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

// Runs body, translating exceptions into status codes.
template <class F>
flc_status guarded(F&& body) {
  try {
    return body();
  } catch (finlang::Error const& e) {
    return fail(static_cast<flc_status>(static_cast<int>(e.code())), e.what());
  } catch (std::bad_alloc const&) {
    return fail(FLC_ERR_INTERNAL, "out of memory");
  } catch (std::exception const& e) {
    return fail(FLC_ERR_INTERNAL, e.what());
  }
}

char* copy_string(std::string const& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool valid_pipeline(flc_pipeline p) {
  return p == FLC_PIPELINE_AUTO || p == FLC_PIPELINE_SPECTRAL || p == FLC_PIPELINE_STRATIFIED || p == FLC_PIPELINE_BOTH;
}

flc_status run(const flc_group* g, flc_pipeline p, const uint64_t* seed, flc_report** out, bool comparing) {
  if (!g || !out) return fail(FLC_ERR_ARGUMENT, "null argument");
  if (!valid_pipeline(p)) return fail(FLC_ERR_ARGUMENT, "unknown pipeline");
  *out = nullptr;
  return guarded([&] {
    std::optional<std::uint64_t> s;
    if (seed) s = *seed;
    auto const pipeline = static_cast<finlang::Pipeline>(p);
    auto r = std::make_unique<flc_report>();
    r->report = comparing ? finlang::compare_report(g->spec, pipeline, s) : finlang::count_report(g->spec, pipeline, s);
    r->json = r->report.text();
    bool const mismatch = r->report.has_match && !r->report.match;
    *out = r.release();
    if (mismatch) return fail(FLC_ERR_MISMATCH, "character count differs from the oracle or between pipelines");
    return FLC_OK;
  });
}

}  // namespace

extern "C" {

flc_status flc_group_parse(const char* text, int64_t q_override, flc_group** out) {
  if (!text || !out) return fail(FLC_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new flc_group{finlang::parse_group_spec(text, q_override)};
    return FLC_OK;
  });
}

flc_status flc_group_named(const char* name, int64_t q, flc_group** out) {
  if (!name || !out) return fail(FLC_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new flc_group{finlang::named_group_spec(name, q)};
    return FLC_OK;
  });
}

void flc_group_free(flc_group* g) { delete g; }

flc_status flc_group_is_connected(const flc_group* g, int* out) {
  if (!g || !out) return fail(FLC_ERR_ARGUMENT, "null argument");
  *out = g->spec.connected ? 1 : 0;
  return FLC_OK;
}

flc_status flc_whittaker_torsor_size(const flc_group* g, int64_t* out) {
  if (!g || !out) return fail(FLC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = finlang::whittaker_torsor_size(g->spec);
    return FLC_OK;
  });
}

flc_status flc_count(const flc_group* g, flc_pipeline p, const uint64_t* seed, flc_report** out) {
  return run(g, p, seed, out, false);
}

flc_status flc_compare(const flc_group* g, flc_pipeline p, const uint64_t* seed, flc_report** out) {
  return run(g, p, seed, out, true);
}

flc_status flc_report_total(const flc_report* r, int64_t* out) {
  if (!r || !out) return fail(FLC_ERR_ARGUMENT, "null argument");
  *out = r->report.total;
  return FLC_OK;
}

flc_status flc_report_json(const flc_report* r, const char** out) {
  if (!r || !out) return fail(FLC_ERR_ARGUMENT, "null argument");
  *out = r->json.c_str();
  return FLC_OK;
}

flc_status flc_report_match(const flc_report* r, int* out) {
  if (!r || !out) return fail(FLC_ERR_ARGUMENT, "null argument");
  *out = r->report.has_match ? (r->report.match ? 1 : 0) : -1;
  return FLC_OK;
}

void flc_report_free(flc_report* r) { delete r; }

flc_status flc_cells_report(const char* type, char** out) {
  if (!type || !out) return fail(FLC_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = copy_string(finlang::cells_report(type));
    return FLC_OK;
  });
}

flc_status flc_tables_report(const char* type, char** out) {
  if (!type || !out) return fail(FLC_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = copy_string(finlang::tables_report(type));
    return FLC_OK;
  });
}

flc_status flc_oracle_report(const char* name, int64_t q, char** out) {
  if (!name || !out) return fail(FLC_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = copy_string(finlang::oracle_report(name, q));
    return FLC_OK;
  });
}

void flc_string_free(char* s) { delete[] s; }

const char* flc_last_error(void) { return last_error.c_str(); }

}  // extern "C"
