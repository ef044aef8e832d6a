#include "fpp/fpp.h"

#include <fstream>
#include <new>
#include <string>

#include "fpp/checks.hpp"
#include "fpp/errors.hpp"
#include "fpp/lattice_group.hpp"

struct fpp_session {
  fpp::Workspace workspace;
};

struct fpp_report {
  fpp::Report report;
  std::string json;
  std::string text;
};

namespace {

thread_local std::string last_error;

fpp_status fail(fpp_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

template <class F>
fpp_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const fpp::DomainError& e) {
    return fail(FPP_ERR_DOMAIN, e.what());
  } catch (const fpp::PrecisionError& e) {
    return fail(FPP_ERR_PRECISION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FPP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FPP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FPP_ERR_INTERNAL, "unknown error");
  }
}

fpp::Config to_config(const fpp_config& c) {
  fpp::Config out;
  out.precision = c.precision;
  out.tolerance = c.tolerance;
  out.seed = c.seed;
  out.max_radius = c.max_radius;
  out.max_factor_exponent = c.max_factor_exponent;
  out.samples = c.samples;
  return out;
}

}  // namespace

extern "C" {

fpp_config fpp_config_default(void) {
  const fpp::Config d;
  return {d.precision, d.tolerance, d.seed, d.max_radius, d.max_factor_exponent, d.samples};
}

fpp_status fpp_session_create(const fpp_config* config, fpp_session** out) {
  if (!out) return fail(FPP_ERR_INVALID_ARGUMENT, "out is NULL");
  *out = nullptr;
  const fpp_config c = config ? *config : fpp_config_default();
  if (c.precision < 8 || c.precision > 1024) return fail(FPP_ERR_INVALID_ARGUMENT, "precision must lie in [8, 1024]");
  if (!(c.tolerance > 0)) return fail(FPP_ERR_INVALID_ARGUMENT, "tolerance must be positive");
  if (c.max_radius < 0 || c.max_radius > 3) return fail(FPP_ERR_INVALID_ARGUMENT, "max_radius must lie in [0, 3]");
  if (c.max_factor_exponent < 0 || c.max_factor_exponent > 4)
    return fail(FPP_ERR_INVALID_ARGUMENT, "max_factor_exponent must lie in [0, 4]");
  if (c.samples < 1) return fail(FPP_ERR_INVALID_ARGUMENT, "samples must be positive");
  return guarded([&] {
    *out = new fpp_session{fpp::Workspace(to_config(c))};
    return FPP_OK;
  });
}

void fpp_session_destroy(fpp_session* session) { delete session; }

fpp_status fpp_verify(fpp_session* session, const char* filter, fpp_report** out) {
  if (!session || !out) return fail(FPP_ERR_INVALID_ARGUMENT, "session or out is NULL");
  *out = nullptr;
  return guarded([&] {
    *out = new fpp_report{fpp::run_verify(session->workspace, filter ? filter : ""), {}, {}};
    return FPP_OK;
  });
}

fpp_status fpp_building(fpp_session* session, int radius, const int64_t* factors, size_t n_factors,
                        fpp_report** out) {
  if (!session || !out) return fail(FPP_ERR_INVALID_ARGUMENT, "session or out is NULL");
  if (n_factors > 0 && !factors) return fail(FPP_ERR_INVALID_ARGUMENT, "factors is NULL");
  *out = nullptr;
  std::vector<std::int64_t> list(factors, factors + n_factors);
  for (auto c : list)
    if (c < 1 || (c & (c - 1)) != 0) return fail(FPP_ERR_INVALID_ARGUMENT, "factors must be powers of 2");
  return guarded([&] {
    *out = new fpp_report{fpp::run_building(session->workspace, radius, list), {}, {}};
    return FPP_OK;
  });
}

fpp_status fpp_enumerate(fpp_session* session, int64_t factor, const char* path, size_t* count) {
  if (!session || !path) return fail(FPP_ERR_INVALID_ARGUMENT, "session or path is NULL");
  if (factor < 1 || (factor & (factor - 1)) != 0) return fail(FPP_ERR_INVALID_ARGUMENT, "factor must be a power of 2");
  return guarded([&] {
    const auto& list = session->workspace.similitudes(factor);
    std::ofstream os(path, std::ios::binary);
    if (!os) return fail(FPP_ERR_IO, std::string("cannot open ") + path);
    fpp::write_similitudes(os, factor, list);
    os.close();
    if (!os) return fail(FPP_ERR_IO, std::string("write failed for ") + path);
    if (count) *count = list.size();
    return FPP_OK;
  });
}

fpp_status fpp_report_json(fpp_report* report, const char** out) {
  if (!report || !out) return fail(FPP_ERR_INVALID_ARGUMENT, "report or out is NULL");
  return guarded([&] {
    if (report->json.empty()) report->json = report->report.to_json().dump(2) + "\n";
    *out = report->json.c_str();
    return FPP_OK;
  });
}

fpp_status fpp_report_text(fpp_report* report, const char** out) {
  if (!report || !out) return fail(FPP_ERR_INVALID_ARGUMENT, "report or out is NULL");
  return guarded([&] {
    if (report->text.empty()) report->text = report->report.to_text();
    *out = report->text.c_str();
    return FPP_OK;
  });
}

size_t fpp_report_failures(const fpp_report* report) { return report ? report->report.failures() : 0; }

void fpp_report_destroy(fpp_report* report) { delete report; }

const char* fpp_last_error(void) { return last_error.c_str(); }

const char* fpp_status_string(fpp_status status) {
  switch (status) {
    case FPP_OK: return "ok";
    case FPP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FPP_ERR_DOMAIN: return "domain error";
    case FPP_ERR_PRECISION: return "precision exhausted";
    case FPP_ERR_IO: return "i/o error";
    case FPP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* fpp_version(void) { return "1.0.0"; }

}  // extern "C"
