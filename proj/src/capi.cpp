// Copyright 2026 The zetaverify authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zetaverify.h"

#include <cstring>
#include <string>

#include "errors.hpp"
#include "identities.hpp"
#include "zero_catalog.hpp"
#include "zeta.hpp"

namespace {

thread_local std::string g_last_error;

zv_status code_of(zv::Errc c) {
  using zv::Errc;
  switch (c) {
    case Errc::invalid_argument: return ZV_ERR_INVALID_ARGUMENT;
    case Errc::pole_at_one: return ZV_ERR_POLE_AT_ONE;
    case Errc::params_insufficient: return ZV_ERR_PARAMS_INSUFFICIENT;
    case Errc::zero_on_path: return ZV_ERR_ZERO_ON_PATH;
    case Errc::parse: return ZV_ERR_PARSE;
    case Errc::order: return ZV_ERR_ORDER;
    case Errc::range: return ZV_ERR_RANGE;
    case Errc::degenerate_argument: return ZV_ERR_DEGENERATE_ARGUMENT;
    case Errc::truncation_exceeds_table: return ZV_ERR_TRUNCATION_EXCEEDS_TABLE;
    case Errc::io: return ZV_ERR_IO;
    case Errc::internal: return ZV_ERR_INTERNAL;
  }
  return ZV_ERR_INTERNAL;
}

template <typename F>
zv_status guarded(F&& fn) {
  try {
    fn();
    g_last_error.clear();
    return ZV_OK;
  } catch (const zv::Error& e) {
    g_last_error = e.what();
    return code_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ZV_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return ZV_ERR_INTERNAL;
  }
}

}  // namespace

struct zv_catalog {
  zv::ZeroCatalog cat;
};

struct zv_case {
  zv::ident::CaseSpec spec;
};

struct zv_result {
  zv::ident::ResidualReport report;
};

extern "C" {

const char* zv_version(void) { return "1.0.0"; }

const char* zv_status_message(zv_status s) {
  switch (s) {
    case ZV_OK: return "ok";
    case ZV_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ZV_ERR_POLE_AT_ONE: return "pole at s = 1";
    case ZV_ERR_PARAMS_INSUFFICIENT: return "zeta parameters insufficient for target accuracy";
    case ZV_ERR_ZERO_ON_PATH: return "tracking path passes through a catalogued zero";
    case ZV_ERR_PARSE: return "parse error";
    case ZV_ERR_ORDER: return "ordinates not strictly increasing";
    case ZV_ERR_RANGE: return "ordinate outside the expected range";
    case ZV_ERR_DEGENERATE_ARGUMENT: return "degenerate logarithm argument";
    case ZV_ERR_TRUNCATION_EXCEEDS_TABLE: return "truncation height exceeds the zero table";
    case ZV_ERR_IO: return "i/o error";
    case ZV_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* zv_last_error(void) { return g_last_error.c_str(); }

zv_status zv_catalog_load(const char* path, int use_cache, zv_catalog** out) {
  if (!path || !out) return ZV_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    auto* h = new zv_catalog{zv::ZeroCatalog::load_odlyzko(path, use_cache != 0)};
    *out = h;
  });
}

void zv_catalog_free(zv_catalog* cat) { delete cat; }

uint64_t zv_catalog_count(const zv_catalog* cat) { return cat ? cat->cat.count() : 0; }

double zv_catalog_t_max(const zv_catalog* cat) { return cat ? cat->cat.t_max() : 0.0; }

zv_status zv_catalog_ordinate(const zv_catalog* cat, uint64_t index, double* out) {
  if (!cat || !out || index >= cat->cat.count()) return ZV_ERR_INVALID_ARGUMENT;
  *out = cat->cat.ordinates()[size_t(index)];
  return ZV_OK;
}

zv_status zv_catalog_count_up_to(const zv_catalog* cat, double T, uint64_t* out) {
  if (!cat || !out) return ZV_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = cat->cat.zeros_up_to(T).size(); });
}

zv_status zv_case_create(const zv_case_params* params, zv_case** out) {
  if (!params || !params->theorem || !out) return ZV_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    const auto th = zv::ident::theorem_from_name(params->theorem);
    if (!th)
      throw zv::Error(zv::Errc::invalid_argument,
                      std::string("unknown theorem id: ") + params->theorem);
    zv::ident::CaseSpec spec;
    spec.theorem = *th;
    spec.a = params->a;
    spec.b_or_alpha = params->b_or_alpha;
    spec.T = params->T;
    if (params->tol > 0) spec.tol = params->tol;
    if (params->wang_radius > 0) spec.wang_radius = params->wang_radius;
    if (params->panel_budget > 0) spec.panel_budget = params->panel_budget;
    zv::ident::validate(spec);
    *out = new zv_case{spec};
  });
}

void zv_case_free(zv_case* c) { delete c; }

zv_status zv_evaluate(const zv_case* c, const zv_catalog* cat, zv_result** out) {
  if (!c || !out) return ZV_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    auto rep = zv::ident::evaluate(c->spec, cat ? &cat->cat : nullptr);
    *out = new zv_result{std::move(rep)};
  });
}

void zv_result_free(zv_result* r) { delete r; }

zv_status zv_result_breakdown(const zv_result* r, zv_breakdown* out) {
  if (!r || !out) return ZV_ERR_INVALID_ARGUMENT;
  const auto& rep = r->report;
  out->lhs = rep.lhs;
  out->rhs = rep.rhs;
  out->delta = rep.breakdown.residual;
  out->line_integral = rep.breakdown.line_integral;
  out->closed_form = rep.breakdown.closed_form;
  out->pole_term = rep.breakdown.pole_term;
  out->zero_sum = rep.breakdown.zero_sum;
  out->sigma_integral = rep.breakdown.sigma_integral;
  out->err_estimate = rep.err_estimate;
  out->tail_estimate = rep.tail_estimate;
  out->wall_time_ms = rep.wall_time_ms;
  out->zeros_used = rep.breakdown.zeros_used;
  out->converged = rep.converged ? 1 : 0;
  return ZV_OK;
}

zv_status zv_sample_integrand(const zv_case* c, const zv_catalog* cat, double t_lo, double t_hi,
                              int n, double* ts, double* values) {
  if (!c || !ts || !values) return ZV_ERR_INVALID_ARGUMENT;
  (void)cat;  // the line integrand needs no table; kept for interface stability
  return guarded([&] {
    if (n < 2 || !(t_lo < t_hi))
      throw zv::Error(zv::Errc::invalid_argument,
                      "sample_integrand: need n >= 2 and t_lo < t_hi");
    const double h = (t_hi - t_lo) / double(n - 1);
    for (int i = 0; i < n; ++i) {
      const double t = (i == n - 1) ? t_hi : t_lo + h * double(i);
      ts[i] = t;
      values[i] = zv::ident::line_integrand(c->spec, t);
    }
  });
}

zv_status zv_zeta(double re, double im, double target, double* out_re, double* out_im) {
  if (!out_re || !out_im) return ZV_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto p = zv::auto_zeta_params(im, target > 0 ? target : 1e-12);
    const zv::Complex z = zv::zeta({re, im}, p);
    *out_re = z.real();
    *out_im = z.imag();
  });
}

zv_status zv_log_zeta_tracked(double sigma, double t, int with_zm1_factor, double* out_re,
                              double* out_im, long* out_windings) {
  if (!out_re || !out_im) return ZV_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto p = zv::auto_zeta_params(t);
    const zv::TrackedLog tl = with_zm1_factor
                                  ? zv::log_zeta_times_zminus1_tracked(sigma, t, p)
                                  : zv::log_zeta_tracked(sigma, t, p);
    *out_re = tl.value.real();
    *out_im = tl.value.imag();
    if (out_windings) *out_windings = tl.windings;
  });
}

}  // extern "C"
