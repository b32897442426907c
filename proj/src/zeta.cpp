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

#include "zeta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "errors.hpp"

namespace zv {

namespace {

// B_{2k}/(2k)! for k = 1..26.
constexpr double kBernoulliOverFact[26] = {
    8.33333333333333333e-2,   -1.38888888888888889e-3,  3.30687830687830688e-5,
    -8.26719576719576720e-7,  2.08767569878680990e-8,   -5.28419013868749318e-10,
    1.33825365306846788e-11,  -3.38968029632258287e-13, 8.58606205627784456e-15,
    -2.17486869855806187e-16, 5.50900282836022952e-18,  -1.39544646858125233e-19,
    3.53470703962946747e-21,  -8.95351742703754685e-23, 2.26795245233768306e-24,
    -5.74479066887220245e-26, 1.45517247561486490e-27,  -3.68599494066531018e-29,
    9.33673425709504467e-31,  -2.36502241570062993e-32, 5.99067176248213430e-34,
    -1.51745488446829026e-35, 3.84375812545418823e-37,  -9.73635307264669104e-39,
    2.46624704420068096e-40,  -6.24707674182074369e-42};

constexpr int kMaxBernoulliOrder = 25;

// First Stieltjes constant; enters the series of ln(zeta(s)(s-1)) at s = 1.
constexpr double kStieltjes1 = -0.0728158454836767249;

// Logarithms are kept in extended precision: the phase t*ln(n) reaches 1e4
// at the top of the operating envelope, where a double-rounded product
// would already cost ~1e-12 of the result.
long double ln_int(unsigned n) {
  static const std::vector<long double> table = [] {
    std::vector<long double> v(8192);
    for (unsigned i = 1; i < v.size(); ++i) v[i] = std::log(static_cast<long double>(i));
    return v;
  }();
  return n < table.size() ? table[n] : std::log(static_cast<long double>(n));
}

constexpr long double kTwoPiL = 2.0L * std::numbers::pi_v<long double>;

// cis(-t * ln n) with the phase reduced modulo 2*pi in extended precision.
Complex cis_phase(double t, long double ln_n) {
  const long double ph = std::remainder(-static_cast<long double>(t) * ln_n, kTwoPiL);
  const double p = static_cast<double>(ph);
  return {std::cos(p), std::sin(p)};
}

struct KahanC {
  double re = 0, im = 0, cre = 0, cim = 0;
  void add(double xr, double xi) {
    double yr = xr - cre;
    double tr = re + yr;
    cre = (tr - re) - yr;
    re = tr;
    double yi = xi - cim;
    double ti = im + yi;
    cim = (ti - im) - yi;
    im = ti;
  }
};

// Euler-Maclaurin core. Applies up to m_max correction terms, stopping early
// once the remainder bound drops below target/4. Returns the value and the
// final remainder bound.
Complex zeta_em(Complex s, int n_terms, int m_max, double target, double* bound_out) {
  const double sigma = s.real(), t = s.imag();
  const int n = std::max(2, n_terms);

  KahanC sum;
  sum.add(1.0, 0.0);
  if (t == 0.0) {
    for (int k = 2; k < n; ++k)
      sum.add(std::exp(-sigma * double(ln_int(unsigned(k)))), 0.0);
  } else {
    for (int k = 2; k < n; ++k) {
      const long double ln = ln_int(unsigned(k));
      const double mag = std::exp(-sigma * double(ln));
      const Complex c = cis_phase(t, ln);
      sum.add(mag * c.real(), mag * c.imag());
    }
  }

  const long double lnN = ln_int(unsigned(n));
  const Complex cisN = t == 0.0 ? Complex{1.0, 0.0} : cis_phase(t, lnN);
  const Complex n_to_minus_s = std::exp(-sigma * double(lnN)) * cisN;
  const Complex n_to_1_minus_s = double(n) * n_to_minus_s;

  Complex acc{sum.re, sum.im};
  acc += n_to_1_minus_s / (s - 1.0);
  acc += 0.5 * n_to_minus_s;

  // Corrections: term_k = C_k * s(s+1)...(s+2k-2) * N^(-s-2k+1).
  Complex poch = s;
  Complex pw = n_to_minus_s / double(n);  // N^(-s-1)
  const double inv_n2 = 1.0 / (double(n) * double(n));
  double bound = std::abs(kBernoulliOverFact[0] * poch * pw) *
                 std::abs(s + 1.0) / (sigma + 1.0);
  int m = std::min(m_max, kMaxBernoulliOrder);
  for (int k = 1; k <= m; ++k) {
    acc += kBernoulliOverFact[k - 1] * poch * pw;
    poch *= (s + double(2 * k - 1)) * (s + double(2 * k));
    pw *= inv_n2;
    bound = std::abs(kBernoulliOverFact[k] * poch * pw) *
            std::abs(s + double(2 * k + 1)) / (sigma + double(2 * k + 1));
    if (bound <= 0.25 * target) break;
  }
  if (bound_out) *bound_out = bound;
  return acc;
}

}  // namespace

ZetaParams auto_zeta_params(double abs_t, double target) {
  ZetaParams p;
  p.n_terms = std::max(20, int(std::ceil(1.1 * std::abs(abs_t))));
  p.bernoulli_order = kMaxBernoulliOrder;
  p.target_abs_error = target;
  return p;
}

Complex zeta(Complex s, const ZetaParams& params) {
  if (s == Complex{1.0, 0.0}) throw Error(Errc::pole_at_one, "zeta: pole at s = 1");
  if (!(s.real() > -1.0) || !std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw Error(Errc::invalid_argument, "zeta: require finite s with Re(s) > -1");
  if (params.n_terms < 2 || params.bernoulli_order < 1 ||
      params.bernoulli_order > kMaxBernoulliOrder || !(params.target_abs_error > 0))
    throw Error(Errc::invalid_argument, "zeta: bad ZetaParams");

  double bound = 0;
  Complex z = zeta_em(s, params.n_terms, params.bernoulli_order, params.target_abs_error, &bound);
  if (bound > params.target_abs_error)
    throw Error(Errc::params_insufficient, "zeta: remainder bound " + std::to_string(bound) +
                                               " exceeds target");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw Error(Errc::internal, "zeta: non-finite result");
  return z;
}

double psi_three_halves() {
  return 2.0 - 2.0 * std::numbers::ln2 - std::numbers::egamma;
}

double log_zeta_zm1_real(double sigma, const ZetaParams& params) {
  if (!(sigma > 0)) throw Error(Errc::invalid_argument, "log_zeta_zm1_real: require sigma > 0");
  const double e = sigma - 1.0;
  if (std::abs(e) < 1e-4) {
    constexpr double k2 = kStieltjes1 + 0.5 * std::numbers::egamma * std::numbers::egamma;
    return std::numbers::egamma * e - k2 * e * e;
  }
  const double z = zeta(Complex{sigma, 0.0}, params).real();
  const double prod = z * e;
  if (!(prod > 0))
    throw Error(Errc::internal, "log_zeta_zm1_real: non-positive product off the pole");
  return std::log(prod);
}

double log_zeta_zm1_over_zm1(double sigma, const ZetaParams& params) {
  const double e = sigma - 1.0;
  if (std::abs(e) < 1e-4) {
    constexpr double k2 = kStieltjes1 + 0.5 * std::numbers::egamma * std::numbers::egamma;
    return std::numbers::egamma - k2 * e;
  }
  return log_zeta_zm1_real(sigma, params) / e;
}

namespace {

// Continued argument of zeta along the horizontal segment from
// start_sigma + i t to sigma + i t. Returns ln|zeta| + i * (continued arg).
Complex track_zeta_horizontal(double sigma, double t, double start_sigma, double initial_step,
                              const ZetaParams& params) {
  const auto f = [&](double x) { return zeta(Complex{x, t}, params); };
  Complex w = f(start_sigma);
  double theta = std::arg(w);
  double x = start_sigma;
  const double span = std::abs(sigma - start_sigma);
  if (span == 0.0) return {std::log(std::abs(w)), theta};
  const double dir = sigma < start_sigma ? -1.0 : 1.0;
  const double max_step = std::min(std::abs(initial_step), span);
  const double min_step = std::max(span * 0x1p-45, 1e-13);
  double h = max_step;
  while (x != sigma) {
    double step = std::min(h, std::abs(sigma - x));
    Complex w2;
    double dphi;
    for (;;) {
      const double x2 = (std::abs(sigma - x) <= step) ? sigma : x + dir * step;
      w2 = f(x2);
      dphi = std::arg(w2 / w);
      const double ratio = std::abs(w2) / std::abs(w);
      if ((std::abs(dphi) < std::numbers::pi / 2 && ratio < 4.0 && ratio > 0.25) ||
          step <= min_step) {
        x = x2;
        break;
      }
      step *= 0.5;
    }
    theta += dphi;
    w = w2;
    h = std::min(step * 2.0, max_step);
  }
  return {std::log(std::abs(w)), theta};
}

void apply_zero_guard(double sigma, double t, TrackOptions& opts, double* t_eff) {
  *t_eff = t;
  if (opts.zero_ordinates.empty()) return;
  const double lo = std::min(sigma, opts.start_sigma);
  if (lo >= 0.5) return;  // path stays right of the critical line
  const double at = std::abs(t);
  auto it = std::lower_bound(opts.zero_ordinates.begin(), opts.zero_ordinates.end(),
                             at - opts.guard);
  if (it == opts.zero_ordinates.end() || std::abs(*it - at) > opts.guard) return;
  if (opts.side == 0)
    throw Error(Errc::zero_on_path,
                "tracked log: horizontal path passes within guard of a catalogued zero");
  *t_eff = t + (opts.side > 0 ? opts.guard : -opts.guard);
}

long windings_of(double tracked_arg, Complex principal_value) {
  const double p = std::arg(principal_value);
  return std::lround((tracked_arg - p) / (2.0 * std::numbers::pi));
}

}  // namespace

TrackedLog log_zeta_tracked(double sigma, double t, const ZetaParams& params,
                            const TrackOptions& opts) {
  if (!(sigma > 0))
    throw Error(Errc::invalid_argument, "log_zeta_tracked: require sigma > 0");
  TrackOptions o = opts;
  double t_eff = t;
  apply_zero_guard(sigma, t, o, &t_eff);

  TrackedLog out;
  out.sigma = sigma;
  out.t = t_eff;
  out.start_sigma = o.start_sigma;

  if (t_eff == 0.0) {
    if (sigma == 1.0) throw Error(Errc::pole_at_one, "log_zeta_tracked: pole at z = 1");
    const double z = zeta(Complex{sigma, 0.0}, params).real();
    if (sigma > 1.0) {
      out.value = {std::log(z), 0.0};
      out.windings = 0;
      return out;
    }
    // On (0,1) zeta is negative; crossing the pole from the anchor side
    // yields -pi when approached from above, +pi from below.
    const double arg = (o.side >= 0) ? -std::numbers::pi : std::numbers::pi;
    out.value = {std::log(-z), arg};
    out.windings = windings_of(arg, Complex{z, 0.0});
    return out;
  }

  out.value = track_zeta_horizontal(sigma, t_eff, o.start_sigma, o.initial_step, params);
  out.windings = windings_of(out.value.imag(), zeta(Complex{sigma, t_eff}, params));
  return out;
}

TrackedLog log_zeta_times_zminus1_tracked(double sigma, double t, const ZetaParams& params,
                                          const TrackOptions& opts) {
  if (!(sigma > 0))
    throw Error(Errc::invalid_argument, "log_zeta_times_zminus1_tracked: require sigma > 0");
  TrackOptions o = opts;
  double t_eff = t;
  apply_zero_guard(sigma, t, o, &t_eff);

  TrackedLog out;
  out.sigma = sigma;
  out.t = t_eff;
  out.start_sigma = o.start_sigma;

  if (t_eff == 0.0) {
    out.value = {log_zeta_zm1_real(sigma, params), 0.0};
    out.windings = 0;
    return out;
  }

  // log of the product = tracked log zeta + log(z-1); for t != 0 the factor
  // z-1 stays in one half-plane along the horizontal path, so its principal
  // logarithm is already the continued one.
  const Complex lz = track_zeta_horizontal(sigma, t_eff, o.start_sigma, o.initial_step, params);
  const Complex zm1{sigma - 1.0, t_eff};
  out.value = lz + Complex{std::log(std::abs(zm1)), std::arg(zm1)};
  const Complex target = zeta(Complex{sigma, t_eff}, params) * zm1;
  out.windings = windings_of(out.value.imag(), target);
  return out;
}

}  // namespace zv
