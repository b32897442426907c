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

#include "identities.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "errors.hpp"

namespace zv::ident {

namespace {

constexpr double kPi = std::numbers::pi;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct AB {
  double a, b, alpha;
};

// Kernel half-width a and line abscissa b of a case. The alpha families fix
// a = 1/2 - alpha; their line sits at b = 1/2 + alpha (argument/modulus of
// zeta(z)(z-1)) or b = 1/2 - alpha (EQ7/EQ8).
AB resolve_ab(const CaseSpec& s) {
  switch (s.theorem) {
    case Theorem::EQ2:
    case Theorem::THM3:
    case Theorem::B_GT_1:
    case Theorem::WANG:
      return {s.a, s.b_or_alpha, 0.0};
    case Theorem::THM4:
    case Theorem::THM5:
    case Theorem::THM6:
    case Theorem::THM7:
      return {0.5 - s.b_or_alpha, 0.5 + s.b_or_alpha, s.b_or_alpha};
    case Theorem::EQ7:
      return {s.a, 0.5 - s.b_or_alpha, s.b_or_alpha};
    case Theorem::EQ8:
      return {0.5 - s.b_or_alpha, 0.5 - s.b_or_alpha, s.b_or_alpha};
  }
  throw Error(Errc::internal, "resolve_ab: bad theorem");
}

ZetaParams params_at(const CaseSpec& spec, double abs_t) {
  ZetaParams p = auto_zeta_params(abs_t, spec.zeta_params.target_abs_error);
  p.n_terms = std::max(p.n_terms, spec.zeta_params.n_terms);
  return p;
}

double ln_abs_zeta(const CaseSpec& spec, double b, double t) {
  const Complex z = zeta(Complex{b, t}, params_at(spec, t));
  const double m = std::max(std::abs(z), std::numeric_limits<double>::min());
  return std::log(m);
}

// ln|zeta(b+it) * (b-1+it)|
double ln_abs_zeta_zm1(const CaseSpec& spec, double b, double t) {
  return ln_abs_zeta(spec, b, t) + 0.5 * std::log((b - 1.0) * (b - 1.0) + t * t);
}

// Continued arg of zeta(z)(z-1) at z = b + it, odd in t.
double arg_zeta_zm1(const CaseSpec& spec, double b, double t) {
  const double at = std::abs(t);
  const double v =
      log_zeta_times_zminus1_tracked(b, at, params_at(spec, at)).value.imag();
  return t < 0 ? -v : v;
}

std::span<const double> split_ordinates(const ZeroCatalog* cat, double T) {
  if (!cat) return {};
  const auto all = cat->ordinates();
  const auto it = std::upper_bound(all.begin(), all.end(), T);
  return all.subspan(0, std::size_t(it - all.begin()));
}

std::span<const double> sum_ordinates(const ZeroCatalog* cat, double T) {
  if (!cat) return {};
  return cat->zeros_up_to(T);  // throws when the table is too short
}

// Modulus-form zero sum in the normalization of the (a/pi)-scaled line
// integral: each catalogued ordinate stands for a conjugate pair and is
// counted twice; injected zeros are counted exactly as given.
double modulus_zero_sum(double a, double b, std::span<const double> catalogued,
                        std::span<const HypotheticalZero> hypo) {
  double sum = 0;
  if (0.5 > b)
    for (double tk : catalogued) sum += 2.0 * zero_term_modulus(a, b, {0.5, tk, 1});
  for (const auto& z : hypo)
    if (z.sigma > b) sum += zero_term_modulus(a, b, z);
  return sum;
}

std::vector<quad::SingularityHint> log_dip_hints(std::span<const double> ordinates, double T) {
  std::vector<quad::SingularityHint> hints;
  hints.reserve(ordinates.size());
  for (double tk : ordinates)
    if (tk < T)
      hints.push_back({tk, quad::SingKind::logarithmic, quad::SingSide::interior});
  return hints;
}

double tail_estimate_for(const CaseSpec& spec, double a, double b) {
  const double T = spec.T;
  const double lt = std::log(T) + 1.0;
  switch (spec.theorem) {
    case Theorem::EQ2:
    case Theorem::EQ7:
    case Theorem::EQ8:
    case Theorem::THM3:
      return 2.0 * a / kPi * lt / T;
    case Theorem::B_GT_1: {
      const double mb = std::log(zeta(Complex{b, 0}, auto_zeta_params(0)).real());
      return 2.0 * a / kPi * mb / T;
    }
    case Theorem::THM4:
      return 2.0 * lt / T;
    case Theorem::THM5:
      return (kPi / 2 + 0.7) / T;
    case Theorem::THM6:
      return lt / (T * T);
    case Theorem::THM7:
      return (kPi / 2 + 0.7) / (T * T);
    case Theorem::WANG:
      return 0.0;
  }
  return 0.0;
}

ResidualReport make_report(const CaseSpec& spec, Clock::time_point t0) {
  ResidualReport r;
  r.spec = spec;
  r.wall_time_ms = ms_since(t0);
  return r;
}

void finish(ResidualReport& r, Clock::time_point t0) {
  r.breakdown.residual = r.lhs - r.rhs;
  if (!std::isfinite(r.breakdown.residual))
    throw Error(Errc::internal, "evaluator produced a non-finite residual");
  r.wall_time_ms = ms_since(t0);
}

}  // namespace

std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::EQ2: return "EQ2";
    case Theorem::THM3: return "THM3";
    case Theorem::THM4: return "THM4";
    case Theorem::THM5: return "THM5";
    case Theorem::THM6: return "THM6";
    case Theorem::THM7: return "THM7";
    case Theorem::EQ7: return "EQ7";
    case Theorem::EQ8: return "EQ8";
    case Theorem::B_GT_1: return "B_GT_1";
    case Theorem::WANG: return "WANG";
  }
  return "?";
}

std::optional<Theorem> theorem_from_name(std::string_view name) {
  for (Theorem t : {Theorem::EQ2, Theorem::THM3, Theorem::THM4, Theorem::THM5, Theorem::THM6,
                    Theorem::THM7, Theorem::EQ7, Theorem::EQ8, Theorem::B_GT_1, Theorem::WANG})
    if (name == theorem_name(t)) return t;
  return std::nullopt;
}

void validate(const CaseSpec& spec) {
  const auto bad = [&](const std::string& msg) {
    throw Error(Errc::invalid_argument,
                std::string(theorem_name(spec.theorem)) + " case: " + msg);
  };
  if (!(spec.T > 0)) bad("T must be positive");
  if (!(spec.tol > 0)) bad("tol must be positive");
  const double p = spec.b_or_alpha;
  switch (spec.theorem) {
    case Theorem::EQ2:
      if (!(spec.a > 0)) bad("a must be positive");
      if (!(p > 0 && p < 1)) bad("b must lie in (0, 1)");
      break;
    case Theorem::THM3:
      if (!(spec.a > 0)) bad("a must be positive");
      if (!(p >= 0.5 && p < 1)) bad("b must lie in [1/2, 1)");
      if (spec.a + p == 1.0) bad("a + b = 1 is excluded");
      break;
    case Theorem::THM4:
    case Theorem::THM5:
    case Theorem::THM6:
    case Theorem::THM7:
      if (!(p >= 0 && p < 0.5)) bad("alpha must lie in [0, 1/2)");
      break;
    case Theorem::EQ7:
      if (!(spec.a > 0)) bad("a must be positive");
      if (!(p > 0 && p < 0.5)) bad("alpha must lie in (0, 1/2)");
      break;
    case Theorem::EQ8:
      if (!(p > 0 && p < 0.5)) bad("alpha must lie in (0, 1/2)");
      break;
    case Theorem::B_GT_1:
      if (!(spec.a > 0)) bad("a must be positive");
      if (!(p > 1)) bad("b must exceed 1");
      break;
    case Theorem::WANG:
      if (!(p > 0 && p < 1)) bad("b must lie in (0, 1)");
      if (!(spec.wang_radius > 0)) bad("R must be positive");
      break;
  }
}

Complex zero_term_eq1(double a, double b, double X1, const HypotheticalZero& zero) {
  if (a == 0) throw Error(Errc::invalid_argument, "zero_term_eq1: a must be nonzero");
  const Complex z1{a + zero.sigma - b, zero.t};
  const Complex z2{a - zero.sigma + b, -zero.t};
  const Complex w1{a + X1 - b, zero.t};
  const Complex w2{a - X1 + b, -zero.t};
  for (const Complex& c : {z1, z2, w1, w2})
    if (c == Complex{})
      throw Error(Errc::degenerate_argument, "zero_term_eq1: zero log argument");
  const Complex v = (std::log(z1) - std::log(z2)) - (std::log(w1) - std::log(w2));
  return double(zero.multiplicity) * v;
}

Complex pole_term_ipol(double a, double b, double X1) {
  if (a == 0) throw Error(Errc::invalid_argument, "pole_term_ipol: a must be nonzero");
  const double n1 = a + 1 - b, d1 = a - 1 + b;
  const double n2 = a + X1 - b, d2 = a - X1 + b;
  if (n1 == 0 || d1 == 0 || n2 == 0 || d2 == 0)
    throw Error(Errc::degenerate_argument, "pole_term_ipol: zero log argument");
  const Complex l1 = std::log(Complex{n1 / d1, 0.0});
  const Complex l2 = std::log(Complex{n2 / d2, 0.0});
  return Complex{0.0, kPi / a} * (l1 - l2);
}

double zero_term_modulus(double a, double b, const HypotheticalZero& zero) {
  if (!(a > 0)) throw Error(Errc::invalid_argument, "zero_term_modulus: a must be positive");
  const double p = zero.sigma - b;
  const double num = (a + p) * (a + p) + zero.t * zero.t;
  const double den = (a - p) * (a - p) + zero.t * zero.t;
  return double(zero.multiplicity) * 0.5 * std::log(num / den);
}

double zero_term_p_integral(double a, double b, const HypotheticalZero& zero, Part part,
                            double tol) {
  if (!(a > 0)) throw Error(Errc::invalid_argument, "zero_term_p_integral: a must be positive");
  const double len = zero.sigma - b;
  if (len <= 0) return 0.0;
  const double tk = zero.t;
  const quad::Fn f = [a, tk, part](double p) {
    const double re = a * a - p * p + tk * tk;
    const double im = 2.0 * p * tk;
    const double den = re * re + im * im;
    return (part == Part::real_part ? re : im) / den;
  };
  return double(zero.multiplicity) * quad::integrate_finite(f, 0.0, len, tol).value;
}

double zero_term_threehalves(double alpha, const HypotheticalZero& zero, Part part, double tol) {
  if (!(alpha >= 0 && alpha < 0.5))
    throw Error(Errc::invalid_argument, "zero_term_threehalves: alpha must lie in [0, 1/2)");
  const double a = 0.5 - alpha, b = 0.5 + alpha;
  const double len = zero.sigma - b;
  if (len <= 0) return 0.0;
  const double tk = zero.t;
  const quad::Fn f = [a, tk, part](double p) {
    const double re = a * a - p * p + tk * tk;
    const double im = 2.0 * p * tk;
    const double mod2 = re * re + im * im;
    const double phi = std::atan2(im, re);
    const double kern = std::pow(mod2, -0.75);
    return (part == Part::real_part ? std::cos(1.5 * phi) : std::sin(1.5 * phi)) * kern;
  };
  return double(zero.multiplicity) * quad::integrate_finite(f, 0.0, len, tol).value;
}

Complex wang_sum(double b, const ZeroCatalog& catalog, std::span<const HypotheticalZero> hypo,
                 double R) {
  if (!(b > 0 && b < 1) || !(R > 0))
    throw Error(Errc::invalid_argument, "wang_sum: need 0 < b < 1 and R > 0");
  double imag = 0;
  const auto pair_term = [&](double sigma, double t, int m) {
    const double d = sigma - b;
    if (!(d > 0)) return;
    if (d * d + t * t <= R * R) return;  // inside the indentation
    imag += m * (-4.0 * kPi) * d / (d * d + t * t);
  };
  for (double tk : catalog.ordinates()) pair_term(0.5, tk, 1);
  for (const auto& z : hypo) pair_term(z.sigma, z.t, z.multiplicity);
  Complex out{0.0, imag};
  if (b + R < 1.0) out += Complex{0.0, 2.0 * kPi * (1.0 / (1.0 - b) - 1.0 / R)};
  return out;
}

double remark1_closed_form(double a, double b) {
  if (!(a > 0) || !(b < 1))
    throw Error(Errc::invalid_argument, "remark1_closed_form: need a > 0, b < 1");
  return kPi / a * std::log(a - b + 1.0);
}

double remark3_constant(double alpha) {
  if (!(alpha >= 0 && alpha < 0.5))
    throw Error(Errc::invalid_argument, "remark3_constant: alpha must lie in [0, 1/2)");
  const double a = 0.5 - alpha;
  return (2.0 - 2.0 * std::numbers::ln2 + 2.0 * std::log(a)) / (2.0 * a * a);
}

std::pair<double, double> eq8_dual_terms(double alpha, double t_k) {
  const double a = 0.5 - alpha;
  const double direct = zero_term_modulus(a, a, {0.5, t_k, 1});
  const double rho_abs = std::sqrt(0.25 + t_k * t_k);
  const double c = 0.5 - 2.0 * alpha;
  const double shifted = std::sqrt(c * c + t_k * t_k);
  return {direct, std::log(rho_abs / shifted)};
}

double line_integrand(const CaseSpec& spec, double t) {
  const AB ab = resolve_ab(spec);
  const double at = std::abs(t);
  const double kern2 = ab.a * ab.a + at * at;
  switch (spec.theorem) {
    case Theorem::EQ2:
    case Theorem::EQ7:
    case Theorem::EQ8:
    case Theorem::B_GT_1:
      return ln_abs_zeta(spec, ab.b, at) / kern2;
    case Theorem::THM3:
    case Theorem::THM4:
      return ln_abs_zeta_zm1(spec, ab.b, at) / kern2;
    case Theorem::THM6:
      return ln_abs_zeta_zm1(spec, ab.b, at) / (kern2 * std::sqrt(kern2));
    case Theorem::THM5:
      return arg_zeta_zm1(spec, ab.b, t) / kern2;
    case Theorem::THM7:
      return arg_zeta_zm1(spec, ab.b, t) / (kern2 * std::sqrt(kern2));
    case Theorem::WANG:
      throw Error(Errc::invalid_argument, "WANG cases have no line integrand");
  }
  throw Error(Errc::internal, "line_integrand: bad theorem");
}

// ---- evaluators ---------------------------------------------------------

namespace {

// Common core of EQ2 / EQ7 / EQ8 / THM3 / B_GT_1: the (a/pi)-scaled modulus
// line integral against the Cauchy kernel versus closed form + pole part +
// zero sum.
ResidualReport eval_modulus_family(const CaseSpec& spec, const ZeroCatalog* catalog,
                                   std::span<const HypotheticalZero> hypo) {
  const auto t0 = Clock::now();
  validate(spec);
  const AB ab = resolve_ab(spec);
  ResidualReport r = make_report(spec, t0);

  const bool need_sums = ab.b < 0.5;
  const auto ordinates =
      need_sums ? sum_ordinates(catalog, spec.T) : split_ordinates(catalog, spec.T);

  const quad::Fn f = [&](double t) { return line_integrand(spec, t); };
  const quad::QuadratureResult line = quad::integrate_symmetric_line(
      f, spec.T, spec.tol, ordinates, {}, spec.panel_budget);

  r.breakdown.line_integral = ab.a / kPi * line.value;
  r.err_estimate += ab.a / kPi * line.err_estimate;
  r.converged = line.converged;

  if (spec.theorem == Theorem::B_GT_1) {
    r.breakdown.closed_form = std::log(zeta(Complex{ab.a + ab.b, 0}, params_at(spec, 0)).real());
  } else {
    r.breakdown.closed_form = log_zeta_zm1_real(ab.a + ab.b, params_at(spec, 0));
    if (spec.theorem != Theorem::THM3) {
      const double d = ab.a - ab.b + 1.0;
      if (d == 0) throw Error(Errc::degenerate_argument, "pole term: a - b + 1 = 0");
      r.breakdown.pole_term = -std::log(std::abs(d));
    }
    r.breakdown.zero_sum = modulus_zero_sum(ab.a, ab.b, ordinates, hypo);
  }
  r.breakdown.zeros_used = long(ordinates.size());

  if (spec.theorem == Theorem::EQ8) {
    // Cross-check the two arithmetic routes to each zero term.
    const std::size_t n = std::min<std::size_t>(ordinates.size(), 100);
    for (std::size_t i = 0; i < n; ++i) {
      const auto [u, v] = eq8_dual_terms(ab.alpha, ordinates[i]);
      if (std::abs(u - v) > 1e-10)
        throw Error(Errc::internal, "EQ8 zero-term formulations disagree");
    }
  }

  r.lhs = r.breakdown.line_integral;
  r.rhs = r.breakdown.closed_form + r.breakdown.pole_term + r.breakdown.zero_sum;
  r.tail_estimate = tail_estimate_for(spec, ab.a, ab.b);
  finish(r, t0);
  return r;
}

}  // namespace

ResidualReport eval_eq2(const CaseSpec& spec, const ZeroCatalog* catalog,
                        std::span<const HypotheticalZero> hypo) {
  CaseSpec s = spec;
  if (s.theorem != Theorem::EQ2) s.theorem = Theorem::EQ2;
  // b < 1/2 instances are the same evaluation with the critical-line zero
  // sum switched on, exactly the EQ7 arrangement.
  return eval_modulus_family(s, catalog, hypo);
}

ResidualReport eval_b_gt_1(const CaseSpec& spec, const ZeroCatalog* catalog) {
  return eval_modulus_family(spec, catalog, {});
}

ResidualReport eval_thm3(const CaseSpec& spec, const ZeroCatalog* catalog,
                         std::span<const HypotheticalZero> hypo) {
  return eval_modulus_family(spec, catalog, hypo);
}

ResidualReport eval_eq7_eq8(const CaseSpec& spec, const ZeroCatalog* catalog,
                            std::span<const HypotheticalZero> hypo) {
  return eval_modulus_family(spec, catalog, hypo);
}

ResidualReport eval_thm4(const CaseSpec& spec, const ZeroCatalog* catalog,
                         std::span<const HypotheticalZero> hypo) {
  const auto t0 = Clock::now();
  validate(spec);
  const AB ab = resolve_ab(spec);
  ResidualReport r = make_report(spec, t0);

  // At alpha = 0 the line passes through the catalogued zeros and the
  // integrand has a genuine logarithmic dip at every ordinate.
  const bool singular = ab.alpha == 0.0;
  const auto ordinates =
      singular ? sum_ordinates(catalog, spec.T) : split_ordinates(catalog, spec.T);
  const auto hints = singular ? log_dip_hints(ordinates, spec.T)
                              : std::vector<quad::SingularityHint>{};

  const quad::Fn f = [&](double t) { return line_integrand(spec, t); };
  const quad::QuadratureResult line = quad::integrate_symmetric_line(
      f, spec.T, spec.tol, ordinates, hints, spec.panel_budget);

  r.breakdown.line_integral = line.value;
  r.err_estimate = line.err_estimate;
  r.converged = line.converged;
  r.breakdown.zeros_used = long(ordinates.size());

  double zsum = 0;
  for (const auto& z : hypo)
    if (z.sigma > ab.b) zsum += zero_term_modulus(ab.a, ab.b, z);
  r.breakdown.zero_sum = kPi / ab.a * zsum;

  r.lhs = r.breakdown.line_integral;
  r.rhs = r.breakdown.zero_sum;
  r.tail_estimate = tail_estimate_for(spec, ab.a, ab.b);
  finish(r, t0);
  return r;
}

ResidualReport eval_thm5(const CaseSpec& spec, const ZeroCatalog* catalog,
                         std::span<const HypotheticalZero> hypo) {
  const auto t0 = Clock::now();
  validate(spec);
  const AB ab = resolve_ab(spec);
  ResidualReport r = make_report(spec, t0);

  const auto ordinates = split_ordinates(catalog, spec.T);
  const quad::Fn f = [&](double t) { return line_integrand(spec, t); };
  const quad::QuadratureResult line =
      quad::integrate_finite(f, 0.0, spec.T, spec.tol, ordinates, {}, spec.panel_budget);

  // Real-axis integral of ln(zeta(s)(s-1)) / ((1-s)(s-2*alpha)); the
  // removable point at s = 1 is absorbed by the divided logarithm.
  const ZetaParams rp = params_at(spec, 0);
  const quad::Fn sig = [&](double s) {
    return -log_zeta_zm1_over_zm1(s, rp) / (s - 2.0 * ab.alpha);
  };
  const double mid = 3.0;
  const double split1 = 1.0;
  const quad::QuadratureResult s1 = quad::integrate_finite(
      sig, ab.b, mid, spec.tol, std::span<const double>(&split1, 1), {}, spec.panel_budget);
  const quad::QuadratureResult s2 =
      quad::integrate_semi_infinite(sig, mid, spec.tol, 2.0, spec.panel_budget);

  double zsum = 0, zerr = 0;
  for (const auto& z : hypo)
    if (z.sigma > ab.b && z.t > 0) {
      zsum += 2.0 * kPi * zero_term_p_integral(ab.a, ab.b, z, Part::imag_part);
      zerr += 1e-11;
    }

  r.breakdown.line_integral = line.value;
  r.breakdown.sigma_integral = s1.value + s2.value;
  r.breakdown.zero_sum = zsum;
  r.breakdown.zeros_used = long(ordinates.size());
  r.err_estimate = line.err_estimate + s1.err_estimate + s2.err_estimate + zerr;
  r.converged = line.converged && s1.converged && s2.converged;

  r.lhs = r.breakdown.line_integral + r.breakdown.sigma_integral;
  r.rhs = r.breakdown.zero_sum;
  r.tail_estimate = tail_estimate_for(spec, ab.a, ab.b);
  finish(r, t0);
  return r;
}

ResidualReport eval_thm6(const CaseSpec& spec, const ZeroCatalog* catalog,
                         std::span<const HypotheticalZero> hypo) {
  const auto t0 = Clock::now();
  validate(spec);
  const AB ab = resolve_ab(spec);
  ResidualReport r = make_report(spec, t0);

  const bool singular = ab.alpha == 0.0;
  const auto ordinates =
      singular ? sum_ordinates(catalog, spec.T) : split_ordinates(catalog, spec.T);
  const auto hints = singular ? log_dip_hints(ordinates, spec.T)
                              : std::vector<quad::SingularityHint>{};

  const quad::Fn f = [&](double t) { return line_integrand(spec, t); };
  const quad::QuadratureResult line =
      quad::integrate_finite(f, 0.0, spec.T, spec.tol, ordinates, hints, spec.panel_budget);

  // int_1^inf ln(zeta(s)(s-1)) / ((s-1)(s-2 alpha))^{3/2} ds, written with
  // the divided logarithm so the left endpoint is a clean 1/sqrt
  // singularity.
  const ZetaParams rp = params_at(spec, 0);
  const quad::Fn sig = [&](double s) {
    return log_zeta_zm1_over_zm1(s, rp) / std::sqrt(s - 1.0) *
           std::pow(s - 2.0 * ab.alpha, -1.5);
  };
  const quad::SingularityHint inv_sqrt{1.0, quad::SingKind::inverse_sqrt, quad::SingSide::left};
  const quad::QuadratureResult s1 =
      quad::integrate_finite(sig, 1.0, 2.0, spec.tol, {},
                             std::span<const quad::SingularityHint>(&inv_sqrt, 1),
                             spec.panel_budget);
  const quad::QuadratureResult s2 =
      quad::integrate_semi_infinite(sig, 2.0, spec.tol, 3.0, spec.panel_budget);

  double zsum = 0;
  for (const auto& z : hypo)
    if (z.sigma > ab.b && z.t > 0)
      zsum += 2.0 * kPi * zero_term_threehalves(ab.alpha, z, Part::real_part);

  r.breakdown.line_integral = line.value;
  r.breakdown.sigma_integral = s1.value + s2.value;
  r.breakdown.zero_sum = zsum;
  r.breakdown.zeros_used = long(ordinates.size());
  r.err_estimate = line.err_estimate + s1.err_estimate + s2.err_estimate;
  r.converged = line.converged && s1.converged && s2.converged;

  r.lhs = r.breakdown.line_integral;
  r.rhs = -r.breakdown.sigma_integral + r.breakdown.zero_sum;
  r.tail_estimate = tail_estimate_for(spec, ab.a, ab.b);
  finish(r, t0);
  return r;
}

ResidualReport eval_thm7(const CaseSpec& spec, const ZeroCatalog* catalog,
                         std::span<const HypotheticalZero> hypo) {
  const auto t0 = Clock::now();
  validate(spec);
  const AB ab = resolve_ab(spec);
  ResidualReport r = make_report(spec, t0);

  const auto ordinates = split_ordinates(catalog, spec.T);
  const quad::Fn f = [&](double t) { return line_integrand(spec, t); };
  const quad::QuadratureResult line =
      quad::integrate_finite(f, 0.0, spec.T, spec.tol, ordinates, {}, spec.panel_budget);

  // int_b^1 ln(zeta(s)(s-1)) / ((1-s)(s-2 alpha))^{3/2} ds; the divided
  // logarithm turns the right endpoint into a 1/sqrt singularity.
  const ZetaParams rp = params_at(spec, 0);
  const quad::Fn sig = [&](double s) {
    return -log_zeta_zm1_over_zm1(s, rp) / std::sqrt(1.0 - s) *
           std::pow(s - 2.0 * ab.alpha, -1.5);
  };
  const quad::SingularityHint inv_sqrt{1.0, quad::SingKind::inverse_sqrt, quad::SingSide::right};
  const quad::QuadratureResult s1 =
      quad::integrate_finite(sig, ab.b, 1.0, spec.tol, {},
                             std::span<const quad::SingularityHint>(&inv_sqrt, 1),
                             spec.panel_budget);

  double zsum = 0;
  for (const auto& z : hypo)
    if (z.sigma > ab.b && z.t > 0)
      zsum += 2.0 * kPi * zero_term_threehalves(ab.alpha, z, Part::imag_part);

  r.breakdown.line_integral = line.value;
  r.breakdown.sigma_integral = s1.value;
  r.breakdown.zero_sum = zsum;
  r.breakdown.zeros_used = long(ordinates.size());
  r.err_estimate = line.err_estimate + s1.err_estimate;
  r.converged = line.converged && s1.converged;

  r.lhs = r.breakdown.line_integral + r.breakdown.sigma_integral;
  r.rhs = r.breakdown.zero_sum;
  r.tail_estimate = tail_estimate_for(spec, ab.a, ab.b);
  finish(r, t0);
  return r;
}

ResidualReport evaluate(const CaseSpec& spec, const ZeroCatalog* catalog,
                        std::span<const HypotheticalZero> hypo) {
  switch (spec.theorem) {
    case Theorem::EQ2: return eval_eq2(spec, catalog, hypo);
    case Theorem::THM3: return eval_thm3(spec, catalog, hypo);
    case Theorem::THM4: return eval_thm4(spec, catalog, hypo);
    case Theorem::THM5: return eval_thm5(spec, catalog, hypo);
    case Theorem::THM6: return eval_thm6(spec, catalog, hypo);
    case Theorem::THM7: return eval_thm7(spec, catalog, hypo);
    case Theorem::EQ7:
    case Theorem::EQ8: return eval_eq7_eq8(spec, catalog, hypo);
    case Theorem::B_GT_1: return eval_b_gt_1(spec, catalog);
    case Theorem::WANG: {
      const auto t0 = Clock::now();
      validate(spec);
      ResidualReport r = make_report(spec, t0);
      static const ZeroCatalog empty;
      const ZeroCatalog& cat = catalog ? *catalog : empty;
      const Complex s = wang_sum(spec.b_or_alpha, cat, hypo, spec.wang_radius);
      r.breakdown.zero_sum = s.imag();
      r.breakdown.zeros_used = long(cat.count());
      r.lhs = s.imag();
      r.rhs = 0.0;
      finish(r, t0);
      return r;
    }
  }
  throw Error(Errc::internal, "evaluate: bad theorem");
}

}  // namespace zv::ident
