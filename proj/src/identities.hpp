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
//
// Evaluators for a family of integral identities over the Riemann zeta
// function. Each identity relates a weighted vertical-line integral of
// ln zeta (modulus or continued argument) to closed-form terms plus a sum
// of contributions from any zeros lying right of the integration line; the
// residual of the truncated evaluation is the reported quantity.

#ifndef ZETAVERIFY_IDENTITIES_HPP
#define ZETAVERIFY_IDENTITIES_HPP

#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "quadrature.hpp"
#include "zero_catalog.hpp"
#include "zeta.hpp"

namespace zv::ident {

// Identity families understood by the CLI and config files. EQ2/THM3 take
// (a, b); B_GT_1 takes (a, b) with b > 1; the remaining families are
// parameterized by alpha with the kernel half-width fixed to 1/2 - alpha.
enum class Theorem { EQ2, THM3, THM4, THM5, THM6, THM7, EQ7, EQ8, B_GT_1, WANG };

std::string_view theorem_name(Theorem t);
std::optional<Theorem> theorem_from_name(std::string_view name);

struct CaseSpec {
  Theorem theorem = Theorem::EQ2;
  double a = 1.0;
  double b_or_alpha = 0.75;  // b for EQ2/THM3/B_GT_1/WANG, alpha otherwise
  double T = 1000.0;         // truncation height of the line integral
  double tol = quad::kDefaultTol;
  double wang_radius = 1.0;  // indentation radius of the WANG sum
  ZetaParams zeta_params{};  // n_terms acts as a floor; it grows with |t|
  int panel_budget = quad::kDefaultPanelBudget;
};

// Throws Error(invalid_argument) when the parameters leave the theorem's
// domain (e.g. EQ2 needs a > 0, 0 < b < 1; THM3 additionally a+b != 1;
// alpha families need 0 <= alpha < 1/2, strict for EQ7/EQ8).
void validate(const CaseSpec& spec);

struct TermBreakdown {
  double line_integral = 0;   // assembled, prefactor included
  double closed_form = 0;     // ln|zeta(...)|-type term
  double pole_term = 0;       // contribution of the pole at z = 1
  double zero_sum = 0;        // zero contributions (catalog and/or injected)
  double sigma_integral = 0;  // real-axis integral (0 when absent)
  double residual = 0;        // lhs - rhs, bit-exactly as assembled
  long zeros_used = 0;        // catalogued ordinates <= T consumed
};

struct ResidualReport {
  CaseSpec spec{};
  TermBreakdown breakdown{};
  double lhs = 0;
  double rhs = 0;
  double err_estimate = 0;   // propagated quadrature error estimates
  double tail_estimate = 0;  // analytic |tail| estimate, reported, never added
  double wall_time_ms = 0;
  bool converged = true;
};

enum class Part { real_part, imag_part };

// ---- closed-form and per-zero operations -------------------------------

// Cut contribution of one zero, normalized by -pi*i/a: the bracket
//   m * [ ln((a+s_k+i t_k-b)/(a-s_k-i t_k+b)) - ln((a+X1+i t_k-b)/(a-X1-i t_k+b)) ]
// with each ratio's logarithm taken as the difference of principal logs of
// numerator and denominator (the continued branch along the horizontal cut).
Complex zero_term_eq1(double a, double b, double X1, const HypotheticalZero& zero);

// (pi*i/a) * [ ln((a+1-b)/(a-1+b)) - ln((a+X1-b)/(a-X1+b)) ], principal logs.
Complex pole_term_ipol(double a, double b, double X1);

// m * ln|(a + s_k - b + i t_k)/(a - s_k + b - i t_k)|; one zero only, the
// conjugate contributes the same amount and is added by the caller.
double zero_term_modulus(double a, double b, const HypotheticalZero& zero);

// Real or imaginary part of the cut integral
//   int_0^{s_k-b} dp / (a^2 - (p + i t_k)^2)
// by adaptive quadrature; 2a * real part equals zero_term_modulus.
double zero_term_p_integral(double a, double b, const HypotheticalZero& zero, Part part,
                            double tol = 1e-12);

// Same cut integral for the 3/2-power kernel (a = 1/2-alpha, b = 1/2+alpha):
//   int_0^{s_k-b} exp(3 i phi / 2) / ((a^2-p^2+t_k^2)^2 + 4 p^2 t_k^2)^{3/4} dp,
//   phi = atan2(2 p t_k, a^2 - p^2 + t_k^2).
double zero_term_threehalves(double alpha, const HypotheticalZero& zero, Part part,
                             double tol = 1e-12);

// Paired-zero sum  sum_{s_k > b, t_k > 0} -4 pi i (s_k - b)/((s_k-b)^2 + t_k^2),
// plus the pole term 2 pi i (1/(1-b) - 1/R) when b + R < 1. Zeros within the
// indentation radius R of b are excluded.
Complex wang_sum(double b, const ZeroCatalog& catalog, std::span<const HypotheticalZero> hypo,
                 double R);

// Closed form of int_{-inf}^{inf} ln|b-1+it| / (a^2+t^2) dt = (pi/a) ln(a-b+1),
// valid for a > 0, b < 1.
double remark1_closed_form(double a, double b);

// Closed form of int_0^inf ln|b-1+it| / (a^2+t^2)^{3/2} dt at a = 1/2-alpha,
// b = 1/2+alpha:  (1/(2 a^2)) * (2 - 2 ln 2 + 2 ln a).
double remark3_constant(double alpha);

// The two algebraically equal forms of one EQ8 zero term at s_k = 1/2:
// {direct modulus-ratio form, |rho| / |rho - (1-2 alpha)| form}.
std::pair<double, double> eq8_dual_terms(double alpha, double t_k);

// The line integrand of a case at height t (even continuation in t for
// modulus kernels, odd for argument kernels). This is the quantity the CLI
// dump-integrand command samples.
double line_integrand(const CaseSpec& spec, double t);

// ---- evaluators ---------------------------------------------------------
//
// `catalog` may be null when the case needs no zero table. `hypo` injects
// hypothetical off-line zeros (test facility): entries are counted exactly
// as given, with no implicit conjugation.

ResidualReport eval_eq2(const CaseSpec& spec, const ZeroCatalog* catalog,
                        std::span<const HypotheticalZero> hypo = {});
ResidualReport eval_b_gt_1(const CaseSpec& spec, const ZeroCatalog* catalog = nullptr);
ResidualReport eval_thm3(const CaseSpec& spec, const ZeroCatalog* catalog,
                         std::span<const HypotheticalZero> hypo = {});
ResidualReport eval_thm4(const CaseSpec& spec, const ZeroCatalog* catalog,
                         std::span<const HypotheticalZero> hypo = {});
ResidualReport eval_thm5(const CaseSpec& spec, const ZeroCatalog* catalog,
                         std::span<const HypotheticalZero> hypo = {});
ResidualReport eval_thm6(const CaseSpec& spec, const ZeroCatalog* catalog,
                         std::span<const HypotheticalZero> hypo = {});
ResidualReport eval_thm7(const CaseSpec& spec, const ZeroCatalog* catalog,
                         std::span<const HypotheticalZero> hypo = {});
ResidualReport eval_eq7_eq8(const CaseSpec& spec, const ZeroCatalog* catalog,
                            std::span<const HypotheticalZero> hypo = {});

// Dispatch on spec.theorem.
ResidualReport evaluate(const CaseSpec& spec, const ZeroCatalog* catalog,
                        std::span<const HypotheticalZero> hypo = {});

}  // namespace zv::ident

#endif  // ZETAVERIFY_IDENTITIES_HPP
