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

#ifndef ZETAVERIFY_ZETA_HPP
#define ZETAVERIFY_ZETA_HPP

#include <complex>
#include <span>

namespace zv {

using Complex = std::complex<double>;

// Parameters of the Euler-Maclaurin evaluation of zeta:
//
//   zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
//           + sum_{k=1..M} B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1) + R_M
//
// with the classical remainder bound
//
//   |R_M| <= |B_{2M+2}/(2M+2)! * s(s+1)...(s+2M) * N^(-s-2M-1)|
//            * |(s+2M+1)/(sigma+2M+1)|,
//
// valid for sigma = Re(s) > -(2M+1). The direct sum uses compensated
// (Kahan) accumulation.
struct ZetaParams {
  int n_terms = 24;                 // direct-sum cutoff N (>= 2)
  int bernoulli_order = 20;         // number M of B_{2k} corrections (1..25)
  double target_abs_error = 1e-12;  // required absolute accuracy
};

// Parameters that meet `target` at height |t|: N = max(20, ceil(1.1*|t|)),
// with corrections capped at order 25 (the evaluation stops early once the
// remainder bound is met).
ZetaParams auto_zeta_params(double abs_t, double target = 1e-12);

// zeta(s) for s != 1, Re(s) > -1, to params.target_abs_error.
// Throws Error(pole_at_one) at s = 1 and Error(params_insufficient) when the
// remainder bound cannot meet the target with the given params.
Complex zeta(Complex s, const ZetaParams& params);

// digamma(3/2) = 2 - 2 ln 2 - gamma, exactly as assembled from constants.
double psi_three_halves();

// ln(zeta(sigma)*(sigma-1)) for real sigma > 0. Near sigma = 1 (|sigma-1| <
// 1e-4) the 0/0 form is replaced by the series
//   ln(zeta(s)(s-1)) = g(s-1) - (g1 + g^2/2)(s-1)^2 + O((s-1)^3),
// g = Euler gamma, g1 = first Stieltjes constant, so callers may integrate
// straight through the removable point.
double log_zeta_zm1_real(double sigma, const ZetaParams& params);

// ln(zeta(sigma)*(sigma-1)) / (sigma-1), the divided form that stays smooth
// across the removable point at sigma = 1 (tends to Euler gamma there).
// Integrands with kernels singular at sigma = 1 are built from this.
double log_zeta_zm1_over_zm1(double sigma, const ZetaParams& params);

// A logarithm of zeta (or of zeta(z)*(z-1)) with the branch fixed by
// continuous variation along the horizontal segment from start_sigma + i t
// down (or up) to sigma + i t, starting from the principal determination at
// the anchor. The imaginary part is the continued argument; `windings`
// counts the accumulated 2*pi offsets relative to the principal branch at
// the target.
struct TrackedLog {
  double sigma = 0;
  double t = 0;
  Complex value{};
  double start_sigma = 0;
  long windings = 0;
};

struct TrackOptions {
  double start_sigma = 4.0;  // anchor abscissa; |zeta - 1| < 0.08 there
  double initial_step = 0.25;
  // Catalogued zero ordinates (sorted ascending). When the path would pass
  // within `guard` of a catalogued ordinate while crossing the critical
  // line, the evaluation either fails with Error(zero_on_path) (side == 0)
  // or displaces t by side*guard and records the displacement.
  std::span<const double> zero_ordinates{};
  double guard = 1e-9;
  int side = 0;  // -1, 0, +1
};

TrackedLog log_zeta_tracked(double sigma, double t, const ZetaParams& params,
                            const TrackOptions& opts = {});

// Same continuation for f(z) = zeta(z)*(z-1); at the anchor the
// determination is principal log zeta plus principal log(z-1).
TrackedLog log_zeta_times_zminus1_tracked(double sigma, double t, const ZetaParams& params,
                                          const TrackOptions& opts = {});

}  // namespace zv

#endif  // ZETAVERIFY_ZETA_HPP
