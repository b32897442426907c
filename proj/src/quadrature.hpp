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

#ifndef ZETAVERIFY_QUADRATURE_HPP
#define ZETAVERIFY_QUADRATURE_HPP

#include <functional>
#include <span>

namespace zv::quad {

inline constexpr int kDefaultPanelBudget = 20000;
inline constexpr double kDefaultTol = 1e-10;

struct QuadratureResult {
  double value = 0;
  double err_estimate = 0;
  long n_evals = 0;
  int n_panels = 0;
  bool converged = false;
};

enum class SingKind { logarithmic, inverse_sqrt, removable };
enum class SingSide { left, right, interior };

// A known integrable singularity of the integrand. inverse_sqrt endpoints
// are removed by the substitution x = c +- u^2; panels adjacent to a
// logarithmic point are integrated with a tanh-sinh rule; removable points
// only force a panel boundary.
struct SingularityHint {
  double location = 0;
  SingKind kind = SingKind::removable;
  SingSide side = SingSide::interior;
};

using Fn = std::function<double(double)>;

// Adaptive integration of f over [lo, hi]. Panels never straddle a split
// point. Base rule: 7-15 Gauss-Kronrod pairs, bisection by largest error.
// If the panel budget runs out the best estimate is returned with
// converged = false (no exception).
QuadratureResult integrate_finite(const Fn& f, double lo, double hi, double tol,
                                  std::span<const double> split_points = {},
                                  std::span<const SingularityHint> hints = {},
                                  int max_panels = kDefaultPanelBudget);

// Integral of f over [lo, infinity) via x = lo - 1 + 1/u, u in (0, 1].
// Requires f(x) = O(x^-decay_exponent * ln x) with decay_exponent >= 2
// (caller guarantees); the u -> 0 endpoint is handled by the tanh-sinh rule.
QuadratureResult integrate_semi_infinite(const Fn& f, double lo, double tol,
                                         double decay_exponent,
                                         int max_panels = kDefaultPanelBudget);

// 2 * integral of an even integrand over [0, T], with panels split at every
// supplied ordinate <= T (plus any hints, e.g. logarithmic dips at the
// ordinates themselves).
QuadratureResult integrate_symmetric_line(const Fn& f_even, double T, double tol,
                                          std::span<const double> zero_ordinates = {},
                                          std::span<const SingularityHint> hints = {},
                                          int max_panels = kDefaultPanelBudget);

namespace detail {
// Transformed integrand for an inverse-square-root endpoint at c: returns
// g(u) = 2 u f(c +- u^2), which is bounded when f ~ |x-c|^(-1/2). Exposed
// for the singularity-substitution tests.
Fn transform_inverse_sqrt(const Fn& f, double c, bool left_endpoint);

// Single-panel tanh-sinh rule on [a, b]; handles integrable endpoint
// singularities. Levels are doubled until the last refinement changes the
// result by less than tol.
QuadratureResult tanh_sinh_panel(const Fn& f, double a, double b, double tol);
}  // namespace detail

}  // namespace zv::quad

#endif  // ZETAVERIFY_QUADRATURE_HPP
