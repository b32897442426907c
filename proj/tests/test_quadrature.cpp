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

#include "quadrature.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "errors.hpp"
#include "oracles.hpp"
#include "zeta.hpp"

using namespace zv::quad;

TEST_CASE("finite: smooth closed forms") {
  const Fn f = [](double t) { return 1.0 / (1.0 + t * t); };
  const auto r = integrate_finite(f, 0.0, 1.0, 1e-12);
  CHECK(r.converged);
  CHECK(std::abs(r.value - std::numbers::pi / 4) < 1e-12);
  CHECK(std::abs(r.value - std::numbers::pi / 4) <= r.err_estimate + 1e-15);
}

TEST_CASE("finite: interior logarithmic singularity") {
  const Fn f = [](double t) { return std::log(std::abs(t)); };
  const SingularityHint h{0.0, SingKind::logarithmic, SingSide::interior};
  const auto r = integrate_finite(f, -1.0, 1.0, 1e-10, {}, {&h, 1});
  CHECK(r.converged);
  CHECK(std::abs(r.value + 2.0) < 1e-10);
}

TEST_CASE("finite: inverse-square-root endpoint") {
  const Fn f = [](double s) { return 1.0 / std::sqrt(s - 1.0); };
  const SingularityHint h{1.0, SingKind::inverse_sqrt, SingSide::left};
  const auto r = integrate_finite(f, 1.0, 2.0, 1e-12, {}, {&h, 1});
  CHECK(r.converged);
  CHECK(std::abs(r.value - 2.0) < 1e-12);

  const Fn g = [](double s) { return 1.0 / std::sqrt(1.0 - s); };
  const SingularityHint hr{1.0, SingKind::inverse_sqrt, SingSide::right};
  const auto r2 = integrate_finite(g, 0.0, 1.0, 1e-12, {}, {&hr, 1});
  CHECK(std::abs(r2.value - 2.0) < 1e-12);
}

TEST_CASE("semi-infinite: closed forms") {
  const auto r1 = integrate_semi_infinite([](double x) { return 1.0 / (x * x); }, 1.0, 1e-12, 2.0);
  CHECK(r1.converged);
  CHECK(std::abs(r1.value - 1.0) < 1e-11);
  const auto r2 =
      integrate_semi_infinite([](double x) { return std::log(x) / (x * x); }, 1.0, 1e-12, 2.0);
  CHECK(std::abs(r2.value - 1.0) < 1e-11);
}

TEST_CASE("semi-infinite: real-axis zeta integrand versus Romberg oracle") {
  const zv::ZetaParams p;
  const double alpha = 0.1;
  const Fn f = [&](double s) {
    return zv::log_zeta_zm1_over_zm1(s, p) / (s - 2.0 * alpha);
  };
  const auto r = integrate_semi_infinite(f, 0.6, 1e-10, 2.0);
  const double ref = oracle::romberg_semi_infinite(f, 0.6);
  CHECK(r.converged);
  CHECK(std::abs(r.value - ref) < 1e-8);
}

TEST_CASE("symmetric line: arctangent kernel") {
  const Fn f = [](double t) { return 1.0 / (1.0 + t * t); };
  const auto r = integrate_symmetric_line(f, 1000.0, 1e-12);
  CHECK(std::abs(r.value - 2.0 * std::atan(1000.0)) < 1e-11);
}

TEST_CASE("full-line integral of ln|1/2+it|/(1/4+t^2) vanishes") {
  // equivalently 2 * int_0^inf; evaluated without truncation
  const Fn f = [](double t) { return 0.5 * std::log(0.25 + t * t) / (0.25 + t * t); };
  const auto r = integrate_semi_infinite(f, 0.0, 1e-10, 2.0);
  CHECK(std::abs(2.0 * r.value) < 1e-8);
}

TEST_CASE("split-point invariance") {
  const Fn f = [](double t) { return std::cos(3.0 * t) / (1.0 + t * t); };
  const auto r1 = integrate_finite(f, 0.0, 10.0, 1e-11);
  const double extra[] = {1.0, 2.0, 3.3, 7.7};
  const auto r2 = integrate_finite(f, 0.0, 10.0, 1e-11, extra);
  CHECK(std::abs(r1.value - r2.value) < 1e-11);
}

TEST_CASE("error honesty on randomized closed-form trials") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  int honest = 0, total = 0;
  for (int i = 0; i < 100; ++i) {
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    if (b - a < 0.1) b = a + 0.1;
    const Fn f = [](double t) { return 1.0 / (1.0 + t * t); };
    const auto r = integrate_finite(f, a, b, 1e-12);
    const double truth = std::atan(b) - std::atan(a);
    ++total;
    honest += std::abs(r.value - truth) <= r.err_estimate + 1e-15;
  }
  for (int i = 0; i < 100; ++i) {
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    const double c = a + (b - a) * 0.5;
    if (b - a < 0.2) b = a + 0.2;
    const Fn f = [c](double t) { return std::log(std::abs(t - c)); };
    const SingularityHint h{c, SingKind::logarithmic, SingSide::interior};
    const auto r = integrate_finite(f, a, b, 1e-10, {}, {&h, 1});
    const auto F = [c](double t) {
      const double d = std::abs(t - c);
      return d <= 0 ? 0.0 : (t - c) * std::log(d) - t;
    };
    const double truth = F(b) - F(a);
    ++total;
    honest += std::abs(r.value - truth) <= r.err_estimate + 1e-14;
  }
  for (int i = 0; i < 100; ++i) {
    const double c = u(rng);
    const double len = 0.3 + std::abs(u(rng));
    const Fn f = [c](double s) { return 1.0 / std::sqrt(s - c); };
    const SingularityHint h{c, SingKind::inverse_sqrt, SingSide::left};
    const auto r = integrate_finite(f, c, c + len, 1e-12, {}, {&h, 1});
    const double truth = 2.0 * std::sqrt(len);
    ++total;
    honest += std::abs(r.value - truth) <= r.err_estimate + 1e-14;
  }
  CHECK(total == 300);
  CHECK(honest >= 297);
}

TEST_CASE("singularity substitutions produce bounded integrands") {
  const Fn f = [](double s) { return 1.0 / std::sqrt(s - 1.0); };
  const Fn g = detail::transform_inverse_sqrt(f, 1.0, true);
  double max_abs = 0;
  for (int i = 1; i <= 2000; ++i) max_abs = std::max(max_abs, std::abs(g(i * 5e-4)));
  CHECK(max_abs < 1e6);

  // the real-axis 3/2-kernel integrand near its endpoint
  const zv::ZetaParams p;
  const double alpha = 0.1;
  const Fn f6 = [&](double s) {
    return zv::log_zeta_zm1_over_zm1(s, p) / std::sqrt(s - 1.0) * std::pow(s - 2 * alpha, -1.5);
  };
  const Fn g6 = detail::transform_inverse_sqrt(f6, 1.0, true);
  max_abs = 0;
  for (int i = 1; i <= 1000; ++i) max_abs = std::max(max_abs, std::abs(g6(i * 1e-3)));
  CHECK(max_abs < 1e6);
}

TEST_CASE("semi-infinite consistency with truncated finite integrals") {
  const Fn f = [](double x) { return std::log(x) / (x * x); };
  const auto full = integrate_semi_infinite(f, 1.0, 1e-12, 2.0);
  double prev_diff = 1e9;
  for (double X : {1e2, 1e3, 1e4}) {
    const auto part = integrate_finite(f, 1.0, X, 1e-12);
    const double diff = std::abs(full.value - part.value);
    const double tail = (std::log(X) + 1.0) / X;
    CHECK(diff <= 1.01 * tail);
    CHECK(diff < prev_diff);
    prev_diff = diff;
  }
}

TEST_CASE("panel budget exhaustion reports converged = false") {
  const Fn f = [](double t) { return std::sin(200.0 * t); };
  const auto r = integrate_finite(f, 0.0, 50.0, 1e-14, {}, {}, 4);
  CHECK_FALSE(r.converged);
  CHECK(r.n_panels <= 5);
}

TEST_CASE("degenerate and invalid inputs") {
  const Fn f = [](double) { return 1.0; };
  const auto r = integrate_finite(f, 2.0, 2.0, 1e-10);
  CHECK(r.value == 0.0);
  CHECK(r.converged);
  CHECK_THROWS_AS((void)integrate_finite(f, 3.0, 2.0, 1e-10), zv::Error);
  CHECK_THROWS_AS((void)integrate_finite(f, 0.0, 1.0, -1.0), zv::Error);
  const SingularityHint h{5.0, SingKind::logarithmic, SingSide::interior};
  CHECK_THROWS_AS((void)integrate_finite(f, 0.0, 1.0, 1e-10, {}, {&h, 1}), zv::Error);
  CHECK_THROWS_AS((void)integrate_semi_infinite(f, 0.0, 1e-10, 1.0), zv::Error);
}
