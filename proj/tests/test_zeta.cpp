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

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "errors.hpp"
#include "test_data.hpp"

using zv::Complex;
using zv::ZetaParams;

namespace {

// Brute-force Dirichlet sum with an Euler-Maclaurin two-term tail whose
// error is below f(N) = N^-s; independent of the library's evaluation path.
double dirichlet_oracle_real(double s, long n_top) {
  double sum = 0, c = 0;
  for (long n = 1; n < n_top; ++n) {
    const double x = std::pow(double(n), -s) - c;
    const double t = sum + x;
    c = (t - sum) - x;
    sum = t;
  }
  const double N = double(n_top);
  return sum + std::pow(N, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(N, -s);
}

}  // namespace

TEST_CASE("zeta at classical closed-form points") {
  ZetaParams p;
  CHECK(std::abs(zv::zeta({2.0, 0.0}, p).real() - std::numbers::pi * std::numbers::pi / 6.0) <
        1e-12);
  CHECK(std::abs(zv::zeta({2.0, 0.0}, p).imag()) < 1e-14);
  CHECK(std::abs(zv::zeta({0.0, 0.0}, p).real() + 0.5) < 1e-12);
  CHECK(std::abs(zv::zeta({4.0, 0.0}, p).real() - std::pow(std::numbers::pi, 4) / 90.0) < 1e-12);
}

TEST_CASE("zeta(1.75) against the brute-force Dirichlet oracle") {
  const double oracle = dirichlet_oracle_real(1.75, 2'000'000);
  const double tail_bound = std::pow(2e6, -1.75);  // |remainder| < f(N)
  const double got = zv::zeta({1.75, 0.0}, ZetaParams{}).real();
  CHECK(std::abs(got - oracle) < tail_bound + 1e-12);
  // frozen reference computed with the oracle above (and cross-checked at
  // higher precision before the build)
  CHECK(std::abs(got - 1.9623200994513420) < 1e-13);
}

TEST_CASE("zeta vanishes at the first catalogued ordinate") {
  const auto zeros = zvtest::load_reference_ordinates();
  REQUIRE(zeros.size() > 0);
  const double t1 = zeros[0];
  CHECK(t1 > 14.13);
  CHECK(t1 < 14.14);
  const auto p = zv::auto_zeta_params(t1);
  CHECK(std::abs(zv::zeta({0.5, t1}, p)) < 1e-5);
}

TEST_CASE("zeta errors: pole, domain, insufficient parameters") {
  ZetaParams p;
  CHECK_THROWS_AS((void)zv::zeta({1.0, 0.0}, p), zv::Error);
  CHECK_THROWS_AS((void)zv::zeta({-2.0, 0.0}, p), zv::Error);
  ZetaParams weak{.n_terms = 4, .bernoulli_order = 1, .target_abs_error = 1e-12};
  try {
    (void)zv::zeta({0.5, 80.0}, weak);
    FAIL("expected params_insufficient");
  } catch (const zv::Error& e) {
    CHECK(e.code() == zv::Errc::params_insufficient);
  }
}

TEST_CASE("conjugate symmetry zeta(conj s) = conj zeta(s)") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> us(0.1, 3.0), ut(0.1, 900.0);
  for (int i = 0; i < 40; ++i) {
    const double sg = us(rng), t = ut(rng);
    const auto p = zv::auto_zeta_params(t, 1e-13);
    const Complex z1 = zv::zeta({sg, t}, p);
    const Complex z2 = zv::zeta({sg, -t}, p);
    CHECK(std::abs(z1 - std::conj(z2)) <= 1e-13 * (1.0 + std::abs(z1)));
  }
}

TEST_CASE("doubling the direct-sum cutoff leaves zeta unchanged within target") {
  const double target = 1e-12;
  for (int i = 0; i < 10; ++i) {
    const double sigma = 0.25 + 2.75 * i / 9.0;
    for (int j = 0; j < 10; ++j) {
      const double t = -1000.0 + 2000.0 * j / 9.0;
      auto p = zv::auto_zeta_params(t, target);
      auto p2 = p;
      p2.n_terms *= 2;
      const Complex a = zv::zeta({sigma, t}, p);
      const Complex b = zv::zeta({sigma, t}, p2);
      CHECK(std::abs(a - b) < target);
    }
  }
}

TEST_CASE("psi(3/2) identities") {
  const double v = zv::psi_three_halves();
  CHECK(v == doctest::Approx(0.0364899740).epsilon(1e-8));
  CHECK(std::abs(v + std::numbers::egamma + 2.0 * std::log(0.5) - (2.0 - 4.0 * std::numbers::ln2)) <
        1e-15);
  CHECK(std::abs(v - 2.0 + 2.0 * std::numbers::ln2 + std::numbers::egamma) < 1e-15);
}

TEST_CASE("log of zeta(s)(s-1) on the real axis and across s = 1") {
  ZetaParams p;
  CHECK(std::abs(zv::log_zeta_zm1_real(2.0, p) -
                 std::log(std::numbers::pi * std::numbers::pi / 6.0)) < 1e-12);
  CHECK(zv::log_zeta_zm1_real(1.0, p) == 0.0);
  // limit from both sides: ~ gamma*(s-1)
  const double ep = (1.0 + 1e-9) - 1.0;
  const double em = (1.0 - 1e-9) - 1.0;
  CHECK(std::abs(zv::log_zeta_zm1_real(1.0 + 1e-9, p) - std::numbers::egamma * ep) < 1e-18);
  CHECK(std::abs(zv::log_zeta_zm1_real(1.0 - 1e-9, p) - std::numbers::egamma * em) < 1e-18);
  // series/direct seam at |s-1| = 1e-4: the two branches agree to the
  // series truncation order
  const double e1 = (1.0 + 0.99e-4) - 1.0;
  const double e2 = (1.0 + 1.01e-4) - 1.0;
  const double inner = zv::log_zeta_zm1_real(1.0 + e1, p);
  const double outer = zv::log_zeta_zm1_real(1.0 + e2, p);
  const double k2 = -0.0728158454836767249 + 0.5 * std::numbers::egamma * std::numbers::egamma;
  const double expected_gap = std::numbers::egamma * (e2 - e1) - k2 * (e2 * e2 - e1 * e1);
  CHECK(std::abs((outer - inner) - expected_gap) < 1e-14);
  const double q = zv::log_zeta_zm1_over_zm1(1.0, p);
  CHECK(q == doctest::Approx(std::numbers::egamma).epsilon(1e-12));
}

TEST_CASE("tracked log of zeta: principal region") {
  const ZetaParams p;
  const auto l0 = zv::log_zeta_tracked(2.0, 0.0, p);
  CHECK(l0.value.imag() == 0.0);
  CHECK(std::abs(l0.value.real() - std::log(zv::zeta({2.0, 0.0}, p).real())) < 1e-13);
  CHECK(l0.windings == 0);

  const auto p10 = zv::auto_zeta_params(10.0);
  const auto l1 = zv::log_zeta_tracked(2.0, 10.0, p10);
  const Complex direct = zv::zeta({2.0, 10.0}, p10);
  CHECK(std::abs(l1.value.imag() - std::arg(direct)) < 1e-12);
  CHECK(l1.windings == 0);
}

TEST_CASE("tracked log of zeta: exp recovers the function inside the strip") {
  for (const auto& [sg, t] : {std::pair{0.25, 14.0}, {0.6, 25.0}, {0.35, 100.5},
                              {0.75, 50.0}, {0.5, 62.0}}) {
    const auto p = zv::auto_zeta_params(t);
    const auto tl = zv::log_zeta_tracked(sg, t, p);
    const Complex direct = zv::zeta({sg, t}, p);
    CHECK(std::abs(std::exp(tl.value) - direct) <= 1e-10 * std::abs(direct));
  }
}

TEST_CASE("tracked log of zeta(z)(z-1)") {
  const ZetaParams p;
  const auto l0 = zv::log_zeta_times_zminus1_tracked(2.0, 0.0, p);
  CHECK(std::abs(l0.value.real() - std::log(std::numbers::pi * std::numbers::pi / 6.0)) < 1e-12);
  CHECK(l0.value.imag() == 0.0);

  // limit toward the removed pole
  const auto lnear = zv::log_zeta_times_zminus1_tracked(1.0 + 1e-9, 0.0, p);
  CHECK(std::abs(lnear.value.real()) < 1e-8);

  const auto p50 = zv::auto_zeta_params(50.0);
  const auto l2 = zv::log_zeta_times_zminus1_tracked(0.75, 50.0, p50);
  const Complex direct = zv::zeta({0.75, 50.0}, p50) * Complex{-0.25, 50.0};
  CHECK(std::abs(std::exp(l2.value) - direct) <= 1e-10 * std::abs(direct));
}

TEST_CASE("branch continuity: step-size and anchor independence") {
  const double t = 14.2;  // between the first ordinate and the strip edge
  const auto p = zv::auto_zeta_params(t);
  zv::TrackOptions coarse{.initial_step = 0.25};
  zv::TrackOptions fine{.initial_step = 0.01};
  const auto a = zv::log_zeta_tracked(0.3, t, p, coarse);
  const auto b = zv::log_zeta_tracked(0.3, t, p, fine);
  CHECK(std::abs(a.value - b.value) < 1e-10);

  zv::TrackOptions anchor35{.start_sigma = 3.5};
  zv::TrackOptions anchor45{.start_sigma = 4.5};
  const auto c = zv::log_zeta_tracked(0.3, t, p, anchor35);
  const auto d = zv::log_zeta_tracked(0.3, t, p, anchor45);
  CHECK(std::abs(c.value - d.value) < 1e-10);

  // successive values along the path change by less than pi/2
  double prev_im = zv::log_zeta_tracked(4.0, t, p).value.imag();
  for (double sg = 3.9; sg > 0.29; sg -= 0.1) {
    const double im = zv::log_zeta_tracked(sg, t, p).value.imag();
    CHECK(std::abs(im - prev_im) < std::numbers::pi / 2);
    prev_im = im;
  }
}

TEST_CASE("guarded path through a catalogued zero: +-i0 convention") {
  const auto zeros = zvtest::load_reference_ordinates();
  const double t1 = zeros[0];
  const auto p = zv::auto_zeta_params(t1);
  zv::TrackOptions blocked;
  blocked.zero_ordinates = std::span<const double>(zeros.data(), 4);
  try {
    (void)zv::log_zeta_tracked(0.25, t1, p, blocked);
    FAIL("expected zero_on_path");
  } catch (const zv::Error& e) {
    CHECK(e.code() == zv::Errc::zero_on_path);
  }
  zv::TrackOptions above = blocked;
  above.side = +1;
  zv::TrackOptions below = blocked;
  below.side = -1;
  const auto va = zv::log_zeta_tracked(0.25, t1, p, above);
  const auto vb = zv::log_zeta_tracked(0.25, t1, p, below);
  CHECK(va.t > t1);
  CHECK(vb.t < t1);
  // the two sides enclose the zero: the continued arguments differ by ~2 pi
  CHECK(std::abs(std::abs(va.value.imag() - vb.value.imag()) - 2 * std::numbers::pi) < 0.2);
}
