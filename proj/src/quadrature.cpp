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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

#include "errors.hpp"

namespace zv::quad {

namespace {

// Nodes and weights of the classical 7-15 Gauss-Kronrod pair.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEval {
  double value = 0;
  double err = 0;
};

PanelEval gk15(const Fn& f, double a, double b, long& n_evals) {
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);
  double fv1[7], fv2[7];
  const double fc = f(centr);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;  // Gauss abscissae sit at the odd Kronrod slots
    const double absc = hlgth * kXgk[jtw];
    fv1[jtw] = f(centr - absc);
    fv2[jtw] = f(centr + absc);
    const double fsum = fv1[jtw] + fv2[jtw];
    resg += kWg[j] * fsum;
    resk += kWgk[jtw] * fsum;
    resabs += kWgk[jtw] * (std::abs(fv1[jtw]) + std::abs(fv2[jtw]));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const double absc = hlgth * kXgk[jtwm1];
    fv1[jtwm1] = f(centr - absc);
    fv2[jtwm1] = f(centr + absc);
    const double fsum = fv1[jtwm1] + fv2[jtwm1];
    resk += kWgk[jtwm1] * fsum;
    resabs += kWgk[jtwm1] * (std::abs(fv1[jtwm1]) + std::abs(fv2[jtwm1]));
  }
  n_evals += 15;
  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  resabs *= std::abs(hlgth);
  resasc *= std::abs(hlgth);
  double abserr = std::abs((resk - resg) * hlgth);
  if (resasc != 0.0 && abserr != 0.0)
    abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  const double uflow = std::numeric_limits<double>::min();
  if (resabs > uflow / (50.0 * eps)) abserr = std::max(eps * 50.0 * resabs, abserr);
  return {resk * hlgth, abserr};
}

double kahan_sum(std::vector<double>& v) {
  double s = 0, c = 0;
  for (double x : v) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

// One integration task for the shared adaptive driver; `piece` keeps the
// final summation order deterministic regardless of refinement order.
struct Panel {
  double err;
  int piece;
  double a, b;
  double value;
  const Fn* f;
  bool operator<(const Panel& o) const {
    if (err != o.err) return err < o.err;
    if (piece != o.piece) return piece > o.piece;
    return a > o.a;
  }
};

struct Piece {
  Fn f;
  double a, b;
};

void adaptive_gk(const std::vector<Piece>& pieces, double tol, int max_panels,
                 QuadratureResult& acc) {
  std::priority_queue<Panel> live;
  std::vector<Panel> done;
  double total_err = 0;
  int n_panels = 0;
  for (int i = 0; i < int(pieces.size()); ++i) {
    const auto& p = pieces[i];
    const PanelEval e = gk15(p.f, p.a, p.b, acc.n_evals);
    live.push({e.err, i, p.a, p.b, e.value, &p.f});
    total_err += e.err;
    ++n_panels;
  }
  const double eps = std::numeric_limits<double>::epsilon();
  bool budget_hit = false;
  while (total_err > tol && !live.empty()) {
    if (n_panels >= max_panels) {
      budget_hit = true;
      break;
    }
    Panel worst = live.top();
    live.pop();
    const double width = worst.b - worst.a;
    const double scale = std::max({std::abs(worst.a), std::abs(worst.b), 1.0});
    if (width <= 100.0 * eps * scale) {
      done.push_back(worst);  // cannot refine further
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    const PanelEval l = gk15(*worst.f, worst.a, mid, acc.n_evals);
    const PanelEval r = gk15(*worst.f, mid, worst.b, acc.n_evals);
    total_err += l.err + r.err - worst.err;
    live.push({l.err, worst.piece, worst.a, mid, l.value, worst.f});
    live.push({r.err, worst.piece, mid, worst.b, r.value, worst.f});
    ++n_panels;
  }
  while (!live.empty()) {
    done.push_back(live.top());
    live.pop();
  }
  std::sort(done.begin(), done.end(), [](const Panel& x, const Panel& y) {
    return x.piece != y.piece ? x.piece < y.piece : x.a < y.a;
  });
  std::vector<double> vals, errs;
  vals.reserve(done.size());
  errs.reserve(done.size());
  for (const auto& p : done) {
    vals.push_back(p.value);
    errs.push_back(p.err);
  }
  acc.value += kahan_sum(vals);
  acc.err_estimate += kahan_sum(errs);
  acc.n_panels += n_panels;
  if (budget_hit) acc.converged = false;
}

enum class EdgeKind { none, logarithmic, inverse_sqrt };

EdgeKind to_edge(SingKind k) {
  switch (k) {
    case SingKind::logarithmic: return EdgeKind::logarithmic;
    case SingKind::inverse_sqrt: return EdgeKind::inverse_sqrt;
    case SingKind::removable: return EdgeKind::none;
  }
  return EdgeKind::none;
}

}  // namespace

namespace detail {

Fn transform_inverse_sqrt(const Fn& f, double c, bool left_endpoint) {
  if (left_endpoint)
    return [&f, c](double u) { return 2.0 * u * f(c + u * u); };
  return [&f, c](double u) { return 2.0 * u * f(c - u * u); };
}

QuadratureResult tanh_sinh_panel(const Fn& f, double a, double b, double tol) {
  QuadratureResult res;
  const double r = 0.5 * (b - a);
  if (r <= 0) {
    res.converged = true;
    return res;
  }

  // g(u) du with x = m + r*tanh((pi/2) sinh u); the offset from the nearer
  // endpoint is computed directly to keep precision double-exponentially
  // close to the ends.
  const auto node = [&](double u, double& x, double& w) -> bool {
    const double s = std::numbers::pi / 2.0 * std::sinh(u);
    const double ch = std::cosh(s);
    const double d = r / (std::exp(std::abs(2.0 * s)) + 1.0) * 2.0;  // r*(1-|tanh s|)
    if (d <= 0.0) return false;
    x = (u >= 0) ? b - d : a + d;
    if (x <= a || x >= b) return false;
    w = r * (std::numbers::pi / 2.0) * std::cosh(u) / (ch * ch);
    return w > 0.0 && std::isfinite(w);
  };

  const double h0 = 0.5;
  const int max_level = 10;
  double prev = std::numeric_limits<double>::quiet_NaN();
  double sum = 0;  // running sum of g at all current nodes, step-weighted later
  // Level 0: nodes at multiples of h0.
  {
    double x = 0, w = 0;
    if (!node(0.0, x, w)) {
      res.converged = true;
      return res;  // interval below representable width
    }
    sum = w * f(x);
    ++res.n_evals;
    for (int sgn : {1, -1}) {
      for (int k = 1;; ++k) {
        const double u = sgn * k * h0;
        if (!node(u, x, w)) break;
        const double g = w * f(x);
        ++res.n_evals;
        sum += g;
        if (std::abs(g) < std::numeric_limits<double>::min()) break;
        if (k > 200) break;
      }
    }
  }
  double h = h0;
  double value = h * sum;
  double err = std::abs(value);
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double odd = 0;
    for (int sgn : {1, -1}) {
      for (int k = 1;; k += 2) {
        double x, w;
        const double u = sgn * k * h;
        if (!node(u, x, w)) break;
        const double g = w * f(x);
        ++res.n_evals;
        odd += g;
        if (std::abs(g) < std::numeric_limits<double>::min() && k * h > 3.0) break;
        if (k * h > 7.0) break;
      }
    }
    sum += odd;
    prev = value;
    value = h * sum;
    err = std::abs(value - prev);
    if (level >= 3 && err <= std::max(tol, 4.0 * std::numeric_limits<double>::epsilon() *
                                               std::abs(value)))
      break;
  }
  res.value = value;
  res.err_estimate = std::max(err, std::numeric_limits<double>::epsilon() * std::abs(value));
  res.n_panels = 1;
  res.converged = res.err_estimate <= std::max(tol, 1e-300);
  return res;
}

}  // namespace detail

QuadratureResult integrate_finite(const Fn& f, double lo, double hi, double tol,
                                  std::span<const double> split_points,
                                  std::span<const SingularityHint> hints, int max_panels) {
  if (!(tol > 0) || !std::isfinite(lo) || !std::isfinite(hi))
    throw Error(Errc::invalid_argument, "integrate_finite: bad interval or tolerance");
  if (lo > hi) throw Error(Errc::invalid_argument, "integrate_finite: lo > hi");
  QuadratureResult res;
  res.converged = true;
  if (lo == hi) return res;

  const double width = hi - lo;
  for (const auto& h : hints)
    if (h.location < lo - 1e-12 * width || h.location > hi + 1e-12 * width)
      throw Error(Errc::invalid_argument, "integrate_finite: hint outside interval");

  std::vector<double> bps{lo, hi};
  for (double s : split_points)
    if (s > lo && s < hi) bps.push_back(s);
  for (const auto& h : hints)
    if (h.location > lo && h.location < hi) bps.push_back(h.location);
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end(),
                        [&](double x, double y) { return y - x < 1e-12 * width; }),
            bps.end());
  bps.back() = hi;
  bps.front() = lo;

  // Edge singularity kinds per elementary interval.
  const auto edge_kind_at = [&](double x, bool as_left_endpoint) {
    for (const auto& h : hints) {
      if (std::abs(h.location - x) > 1e-12 * width) continue;
      const EdgeKind k = to_edge(h.kind);
      if (k == EdgeKind::none) continue;
      if (h.side == SingSide::interior) return k;
      if (as_left_endpoint && h.side == SingSide::left) return k;
      if (!as_left_endpoint && h.side == SingSide::right) return k;
    }
    return EdgeKind::none;
  };

  struct Interval {
    double a, b;
    EdgeKind left, right;
  };
  std::vector<Interval> work;
  for (size_t i = 0; i + 1 < bps.size(); ++i)
    work.push_back({bps[i], bps[i + 1], edge_kind_at(bps[i], true), edge_kind_at(bps[i + 1], false)});

  std::vector<Piece> gk_pieces;
  struct TsTask {
    Fn f;
    double a, b;
  };
  std::vector<TsTask> ts_tasks;
  for (size_t wi = 0; wi < work.size(); ++wi) {
    const Interval iv = work[wi];  // copy: the list may grow below
    if (iv.left != EdgeKind::none && iv.right != EdgeKind::none) {
      const double mid = 0.5 * (iv.a + iv.b);
      work.push_back({iv.a, mid, iv.left, EdgeKind::none});
      work.push_back({mid, iv.b, EdgeKind::none, iv.right});
      continue;
    }
    if (iv.left == EdgeKind::inverse_sqrt) {
      const double c = iv.a;
      gk_pieces.push_back(
          {[&f, c](double u) { return 2.0 * u * f(c + u * u); }, 0.0, std::sqrt(iv.b - iv.a)});
    } else if (iv.right == EdgeKind::inverse_sqrt) {
      const double c = iv.b;
      gk_pieces.push_back(
          {[&f, c](double u) { return 2.0 * u * f(c - u * u); }, 0.0, std::sqrt(iv.b - iv.a)});
    } else if (iv.left == EdgeKind::logarithmic || iv.right == EdgeKind::logarithmic) {
      ts_tasks.push_back({[&f](double x) { return f(x); }, iv.a, iv.b});
    } else {
      gk_pieces.push_back({[&f](double x) { return f(x); }, iv.a, iv.b});
    }
  }

  double ts_err = 0;
  if (!ts_tasks.empty()) {
    double total_len = 0;
    for (const auto& t : ts_tasks) total_len += t.b - t.a;
    for (const auto& t : ts_tasks) {
      const double share = std::max(1e-3, (t.b - t.a) / total_len);
      const QuadratureResult ts =
          detail::tanh_sinh_panel(t.f, t.a, t.b, 0.5 * tol * share);
      res.value += ts.value;
      res.n_evals += ts.n_evals;
      res.n_panels += ts.n_panels;
      ts_err += ts.err_estimate;
      if (!ts.converged) res.converged = false;
    }
    res.err_estimate += ts_err;
  }

  if (!gk_pieces.empty()) {
    const double tol_gk = std::max(tol - ts_err, 0.25 * tol);
    adaptive_gk(gk_pieces, tol_gk, max_panels, res);
  }
  if (res.err_estimate > tol) res.converged = false;
  if (!std::isfinite(res.value))
    throw Error(Errc::internal, "integrate_finite: non-finite result");
  return res;
}

QuadratureResult integrate_semi_infinite(const Fn& f, double lo, double tol,
                                         double decay_exponent, int max_panels) {
  if (!(decay_exponent >= 2.0))
    throw Error(Errc::invalid_argument, "integrate_semi_infinite: need decay_exponent >= 2");
  if (!std::isfinite(lo)) throw Error(Errc::invalid_argument, "integrate_semi_infinite: bad lo");
  // x = lo - 1 + 1/u maps (0, 1] onto [lo, inf).
  const Fn g = [&f, lo](double u) {
    const double x = lo - 1.0 + 1.0 / u;
    const double v = f(x) / (u * u);
    return std::isfinite(v) ? v : 0.0;  // far tail underflow/overflow guard
  };
  const double split = 0.5;
  const SingularityHint h{0.0, SingKind::logarithmic, SingSide::left};
  return integrate_finite(g, 0.0, 1.0, tol, std::span<const double>(&split, 1),
                          std::span<const SingularityHint>(&h, 1), max_panels);
}

QuadratureResult integrate_symmetric_line(const Fn& f_even, double T, double tol,
                                          std::span<const double> zero_ordinates,
                                          std::span<const SingularityHint> hints,
                                          int max_panels) {
  if (!(T > 0)) throw Error(Errc::invalid_argument, "integrate_symmetric_line: need T > 0");
  std::vector<double> splits;
  for (double t : zero_ordinates) {
    if (t >= T) break;
    splits.push_back(t);
  }
  QuadratureResult r = integrate_finite(f_even, 0.0, T, 0.5 * tol, splits, hints, max_panels);
  r.value *= 2.0;
  r.err_estimate *= 2.0;
  return r;
}

}  // namespace zv::quad
