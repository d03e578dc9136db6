// Copyright 2026 The pishape Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "numerics/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "common/error.hpp"

namespace pishape::numerics {

namespace {

// Kronrod abscissae (descending, last is the centre) and weights; the Gauss
// points are the odd-indexed ones.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kMaxDepth = 50;
constexpr std::size_t kMaxPanels = 20000;

struct Panel {
  double kronrod;
  double gauss_error;
  double abs_integral;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double k = fc * kWgk[7];
  double g = fc * kWg[3];
  double kabs = std::abs(k);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(centre - dx);
    const double f2 = f(centre + dx);
    k += kWgk[j] * (f1 + f2);
    kabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) g += kWg[j / 2] * (f1 + f2);
  }
  return {k * half, std::abs((k - g) * half), kabs * std::abs(half)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double tol) {
  if (!(tol > 0.0)) throw_invalid("integrate: tol must be positive");
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw_invalid("integrate: limits must be finite");
  }
  if (a == b) return {};

  struct Task {
    double lo, hi;
    int depth;
    Panel panel;
  };
  auto by_error = [](const Task& x, const Task& y) {
    return x.panel.gauss_error < y.panel.gauss_error;
  };
  auto evaluate = [&](double lo, double hi, int depth) {
    Task t{lo, hi, depth, gk15(f, lo, hi)};
    if (!std::isfinite(t.panel.kronrod)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "integrate: non-finite integrand on [" << lo << ", " << hi << "]";
      throw_computation(msg.str());
    }
    return t;
  };

  // Globally adaptive: keep splitting the panel with the largest error until
  // the summed error estimate meets tol.
  std::vector<Task> heap{evaluate(a, b, 0)};
  double total_error = heap.front().panel.gauss_error;
  double abs_total = heap.front().panel.abs_integral;
  for (;;) {
    const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * abs_total;
    if (total_error <= tol || total_error <= roundoff) break;
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const Task worst = heap.back();
    heap.pop_back();
    if (worst.depth >= kMaxDepth || heap.size() >= kMaxPanels) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "integrate: no convergence on [" << worst.lo << ", " << worst.hi << "] after "
          << worst.depth << " bisections (error estimate " << total_error << ")";
      throw_computation(msg.str());
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    total_error -= worst.panel.gauss_error;
    abs_total -= worst.panel.abs_integral;
    for (const Task& t : {evaluate(worst.lo, mid, worst.depth + 1),
                          evaluate(mid, worst.hi, worst.depth + 1)}) {
      total_error += t.panel.gauss_error;
      abs_total += t.panel.abs_integral;
      heap.push_back(t);
      std::push_heap(heap.begin(), heap.end(), by_error);
    }
  }

  // Sum left to right so the result does not depend on heap order.
  std::sort(heap.begin(), heap.end(), [](const Task& x, const Task& y) { return x.lo < y.lo; });
  QuadratureResult result;
  for (const Task& t : heap) {
    result.value += t.panel.kronrod;
    result.error_estimate += t.panel.gauss_error;
  }
  result.panels = heap.size();
  return result;
}

double gaussian_cutoff(double g, double weight_floor) {
  if (!(g > 0.0)) throw_invalid("gaussian_cutoff: g must be positive");
  return std::sqrt(-std::log(weight_floor) / g);
}

double panel_integral(std::span<const double> f, std::size_t i, double h) {
  const std::size_t n = f.size();
  if (n < 2 || i + 1 >= n) throw_invalid("panel_integral: panel out of range");
  if (n == 2) return 0.5 * h * (f[0] + f[1]);
  if (i == 0) return h / 12.0 * (5.0 * f[0] + 8.0 * f[1] - f[2]);
  if (i + 2 == n) return h / 12.0 * (-f[i - 1] + 8.0 * f[i] + 5.0 * f[i + 1]);
  return h / 24.0 * (-f[i - 1] + 13.0 * f[i] + 13.0 * f[i + 1] - f[i + 2]);
}

std::vector<double> cumulative_integral(std::span<const double> f, double h) {
  std::vector<double> out(f.size(), 0.0);
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    out[i + 1] = out[i] + panel_integral(f, i, h);
  }
  return out;
}

}  // namespace pishape::numerics
