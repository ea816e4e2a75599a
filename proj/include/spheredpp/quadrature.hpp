// Copyright 2026 The spheredpp authors
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

#ifndef SPHEREDPP_QUADRATURE_HPP
#define SPHEREDPP_QUADRATURE_HPP

#include <cmath>
#include <concepts>
#include <cstddef>

namespace spheredpp {

/// Adaptive Simpson integration of f over [a, b]. Recursion splits an
/// interval until the local Richardson estimate meets the (distributed)
/// tolerance. Suited to the smooth 1-D integrands used here; not a general
/// purpose scheme for hard singularities.
template <std::invocable<double> F>
double integrate_adaptive(F&& f, double a, double b, double rel_tol = 1e-12,
                          double abs_tol = 0.0, int max_depth = 52) {
  auto simpson = [](double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
  };

  struct Engine {
    F& fn;
    int max_depth;

    double run(double lo, double hi, double flo, double fmid, double fhi,
               double whole, double tol, int depth) {
      const double m = 0.5 * (lo + hi);
      const double lm = 0.5 * (lo + m);
      const double rm = 0.5 * (m + hi);
      const double flm = fn(lm);
      const double frm = fn(rm);
      const double h = hi - lo;
      const double left = h / 12.0 * (flo + 4.0 * flm + fmid);
      const double right = h / 12.0 * (fmid + 4.0 * frm + fhi);
      const double delta = left + right - whole;
      if (depth >= max_depth || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
      }
      return run(lo, m, flo, flm, fmid, left, 0.5 * tol, depth + 1) +
             run(m, hi, fmid, frm, fhi, right, 0.5 * tol, depth + 1);
    }
  };

  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = simpson(fa, fm, fb, b - a);
  double tol = abs_tol;
  const double scale = std::abs(whole);
  if (scale > 0.0) tol = std::max(tol, rel_tol * scale);
  if (tol <= 0.0) tol = 1e-300;
  Engine engine{f, max_depth};
  return engine.run(a, b, fa, fm, fb, whole, tol, 0);
}

}  // namespace spheredpp

#endif  // SPHEREDPP_QUADRATURE_HPP
