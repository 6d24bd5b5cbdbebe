#ifndef GRUSHIN_ODE_HPP
#define GRUSHIN_ODE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

#include "grushin/errors.hpp"

namespace grushin {

// Dormand-Prince 5(4) with PI step-size control. The right-hand sides in this
// library are only C^1 across x = 0 for non-integer alpha, so the controller
// never trusts a single large step: steps are capped at (t1 - t0) / min_steps.
template <std::size_t N, typename RHS>
void dopri5(RHS&& rhs, std::array<double, N>& y, double t0, double t1,
            double rtol, double atol, int min_steps = 16) {
  if (t1 == t0) return;

  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  // embedded 4th-order weights
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  const double dir = t1 > t0 ? 1.0 : -1.0;
  const double span = std::abs(t1 - t0);
  const double hmax = span / static_cast<double>(min_steps);
  double t = t0;
  double h = dir * std::min(hmax, 0.01 * span + 1e-6);
  double err_prev = 1.0;

  std::array<double, N> k1, k2, k3, k4, k5, k6, k7, yt, y5;
  rhs(t, y.data(), k1.data());

  while (dir * (t1 - t) > 0.0) {
    if (dir * (t + h - t1) > 0.0) h = t1 - t;
    if (std::abs(h) < 1e-14 * span)
      throw StepSizeUnderflowError("dopri5: step size underflow");

    for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * a21 * k1[i];
    rhs(t + c2 * h, yt.data(), k2.data());
    for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(t + c3 * h, yt.data(), k3.data());
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(t + c4 * h, yt.data(), k4.data());
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(t + c5 * h, yt.data(), k5.data());
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                          a65 * k5[i]);
    rhs(t + h, yt.data(), k6.data());
    for (std::size_t i = 0; i < N; ++i)
      y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                          b6 * k6[i]);
    rhs(t + h, y5.data(), k7.data());

    double err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                            e6 * k6[i] + e7 * k7[i]);
      const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
      err += (e / sc) * (e / sc);
    }
    err = std::sqrt(err / static_cast<double>(N));

    if (err <= 1.0) {
      t += h;
      y = y5;
      k1 = k7;  // FSAL
      const double fac =
          0.9 * std::pow(std::max(err, 1e-16), -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
      err_prev = std::max(err, 1e-16);
      h *= std::clamp(fac, 0.2, 5.0);
    } else {
      h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
    }
    if (std::abs(h) > hmax) h = dir * hmax;
  }
}

}  // namespace grushin

#endif
