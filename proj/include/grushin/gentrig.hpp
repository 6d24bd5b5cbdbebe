#ifndef GRUSHIN_GENTRIG_HPP
#define GRUSHIN_GENTRIG_HPP

#include <array>
#include <cstddef>
#include <vector>

namespace grushin {

// Exponent pair of the generalized trigonometric functions sin_{p,q}, cos_{p,q}.
struct PQ {
  double p;
  double q;
  PQ(double p_, double q_);
};

// pi_{p,q} = 2 * int_0^1 (1 - t^q)^(-1/p) dt, evaluated by adaptive quadrature
// after an endpoint substitution; relative accuracy <= 1e-12 (target 1e-13).
double pi_pq(const PQ& pq);

// F_{p,q}(x) = int_0^x (1 - t^q)^(-1/p) dt on [0, 1]; F(1) = pi_{p,q} / 2.
double F_pq(const PQ& pq, double x);

// The structure parameter alpha >= 1 with its cached half-period constant
// pi_alpha = pi_{2, 2 alpha}.
class Alpha {
 public:
  explicit Alpha(double value);
  double value() const { return alpha_; }
  double pi() const { return pi_alpha_; }

 private:
  double alpha_;
  double pi_alpha_;
};

struct SinCos {
  double s;
  double c;
};

// Evaluation context for sin_alpha = sin_{2,2alpha} and cos_alpha = sin_alpha'.
// Immutable after construction; all evaluations are pure and reentrant.
//
// Primary path: argument reduction to [0, pi_alpha/2], a cached monotone
// quintic-Hermite interpolant of the inverse of F as initial guess, then one
// Newton correction on F. The ODE back-end (sin_ode) is an independent oracle.
class TrigContext {
 public:
  explicit TrigContext(Alpha alpha, std::size_t nodes = 1024);

  const Alpha& alpha() const { return alpha_; }
  double a() const { return alpha_.value(); }
  double pi() const { return alpha_.pi(); }

  double sin(double x) const;
  double cos(double x) const;
  SinCos sin_cos(double x) const;

  // F_{2,2alpha} on [0,1], fast fixed-rule path (tested against F_pq).
  double F(double s) const;
  // Inverse of F on [0, pi_alpha/2].
  double invert(double u) const;
  // Independent back-end: integrates f'' = -alpha |f|^(2alpha-2) f from 0.
  double sin_ode(double x, double tol = 1e-12) const;

  double node_spacing() const { return du_; }
  double target_accuracy() const { return 1e-12; }

 private:
  double F_low(double s) const;  // s <= split_
  double sqrt1mq(double s) const;
  double cos_near_zero(double delta) const;

  Alpha alpha_;
  double q_;                 // 2 alpha
  double half_pi_;           // pi_alpha / 2
  double split_;             // 2^(-1/q): F is evaluated directly below, by the
                             // w-substitution above
  double wsplit_;            // sqrt(1/2)
  double F_split_;
  double du_;
  std::vector<double> s_, c_, s2_;          // table of sin, cos, sin'' at u_j
  std::array<double, 40> xi_, xiq_, wgt_;   // scaled Gauss-Legendre data
};

}  // namespace grushin

#endif
