#ifndef GRUSHIN_POWER_HPP
#define GRUSHIN_POWER_HPP

#include <cmath>

namespace grushin {

// Even power x^(2a) understood as (x^2)^a, total on the reals.
inline double pow_even(double x, double a) { return std::pow(x * x, a); }

// Odd, sign-preserving power x^(2a) * x = |x|^(2a) x.
inline double pow_odd(double x, double a) { return pow_even(x, a) * x; }

}  // namespace grushin

#endif
