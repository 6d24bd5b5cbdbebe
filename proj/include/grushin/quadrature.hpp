#ifndef GRUSHIN_QUADRATURE_HPP
#define GRUSHIN_QUADRATURE_HPP

#include <array>
#include <cstddef>

namespace grushin {

// Fixed 40-point Gauss-Legendre rule, exact enough (< 1e-15 relative) for the
// analytic integrands this library feeds it. Nodes are the positive half of
// the symmetric rule on [-1, 1].
namespace gl40 {

inline constexpr std::array<double, 20> abscissae = {
    0.038772417506050821933, 0.11608407067525520848, 0.19269758070137109972,
    0.26815218500725368114,  0.34199409082575847301, 0.41377920437160500152,
    0.48307580168617871291,  0.54946712509512820208, 0.61255388966798023795,
    0.67195668461417954838,  0.72731825518992710328, 0.77830565142651938769,
    0.8246122308333116632,   0.86595950321225950382, 0.90209880696887429673,
    0.93281280827867653336,  0.9579168192137916558,  0.97725994998377426266,
    0.99072623869945700645,  0.99823770971055920035};

inline constexpr std::array<double, 20> weights = {
    0.077505947978424811264, 0.077039818164247965588, 0.076110361900626242372,
    0.0747231690579682642,   0.072886582395804059061, 0.070611647391286779695,
    0.067912045815233903826, 0.064804013456601038075, 0.061306242492928939167,
    0.057439769099391551367, 0.053227846983936824355, 0.048695807635072232061,
    0.043870908185673271992, 0.03878216797447201764,  0.033460195282547847393,
    0.027937006980023401098, 0.022245849194166957262, 0.016421058381907888713,
    0.010498284531152813615, 0.0045212770985331912585};

}  // namespace gl40

template <typename F>
double gauss40(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < gl40::abscissae.size(); ++i) {
    const double dx = half * gl40::abscissae[i];
    acc += gl40::weights[i] * (f(mid + dx) + f(mid - dx));
  }
  return acc * half;
}

}  // namespace grushin

#endif
