#pragma once

#include <functional>
#include <vector>

namespace a2d {

struct QuadratureRule {
  std::vector<double> x;
  std::vector<double> w;
};

/// n-point Gauss-Legendre rule on [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);
/// n-point composite trapezoid rule on [a, b].
QuadratureRule trapezoid(int n, double a, double b);

double integrate(const std::function<double(double)>& f, const QuadratureRule& rule);

}  // namespace a2d
