#include "almost2d/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace a2d {

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  QuadratureRule rule{std::vector<double>(n), std::vector<double>(n)};
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.x[i] = mid - half * z;
    rule.x[n - 1 - i] = mid + half * z;
    rule.w[i] = rule.w[n - 1 - i] = half * w;
  }
  return rule;
}

QuadratureRule trapezoid(int n, double a, double b) {
  if (n < 2) throw std::invalid_argument("trapezoid: need at least two nodes");
  QuadratureRule rule{std::vector<double>(n), std::vector<double>(n)};
  const double h = (b - a) / (n - 1);
  for (int i = 0; i < n; ++i) {
    rule.x[i] = a + i * h;
    rule.w[i] = (i == 0 || i == n - 1) ? 0.5 * h : h;
  }
  return rule;
}

double integrate(const std::function<double(double)>& f, const QuadratureRule& rule) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.x.size(); ++i) sum += rule.w[i] * f(rule.x[i]);
  return sum;
}

}  // namespace a2d
