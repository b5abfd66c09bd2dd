#include "almost2d/wholespace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "almost2d/criteria.hpp"
#include "almost2d/field.hpp"
#include "almost2d/norms.hpp"
#include "almost2d/random_field.hpp"

namespace a2d {
namespace {

constexpr double pi = std::numbers::pi;

QuadratureRule rule(const QuadratureSpec& q, int nodes, double a, double b) {
  if (nodes < 16) throw std::invalid_argument("quadrature: node counts must be at least 16");
  return q.scheme == QuadratureScheme::gauss_legendre ? gauss_legendre(nodes, a, b) : trapezoid(nodes, a, b);
}

// Radius where exp(-4 pi^2 r^2 s) falls below 1e-18.
double gaussian_cutoff(const QuadratureSpec& q, double s) {
  if (q.truncation_radius > 0.0) return q.truncation_radius;
  return std::sqrt(18.0 * std::log(10.0) / (4.0 * pi * pi * s));
}

double exponent_s(double p) {
  if (!(p > 2.0)) throw std::domain_error("embedding constant: p must exceed 2");
  return std::isinf(p) ? 2.0 : 1.0 / (0.5 - 1.0 / p);
}

// Integral over Lambda_n of f(r, z) 2 pi r dz dr.
template <class F>
double lambda_integral(int n, const QuadratureSpec& q, F&& f) {
  const double h = 1.0 / n;
  const QuadratureRule rr = rule(q, q.radial_nodes, 1.0, 2.0);
  const QuadratureRule zz = rule(q, q.vertical_nodes, -h, h);
  double sum = 0.0;
  for (std::size_t i = 0; i < rr.x.size(); ++i) {
    double inner = 0.0;
    for (std::size_t j = 0; j < zz.x.size(); ++j) inner += zz.w[j] * f(rr.x[i], zz.x[j]);
    sum += rr.w[i] * 2.0 * pi * rr.x[i] * inner;
  }
  return sum;
}

// Golden-section maximum of f over log t in [la, lb].
template <class F>
double golden_max(F&& f, double la, double lb, int iters = 200) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = la, b = lb;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < iters; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  return std::max(f1, f2);
}

}  // namespace

AnnulusFamilyReport lambda_n_report(int n, const QuadratureSpec& q, double nu) {
  if (n < 3) throw std::domain_error("lambda_n_report: n must be at least 3");
  const double S = std::sqrt(std::log(std::log(double(n))));
  const double A2 = n * S;  // |w^|^2 = A2 (1 + z^2/r^2)
  AnnulusFamilyReport rep;
  rep.n = n;
  rep.volume = lambda_integral(n, q, [](double, double) { return 1.0; });
  rep.l2_sq = lambda_integral(n, q, [&](double r, double z) { return A2 * (1.0 + z * z / (r * r)); });
  rep.hminus1_sq_upper = lambda_integral(n, q, [&](double r, double z) {
    return A2 * (1.0 + z * z / (r * r)) / (4.0 * pi * pi * (r * r + z * z));
  });
  rep.horizontal_hminushalf_sq = lambda_integral(n, q, [&](double r, double z) {
    return A2 * (z * z / (r * r)) / (2.0 * pi * std::sqrt(r * r + z * z));
  });
  const SharpConstants k = constants();
  rep.criterion_quantity = std::sqrt(rep.horizontal_hminushalf_sq) *
                           std::exp(rep.l2_sq * rep.hminus1_sq_upper / (4.0 * k.r2 * nu * nu * nu));
  const double t_lower = 1.0 / (80.0 * pi * pi);
  rep.besov_half_lower = std::sqrt(6.0 * pi * std::sqrt(t_lower) * std::exp(-0.5) * S);
  auto besov_sq = [&](double lt) {
    const double t = std::exp(lt);
    return std::sqrt(t) * lambda_integral(n, q, [&](double r, double z) {
             return A2 * (1.0 + z * z / (r * r)) * std::exp(-8.0 * pi * pi * (r * r + z * z) * t);
           });
  };
  rep.besov_half = std::sqrt(golden_max(besov_sq, std::log(1e-6), std::log(1.0), 120));

  if (!(rep.l2_sq < 20.0 * pi / 3.0 * S) || !(rep.horizontal_hminushalf_sq < S / (double(n) * n)) ||
      !(rep.hminus1_sq_upper < 5.0 / (3.0 * pi) * S))
    throw std::logic_error("lambda_n_report: quadrature exceeds an analytic upper bound");
  return rep;
}

double besov_embedding_constant(double p, const QuadratureSpec& q) {
  const double s = exponent_s(p);
  const double R = gaussian_cutoff(q, s);
  const double integral = integrate(
      [&](double r) {
        return 4.0 * pi * r * r * std::pow(2.0 * pi * r, 0.5 * s) * std::exp(-4.0 * pi * pi * r * r * s);
      },
      rule(q, q.radial_nodes, 0.0, R));
  const double value = std::pow(integral, 1.0 / s);
  if (std::isinf(p) && std::abs(value - 1.0 / (4.0 * pi)) > 1e-8)
    throw std::logic_error("besov_embedding_constant: p = inf value differs from 1/(4 pi)");
  return value;
}

ConeConstant cone_embedding_constant(double p, double eps, const QuadratureSpec& q) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::domain_error("cone_embedding_constant: eps must lie in (0,1)");
  const double s = exponent_s(p);
  const double R = gaussian_cutoff(q, s);
  const QuadratureRule rr = rule(q, q.radial_nodes, 0.0, R);
  double direct = 0.0;
  for (std::size_t i = 0; i < rr.x.size(); ++i) {
    const double r = rr.x[i];
    const QuadratureRule zz = rule(q, q.vertical_nodes, -eps * r, eps * r);
    double inner = 0.0;
    for (std::size_t j = 0; j < zz.x.size(); ++j) {
      const double rho2 = r * r + zz.x[j] * zz.x[j];
      inner += zz.w[j] * std::pow(2.0 * pi, 0.5 * s) * std::pow(rho2, 0.25 * s) *
               std::exp(-4.0 * pi * pi * rho2 * s);
    }
    direct += rr.w[i] * 2.0 * pi * r * inner;
  }
  const double radial = integrate(
      [&](double r) { return 4.0 * pi * std::pow(r, 2.0 + 0.5 * s) * std::exp(-4.0 * pi * pi * r * r * s); }, rr);
  const double e = 1.0 / s;  // = 1/2 - 1/p
  ConeConstant out{std::pow(direct, e),
                   std::sqrt(2.0 * pi) * std::pow(2.0, 0.25) * std::pow(radial, e) * std::pow(eps, e)};
  if (!(out.direct <= out.majorant)) throw std::logic_error("cone_embedding_constant: direct value exceeds majorant");
  return out;
}

HeatKernelConstants heat_kernel_constants(const QuadratureSpec& q) {
  HeatKernelConstants out;
  const double R = q.truncation_radius > 0.0 ? q.truncation_radius : std::sqrt(4.0 * 18.0 * std::log(10.0));
  out.grad_g_l1 = integrate(
      [](double r) { return 4.0 * pi * r * r * std::pow(4.0 * pi, -1.5) * 0.5 * r * std::exp(-0.25 * r * r); },
      rule(q, q.radial_nodes, 0.0, R));
  if (std::abs(out.grad_g_l1 - 2.0 / std::sqrt(pi)) > 1e-8)
    throw std::logic_error("heat_kernel_constants: ||grad g||_1 differs from 2/sqrt(pi)");

  out.curl_bound_check = true;
  const GridSpec g(16);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const SpectralVectorField v = random_vector_field(g, seed, {.kmax = 4, .slope = 1.0});
    for (double t : {0.01, 0.1})
      for (double p : {2.0, inf}) {
        const double lhs = lebesgue_norm(curl(heat_semigroup(v, t)), p);
        const double rhs = out.grad_g_l1 / std::sqrt(t) * lebesgue_norm(v, p);
        out.worst_ratio = std::max(out.worst_ratio, lhs / rhs);
        if (!(lhs <= rhs)) out.curl_bound_check = false;
      }
  }
  return out;
}

BesovEquivalence besov_equivalence_constants(double p) {
  if (!(p > 3.0)) throw std::domain_error("besov_equivalence_constants: p must exceed 3");
  const double grad_g = 2.0 / std::sqrt(pi);
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  BesovEquivalence out;
  out.forward = std::pow(2.0, 1.0 - 1.5 * inv_p) * grad_g;
  out.backward = std::pow(2.0, 1.5 * (1.0 - inv_p)) * std::abs(2.0 / (-1.0 + 3.0 * inv_p)) * grad_g;
  return out;
}

}  // namespace a2d
