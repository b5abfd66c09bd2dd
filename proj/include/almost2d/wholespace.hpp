#pragma once

#include "almost2d/quadrature.hpp"

namespace a2d {

enum class QuadratureScheme { gauss_legendre, trapezoid };

struct QuadratureSpec {
  int radial_nodes = 64;
  int vertical_nodes = 64;
  QuadratureScheme scheme = QuadratureScheme::gauss_legendre;
  /// Cutoff for infinite radial integrals; 0 picks the radius where the Gaussian drops below 1e-18.
  double truncation_radius = 0.0;
};

/// Integrals over Lambda_n = {1 <= r <= 2, |z| < 1/n} of w^ = sqrt(n) loglog(n)^{1/4} (e3 - (z/r) e_r).
struct AnnulusFamilyReport {
  int n = 0;
  double volume = 0.0;
  double l2_sq = 0.0;
  double hminus1_sq_upper = 0.0;
  double horizontal_hminushalf_sq = 0.0;
  /// ||omega_h||_{H^-1/2} exp(||omega||_2^2 ||omega||_{H^-1}^2 / (4 R2 nu^3)).
  double criterion_quantity = 0.0;
  /// sqrt(6 pi sup_t t^{1/2} e^{-40 pi^2 t} loglog(n)^{1/2}).
  double besov_half_lower = 0.0;
  /// sup_t t^{1/4} ||e^{t Delta} omega||_{L^2} by quadrature.
  double besov_half = 0.0;
};
AnnulusFamilyReport lambda_n_report(int n, const QuadratureSpec& q = {}, double nu = 1.0);

/// ||(2 pi |z|)^{1/2} exp(-4 pi^2 |z|^2)||_{L^s(R^3)} with 1/s = 1/2 - 1/p.
double besov_embedding_constant(double p, const QuadratureSpec& q = {});

struct ConeConstant {
  double direct = 0.0;
  double majorant = 0.0;
};
/// Same norm restricted to the cone |z|/r < eps, with the explicit eps^{1/2 - 1/p} majorant.
ConeConstant cone_embedding_constant(double p, double eps, const QuadratureSpec& q = {});

struct HeatKernelConstants {
  double grad_g_l1 = 0.0;
  /// ||curl e^{t Delta} v||_p <= t^{-1/2} grad_g_l1 ||v||_p on three random torus fields.
  bool curl_bound_check = false;
  double worst_ratio = 0.0;
};
HeatKernelConstants heat_kernel_constants(const QuadratureSpec& q = {});

struct BesovEquivalence {
  double forward = 0.0;
  double backward = 0.0;
};
/// Constants relating the velocity and vorticity heat-kernel Besov norms, p > 3.
BesovEquivalence besov_equivalence_constants(double p);

}  // namespace a2d
