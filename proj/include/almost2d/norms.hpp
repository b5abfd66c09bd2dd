#pragma once

#include <limits>
#include <vector>

#include "almost2d/field.hpp"

namespace a2d {

inline constexpr double inf = std::numeric_limits<double>::infinity();

/// sqrt(sum_k (2 pi |k|)^{2s} |u^(k)|^2). The k = 0 term counts only for s = 0.
double sobolev_norm(const SpectralVectorField& u, double s);
double sobolev_norm(const SpectralScalarField& f, double s);
/// Frobenius form: each off-diagonal entry counted twice.
double sobolev_norm(const StrainField& S, double s);

/// (mean |u(x)|^p)^{1/p} over the grid, grid max for p = inf.
double lebesgue_norm(const SpectralVectorField& u, double p);
double lebesgue_norm(const PhysicalVectorField& f, double p);
double lebesgue_norm(const StrainField& S, double p);
/// Norm of pointwise magnitudes already sampled on the grid.
double lebesgue_norm_of_magnitudes(const std::vector<double>& mag, double p);

struct BesovSearchConfig {
  double t_min = 1e-6;
  double t_max = 1e2;
  int coarse_points = 64;
  int refine_iters = 80;
};

struct BesovResult {
  double value = 0.0;
  double t_star = 0.0;
};

/// sup_t t^{s/2} ||e^{t Delta} u||_{L^p}: log-spaced scan, then golden-section refinement.
BesovResult besov_norm(const SpectralVectorField& u, double s, double p, const BesovSearchConfig& cfg = {});

/// K = ||u||^2 / 2 and E = ||curl u||^2 / 2.
double kinetic_energy(const SpectralVectorField& u);
double enstrophy(const SpectralVectorField& u);

/// (v1, v2, 0).
SpectralVectorField horizontal(const SpectralVectorField& v);

/// omega_h = (w1, w2, 0), v3 = d3 u + grad u3, and the entries S13, S23 that build S_h.
struct HorizontalParts {
  SpectralVectorField omega_h;
  SpectralVectorField v3;
  SpectralScalarField s13;
  SpectralScalarField s23;

  /// S_h has entries S13, S23, -S13, -S23, so |S_h|^2 = 2 S13^2 + 2 S23^2.
  double sh_sobolev_norm(double s) const;
  double sh_lebesgue_norm(double p) const;
};
HorizontalParts horizontal_parts(const SpectralVectorField& u);

struct P2dSplit {
  SpectralVectorField two_d;
  SpectralVectorField perp;
};
P2dSplit p2d_split(const SpectralVectorField& u);

struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool holds = true;
};
/// ||P2d_perp u||_{H^1/2} against (1/2pi) ||d3 u||_{H^1/2}.
BoundCheck p2dperp_bound_check(const SpectralVectorField& u);

enum class ConePart { inside, outside };
/// Lattice cone |k3| < eps r with r = sqrt(k1^2 + k2^2); k = 0 is inside.
bool in_cone(const Wavevector& k, double eps);
SpectralVectorField cone_filter(const SpectralVectorField& u, double eps, ConePart part);

struct RatioBand {
  double min = 0.0;
  double max = 0.0;
};
/// Range of ||v3||_{L^q} / ||omega_h||_{L^q} over the given fields.
RatioBand lq_ratio_band(const std::vector<SpectralVectorField>& fields, double q);

}  // namespace a2d
