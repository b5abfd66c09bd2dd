#pragma once

#include "almost2d/field.hpp"

namespace a2d {

/// A(sin 2pi x1 cos 2pi x2, -cos 2pi x1 sin 2pi x2, 0).
SpectralVectorField taylor_green_2d(const GridSpec& g, double amplitude = 1.0);

/// u^(+-k) = v, conj(v).
SpectralVectorField single_mode(const GridSpec& g, const Wavevector& k, const CVec3& v);

/// a_n = (sqrt(n^2+2) / (4 pi (n^2+1)))^{1/2}.
double un_normalization(int n);
/// u^(+-(1,n,1)) = a_n (n,-1,0).
SpectralVectorField un_family(int n, const GridSpec& g);

/// n(1,-1,0) cos 2pi(x1+x2) + delta (1,-2,1) cos 2pi(x1+x2+x3) with delta = exp(-n^5) by default.
SpectralVectorField large_almost_2d(int n, const GridSpec& g);
SpectralVectorField large_almost_2d(int n, const GridSpec& g, double perturbation);

/// Closed-form K0, E0 and log ||omega_h||_{H^-1/2} of large_almost_2d for perturbation exp(log_delta).
struct LargeAlmost2dNorms {
  double K0;
  double E0;
  double log_omega_h_hminushalf;
};
LargeAlmost2dNorms large_almost_2d_norms(int n, double log_delta);
/// Smallest n* such that the criterion holds for every n in [n*, n_max], from the closed forms.
int large_almost_2d_threshold(double nu, int n_max = 100000);

/// Field on the tall torus [0,1)^2 x [0,m), stored through the reference coordinate y3 = x3/m.
/// A base mode (k1,k2,k3) keeps its index; its physical wavevector is (k1,k2,k3/m).
struct StretchedField {
  SpectralVectorField reference;
  int m;

  /// Grid quadrature on the tall box with cell volume m/N^3.
  double lebesgue_norm(double q) const;
  /// max |k1 u1 + k2 u2 + (k3/m) u3| / max |u|.
  double max_divergence() const;
  StretchedField horizontal() const;
};

/// f(x1, x2, eps x3) with eps = 1/m.
StretchedField stretch(const SpectralVectorField& f, int m);
/// eps^{2/3} log(eps^-a)^{1/4} (eps w1, eps w2, w3)(x1, x2, eps x3) with eps = 1/m.
StretchedField rescaled_vorticity(const SpectralVectorField& base_omega, int m, double a);
/// c1 ||omega_h||_{L^3/2} exp(c2^2 ||omega||_{L^6/5}^2 ||omega||_{L^2}^2 / (4 R2 nu^3)).
double rescaled_criterion_quantity(const StretchedField& omega, double nu);

/// Lattice shell rho <= r <= 2 rho, |k3| < rho/n, with
/// w^(k) = (sqrt(n) loglog(n)^{1/4} / rho) (e3 - (k3/r) e_r). rho <= 0 selects rho = n + 1.
SpectralVectorField annulus_analog(int n, const GridSpec& g, double rho = 0.0);
double annulus_default_rho(int n);
/// Smallest power-of-two grid whose lattice holds the shell.
int annulus_required_grid(int n, double rho = 0.0);

/// v2d + delta w for x3-independent v2d and mean-zero divergence-free w.
SpectralVectorField two_d_plus_perturbation(const SpectralVectorField& v2d, const SpectralVectorField& w,
                                            double delta);

}  // namespace a2d
