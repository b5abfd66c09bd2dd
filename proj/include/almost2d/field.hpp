#pragma once

#include <array>
#include <complex>
#include <vector>

#include "almost2d/grid.hpp"

namespace a2d {

using cplx = std::complex<double>;
using CVec3 = std::array<cplx, 3>;

/// Relative tolerance for Hermitian symmetry and imaginary residues.
inline constexpr double hermitian_tolerance = 1e-10;

/// Fourier-series coefficients of a real scalar on the torus.
struct SpectralScalarField {
  GridSpec grid;
  std::vector<cplx> coeffs;

  explicit SpectralScalarField(GridSpec g) : grid(g), coeffs(g.size()) {}

  cplx operator()(const Wavevector& k) const { return coeffs[grid.flat(k)]; }
  /// Sets the coefficient at k and its conjugate at -k.
  void set_mode(const Wavevector& k, cplx v);
};

/// Fourier-series coefficients u^(k) of a real vector field, one array per component.
struct SpectralVectorField {
  GridSpec grid;
  std::array<std::vector<cplx>, 3> coeffs;

  explicit SpectralVectorField(GridSpec g);

  CVec3 mode(const Wavevector& k) const;
  CVec3 at(std::size_t idx) const { return {coeffs[0][idx], coeffs[1][idx], coeffs[2][idx]}; }
  /// Sets u^(k) = v and u^(-k) = conj(v).
  void set_mode(const Wavevector& k, const CVec3& v);
  /// True when the k = 0 coefficient vanishes.
  bool mean_zero() const;
  SpectralScalarField component(int c) const;

  SpectralVectorField& operator+=(const SpectralVectorField& o);
  SpectralVectorField& operator-=(const SpectralVectorField& o);
  SpectralVectorField& operator*=(double a);
};

SpectralVectorField operator+(SpectralVectorField a, const SpectralVectorField& b);
SpectralVectorField operator-(SpectralVectorField a, const SpectralVectorField& b);
SpectralVectorField operator*(double a, SpectralVectorField u);

/// Grid samples, row-major with x3 fastest.
struct PhysicalScalarField {
  GridSpec grid;
  std::vector<double> samples;

  explicit PhysicalScalarField(GridSpec g) : grid(g), samples(g.size()) {}
};

struct PhysicalVectorField {
  GridSpec grid;
  std::array<std::vector<double>, 3> samples;

  explicit PhysicalVectorField(GridSpec g);
};

/// Symmetric strain tensor stored as S11, S12, S13, S22, S23, S33.
struct StrainField {
  GridSpec grid;
  std::vector<SpectralScalarField> comps;

  explicit StrainField(GridSpec g) : grid(g), comps(6, SpectralScalarField(g)) {}

  static int slot(int i, int j);
  const SpectralScalarField& operator()(int i, int j) const { return comps[slot(i, j)]; }
  SpectralScalarField& operator()(int i, int j) { return comps[slot(i, j)]; }
};

SpectralVectorField to_spectral(const PhysicalVectorField& f);
SpectralScalarField to_spectral(const PhysicalScalarField& f);
PhysicalVectorField to_physical(const SpectralVectorField& u);
PhysicalScalarField to_physical(const SpectralScalarField& u);

struct LerayParts {
  SpectralVectorField u_df;
  SpectralVectorField grad_part;
};
LerayParts leray_project(const SpectralVectorField& v);

SpectralVectorField curl(const SpectralVectorField& u);
StrainField strain(const SpectralVectorField& u);
SpectralVectorField biot_savart(const SpectralVectorField& w);
SpectralVectorField heat_semigroup(const SpectralVectorField& u, double t);
SpectralScalarField pressure(const SpectralVectorField& u);

/// 2/3 rule: a mode survives iff 3|k_i| < n on every axis.
bool dealias_keeps(const GridSpec& g, const Wavevector& k);
SpectralVectorField dealias(const SpectralVectorField& u);
SpectralScalarField dealias(const SpectralScalarField& u);

SpectralVectorField partial(const SpectralVectorField& u, int axis);
SpectralScalarField partial(const SpectralScalarField& f, int axis);
SpectralVectorField gradient(const SpectralScalarField& f);
SpectralScalarField divergence(const SpectralVectorField& u);
SpectralVectorField laplacian(const SpectralVectorField& u);

double max_abs_coeff(const SpectralVectorField& u);
/// max |k.u^(k)| / max |u^(k)|; zero for the zero field.
double max_divergence(const SpectralVectorField& u);
/// max |u^(-k) - conj(u^(k))| / max |u^(k)|.
double hermitian_defect(const SpectralVectorField& u);
double hermitian_defect(const SpectralScalarField& f);

}  // namespace a2d
