#include "almost2d/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "almost2d/fft.hpp"

namespace a2d {
namespace {

constexpr double pi = std::numbers::pi;
const cplx I{0.0, 1.0};

double max_abs(const std::vector<cplx>& c) {
  double m = 0.0;
  for (const auto& z : c) m = std::max(m, std::abs(z));
  return m;
}

double abs_defect(const GridSpec& g, const std::vector<cplx>& c) {
  double d = 0.0;
  for (std::size_t idx = 0; idx < c.size(); ++idx)
    d = std::max(d, std::abs(c[g.mirror(idx)] - std::conj(c[idx])));
  return d;
}

void symmetrize(const GridSpec& g, std::vector<cplx>& c) {
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    const std::size_t m = g.mirror(idx);
    if (m < idx) continue;
    const cplx avg = 0.5 * (c[idx] + std::conj(c[m]));
    c[idx] = avg;
    c[m] = std::conj(avg);
  }
}

std::vector<cplx> forward(const GridSpec& g, const std::vector<double>& s) {
  for (double v : s)
    if (!std::isfinite(v)) throw std::domain_error("to_spectral: non-finite sample");
  std::vector<cplx> c(s.begin(), s.end());
  fft::transform(g.n(), c.data(), fft::Direction::forward);
  const double inv = 1.0 / double(g.size());
  for (auto& z : c) z *= inv;
  return c;
}

void check_and_symmetrize(const GridSpec& g, std::vector<cplx>& c, double scale) {
  if (abs_defect(g, c) > hermitian_tolerance * scale)
    throw std::runtime_error("to_spectral: transform of real samples lost Hermitian symmetry");
  symmetrize(g, c);
}

std::vector<double> inverse(const GridSpec& g, const std::vector<cplx>& c, double scale) {
  if (abs_defect(g, c) > hermitian_tolerance * scale)
    throw std::domain_error("to_physical: coefficients violate Hermitian symmetry");
  std::vector<cplx> work(c);
  fft::transform(g.n(), work.data(), fft::Direction::backward);
  double re_max = 0.0, im_max = 0.0;
  for (const auto& z : work) {
    re_max = std::max(re_max, std::abs(z.real()));
    im_max = std::max(im_max, std::abs(z.imag()));
  }
  if (im_max > hermitian_tolerance * std::max(re_max, scale))
    throw std::domain_error("to_physical: imaginary residue above tolerance");
  std::vector<double> out(work.size());
  for (std::size_t i = 0; i < work.size(); ++i) out[i] = work[i].real();
  return out;
}

// Derivative wavevector (Nyquist components zeroed) of a flat index.
std::array<double, 3> dk(const GridSpec& g, int i1, int i2, int i3) {
  return {g.derivative_wavenumber(i1), g.derivative_wavenumber(i2), g.derivative_wavenumber(i3)};
}

}  // namespace

void SpectralScalarField::set_mode(const Wavevector& k, cplx v) {
  if (!grid.resolves(k)) throw std::invalid_argument("set_mode: wavevector outside lattice");
  const std::size_t idx = grid.flat(k), m = grid.mirror(idx);
  if (idx == m && v.imag() != 0.0)
    throw std::invalid_argument("set_mode: self-conjugate mode must be real");
  coeffs[idx] = v;
  coeffs[m] = std::conj(v);
}

SpectralVectorField::SpectralVectorField(GridSpec g) : grid(g) {
  for (auto& c : coeffs) c.assign(g.size(), cplx{});
}

CVec3 SpectralVectorField::mode(const Wavevector& k) const { return at(grid.flat(k)); }

void SpectralVectorField::set_mode(const Wavevector& k, const CVec3& v) {
  if (!grid.resolves(k)) throw std::invalid_argument("set_mode: wavevector outside lattice");
  const std::size_t idx = grid.flat(k), m = grid.mirror(idx);
  for (int c = 0; c < 3; ++c) {
    if (idx == m && v[c].imag() != 0.0)
      throw std::invalid_argument("set_mode: self-conjugate mode must be real");
    coeffs[c][idx] = v[c];
    coeffs[c][m] = std::conj(v[c]);
  }
}

bool SpectralVectorField::mean_zero() const {
  const double tol = 1e-12 * std::max(max_abs_coeff(*this), 1e-300);
  for (const auto& c : coeffs)
    if (std::abs(c[0]) > tol) return false;
  return true;
}

SpectralScalarField SpectralVectorField::component(int c) const {
  SpectralScalarField f(grid);
  f.coeffs = coeffs[c];
  return f;
}

SpectralVectorField& SpectralVectorField::operator+=(const SpectralVectorField& o) {
  if (!(grid == o.grid)) throw std::invalid_argument("field grids differ");
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < coeffs[c].size(); ++i) coeffs[c][i] += o.coeffs[c][i];
  return *this;
}

SpectralVectorField& SpectralVectorField::operator-=(const SpectralVectorField& o) {
  if (!(grid == o.grid)) throw std::invalid_argument("field grids differ");
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < coeffs[c].size(); ++i) coeffs[c][i] -= o.coeffs[c][i];
  return *this;
}

SpectralVectorField& SpectralVectorField::operator*=(double a) {
  for (auto& c : coeffs)
    for (auto& z : c) z *= a;
  return *this;
}

SpectralVectorField operator+(SpectralVectorField a, const SpectralVectorField& b) { return a += b; }
SpectralVectorField operator-(SpectralVectorField a, const SpectralVectorField& b) { return a -= b; }
SpectralVectorField operator*(double a, SpectralVectorField u) { return u *= a; }

PhysicalVectorField::PhysicalVectorField(GridSpec g) : grid(g) {
  for (auto& s : samples) s.assign(g.size(), 0.0);
}

int StrainField::slot(int i, int j) {
  if (i > j) std::swap(i, j);
  static constexpr int table[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  return table[i][j];
}

SpectralVectorField to_spectral(const PhysicalVectorField& f) {
  SpectralVectorField u(f.grid);
  for (int c = 0; c < 3; ++c) u.coeffs[c] = forward(f.grid, f.samples[c]);
  const double scale = max_abs_coeff(u);
  for (int c = 0; c < 3; ++c) check_and_symmetrize(f.grid, u.coeffs[c], scale);
  return u;
}

SpectralScalarField to_spectral(const PhysicalScalarField& f) {
  SpectralScalarField u(f.grid);
  u.coeffs = forward(f.grid, f.samples);
  check_and_symmetrize(f.grid, u.coeffs, max_abs(u.coeffs));
  return u;
}

PhysicalVectorField to_physical(const SpectralVectorField& u) {
  PhysicalVectorField f(u.grid);
  const double scale = max_abs_coeff(u);
  for (int c = 0; c < 3; ++c) f.samples[c] = inverse(u.grid, u.coeffs[c], scale);
  return f;
}

PhysicalScalarField to_physical(const SpectralScalarField& u) {
  PhysicalScalarField f(u.grid);
  f.samples = inverse(u.grid, u.coeffs, max_abs(u.coeffs));
  return f;
}

LerayParts leray_project(const SpectralVectorField& v) {
  LerayParts out{v, SpectralVectorField(v.grid)};
  for_each_mode(v.grid, [&](std::size_t idx, const Wavevector& k) {
    const double k2 = k.norm_sq();
    if (k2 == 0.0) return;
    const double kv[3] = {double(k.k1), double(k.k2), double(k.k3)};
    const cplx dot = kv[0] * v.coeffs[0][idx] + kv[1] * v.coeffs[1][idx] + kv[2] * v.coeffs[2][idx];
    for (int c = 0; c < 3; ++c) {
      const cplx g = dot * kv[c] / k2;
      out.grad_part.coeffs[c][idx] = g;
      out.u_df.coeffs[c][idx] = v.coeffs[c][idx] - g;
    }
  });
  return out;
}

SpectralVectorField curl(const SpectralVectorField& u) {
  SpectralVectorField w(u.grid);
  for_each_index(u.grid, [&](std::size_t idx, int i1, int i2, int i3) {
    const auto k = dk(u.grid, i1, i2, i3);
    const CVec3 a = u.at(idx);
    const cplx f = 2.0 * pi * I;
    w.coeffs[0][idx] = f * (k[1] * a[2] - k[2] * a[1]);
    w.coeffs[1][idx] = f * (k[2] * a[0] - k[0] * a[2]);
    w.coeffs[2][idx] = f * (k[0] * a[1] - k[1] * a[0]);
  });
  return w;
}

StrainField strain(const SpectralVectorField& u) {
  StrainField s(u.grid);
  for_each_index(u.grid, [&](std::size_t idx, int i1, int i2, int i3) {
    const auto k = dk(u.grid, i1, i2, i3);
    const CVec3 a = u.at(idx);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) s(i, j).coeffs[idx] = pi * I * (k[i] * a[j] + k[j] * a[i]);
  });
  return s;
}

SpectralVectorField biot_savart(const SpectralVectorField& w) {
  const double scale = max_abs_coeff(w);
  if (scale == 0.0) return SpectralVectorField(w.grid);
  if (!w.mean_zero()) throw std::domain_error("biot_savart: vorticity has nonzero mean");
  if (max_divergence(w) > 1e-10) throw std::domain_error("biot_savart: vorticity is not divergence-free");
  SpectralVectorField u(w.grid);
  for_each_index(w.grid, [&](std::size_t idx, int i1, int i2, int i3) {
    const Wavevector kw = w.grid.wavevector(idx);
    const double k2 = kw.norm_sq();
    if (k2 == 0.0) return;
    const auto k = dk(w.grid, i1, i2, i3);
    const CVec3 a = w.at(idx);
    const cplx f = 2.0 * pi * I / (4.0 * pi * pi * k2);
    u.coeffs[0][idx] = f * (k[1] * a[2] - k[2] * a[1]);
    u.coeffs[1][idx] = f * (k[2] * a[0] - k[0] * a[2]);
    u.coeffs[2][idx] = f * (k[0] * a[1] - k[1] * a[0]);
  });
  return u;
}

SpectralVectorField heat_semigroup(const SpectralVectorField& u, double t) {
  if (!(t >= 0.0)) throw std::domain_error("heat_semigroup: negative time");
  SpectralVectorField out(u);
  if (t == 0.0) return out;
  for_each_mode(u.grid, [&](std::size_t idx, const Wavevector& k) {
    const double f = std::exp(-4.0 * pi * pi * k.norm_sq() * t);
    for (int c = 0; c < 3; ++c) out.coeffs[c][idx] *= f;
  });
  return out;
}

SpectralScalarField pressure(const SpectralVectorField& u) {
  const GridSpec& g = u.grid;
  const SpectralVectorField ud = dealias(u);
  // grad[i].samples[j] = d_i u_j
  std::vector<PhysicalVectorField> grad;
  for (int i = 0; i < 3; ++i) grad.push_back(to_physical(partial(ud, i)));
  PhysicalScalarField src(g);
  for (std::size_t x = 0; x < g.size(); ++x) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s += grad[i].samples[j][x] * grad[j].samples[i][x];
    src.samples[x] = s;
  }
  SpectralScalarField p = dealias(to_spectral(src));
  for_each_mode(g, [&](std::size_t idx, const Wavevector& k) {
    const double k2 = k.norm_sq();
    p.coeffs[idx] = k2 == 0.0 ? cplx{} : p.coeffs[idx] / (4.0 * pi * pi * k2);
  });
  return p;
}

bool dealias_keeps(const GridSpec& g, const Wavevector& k) {
  const int n = g.n();
  return 3 * std::abs(k.k1) < n && 3 * std::abs(k.k2) < n && 3 * std::abs(k.k3) < n;
}

SpectralVectorField dealias(const SpectralVectorField& u) {
  SpectralVectorField out(u);
  for_each_mode(u.grid, [&](std::size_t idx, const Wavevector& k) {
    if (!dealias_keeps(u.grid, k))
      for (int c = 0; c < 3; ++c) out.coeffs[c][idx] = 0.0;
  });
  return out;
}

SpectralScalarField dealias(const SpectralScalarField& u) {
  SpectralScalarField out(u);
  for_each_mode(u.grid, [&](std::size_t idx, const Wavevector& k) {
    if (!dealias_keeps(u.grid, k)) out.coeffs[idx] = 0.0;
  });
  return out;
}

SpectralScalarField partial(const SpectralScalarField& f, int axis) {
  SpectralScalarField out(f.grid);
  for_each_index(f.grid, [&](std::size_t idx, int i1, int i2, int i3) {
    out.coeffs[idx] = 2.0 * pi * I * dk(f.grid, i1, i2, i3)[axis] * f.coeffs[idx];
  });
  return out;
}

SpectralVectorField partial(const SpectralVectorField& u, int axis) {
  SpectralVectorField out(u.grid);
  for_each_index(u.grid, [&](std::size_t idx, int i1, int i2, int i3) {
    const cplx f = 2.0 * pi * I * dk(u.grid, i1, i2, i3)[axis];
    for (int c = 0; c < 3; ++c) out.coeffs[c][idx] = f * u.coeffs[c][idx];
  });
  return out;
}

SpectralVectorField gradient(const SpectralScalarField& f) {
  SpectralVectorField out(f.grid);
  for (int c = 0; c < 3; ++c) out.coeffs[c] = partial(f, c).coeffs;
  return out;
}

SpectralScalarField divergence(const SpectralVectorField& u) {
  SpectralScalarField out(u.grid);
  for_each_index(u.grid, [&](std::size_t idx, int i1, int i2, int i3) {
    const auto k = dk(u.grid, i1, i2, i3);
    out.coeffs[idx] =
        2.0 * pi * I * (k[0] * u.coeffs[0][idx] + k[1] * u.coeffs[1][idx] + k[2] * u.coeffs[2][idx]);
  });
  return out;
}

SpectralVectorField laplacian(const SpectralVectorField& u) {
  SpectralVectorField out(u);
  for_each_mode(u.grid, [&](std::size_t idx, const Wavevector& k) {
    const double f = -4.0 * pi * pi * k.norm_sq();
    for (int c = 0; c < 3; ++c) out.coeffs[c][idx] *= f;
  });
  return out;
}

double max_abs_coeff(const SpectralVectorField& u) {
  return std::max({max_abs(u.coeffs[0]), max_abs(u.coeffs[1]), max_abs(u.coeffs[2])});
}

double max_divergence(const SpectralVectorField& u) {
  const double scale = max_abs_coeff(u);
  if (scale == 0.0) return 0.0;
  double d = 0.0;
  for_each_mode(u.grid, [&](std::size_t idx, const Wavevector& k) {
    const cplx dot = double(k.k1) * u.coeffs[0][idx] + double(k.k2) * u.coeffs[1][idx] +
                     double(k.k3) * u.coeffs[2][idx];
    d = std::max(d, std::abs(dot));
  });
  return d / scale;
}

double hermitian_defect(const SpectralVectorField& u) {
  const double scale = max_abs_coeff(u);
  if (scale == 0.0) return 0.0;
  double d = 0.0;
  for (const auto& c : u.coeffs) d = std::max(d, abs_defect(u.grid, c));
  return d / scale;
}

double hermitian_defect(const SpectralScalarField& f) {
  const double scale = max_abs(f.coeffs);
  return scale == 0.0 ? 0.0 : abs_defect(f.grid, f.coeffs) / scale;
}

}  // namespace a2d
