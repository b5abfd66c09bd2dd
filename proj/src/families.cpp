#include "almost2d/families.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "almost2d/criteria.hpp"
#include "almost2d/norms.hpp"

namespace a2d {
namespace {

constexpr double pi = std::numbers::pi;
const cplx I{0.0, 1.0};

void require_resolved(const GridSpec& g, const Wavevector& k, const char* who) {
  if (!g.resolves(k) || g.is_nyquist(g.index_of(k.k1)) || g.is_nyquist(g.index_of(k.k2)) ||
      g.is_nyquist(g.index_of(k.k3)))
    throw std::domain_error(std::string(who) + ": grid does not resolve the family's modes");
}

}  // namespace

SpectralVectorField taylor_green_2d(const GridSpec& g, double A) {
  // sin a cos b = (sin(a+b) + sin(a-b))/2 and sin t has coefficient -i/2 at +1.
  SpectralVectorField u(g);
  const cplx q = 0.25 * A * I;
  u.set_mode({1, 1, 0}, {-q, q, 0.0});
  u.set_mode({1, -1, 0}, {-q, -q, 0.0});
  return u;
}

SpectralVectorField single_mode(const GridSpec& g, const Wavevector& k, const CVec3& v) {
  require_resolved(g, k, "single_mode");
  SpectralVectorField u(g);
  u.set_mode(k, v);
  return u;
}

double un_normalization(int n) {
  const double n2 = double(n) * n;
  return std::sqrt(std::sqrt(n2 + 2.0) / (4.0 * pi * (n2 + 1.0)));
}

SpectralVectorField un_family(int n, const GridSpec& g) {
  if (n < 1) throw std::domain_error("un_family: n must be at least 1");
  const Wavevector k{1, n, 1};
  require_resolved(g, k, "un_family");
  const double a = un_normalization(n);
  SpectralVectorField u(g);
  u.set_mode(k, {a * n, -a, 0.0});
  return u;
}

SpectralVectorField large_almost_2d(int n, const GridSpec& g) {
  return large_almost_2d(n, g, std::exp(-std::pow(double(n), 5)));
}

SpectralVectorField large_almost_2d(int n, const GridSpec& g, double delta) {
  if (n < 1) throw std::domain_error("large_almost_2d: n must be at least 1");
  require_resolved(g, {1, 1, 1}, "large_almost_2d");
  SpectralVectorField u(g);
  u.set_mode({1, 1, 0}, {0.5 * n, -0.5 * n, 0.0});
  u.set_mode({1, 1, 1}, {0.5 * delta, -1.0 * delta, 0.5 * delta});
  return u;
}

LargeAlmost2dNorms large_almost_2d_norms(int n, double log_delta) {
  const double d2 = std::exp(2.0 * log_delta);
  const double n2 = double(n) * n;
  return {0.5 * n2 + 1.5 * d2, 4.0 * pi * pi * n2 + 18.0 * pi * pi * d2,
          log_delta + 0.5 * std::log(3.0 * std::sqrt(3.0) * pi)};
}

int large_almost_2d_threshold(double nu, int n_max) {
  const double log_rhs = std::log(constants().r1 * nu);
  int n_star = n_max + 1;
  for (int n = n_max; n >= 1; --n) {
    const auto c = large_almost_2d_norms(n, -std::pow(double(n), 5));
    const CriterionReport r = gamma2d_values(1.0, c.K0, c.E0, nu);
    if (!(c.log_omega_h_hminushalf + r.log_lhs < log_rhs)) break;
    n_star = n;
  }
  return n_star;
}

double StretchedField::lebesgue_norm(double q) const {
  // Tall-box samples coincide with reference samples; only the cell volume changes.
  const double ref = a2d::lebesgue_norm(reference, q);
  return std::isinf(q) ? ref : ref * std::pow(double(m), 1.0 / q);
}

double StretchedField::max_divergence() const {
  const double scale = max_abs_coeff(reference);
  if (scale == 0.0) return 0.0;
  double d = 0.0;
  for_each_mode(reference.grid, [&](std::size_t idx, const Wavevector& k) {
    const cplx dot = double(k.k1) * reference.coeffs[0][idx] + double(k.k2) * reference.coeffs[1][idx] +
                     double(k.k3) / m * reference.coeffs[2][idx];
    d = std::max(d, std::abs(dot));
  });
  return d / scale;
}

StretchedField StretchedField::horizontal() const { return {a2d::horizontal(reference), m}; }

StretchedField stretch(const SpectralVectorField& f, int m) {
  if (m < 1) throw std::domain_error("stretch: m must be a positive integer");
  return {f, m};
}

StretchedField rescaled_vorticity(const SpectralVectorField& base_omega, int m, double a) {
  if (m < 2) throw std::domain_error("rescaled_vorticity: m must be at least 2 (m = 1 gives log 1 = 0)");
  if (!(a > 0.0)) throw std::domain_error("rescaled_vorticity: a must be positive");
  if (!base_omega.mean_zero() || max_divergence(base_omega) > 1e-10)
    throw std::domain_error("rescaled_vorticity: base vorticity must be mean-zero and divergence-free");
  const double eps = 1.0 / m;
  const double c = std::pow(eps, 2.0 / 3.0) * std::pow(a * std::log(double(m)), 0.25);
  StretchedField out{base_omega, m};
  for (auto& z : out.reference.coeffs[0]) z *= c * eps;
  for (auto& z : out.reference.coeffs[1]) z *= c * eps;
  for (auto& z : out.reference.coeffs[2]) z *= c;
  return out;
}

double rescaled_criterion_quantity(const StretchedField& omega, double nu) {
  if (!(nu > 0.0)) throw std::domain_error("viscosity must be positive");
  const SharpConstants k = constants();
  const double wh = omega.horizontal().lebesgue_norm(1.5);
  const double w65 = omega.lebesgue_norm(1.2);
  const double w2 = omega.lebesgue_norm(2.0);
  return k.c1 * wh * std::exp(k.c2 * k.c2 * w65 * w65 * w2 * w2 / (4.0 * k.r2 * nu * nu * nu));
}

double annulus_default_rho(int n) { return n + 1.0; }

int annulus_required_grid(int n, double rho) {
  if (rho <= 0.0) rho = annulus_default_rho(n);
  const int rmax = int(std::floor(2.0 * rho));
  int N = 4;
  while (N / 2 - 1 < rmax) N *= 2;
  return N;
}

SpectralVectorField annulus_analog(int n, const GridSpec& g, double rho) {
  if (n < 3) throw std::domain_error("annulus_analog: n must be at least 3");
  if (rho <= 0.0) rho = annulus_default_rho(n);
  const int rmax = int(std::floor(2.0 * rho));
  const int zmax = int(std::ceil(rho / n));
  if (rmax > g.n() / 2 - 1 || zmax > g.n() / 2 - 1)
    throw std::domain_error("annulus_analog: shell exceeds the grid lattice");
  const double amp = std::sqrt(double(n)) * std::pow(std::log(std::log(double(n))), 0.25) / rho;
  SpectralVectorField w(g);
  int count = 0;
  for (int k1 = -rmax; k1 <= rmax; ++k1)
    for (int k2 = -rmax; k2 <= rmax; ++k2)
      for (int k3 = -zmax; k3 <= zmax; ++k3) {
        const double r2 = double(k1) * k1 + double(k2) * k2;
        if (r2 < rho * rho || r2 > 4.0 * rho * rho) continue;
        if (!(std::abs(k3) * double(n) < rho)) continue;
        // w^(-k) = w^(k) is real, so each pair is set twice with the same value.
        w.set_mode({k1, k2, k3}, {-amp * k3 * k1 / r2, -amp * k3 * k2 / r2, amp});
        ++count;
      }
  if (count == 0) throw std::domain_error("annulus_analog: empty shell");
  return w;
}

SpectralVectorField two_d_plus_perturbation(const SpectralVectorField& v2d, const SpectralVectorField& w,
                                            double delta) {
  if (!(v2d.grid == w.grid)) throw std::invalid_argument("two_d_plus_perturbation: grids differ");
  for_each_mode(v2d.grid, [&](std::size_t idx, const Wavevector& k) {
    if (k.k3 != 0 && std::abs(v2d.at(idx)[0]) + std::abs(v2d.at(idx)[1]) + std::abs(v2d.at(idx)[2]) != 0.0)
      throw std::domain_error("two_d_plus_perturbation: v2d depends on x3");
  });
  if (!w.mean_zero() || max_divergence(w) > 1e-10)
    throw std::domain_error("two_d_plus_perturbation: w must be mean-zero and divergence-free");
  return v2d + delta * w;
}

}  // namespace a2d
