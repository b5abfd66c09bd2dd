#include "almost2d/norms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace a2d {
namespace {

constexpr double pi = std::numbers::pi;

double weight(const Wavevector& k, double s) {
  const double k2 = k.norm_sq();
  if (k2 == 0.0) return s == 0.0 ? 1.0 : 0.0;
  return std::pow(4.0 * pi * pi * k2, s);
}

void require_mean_zero(const SpectralVectorField& u, const char* who) {
  if (!u.mean_zero()) throw std::domain_error(std::string(who) + ": field must have zero mean");
}

double scalar_sum(const SpectralScalarField& f, double s) {
  if (s < 0.0 && std::abs(f.coeffs[0]) != 0.0)
    throw std::domain_error("sobolev_norm: negative order needs a mean-zero field");
  double sum = 0.0;
  for_each_mode(f.grid, [&](std::size_t idx, const Wavevector& k) { sum += weight(k, s) * std::norm(f.coeffs[idx]); });
  return sum;
}

void check_p(double p) {
  if (!(p >= 1.0)) throw std::domain_error("lebesgue_norm: exponent must be at least 1");
}

}  // namespace

double sobolev_norm(const SpectralVectorField& u, double s) {
  if (s < 0.0) require_mean_zero(u, "sobolev_norm");
  double sum = 0.0;
  for_each_mode(u.grid, [&](std::size_t idx, const Wavevector& k) {
    const double w = weight(k, s);
    if (w == 0.0) return;
    sum += w * (std::norm(u.coeffs[0][idx]) + std::norm(u.coeffs[1][idx]) + std::norm(u.coeffs[2][idx]));
  });
  return std::sqrt(sum);
}

double sobolev_norm(const SpectralScalarField& f, double s) { return std::sqrt(scalar_sum(f, s)); }

double sobolev_norm(const StrainField& S, double s) {
  double sum = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sum += scalar_sum(S(i, j), s);
  return std::sqrt(sum);
}

double lebesgue_norm_of_magnitudes(const std::vector<double>& mag, double p) {
  check_p(p);
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : mag) m = std::max(m, std::abs(v));
    return m;
  }
  double sum = 0.0;
  for (double v : mag) sum += std::pow(std::abs(v), p);
  return std::pow(sum / double(mag.size()), 1.0 / p);
}

double lebesgue_norm(const PhysicalVectorField& f, double p) {
  std::vector<double> mag(f.grid.size());
  for (std::size_t x = 0; x < mag.size(); ++x)
    mag[x] = std::sqrt(f.samples[0][x] * f.samples[0][x] + f.samples[1][x] * f.samples[1][x] +
                       f.samples[2][x] * f.samples[2][x]);
  return lebesgue_norm_of_magnitudes(mag, p);
}

double lebesgue_norm(const SpectralVectorField& u, double p) {
  check_p(p);
  return lebesgue_norm(to_physical(u), p);
}

double lebesgue_norm(const StrainField& S, double p) {
  check_p(p);
  std::vector<PhysicalScalarField> phys;
  for (const auto& c : S.comps) phys.push_back(to_physical(c));
  std::vector<double> mag(S.grid.size());
  for (std::size_t x = 0; x < mag.size(); ++x) {
    double sum = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double v = phys[StrainField::slot(i, j)].samples[x];
        sum += v * v;
      }
    mag[x] = std::sqrt(sum);
  }
  return lebesgue_norm_of_magnitudes(mag, p);
}

BesovResult besov_norm(const SpectralVectorField& u, double s, double p, const BesovSearchConfig& cfg) {
  if (!(s > 0.0)) throw std::domain_error("besov_norm: smoothness index must be positive");
  check_p(p);
  if (!(cfg.t_min > 0.0 && cfg.t_min < cfg.t_max) || cfg.coarse_points < 16)
    throw std::invalid_argument("besov_norm: invalid search configuration");
  require_mean_zero(u, "besov_norm");
  if (max_abs_coeff(u) == 0.0) return {};

  // For p = 2 the heat-smoothed norm is a Parseval sum grouped by |k|^2.
  std::map<double, double> shells;
  if (p == 2.0)
    for_each_mode(u.grid, [&](std::size_t idx, const Wavevector& k) {
      const double a = std::norm(u.coeffs[0][idx]) + std::norm(u.coeffs[1][idx]) + std::norm(u.coeffs[2][idx]);
      if (a > 0.0) shells[k.norm_sq()] += a;
    });
  auto objective = [&](double t) {
    double norm;
    if (p == 2.0) {
      double sum = 0.0;
      for (const auto& [k2, a] : shells) sum += std::exp(-8.0 * pi * pi * k2 * t) * a;
      norm = std::sqrt(sum);
    } else {
      norm = lebesgue_norm(heat_semigroup(u, t), p);
    }
    return std::pow(t, 0.5 * s) * norm;
  };

  const int m = cfg.coarse_points;
  const double la = std::log(cfg.t_min), lb = std::log(cfg.t_max);
  std::vector<double> lt(m), val(m);
  int best = 0;
  for (int i = 0; i < m; ++i) {
    lt[i] = la + (lb - la) * i / (m - 1);
    val[i] = objective(std::exp(lt[i]));
    if (val[i] > val[best]) best = i;
  }
  if (best == 0 || best == m - 1)
    throw std::domain_error("besov_norm: maximizer at the edge of the time scan");

  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lt[best - 1], b = lt[best + 1];
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = objective(std::exp(x1)), f2 = objective(std::exp(x2));
  for (int it = 0; it < cfg.refine_iters; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = objective(std::exp(x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = objective(std::exp(x1));
    }
  }
  BesovResult r{val[best], std::exp(lt[best])};
  if (f1 > r.value) r = {f1, std::exp(x1)};
  if (f2 > r.value) r = {f2, std::exp(x2)};
  return r;
}

double kinetic_energy(const SpectralVectorField& u) {
  const double n = sobolev_norm(u, 0.0);
  return 0.5 * n * n;
}

double enstrophy(const SpectralVectorField& u) {
  const double n = sobolev_norm(curl(u), 0.0);
  return 0.5 * n * n;
}

SpectralVectorField horizontal(const SpectralVectorField& v) {
  SpectralVectorField h(v);
  std::fill(h.coeffs[2].begin(), h.coeffs[2].end(), cplx{});
  return h;
}

double HorizontalParts::sh_sobolev_norm(double s) const {
  const double a = sobolev_norm(s13, s), b = sobolev_norm(s23, s);
  return std::sqrt(2.0 * (a * a + b * b));
}

double HorizontalParts::sh_lebesgue_norm(double p) const {
  const auto a = to_physical(s13), b = to_physical(s23);
  std::vector<double> mag(a.samples.size());
  for (std::size_t x = 0; x < mag.size(); ++x)
    mag[x] = std::sqrt(2.0 * (a.samples[x] * a.samples[x] + b.samples[x] * b.samples[x]));
  return lebesgue_norm_of_magnitudes(mag, p);
}

HorizontalParts horizontal_parts(const SpectralVectorField& u) {
  const StrainField S = strain(u);
  return {horizontal(curl(u)), partial(u, 2) + gradient(u.component(2)), S(0, 2), S(1, 2)};
}

P2dSplit p2d_split(const SpectralVectorField& u) {
  P2dSplit out{u, u};
  for_each_mode(u.grid, [&](std::size_t idx, const Wavevector& k) {
    auto& target = k.k3 == 0 ? out.perp : out.two_d;
    for (int c = 0; c < 3; ++c) target.coeffs[c][idx] = 0.0;
  });
  return out;
}

BoundCheck p2dperp_bound_check(const SpectralVectorField& u) {
  BoundCheck r;
  r.lhs = sobolev_norm(p2d_split(u).perp, 0.5);
  r.rhs = sobolev_norm(partial(u, 2), 0.5) / (2.0 * pi);
  r.ratio = r.rhs > 0.0 ? r.lhs / r.rhs : 0.0;
  r.holds = r.lhs <= r.rhs * (1.0 + 1e-10);
  return r;
}

bool in_cone(const Wavevector& k, double eps) {
  if (k.k1 == 0 && k.k2 == 0 && k.k3 == 0) return true;
  const double r = std::sqrt(double(k.k1) * k.k1 + double(k.k2) * k.k2);
  return std::abs(double(k.k3)) < eps * r;
}

SpectralVectorField cone_filter(const SpectralVectorField& u, double eps, ConePart part) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::domain_error("cone_filter: eps must lie in (0,1)");
  SpectralVectorField out(u);
  for_each_mode(u.grid, [&](std::size_t idx, const Wavevector& k) {
    if (in_cone(k, eps) != (part == ConePart::inside))
      for (int c = 0; c < 3; ++c) out.coeffs[c][idx] = 0.0;
  });
  return out;
}

RatioBand lq_ratio_band(const std::vector<SpectralVectorField>& fields, double q) {
  RatioBand band{inf, 0.0};
  for (const auto& u : fields) {
    const HorizontalParts h = horizontal_parts(u);
    const double den = lebesgue_norm(h.omega_h, q);
    if (den == 0.0) continue;
    const double ratio = lebesgue_norm(h.v3, q) / den;
    band.min = std::min(band.min, ratio);
    band.max = std::max(band.max, ratio);
  }
  return band;
}

}  // namespace a2d
