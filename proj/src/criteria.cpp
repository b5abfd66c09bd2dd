#include "almost2d/criteria.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "almost2d/norms.hpp"

namespace a2d {
namespace {

constexpr double pi = std::numbers::pi;
constexpr double pi4 = pi * pi * pi * pi;

void require_nu(double nu) {
  if (!(nu > 0.0)) throw std::domain_error("viscosity must be positive");
}

double agree(double a, double b) { return std::abs(a - b) / std::abs(b); }

// 6912 = 2 * 3456, where 1/(3456 pi^4) = 27 / (2^7 3^6 pi^4) is the cubic enstrophy coefficient.
double small_data_threshold(double nu) { return 6912.0 * pi4 * std::pow(nu, 4); }

}  // namespace

SharpConstants constants() {
  SharpConstants k;
  k.c1 = 1.0 / (std::pow(2.0, 1.0 / 6.0) * std::cbrt(pi));
  k.c2 = std::pow(2.0 / pi, 2.0 / 3.0) / std::sqrt(3.0);
  k.r1 = 1.0 / (2.0 * k.c1 * k.c2);
  const double c14c24 = std::pow(k.c1 * k.c2, 4);
  const double s = std::pow(1.0 + std::sqrt(2.0), 4);
  k.r2 = 128.0 / (27.0 * s * c14c24);
  k.small_data_threshold_coeff = 6912.0 * pi4;

  const double r1_closed = std::sqrt(3.0) * pi / (2.0 * std::sqrt(2.0));
  const double r2_closed = 32.0 * pi4 / (3.0 * s);
  const double cubic = 2.0 / 9.0 * std::sqrt(6.0) * std::pow(k.c1, 3);  // = 2 / (3^{3/2} pi)
  const double cubic_coeff = 27.0 * std::pow(cubic, 4) / 2048.0;        // = 1 / (3456 pi^4)
  if (agree(k.r1, r1_closed) > 1e-12 || agree(k.r2, r2_closed) > 1e-12 ||
      agree(cubic, 2.0 / (std::pow(3.0, 1.5) * pi)) > 1e-12 ||
      agree(2.0 / cubic_coeff, k.small_data_threshold_coeff) > 1e-12)
    throw std::logic_error("sharp constants disagree with their closed forms");
  return k;
}

double CriterionReport::input(const std::string& key) const {
  for (const auto& [k, v] : inputs)
    if (k == key) return v;
  throw std::out_of_range("no input named " + key);
}

CriterionReport small_data_check(double K0, double E0, double nu) {
  require_nu(nu);
  if (K0 < 0.0 || E0 < 0.0) throw std::domain_error("small_data_check: K0 and E0 must be nonnegative");
  CriterionReport r;
  r.name = "small_data";
  r.lhs = K0 * E0;
  r.rhs = small_data_threshold(nu);
  r.log_lhs = std::log(r.lhs);
  r.satisfied = r.lhs < r.rhs;
  r.inputs = {{"K0", K0}, {"E0", E0}, {"nu", nu}};
  return r;
}

double log_gamma2d_quantity(double omega_h, double K0, double E0, double nu) {
  require_nu(nu);
  return std::log(omega_h) + K0 * E0 / (constants().r2 * nu * nu * nu);
}

CriterionReport gamma2d_values(double omega_h, double K0, double E0, double nu) {
  require_nu(nu);
  const SharpConstants k = constants();
  CriterionReport r;
  r.name = "gamma2d";
  r.rhs = k.r1 * nu;
  r.log_lhs = std::log(omega_h) + (K0 * E0 - small_data_threshold(nu)) / (k.r2 * nu * nu * nu);
  r.lhs = std::exp(r.log_lhs);
  r.satisfied = r.log_lhs < std::log(r.rhs);
  r.inputs = {{"K0", K0}, {"E0", E0}, {"nu", nu}, {"omega_h_hminushalf", omega_h}};
  return r;
}

CriterionReport gamma2d_check(const SpectralVectorField& u, double nu) {
  if (!u.mean_zero()) throw std::domain_error("gamma2d_check: velocity must have zero mean");
  if (max_divergence(u) > 1e-10) throw std::domain_error("gamma2d_check: velocity is not divergence-free");
  const SpectralVectorField w = curl(u);
  const double wn = sobolev_norm(w, 0.0);
  auto r = gamma2d_values(sobolev_norm(horizontal(w), -0.5), kinetic_energy(u), 0.5 * wn * wn, nu);
  r.label = torus_label;
  return r;
}

CriterionReport gamma2d_lp_check(const SpectralVectorField& omega, double nu) {
  require_nu(nu);
  if (!omega.mean_zero()) throw std::domain_error("gamma2d_lp_check: vorticity must have zero mean");
  if (max_divergence(omega) > 1e-10)
    throw std::domain_error("gamma2d_lp_check: vorticity is not divergence-free");
  const SharpConstants k = constants();
  const double wh = lebesgue_norm(horizontal(omega), 1.5);
  const double w65 = lebesgue_norm(omega, 1.2);
  const double w2 = sobolev_norm(omega, 0.0);
  CriterionReport r;
  r.name = "gamma2d_lp";
  r.rhs = k.r1 * nu;
  const double product = 0.25 * k.c2 * k.c2 * w65 * w65 * w2 * w2;
  r.log_lhs = std::log(k.c1 * wh) + (product - small_data_threshold(nu)) / (k.r2 * nu * nu * nu);
  r.lhs = std::exp(r.log_lhs);
  r.satisfied = r.log_lhs < std::log(r.rhs);
  const CriterionReport g = gamma2d_check(biot_savart(omega), nu);
  const bool chain = g.log_lhs <= r.log_lhs + 1e-12 * std::max(1.0, std::abs(r.log_lhs));
  r.inputs = {{"nu", nu},
              {"omega_h_l3half", wh},
              {"omega_l6fifth", w65},
              {"omega_l2", w2},
              {"lhs_gamma2d", g.lhs},
              {"log_lhs_gamma2d", g.log_lhs}};
  r.flags = {{"chain_consistent", chain}};
  r.label = torus_label;
  return r;
}

std::optional<double> global_enstrophy_bound(double K0, double E0, double nu) {
  require_nu(nu);
  const double den = 1.0 - K0 * E0 / small_data_threshold(nu);
  if (!(den > 0.0)) return std::nullopt;
  return E0 / den;
}

double local_enstrophy_window(double E0, double nu) {
  require_nu(nu);
  if (E0 == 0.0) return std::numeric_limits<double>::infinity();
  return 1728.0 * pi4 * nu * nu * nu / (E0 * E0);
}

double local_enstrophy_bound(double E0, double nu, double t) {
  if (t < 0.0) throw std::domain_error("local_enstrophy_bound: negative time");
  const double window = local_enstrophy_window(E0, nu);
  if (!(t < window)) throw std::domain_error("local_enstrophy_bound: t beyond validity window 1728 pi^4 nu^3 / E0^2");
  return E0 / std::sqrt(1.0 - t / window);
}

Envelopes envelopes(double K0, double E0, double nu, double t) {
  Envelopes e;
  e.global_enstrophy_bound = global_enstrophy_bound(K0, E0, nu);
  if (t >= 0.0 && t < local_enstrophy_window(E0, nu)) e.local_enstrophy_bound = local_enstrophy_bound(E0, nu, t);
  return e;
}

double horizontal_gronwall_sq(double omega_h0_sq, double omega_l2_fourth_integral, double nu) {
  require_nu(nu);
  return omega_h0_sq * std::exp(omega_l2_fourth_integral / (constants().r2 * nu * nu * nu));
}

BlowupTimes blowup_time_bounds(double K0, double E0, double nu) {
  require_nu(nu);
  return {K0 * K0 / (13824.0 * pi4 * std::pow(nu, 5)), local_enstrophy_window(E0, nu)};
}

bool critical_product_floor(double K, double E, double nu) {
  require_nu(nu);
  return K * E < small_data_threshold(nu);
}

CriterionReport iftimie_check(const SpectralVectorField& u, double nu, double C) {
  require_nu(nu);
  if (!(C > 0.0)) throw std::domain_error("iftimie_check: constant C must be positive");
  const P2dSplit s = p2d_split(u);
  const double w = sobolev_norm(s.perp, 0.5);
  const double v = sobolev_norm(s.two_d, 0.0);
  CriterionReport r;
  r.name = "iftimie";
  r.rhs = C * nu;
  r.log_lhs = std::log(w) + v * v / (C * nu * nu);
  r.lhs = std::exp(r.log_lhs);
  r.satisfied = r.log_lhs < std::log(r.rhs);
  r.inputs = {{"nu", nu}, {"C", C}, {"perp_h_half", w}, {"two_d_l2", v}};
  r.label = torus_label;
  return r;
}

}  // namespace a2d
