#include "almost2d/solver.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "almost2d/criteria.hpp"
#include "almost2d/norms.hpp"

namespace a2d {
namespace {

constexpr double pi = std::numbers::pi;
constexpr double nan = std::numeric_limits<double>::quiet_NaN();
constexpr double monitor_tolerance = 1e-6;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size()) throw std::invalid_argument("config: " + key + " is not a number: " + v);
  return x;
}

SpectralVectorField scaled(SpectralVectorField u, const std::vector<double>& f) {
  for (auto& c : u.coeffs)
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= f[i];
  return u;
}

double centered(const DiagnosticsSeries& s, std::size_t i, double DiagnosticsRow::*field) {
  if (i == 0 || i + 1 >= s.rows.size()) throw std::out_of_range("monitor needs an interior row");
  const auto& a = s.rows[i - 1];
  const auto& b = s.rows[i + 1];
  return (b.*field - a.*field) / (b.t - a.t);
}

}  // namespace

SolverConfig parse_solver_config(std::istream& is) {
  SolverConfig cfg;
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config: expected key=value, got " + line);
    const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key == "n") {
      cfg.grid = GridSpec(int(parse_double(key, val)));
    } else if (key == "nu") {
      cfg.nu = parse_double(key, val);
    } else if (key == "dt") {
      cfg.dt = parse_double(key, val);
    } else if (key == "t_end") {
      cfg.t_end = parse_double(key, val);
    } else if (key == "blowup_threshold") {
      cfg.blowup_threshold = parse_double(key, val);
    } else if (key == "record_stride") {
      cfg.record_stride = int(parse_double(key, val));
    } else if (key == "dealias") {
      if (val == "two-thirds" || val == "two_thirds")
        cfg.dealias = Dealias::two_thirds;
      else if (val == "none")
        cfg.dealias = Dealias::none;
      else
        throw std::invalid_argument("config: unknown dealias rule " + val);
    } else if (key == "monitors") {
      cfg.monitors.clear();
      std::stringstream ss(val);
      std::string m;
      while (std::getline(ss, m, ',')) {
        m = trim(m);
        if (m.empty()) continue;
        if (!all_monitors.count(m)) throw std::invalid_argument("config: unknown monitor " + m);
        cfg.monitors.insert(m);
      }
    } else {
      throw std::invalid_argument("config: unknown key " + key);
    }
  }
  return cfg;
}

const std::vector<std::string>& DiagnosticsSeries::columns() {
  static const std::vector<std::string> cols = {
      "t",  "K", "E", "strain_h1_sq", "det_S_integral", "strain_l3_cubed", "omega_h_hminushalf",
      "energy_eq_residual", "strain_identity_residual", "enstrophy_ineq_slack", "cor22_slack",
      "horizontal_decay_flag", "gronwall_envelope_sq"};
  return cols;
}

SpectralVectorField advection(const SpectralVectorField& u, Dealias d) {
  const SpectralVectorField ud = d == Dealias::two_thirds ? dealias(u) : u;
  const PhysicalVectorField up = to_physical(ud);
  PhysicalVectorField prod(u.grid);
  for (int j = 0; j < 3; ++j) {
    const PhysicalVectorField dj = to_physical(partial(ud, j));
    for (int i = 0; i < 3; ++i)
      for (std::size_t x = 0; x < u.grid.size(); ++x) prod.samples[i][x] += up.samples[j][x] * dj.samples[i][x];
  }
  SpectralVectorField a = to_spectral(prod);
  return d == Dealias::two_thirds ? dealias(a) : a;
}

SpectralVectorField nonlinear_term(const SpectralVectorField& u, Dealias d) {
  return -1.0 * leray_project(advection(u, d)).u_df;
}

SpectralVectorField rhs(const SpectralVectorField& u, double nu, Dealias d) {
  return nu * laplacian(u) + nonlinear_term(u, d);
}

DiagnosticsRow measure(const SpectralVectorField& u, double t) {
  DiagnosticsRow row;
  row.t = t;
  row.K = kinetic_energy(u);
  const SpectralVectorField w = curl(u);
  const double wn = sobolev_norm(w, 0.0);
  row.E = 0.5 * wn * wn;
  row.omega_h_hminushalf = u.mean_zero() ? sobolev_norm(horizontal(w), -0.5) : nan;
  const StrainField S = strain(u);
  const double h1 = sobolev_norm(S, 1.0);
  row.strain_h1_sq = h1 * h1;
  std::vector<PhysicalScalarField> p;
  for (const auto& c : S.comps) p.push_back(to_physical(c));
  const auto& s11 = p[0].samples;
  const auto& s12 = p[1].samples;
  const auto& s13 = p[2].samples;
  const auto& s22 = p[3].samples;
  const auto& s23 = p[4].samples;
  const auto& s33 = p[5].samples;
  double det = 0.0, cube = 0.0;
  for (std::size_t x = 0; x < u.grid.size(); ++x) {
    det += s11[x] * (s22[x] * s33[x] - s23[x] * s23[x]) - s12[x] * (s12[x] * s33[x] - s23[x] * s13[x]) +
           s13[x] * (s12[x] * s23[x] - s22[x] * s13[x]);
    const double f2 = s11[x] * s11[x] + s22[x] * s22[x] + s33[x] * s33[x] +
                      2.0 * (s12[x] * s12[x] + s13[x] * s13[x] + s23[x] * s23[x]);
    cube += f2 * std::sqrt(f2);
  }
  row.det_S_integral = det / double(u.grid.size());
  row.strain_l3_cubed = cube / double(u.grid.size());
  row.strain_identity_residual = row.enstrophy_ineq_slack = row.cor22_slack = nan;
  row.gronwall_envelope_sq = nan;
  return row;
}

double monitor_strain_identity(const DiagnosticsSeries& s, std::size_t i) {
  const auto& r = s.rows[i];
  const double measured = centered(s, i, &DiagnosticsRow::E);
  const double dissipation = 2.0 * s.nu * r.strain_h1_sq;
  const double production = -4.0 * r.det_S_integral;
  const double scale = std::max({dissipation, std::abs(production), std::numeric_limits<double>::min()});
  return std::abs(measured - (-dissipation + production)) / scale;
}

EnstrophySlack monitor_enstrophy_inequality(const DiagnosticsSeries& s, std::size_t i) {
  const auto& r = s.rows[i];
  const double nu = s.nu;
  const double dE = centered(s, i, &DiagnosticsRow::E);
  const double cubic = r.E * r.E * r.E / (3456.0 * std::pow(pi, 4) * nu * nu * nu);
  const double cor22 = -2.0 * nu * r.strain_h1_sq + 2.0 / 9.0 * std::sqrt(6.0) * r.strain_l3_cubed;
  const double scale = std::max({std::abs(dE), 2.0 * nu * r.strain_h1_sq, cubic});
  return {cubic - dE, cor22 - dE, scale};
}

HorizontalMonitor monitor_horizontal(const DiagnosticsSeries& s, std::size_t i) {
  const auto& r = s.rows[i];
  const double dE = centered(s, i, &DiagnosticsRow::E);
  const double tol = monitor_tolerance * std::max(2.0 * s.nu * r.strain_h1_sq, std::abs(dE));
  const bool small = r.omega_h_hminushalf < constants().r1 * s.nu;
  return {!small || dE <= tol, r.omega_h_hminushalf, dE};
}

DiagnosticsSeries run(const SpectralVectorField& u0, const SolverConfig& cfg) {
  const GridSpec& g = cfg.grid;
  if (!(u0.grid == g)) throw std::invalid_argument("run: initial data grid does not match config");
  if (!(cfg.nu > 0.0) || !(cfg.dt > 0.0) || !(cfg.t_end >= 0.0) || cfg.record_stride < 1)
    throw std::domain_error("run: nu, dt must be positive, t_end nonnegative, stride at least 1");
  if (!u0.mean_zero()) throw std::domain_error("run: initial data must have zero mean");
  if (max_divergence(u0) > 1e-10) throw std::domain_error("run: initial data must be divergence-free");

  DiagnosticsSeries out;
  out.nu = cfg.nu;
  const double dt = cfg.dt;
  std::vector<double> eh(g.size()), ef(g.size());
  for_each_mode(g, [&](std::size_t idx, const Wavevector& k) {
    const double a = 4.0 * pi * pi * k.norm_sq() * cfg.nu;
    eh[idx] = std::exp(-0.5 * a * dt);
    ef[idx] = std::exp(-a * dt);
  });

  const double umax = lebesgue_norm(u0, inf);
  out.advective_cfl = dt * umax * g.n();
  if (out.advective_cfl > 0.5)
    out.warnings.push_back("advective CFL dt*max|u|*n = " + std::to_string(out.advective_cfl) + " exceeds 0.5");
  const double stiff = cfg.record_stride * dt * 4.0 * pi * pi * cfg.nu * std::pow(g.n() / 3.0, 2);
  if (stiff > 1.0) out.warnings.push_back("record stride too coarse for centered differences of the fastest mode");

  const int steps = int(std::llround(cfg.t_end / dt));
  auto N = [&](const SpectralVectorField& v) { return nonlinear_term(v, cfg.dealias); };
  SpectralVectorField u = u0;
  out.rows.push_back(measure(u, 0.0));
  for (int n = 1; n <= steps; ++n) {
    try {
      const SpectralVectorField k1 = N(u);
      const SpectralVectorField k2 = N(scaled(u + (0.5 * dt) * k1, eh));
      const SpectralVectorField k3 = N(scaled(u, eh) + (0.5 * dt) * k2);
      const SpectralVectorField k4 = N(scaled(u, ef) + dt * scaled(k3, eh));
      u = scaled(u, ef) + (dt / 6.0) * (scaled(k1, ef) + 2.0 * scaled(k2 + k3, eh) + k4);
    } catch (const std::domain_error& e) {
      throw std::runtime_error("run: non-finite state in step ending at t = " + std::to_string(n * dt) + " (" + e.what() + ")");
    }
    out.steps = n;
    const bool record = n % cfg.record_stride == 0 || n == steps;
    if (!record) {
      if (!std::isfinite(kinetic_energy(u)))
        throw std::runtime_error("run: non-finite state at t = " + std::to_string(n * dt));
      continue;
    }
    DiagnosticsRow row = measure(u, n * dt);
    if (!std::isfinite(row.K) || !std::isfinite(row.E))
      throw std::runtime_error("run: non-finite state at t = " + std::to_string(row.t));
    out.rows.push_back(row);
    if (row.E > cfg.blowup_threshold) {
      out.status = RunStatus::blowup_suspected;
      break;
    }
  }
  out.final_state = u;

  // Post-pass: cumulative energy balance, Gronwall envelope, centered-difference monitors.
  auto& rows = out.rows;
  const double K0 = rows.front().K;
  const double wh0 = rows.front().omega_h_hminushalf;
  double dissipated = 0.0, fourth = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) {
      const double h = rows[i].t - rows[i - 1].t;
      dissipated += h * cfg.nu * (rows[i].E + rows[i - 1].E);
      const double a = 2.0 * rows[i].E, b = 2.0 * rows[i - 1].E;
      fourth += 0.5 * h * (a * a + b * b);
    }
    rows[i].energy_eq_residual = K0 > 0.0 ? (rows[i].K - K0 + dissipated) / K0 : 0.0;
    if (cfg.monitors.count("horizontal")) rows[i].gronwall_envelope_sq = horizontal_gronwall_sq(wh0 * wh0, fourth, cfg.nu);
  }
  for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
    if (cfg.monitors.count("strain_identity")) rows[i].strain_identity_residual = monitor_strain_identity(out, i);
    if (cfg.monitors.count("enstrophy_inequality")) {
      const auto sl = monitor_enstrophy_inequality(out, i);
      rows[i].enstrophy_ineq_slack = sl.cubic;
      rows[i].cor22_slack = sl.cor22;
    }
    if (cfg.monitors.count("horizontal")) rows[i].horizontal_decay_flag = monitor_horizontal(out, i).flag;
  }
  return out;
}

}  // namespace a2d
