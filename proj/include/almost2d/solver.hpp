#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "almost2d/field.hpp"

namespace a2d {

enum class Dealias { two_thirds, none };
enum class RunStatus { completed, blowup_suspected };

inline const std::set<std::string> all_monitors = {"strain_identity", "enstrophy_inequality", "horizontal"};

struct SolverConfig {
  GridSpec grid{32};
  double nu = 0.1;
  double dt = 1e-3;
  double t_end = 0.1;
  Dealias dealias = Dealias::two_thirds;
  std::set<std::string> monitors = all_monitors;
  double blowup_threshold = 1e12;  // enstrophy ceiling
  int record_stride = 1;
};

/// Reads key=value lines: n, nu, dt, t_end, dealias, monitors, blowup_threshold, record_stride.
SolverConfig parse_solver_config(std::istream& is);

struct DiagnosticsRow {
  double t = 0.0;
  double K = 0.0;
  double E = 0.0;
  double strain_h1_sq = 0.0;
  double det_S_integral = 0.0;
  double strain_l3_cubed = 0.0;
  double omega_h_hminushalf = 0.0;
  /// (K(t) - K0 + 2 nu int_0^t E) / K0, trapezoid in time.
  double energy_eq_residual = 0.0;
  // Monitor columns are NaN where a centered difference is unavailable.
  double strain_identity_residual = 0.0;
  double enstrophy_ineq_slack = 0.0;
  double cor22_slack = 0.0;
  bool horizontal_decay_flag = true;
  double gronwall_envelope_sq = 0.0;
};

struct DiagnosticsSeries {
  std::vector<DiagnosticsRow> rows;
  RunStatus status = RunStatus::completed;
  std::vector<std::string> warnings;
  double nu = 0.0;
  double advective_cfl = 0.0;
  int steps = 0;
  SpectralVectorField final_state{GridSpec(4)};

  /// Fixed CSV column order.
  static const std::vector<std::string>& columns();
};

/// (u.grad)u with the 2/3 rule applied to the input and the product.
SpectralVectorField advection(const SpectralVectorField& u, Dealias d = Dealias::two_thirds);
/// -P_df((u.grad)u).
SpectralVectorField nonlinear_term(const SpectralVectorField& u, Dealias d = Dealias::two_thirds);
/// nu Lap u - P_df((u.grad)u).
SpectralVectorField rhs(const SpectralVectorField& u, double nu, Dealias d = Dealias::two_thirds);

/// Diagnostics of one state; monitor columns left at their defaults.
DiagnosticsRow measure(const SpectralVectorField& u, double t);

/// RK4 on the viscous integrating-factor form.
DiagnosticsSeries run(const SpectralVectorField& u0, const SolverConfig& cfg);

/// |centered d/dt ||S||^2 - (-2 nu ||S||_{H^1}^2 - 4 int det S)| / scale at interior row i.
double monitor_strain_identity(const DiagnosticsSeries& s, std::size_t i);

struct EnstrophySlack {
  double cubic;  // E^3/(3456 pi^4 nu^3) - dE/dt
  double cor22;  // -2 nu ||S||_{H^1}^2 + (2/9) sqrt(6) ||S||_{L^3}^3 - dE/dt
  double scale;  // magnitude used for relative tolerances
};
EnstrophySlack monitor_enstrophy_inequality(const DiagnosticsSeries& s, std::size_t i);

struct HorizontalMonitor {
  bool flag;       // false only when ||omega_h|| < R1 nu and dE/dt > 0 beyond tolerance
  double lhs;      // ||omega_h||_{H^-1/2}
  double dE_dt;
};
HorizontalMonitor monitor_horizontal(const DiagnosticsSeries& s, std::size_t i);

}  // namespace a2d
