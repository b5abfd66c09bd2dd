#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "almost2d/field.hpp"

namespace a2d {

struct SharpConstants {
  double c1;  // H^{-1/2} <= c1 L^{3/2}
  double c2;  // H^{-1} <= c2 L^{6/5}
  double r1;
  double r2;
  double small_data_threshold_coeff;  // K0 E0 < coeff * nu^4
};

/// Evaluates the constants and cross-checks each closed form against its constituent form.
SharpConstants constants();

inline constexpr const char* constants_version = "whole-space-sharp-v1";
inline constexpr const char* torus_label = "whole-space constants evaluated on the torus";

struct CriterionReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  /// log(lhs); -inf when lhs = 0. Verdicts are decided in log space.
  double log_lhs = 0.0;
  bool satisfied = false;
  std::vector<std::pair<std::string, double>> inputs;
  std::vector<std::pair<std::string, bool>> flags;
  std::string constants_version = a2d::constants_version;
  std::string label;

  double input(const std::string& key) const;
};

CriterionReport small_data_check(double K0, double E0, double nu);

/// Criterion from scalar inputs: ||omega_h||_{H^-1/2} exp((K0 E0 - 6912 pi^4 nu^4)/(R2 nu^3)) < R1 nu.
CriterionReport gamma2d_values(double omega_h_hminushalf, double K0, double E0, double nu);
CriterionReport gamma2d_check(const SpectralVectorField& u, double nu);
/// Same criterion with the L^{3/2}, L^{6/5}, L^2 norms of the vorticity; flags chain_consistent.
CriterionReport gamma2d_lp_check(const SpectralVectorField& omega, double nu);

/// ||omega_h||_{H^-1/2} exp(K0 E0 / (R2 nu^3)), in log space.
double log_gamma2d_quantity(double omega_h_hminushalf, double K0, double E0, double nu);

struct Envelopes {
  std::optional<double> global_enstrophy_bound;
  std::optional<double> local_enstrophy_bound;
};
Envelopes envelopes(double K0, double E0, double nu, double t);
/// E0 / (1 - K0 E0 / (6912 pi^4 nu^4)); empty when the denominator is not positive.
std::optional<double> global_enstrophy_bound(double K0, double E0, double nu);
/// E0 / sqrt(1 - E0^2 t / (1728 pi^4 nu^3)); throws beyond the validity window.
double local_enstrophy_bound(double E0, double nu, double t);
double local_enstrophy_window(double E0, double nu);
/// Bound on ||omega_h(t)||^2 given ||omega_h(0)||^2 and int_0^t ||omega||_{L^2}^4.
double horizontal_gronwall_sq(double omega_h0_sq, double omega_l2_fourth_integral, double nu);

struct BlowupTimes {
  double upper_if_blowup;  // only meaningful if the solution blows up
  double lower;            // +inf when E0 = 0
};
BlowupTimes blowup_time_bounds(double K0, double E0, double nu);

/// True iff K E < 6912 pi^4 nu^4.
bool critical_product_floor(double K, double E, double nu);

/// ||P2d_perp u||_{H^1/2} exp(||P2d u||^2 / (C nu^2)) < C nu with a caller-supplied C.
CriterionReport iftimie_check(const SpectralVectorField& u, double nu, double C);

}  // namespace a2d
