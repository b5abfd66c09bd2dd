#include <cmath>

#include "doctest.h"

#include "almost2d/criteria.hpp"
#include "almost2d/families.hpp"
#include "almost2d/norms.hpp"
#include "almost2d/random_field.hpp"
#include "oracles.hpp"

using namespace a2d;
using oracle::pi;

namespace {

bool generator_invariants(const SpectralVectorField& u) {
  return max_divergence(u) <= 1e-12 && hermitian_defect(u) == 0.0;
}

}  // namespace

TEST_CASE("Taylor-Green") {
  const GridSpec g(16);
  const SpectralVectorField u = taylor_green_2d(g);
  CHECK(generator_invariants(u));
  CHECK(kinetic_energy(u) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(enstrophy(u) == doctest::Approx(2 * pi * pi).epsilon(1e-14));
  for (double nu : {1e-3, 0.1, 10.0}) CHECK(gamma2d_check(u, nu).satisfied);
  const PhysicalVectorField f = to_physical(u);
  double err = 0.0;
  for_each_index(g, [&](std::size_t idx, int i, int j, int) {
    const double a = 2 * pi * i / 16.0, b = 2 * pi * j / 16.0;
    err = std::max({err, std::abs(f.samples[0][idx] - std::sin(a) * std::cos(b)),
                    std::abs(f.samples[1][idx] + std::cos(a) * std::sin(b))});
  });
  CHECK(err < 1e-14);
}

TEST_CASE("u^n family") {
  const GridSpec g(32);
  for (int n : {1, 2, 5, 10}) {
    const SpectralVectorField u = un_family(n, g);
    CHECK(generator_invariants(u));
    CHECK(sobolev_norm(horizontal(curl(u)), -0.5) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(sobolev_norm(partial(u, 2), -0.5) == doctest::Approx(1.0).epsilon(1e-10));
    const double h = sobolev_norm(u, 0.5);
    CHECK(h * h == doctest::Approx(n * n + 2.0).epsilon(1e-10));
    CHECK(max_abs_coeff(p2d_split(u).two_d) == 0.0);
  }
  const double h5 = sobolev_norm(un_family(5, g), 0.5);
  CHECK(h5 * h5 == doctest::Approx(27.0).epsilon(1e-12));
  CHECK_THROWS(un_family(16, g));
  CHECK_THROWS(un_family(0, g));
}

TEST_CASE("large almost-2D family") {
  const GridSpec g(16);
  // Two modes by hand: K = n^2/2 + 3 delta^2/2, E = 4 pi^2 n^2 + 18 pi^2 delta^2 (|k|^2 = 2 and 3).
  for (double delta : {0.3, 1e-3}) {
    const SpectralVectorField u = large_almost_2d(1, g, delta);
    CHECK(generator_invariants(u));
    const auto c = large_almost_2d_norms(1, std::log(delta));
    CHECK(kinetic_energy(u) == doctest::Approx(c.K0).epsilon(1e-13));
    CHECK(enstrophy(u) == doctest::Approx(c.E0).epsilon(1e-13));
    CHECK(std::log(sobolev_norm(horizontal(curl(u)), -0.5)) == doctest::Approx(c.log_omega_h_hminushalf).epsilon(1e-12));
    CHECK(std::isfinite(gamma2d_check(u, 1.0).lhs));
  }
  const SpectralVectorField flat = large_almost_2d(2, g, 0.0);
  CHECK(gamma2d_check(flat, 1.0).lhs == 0.0);
  // exp(-n^5) underflows for n >= 4 and the field is exactly 2D.
  CHECK(max_abs_coeff(p2d_split(large_almost_2d(4, g)).perp) == 0.0);

  const int n_star = large_almost_2d_threshold(1.0);
  CHECK(n_star >= 1);
  CHECK(n_star <= 6);
  if (n_star > 1) {
    const auto c = large_almost_2d_norms(n_star - 1, -std::pow(double(n_star - 1), 5));
    CHECK_FALSE(c.log_omega_h_hminushalf + gamma2d_values(1.0, c.K0, c.E0, 1.0).log_lhs < std::log(constants().r1));
  }
  for (int n = n_star; n <= 6; ++n) {
    const auto c = large_almost_2d_norms(n, -std::pow(double(n), 5));
    CHECK(c.log_omega_h_hminushalf + gamma2d_values(1.0, c.K0, c.E0, 1.0).log_lhs < std::log(constants().r1));
  }

  // B^{-1}_{inf,inf} grows with n.
  double prev = 0.0;
  for (int n : {1, 2, 3}) {
    const double b = besov_norm(large_almost_2d(n, g), 1.0, inf).value;
    CHECK(b > prev);
    prev = b;
  }
}

TEST_CASE("rescaled vorticity") {
  const GridSpec g(16);
  const SpectralVectorField base = curl(random_solenoidal(g, 5, {.kmax = 2}));
  CHECK_THROWS(rescaled_vorticity(base, 1, 1.0));
  CHECK_THROWS(rescaled_vorticity(base, 2, 0.0));

  const int m = 4;
  const double eps = 1.0 / m;
  const StretchedField w = rescaled_vorticity(base, m, 1.0);
  CHECK(w.max_divergence() <= 1e-12);
  const double expect = eps * std::pow(std::log(double(m)), 0.25) * lebesgue_norm(horizontal(base), 1.5);
  CHECK(w.horizontal().lebesgue_norm(1.5) == doctest::Approx(expect).epsilon(1e-8));

  // The vertical component grows with m at fixed base.
  double prev = 0.0;
  for (int mm : {2, 4, 8}) {
    const StretchedField r = rescaled_vorticity(base, mm, 1.0);
    const double v = StretchedField{r.reference - r.horizontal().reference, mm}.lebesgue_norm(1.5);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("annulus analog") {
  for (int n : {3, 6}) {
    const GridSpec g(annulus_required_grid(n));
    const SpectralVectorField w = annulus_analog(n, g);
    CHECK(hermitian_defect(w) == 0.0);
    int modes = 0;
    for_each_mode(g, [&](std::size_t idx, const Wavevector& k) {
      const CVec3 v = w.at(idx);
      if (std::abs(v[2]) == 0.0) return;
      ++modes;
      const double r = std::sqrt(double(k.k1) * k.k1 + double(k.k2) * k.k2);
      CHECK(std::abs(double(k.k1) * v[0] + double(k.k2) * v[1] + double(k.k3) * v[2]) < 1e-15 * std::abs(v[2]) * r);
      CHECK(r >= annulus_default_rho(n));
      CHECK(r <= 2 * annulus_default_rho(n));
      CHECK(std::abs(k.k3) * n < annulus_default_rho(n));
    });
    CHECK(modes > 0);
  }
  CHECK_THROWS(annulus_analog(12, GridSpec(32)));
  CHECK(annulus_required_grid(12) == 64);
}

TEST_CASE("two-dimensional plus perturbation") {
  const GridSpec g(16);
  const SpectralVectorField v = taylor_green_2d(g);
  const SpectralVectorField w = random_solenoidal(g, 3, {.kmax = 3});
  CHECK(max_abs_coeff(two_d_plus_perturbation(v, w, 0.0) - v) == 0.0);
  const double delta = 0.37;
  const SpectralVectorField u = two_d_plus_perturbation(v, w, delta);
  CHECK(max_abs_coeff(p2d_split(u).two_d - (v + delta * p2d_split(w).two_d)) < 1e-16);
  const double a = sobolev_norm(horizontal(curl(u)), -0.5);
  const double b = sobolev_norm(horizontal(curl(two_d_plus_perturbation(v, w, delta / 2))), -0.5);
  CHECK(b / a == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS(two_d_plus_perturbation(w, w, 1.0));
}

TEST_CASE("random generators are reproducible and admissible") {
  const GridSpec g(16);
  const SpectralVectorField a = random_solenoidal(g, 42);
  const SpectralVectorField b = random_solenoidal(g, 42);
  CHECK(max_abs_coeff(a - b) == 0.0);
  CHECK(max_abs_coeff(a - random_solenoidal(g, 43)) > 0.0);
  CHECK(generator_invariants(a));
  CHECK(a.mean_zero());
  CHECK(max_abs_coeff(dealias(a) - a) == 0.0);
  CHECK(kinetic_energy(random_solenoidal(g, 1, {.energy = 2.5})) == doctest::Approx(2.5).epsilon(1e-13));
  CHECK(random_vector_field(g, 9).mean_zero());
}
