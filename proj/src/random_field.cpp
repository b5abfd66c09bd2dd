#include "almost2d/random_field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "almost2d/norms.hpp"

namespace a2d {

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
  has_spare_ = true;
  return r * std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

// First nonzero component positive: one representative of each +-k pair.
bool canonical(const Wavevector& k) {
  if (k.k1 != 0) return k.k1 > 0;
  if (k.k2 != 0) return k.k2 > 0;
  return k.k3 > 0;
}

SpectralVectorField random_field(const GridSpec& g, std::uint64_t seed, const RandomFieldSpec& spec,
                                 bool solenoidal) {
  if (spec.kmax < 1 || spec.kmax > g.n() / 2 - 1)
    throw std::invalid_argument("random field: kmax must lie in [1, n/2 - 1]");
  Rng rng(seed);
  SpectralVectorField u(g);
  const int K = spec.kmax;
  for (int a = -K; a <= K; ++a)
    for (int b = -K; b <= K; ++b)
      for (int c = -K; c <= K; ++c) {
        const Wavevector k{a, b, c};
        if (!canonical(k)) continue;
        CVec3 v;
        for (auto& z : v) z = cplx(rng.normal(), rng.normal());
        if (spec.dealiased && !dealias_keeps(g, k)) continue;
        const double amp = std::pow(k.norm_sq(), -0.5 * spec.slope);
        if (solenoidal) {
          const double kv[3] = {double(a), double(b), double(c)};
          const cplx dot = kv[0] * v[0] + kv[1] * v[1] + kv[2] * v[2];
          for (int i = 0; i < 3; ++i) v[i] -= dot * kv[i] / k.norm_sq();
        }
        for (auto& z : v) z *= amp;
        u.set_mode(k, v);
      }
  if (spec.energy > 0.0) u *= std::sqrt(spec.energy / kinetic_energy(u));
  return u;
}

}  // namespace

SpectralVectorField random_solenoidal(const GridSpec& g, std::uint64_t seed, const RandomFieldSpec& spec) {
  return random_field(g, seed, spec, true);
}

SpectralVectorField random_vector_field(const GridSpec& g, std::uint64_t seed, const RandomFieldSpec& spec) {
  return random_field(g, seed, spec, false);
}

}  // namespace a2d
