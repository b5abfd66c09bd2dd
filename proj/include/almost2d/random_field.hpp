#pragma once

#include <cstdint>
#include <random>

#include "almost2d/field.hpp"

namespace a2d {

/// Seeded source of uniform and normal deviates. The mapping from engine output
/// to doubles is fixed here so streams are identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }
  double normal();

private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

struct RandomFieldSpec {
  int kmax = 4;              // modes with max |k_i| <= kmax
  double slope = 1.0;        // coefficient envelope |k|^{-slope}
  double energy = 0.0;       // rescale so that K = energy when positive
  bool dealiased = true;     // also drop modes removed by the 2/3 rule
};

/// Random real, mean-zero, divergence-free field built on a half lattice and mirrored.
SpectralVectorField random_solenoidal(const GridSpec& g, std::uint64_t seed, const RandomFieldSpec& spec = {});

/// Random real, mean-zero field without the divergence constraint.
SpectralVectorField random_vector_field(const GridSpec& g, std::uint64_t seed, const RandomFieldSpec& spec = {});

}  // namespace a2d
