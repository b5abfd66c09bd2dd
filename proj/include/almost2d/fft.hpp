#pragma once

#include <complex>

namespace a2d::fft {

enum class Direction { forward, backward };

/// Unnormalized in-place 3D complex DFT of an n^3 array (x3 fastest).
/// forward uses exp(-2 pi i k.x), backward exp(+2 pi i k.x).
void transform(int n, std::complex<double>* data, Direction dir);

}  // namespace a2d::fft
