#include "almost2d/grid.hpp"

#include <stdexcept>
#include <string>

namespace a2d {

GridSpec::GridSpec(int n) : n_(n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("grid size must be even and at least 4, got " + std::to_string(n));
}

bool GridSpec::resolves(const Wavevector& k) const {
  auto ok = [this](int c) { return c >= -n_ / 2 && c <= n_ / 2 - 1; };
  return ok(k.k1) && ok(k.k2) && ok(k.k3);
}

std::size_t GridSpec::mirror(std::size_t idx) const {
  const std::size_t n = n_;
  const std::size_t i3 = idx % n;
  const std::size_t i2 = (idx / n) % n;
  const std::size_t i1 = idx / (n * n);
  return flat(int((n - i1) % n), int((n - i2) % n), int((n - i3) % n));
}

Wavevector GridSpec::wavevector(std::size_t idx) const {
  const std::size_t n = n_;
  return {wavenumber(int(idx / (n * n))), wavenumber(int((idx / n) % n)), wavenumber(int(idx % n))};
}

}  // namespace a2d
