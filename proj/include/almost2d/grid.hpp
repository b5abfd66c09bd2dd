#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace a2d {

struct Wavevector {
  int k1 = 0, k2 = 0, k3 = 0;

  double norm_sq() const { return double(k1) * k1 + double(k2) * k2 + double(k3) * k3; }
  Wavevector operator-() const { return {-k1, -k2, -k3}; }
  bool operator==(const Wavevector&) const = default;
};

/// Cubic grid on the unit torus [0,1)^3. Lattice wavenumbers lie in [-n/2, n/2-1].
class GridSpec {
public:
  explicit GridSpec(int n);

  int n() const { return n_; }
  std::size_t size() const { return std::size_t(n_) * n_ * n_; }

  int wavenumber(int index) const { return index < n_ / 2 ? index : index - n_; }
  int index_of(int k) const { return k >= 0 ? k : k + n_; }
  bool is_nyquist(int index) const { return index == n_ / 2; }
  bool resolves(const Wavevector& k) const;

  std::size_t flat(int i1, int i2, int i3) const {
    return (std::size_t(i1) * n_ + std::size_t(i2)) * n_ + std::size_t(i3);
  }
  std::size_t flat(const Wavevector& k) const {
    return flat(index_of(k.k1), index_of(k.k2), index_of(k.k3));
  }
  std::size_t mirror(std::size_t idx) const;
  Wavevector wavevector(std::size_t idx) const;

  /// Derivative wavenumber of a 1D index: the Nyquist index maps to 0 so odd
  /// multipliers keep real fields real.
  double derivative_wavenumber(int index) const {
    return is_nyquist(index) ? 0.0 : double(wavenumber(index));
  }

  bool operator==(const GridSpec&) const = default;

private:
  int n_;
};

/// Calls f(flat_index, i1, i2, i3) for every lattice point in storage order.
template <class F>
void for_each_index(const GridSpec& g, F&& f) {
  const int n = g.n();
  std::size_t idx = 0;
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int i3 = 0; i3 < n; ++i3, ++idx) f(idx, i1, i2, i3);
}

/// Calls f(flat_index, k) with the lattice wavevector of every coefficient.
template <class F>
void for_each_mode(const GridSpec& g, F&& f) {
  for_each_index(g, [&](std::size_t idx, int i1, int i2, int i3) {
    f(idx, Wavevector{g.wavenumber(i1), g.wavenumber(i2), g.wavenumber(i3)});
  });
}

}  // namespace a2d
