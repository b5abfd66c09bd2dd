#include "almost2d/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace a2d::fft {
namespace {

std::mutex plan_mutex;
std::map<std::pair<int, int>, fftw_plan> plans;

fftw_plan plan_for(int n, int sign) {
  std::lock_guard lock(plan_mutex);
  auto key = std::make_pair(n, sign);
  if (auto it = plans.find(key); it != plans.end()) return it->second;
  const std::size_t count = std::size_t(n) * n * n;
  auto* scratch = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * count));
  fftw_plan p = fftw_plan_dft_3d(n, n, n, scratch, scratch, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(scratch);
  if (!p) throw std::runtime_error("fftw planning failed");
  plans.emplace(key, p);
  return p;
}

}  // namespace

void transform(int n, std::complex<double>* data, Direction dir) {
  const int sign = dir == Direction::forward ? FFTW_FORWARD : FFTW_BACKWARD;
  auto* buf = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(plan_for(n, sign), buf, buf);
}

}  // namespace a2d::fft
