#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "hbspace/error.hpp"
#include "hbspace/series.hpp"

namespace hb::detail {

void fft(std::span<cplx> data, bool inverse) {
  const std::size_t n = data.size();
  if (n <= 1) return;
  if (!is_power_of_two(static_cast<long long>(n))) {
    throw Error(ErrorCode::InvalidArgument, "fft: length must be a power of two");
  }

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  // Twiddles are computed directly rather than by recurrence so that the
  // rounding error does not grow with the transform length.
  const double sign = inverse ? 1.0 : -1.0;
  std::vector<cplx> twiddle(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double theta = sign * 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(n);
    twiddle[k] = {std::cos(theta), std::sin(theta)};
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const cplx t = twiddle[k * stride] * data[start + k + half];
        const cplx u = data[start + k];
        data[start + k] = u + t;
        data[start + k + half] = u - t;
      }
    }
  }
}

}  // namespace hb::detail
