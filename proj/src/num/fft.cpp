#include "num/fft.hpp"

#include <cmath>

#include "constants.hpp"
#include "types.hpp"

namespace eitb::num {

namespace {

using cplx = std::complex<double>;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft_radix2(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * kPi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    const cplx wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cplx u = a[i + k];
        const cplx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse)
    for (auto& x : a) x /= static_cast<double>(n);
}

// Bluestein: an arbitrary-length DFT as a power-of-two convolution.
void fft_bluestein(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  std::size_t m = 1;
  while (m < 2 * n - 1) m <<= 1;

  std::vector<cplx> chirp(n);
  for (std::size_t k = 0; k < n; ++k) {
    // k^2 mod 2n keeps the chirp argument small.
    const std::size_t k2 = static_cast<std::size_t>((static_cast<unsigned long long>(k) * k) %
                                                    (2 * n));
    const double ang = kPi * static_cast<double>(k2) / static_cast<double>(n) *
                       (inverse ? 1.0 : -1.0);
    chirp[k] = cplx(std::cos(ang), std::sin(ang));
  }

  std::vector<cplx> x(m, cplx(0, 0)), y(m, cplx(0, 0));
  for (std::size_t k = 0; k < n; ++k) x[k] = a[k] * chirp[k];
  y[0] = std::conj(chirp[0]);
  for (std::size_t k = 1; k < n; ++k) y[k] = y[m - k] = std::conj(chirp[k]);

  fft_radix2(x, false);
  fft_radix2(y, false);
  for (std::size_t k = 0; k < m; ++k) x[k] *= y[k];
  fft_radix2(x, true);

  for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * chirp[k];
  if (inverse)
    for (auto& v : a) v /= static_cast<double>(n);
}

}  // namespace

void fft(std::vector<cplx>& data, bool inverse) {
  if (data.empty()) throw DomainError("fft: empty input");
  if (data.size() == 1) return;
  if (is_pow2(data.size()))
    fft_radix2(data, inverse);
  else
    fft_bluestein(data, inverse);
}

std::vector<cplx> fft_real(const std::vector<double>& series) {
  std::vector<cplx> data(series.begin(), series.end());
  fft(data, false);
  return data;
}

}  // namespace eitb::num
