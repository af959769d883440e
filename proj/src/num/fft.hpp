#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace eitb::num {

// In-place complex FFT. Power-of-two lengths use the iterative radix-2
// kernel; other lengths go through Bluestein's chirp-z transform.
void fft(std::vector<std::complex<double>>& data, bool inverse);

// DFT of a real series (forward, unnormalized).
std::vector<std::complex<double>> fft_real(const std::vector<double>& series);

}  // namespace eitb::num
