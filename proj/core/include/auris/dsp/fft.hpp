#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace auris::dsp {

/// One-sided DFT of a real vector: out[k] = sum_n in[n] * exp(-j*2*pi*n*k/n_total),
/// k = 0..n/2. Unnormalized.
std::vector<std::complex<double>> rfft(const double* in, std::size_t n);
std::vector<std::complex<double>> rfft(const std::vector<double>& in);

/// Inverse of rfft, normalized so that irfft(rfft(x), x.size()) == x.
std::vector<double> irfft(const std::vector<std::complex<double>>& spectrum, std::size_t n);

}  // namespace auris::dsp
