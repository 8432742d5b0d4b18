#include "auris/dsp/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

#include "auris/common/error.hpp"

namespace auris::dsp {
namespace {

// FFTW planning is not thread-safe; execution with new-array interfaces is,
// provided the plan was created FFTW_UNALIGNED and buffers are distinct.
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

fftw_plan cached_r2c_plan(std::size_t n, double* in, fftw_complex* out) {
  static std::map<std::size_t, fftw_plan> plans;
  std::lock_guard<std::mutex> lock(plan_mutex());
  auto it = plans.find(n);
  if (it == plans.end()) {
    fftw_plan p = fftw_plan_dft_r2c_1d(static_cast<int>(n), in, out, FFTW_ESTIMATE | FFTW_UNALIGNED);
    it = plans.emplace(n, p).first;
  }
  return it->second;
}

fftw_plan cached_c2r_plan(std::size_t n, fftw_complex* in, double* out) {
  static std::map<std::size_t, fftw_plan> plans;
  std::lock_guard<std::mutex> lock(plan_mutex());
  auto it = plans.find(n);
  if (it == plans.end()) {
    fftw_plan p = fftw_plan_dft_c2r_1d(static_cast<int>(n), in, out, FFTW_ESTIMATE | FFTW_UNALIGNED);
    it = plans.emplace(n, p).first;
  }
  return it->second;
}

}  // namespace

std::vector<std::complex<double>> rfft(const double* in, std::size_t n) {
  if (n == 0) throw DomainError("dsp", "rfft", "empty input");
  std::vector<double> tmp(in, in + n);
  std::vector<std::complex<double>> out(n / 2 + 1);
  fftw_plan p = cached_r2c_plan(n, tmp.data(), reinterpret_cast<fftw_complex*>(out.data()));
  fftw_execute_dft_r2c(p, tmp.data(), reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

std::vector<std::complex<double>> rfft(const std::vector<double>& in) { return rfft(in.data(), in.size()); }

std::vector<double> irfft(const std::vector<std::complex<double>>& spectrum, std::size_t n) {
  if (spectrum.size() != n / 2 + 1) {
    throw DomainError("dsp", "irfft", "spectrum size does not match output length");
  }
  // c2r destroys its input, so work on a copy
  std::vector<std::complex<double>> tmp = spectrum;
  std::vector<double> out(n);
  fftw_plan p = cached_c2r_plan(n, reinterpret_cast<fftw_complex*>(tmp.data()), out.data());
  fftw_execute_dft_c2r(p, reinterpret_cast<fftw_complex*>(tmp.data()), out.data());
  const double scale = 1.0 / static_cast<double>(n);
  for (double& v : out) v *= scale;
  return out;
}

}  // namespace auris::dsp
