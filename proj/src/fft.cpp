#include "slabmhd/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace slabmhd::fft {

namespace {

// FFTW plan creation is not thread-safe; executions with distinct buffers
// are. Plans are cached per shape and created with FFTW_ESTIMATE so repeated
// runs of the same configuration are bit-identical.
std::mutex plan_mutex;

using Key = std::tuple<int, int, int, int>;  // rank tag, n0, n1, n2

fftw_plan get_plan_r2c(int rank, int n0, int n1, int n2) {
  static std::map<Key, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(plan_mutex);
  Key key{rank, n0, n1, n2};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::size_t nreal = std::size_t(n0) * (rank > 1 ? n1 : 1) * (rank > 2 ? n2 : 1);
  int nlast = rank == 3 ? n2 : (rank == 2 ? n1 : n0);
  std::size_t ncplx = nreal / nlast * (nlast / 2 + 1);
  double* rbuf = fftw_alloc_real(nreal);
  fftw_complex* cbuf = fftw_alloc_complex(ncplx);
  fftw_plan p = nullptr;
  unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  if (rank == 3) p = fftw_plan_dft_r2c_3d(n0, n1, n2, rbuf, cbuf, flags);
  if (rank == 2) p = fftw_plan_dft_r2c_2d(n0, n1, rbuf, cbuf, flags);
  if (rank == 1) p = fftw_plan_dft_r2c_1d(n0, rbuf, cbuf, flags);
  fftw_free(rbuf);
  fftw_free(cbuf);
  if (!p) throw std::runtime_error("fftw r2c plan creation failed");
  cache.emplace(key, p);
  return p;
}

fftw_plan get_plan_c2r(int rank, int n0, int n1, int n2) {
  static std::map<Key, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(plan_mutex);
  Key key{rank, n0, n1, n2};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::size_t nreal = std::size_t(n0) * (rank > 1 ? n1 : 1) * (rank > 2 ? n2 : 1);
  int nlast = rank == 3 ? n2 : (rank == 2 ? n1 : n0);
  std::size_t ncplx = nreal / nlast * (nlast / 2 + 1);
  double* rbuf = fftw_alloc_real(nreal);
  fftw_complex* cbuf = fftw_alloc_complex(ncplx);
  fftw_plan p = nullptr;
  unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  if (rank == 3) p = fftw_plan_dft_c2r_3d(n0, n1, n2, cbuf, rbuf, flags);
  if (rank == 2) p = fftw_plan_dft_c2r_2d(n0, n1, cbuf, rbuf, flags);
  fftw_free(rbuf);
  fftw_free(cbuf);
  if (!p) throw std::runtime_error("fftw c2r plan creation failed");
  cache.emplace(key, p);
  return p;
}

}  // namespace

void r2c_3d(int n0, int n1, int n2, const double* in, cplx* out) {
  fftw_plan p = get_plan_r2c(3, n0, n1, n2);
  std::vector<double> scratch(in, in + std::size_t(n0) * n1 * n2);
  fftw_execute_dft_r2c(p, scratch.data(), reinterpret_cast<fftw_complex*>(out));
}

void c2r_3d(int n0, int n1, int n2, const cplx* in, double* out) {
  fftw_plan p = get_plan_c2r(3, n0, n1, n2);
  std::size_t ncplx = std::size_t(n0) * n1 * (n2 / 2 + 1);
  std::vector<cplx> scratch(in, in + ncplx);  // c2r destroys its input
  fftw_execute_dft_c2r(p, reinterpret_cast<fftw_complex*>(scratch.data()), out);
  double s = 1.0 / (std::size_t(n0) * n1 * n2);
  std::size_t nreal = std::size_t(n0) * n1 * n2;
  for (std::size_t i = 0; i < nreal; ++i) out[i] *= s;
}

void r2c_2d(int n0, int n1, const double* in, cplx* out) {
  fftw_plan p = get_plan_r2c(2, n0, n1, 0);
  std::vector<double> scratch(in, in + std::size_t(n0) * n1);
  fftw_execute_dft_r2c(p, scratch.data(), reinterpret_cast<fftw_complex*>(out));
}

void c2r_2d(int n0, int n1, const cplx* in, double* out) {
  fftw_plan p = get_plan_c2r(2, n0, n1, 0);
  std::size_t ncplx = std::size_t(n0) * (n1 / 2 + 1);
  std::vector<cplx> scratch(in, in + ncplx);
  fftw_execute_dft_c2r(p, reinterpret_cast<fftw_complex*>(scratch.data()), out);
  double s = 1.0 / (std::size_t(n0) * n1);
  std::size_t nreal = std::size_t(n0) * n1;
  for (std::size_t i = 0; i < nreal; ++i) out[i] *= s;
}

void r2c_1d(int n, const double* in, cplx* out) {
  fftw_plan p = get_plan_r2c(1, n, 0, 0);
  std::vector<double> scratch(in, in + n);
  fftw_execute_dft_r2c(p, scratch.data(), reinterpret_cast<fftw_complex*>(out));
}

}  // namespace slabmhd::fft
