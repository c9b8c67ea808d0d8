#pragma once

#include <complex>

namespace slabmhd::fft {

using cplx = std::complex<double>;

// Real-to-complex transforms, row-major with the last dimension contracted
// to n/2+1 coefficients. Forward transforms are unnormalized; inverse
// transforms scale by 1/N. Input buffers are never modified. Plan creation
// is serialized internally; execution is safe to call concurrently.

void r2c_3d(int n0, int n1, int n2, const double* in, cplx* out);
void c2r_3d(int n0, int n1, int n2, const cplx* in, double* out);

void r2c_2d(int n0, int n1, const double* in, cplx* out);
void c2r_2d(int n0, int n1, const cplx* in, double* out);

void r2c_1d(int n, const double* in, cplx* out);

}  // namespace slabmhd::fft
