#include "slabmhd/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "slabmhd/fft.hpp"

namespace slabmhd {

void GridSpec::validate() const {
  auto bad = [](const std::string& msg) { throw std::invalid_argument("GridSpec: " + msg); };
  if (!(Lx > 0) || !(Ly > 0)) bad("horizontal half-periods must be positive");
  if (!(delta > 0) || !(delta <= 1)) bad("delta must lie in (0, 1]");
  if (nx < 4 || ny < 4 || nz < 4) bad("point counts must be >= 4");
  if (nx % 2 || ny % 2 || nz % 2) bad("point counts must be even");
  if (!(sigma > 0) || !(sigma < 1.0 / 3.0)) bad("sigma must lie in (0, 1/3)");
}

Grid::Grid(const GridSpec& s) : spec(s) {
  s.validate();
  nx = s.nx;
  ny = s.ny;
  nz = s.nz;
  nzext = 2 * nz;
  dx = 2 * s.Lx / nx;
  dy = 2 * s.Ly / ny;
  dz = 2 * s.delta / nz;
  x1.resize(nx);
  x2.resize(ny);
  x3.resize(nz);
  for (int i = 0; i < nx; ++i) x1[i] = -s.Lx + i * dx;
  for (int j = 0; j < ny; ++j) x2[j] = -s.Ly + j * dy;
  for (int k = 0; k < nz; ++k) x3[k] = -s.delta + (k + 0.5) * dz;
  kx.resize(nx);
  ky.resize(ny);
  kz.resize(nz + 1);
  const double pi = M_PI;
  for (int i = 0; i < nx; ++i) {
    int f = i <= nx / 2 ? i : i - nx;
    kx[i] = f * pi / s.Lx;
  }
  for (int j = 0; j < ny; ++j) {
    int f = j <= ny / 2 ? j : j - ny;
    ky[j] = f * pi / s.Ly;
  }
  for (int m = 0; m <= nz; ++m) kz[m] = m * pi / (2 * s.delta);
}

bool Grid::dealias_keep(int i, int j, int m) const {
  int fi = i <= nx / 2 ? i : i - nx;
  int fj = j <= ny / 2 ? j : j - ny;
  return std::abs(fi) <= nx / 3 && std::abs(fj) <= ny / 3 && m <= nzext / 3;
}

GridPtr make_grid(const GridSpec& spec) { return std::make_shared<Grid>(spec); }

std::vector<double> reflect_extend(const ScalarField& f) {
  const Grid& g = *f.grid;
  std::vector<double> ext(g.nextended());
  double sign = f.parity == Parity::Even ? 1.0 : -1.0;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) {
      const double* src = &f.v[g.idx(i, j, 0)];
      double* dst = &ext[g.eidx(i, j, 0)];
      for (int k = 0; k < g.nz; ++k) dst[k] = src[k];
      for (int m = 0; m < g.nz; ++m) dst[g.nz + m] = sign * src[g.nz - 1 - m];
    }
  return ext;
}

ScalarField restrict_slab(const GridPtr& g, const std::vector<double>& ext,
                          Parity parity) {
  ScalarField f(g, parity);
  for (int i = 0; i < g->nx; ++i)
    for (int j = 0; j < g->ny; ++j) {
      const double* src = &ext[g->eidx(i, j, 0)];
      double* dst = &f.v[g->idx(i, j, 0)];
      for (int k = 0; k < g->nz; ++k) dst[k] = src[k];
    }
  return f;
}

SpectralField to_spectral(const ScalarField& f) {
  SpectralField F(f.grid, f.parity);
  std::vector<double> ext = reflect_extend(f);
  fft::r2c_3d(f.grid->nx, f.grid->ny, f.grid->nzext, ext.data(), F.c.data());
  return F;
}

ScalarField from_spectral(const SpectralField& F) {
  const Grid& g = *F.grid;
  std::vector<double> ext(g.nextended());
  fft::c2r_3d(g.nx, g.ny, g.nzext, F.c.data(), ext.data());
  return restrict_slab(F.grid, ext, F.parity);
}

SpectralField deriv(const SpectralField& F, int axis) {
  const Grid& g = *F.grid;
  SpectralField D(F.grid, axis == 2 ? flip(F.parity) : F.parity);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      for (int m = 0; m <= g.nz; ++m) {
        double k = axis == 0 ? g.kx[i] : axis == 1 ? g.ky[j] : g.kz[m];
        bool nyq = (axis == 0 && i == g.nx / 2) || (axis == 1 && j == g.ny / 2) ||
                   (axis == 2 && m == g.nz);
        std::size_t n = g.sidx(i, j, m);
        D.c[n] = nyq ? cplx(0.0) : cplx(0.0, k) * F.c[n];
      }
  return D;
}

ScalarField deriv_phys(const ScalarField& f, int axis) {
  return from_spectral(deriv(to_spectral(f), axis));
}

void dealias_inplace(SpectralField& F) {
  const Grid& g = *F.grid;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      for (int m = 0; m <= g.nz; ++m)
        if (!g.dealias_keep(i, j, m)) F.c[g.sidx(i, j, m)] = cplx(0.0);
}

double bracket(double u) { return std::sqrt(1.0 + u * u); }

double weight(double u, double sigma) {
  return std::pow(1.0 + u * u, 0.5 * (1.0 + sigma));
}

CharCoords characteristic_coords(double t, double x1) {
  return {x1 - t, x1 + t};
}

WallValues wall_values(const ScalarField& f) {
  const Grid& g = *f.grid;
  const int N = g.nzext;
  WallValues w;
  w.top.assign(std::size_t(g.nx) * g.ny, 0.0);
  w.bottom.assign(std::size_t(g.nx) * g.ny, 0.0);
  std::vector<double> ext = reflect_extend(f);
  std::vector<cplx> col(N / 2 + 1);
  // Trig interpolation at fractional sample index s: top wall x3 = +delta is
  // s = nz - 1/2, bottom wall x3 = -delta is s = -1/2. Nyquist mode uses
  // cos(pi s).
  const double pi = M_PI;
  double s_top = g.nz - 0.5, s_bot = -0.5;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) {
      fft::r2c_1d(N, &ext[g.eidx(i, j, 0)], col.data());
      double top = col[0].real(), bot = col[0].real();
      for (int m = 1; m < N / 2; ++m) {
        double th_t = 2 * pi * m * s_top / N, th_b = 2 * pi * m * s_bot / N;
        top += 2 * (col[m].real() * std::cos(th_t) - col[m].imag() * std::sin(th_t));
        bot += 2 * (col[m].real() * std::cos(th_b) - col[m].imag() * std::sin(th_b));
      }
      top += col[N / 2].real() * std::cos(pi * s_top);
      bot += col[N / 2].real() * std::cos(pi * s_bot);
      w.top[std::size_t(i) * g.ny + j] = top / N;
      w.bottom[std::size_t(i) * g.ny + j] = bot / N;
    }
  return w;
}

double max_abs_wall_value(const ScalarField& f) {
  WallValues w = wall_values(f);
  double m = 0.0;
  for (double v : w.top) m = std::max(m, std::abs(v));
  for (double v : w.bottom) m = std::max(m, std::abs(v));
  return m;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace slabmhd
