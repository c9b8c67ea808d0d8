#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace slabmhd {

using cplx = std::complex<double>;

/// Behavior of a scalar field under reflection about the slab walls
/// x3 = +-delta. Horizontal vector components extend evenly, the vertical
/// component oddly. Products multiply parities; d/dx3 flips them.
enum class Parity { Even, Odd };

inline Parity operator*(Parity a, Parity b) {
  return a == b ? Parity::Even : Parity::Odd;
}
inline Parity flip(Parity p) {
  return p == Parity::Even ? Parity::Odd : Parity::Even;
}

struct GridSpec {
  double Lx = 8.0;     // horizontal half-period in x1: x1 in [-Lx, Lx)
  double Ly = 2.0;     // horizontal half-period in x2
  double delta = 0.1;  // slab half-height, in (0, 1]
  int nx = 64;
  int ny = 16;
  int nz = 16;          // points across (-delta, delta); extension has 2*nz
  double sigma = 0.25;  // weight exponent, in (0, 1/3)
  bool dealias = true;  // 2/3-rule truncation of quadratic products

  void validate() const;  // throws std::invalid_argument
};

/// Collocation grid for the slab and its 4*delta-periodic reflection
/// extension. Horizontal samples are x = -L + i*dx (period 2L). Vertical
/// samples are cell-centered, x3 = -delta + (j + 1/2)*dz, so the walls carry
/// no collocation point and the reflection x3 -> 2*delta - x3 maps grid
/// points to grid points: extension index nz + m mirrors slab index
/// nz - 1 - m.
class Grid {
 public:
  explicit Grid(const GridSpec& s);

  GridSpec spec;
  int nx, ny, nz, nzext;  // nzext = 2*nz
  double dx, dy, dz;
  std::vector<double> x1, x2, x3;  // slab coordinates
  std::vector<double> kx, ky;      // signed wavenumbers (pi/L multiples)
  std::vector<double> kz;          // half-spectrum 0..nz, pi/(2 delta) steps

  std::size_t nslab() const { return std::size_t(nx) * ny * nz; }
  std::size_t nextended() const { return std::size_t(nx) * ny * nzext; }
  std::size_t nspec() const { return std::size_t(nx) * ny * (nz + 1); }

  std::size_t idx(int i, int j, int k) const {
    return (std::size_t(i) * ny + j) * nz + k;
  }
  std::size_t eidx(int i, int j, int k) const {
    return (std::size_t(i) * ny + j) * nzext + k;
  }
  std::size_t sidx(int i, int j, int m) const {
    return (std::size_t(i) * ny + j) * (nz + 1) + m;
  }

  double cell_volume() const { return dx * dy * dz; }
  double slab_volume() const { return 2 * spec.Lx * 2 * spec.Ly * 2 * spec.delta; }

  // 2/3-rule mask on the extended box (true = keep)
  bool dealias_keep(int i, int j, int m) const;

  bool same_shape(const Grid& o) const {
    return nx == o.nx && ny == o.ny && nz == o.nz && spec.Lx == o.spec.Lx &&
           spec.Ly == o.spec.Ly && spec.delta == o.spec.delta;
  }
};

using GridPtr = std::shared_ptr<const Grid>;
GridPtr make_grid(const GridSpec& spec);

/// Real samples on the slab with a declared reflection parity.
struct ScalarField {
  GridPtr grid;
  Parity parity = Parity::Even;
  std::vector<double> v;

  ScalarField() = default;
  ScalarField(GridPtr g, Parity p)
      : grid(std::move(g)), parity(p), v(grid->nslab(), 0.0) {}

  double& at(int i, int j, int k) { return v[grid->idx(i, j, k)]; }
  double at(int i, int j, int k) const { return v[grid->idx(i, j, k)]; }
};

/// Coefficients of the field's reflection extension on the 4*delta-periodic
/// box, in r2c layout (vertical axis contracted to nz+1 entries).
struct SpectralField {
  GridPtr grid;
  Parity parity = Parity::Even;
  std::vector<cplx> c;

  SpectralField() = default;
  SpectralField(GridPtr g, Parity p)
      : grid(std::move(g)), parity(p), c(grid->nspec(), cplx(0.0)) {}
};

// Reflection extension (paper's 4*delta periodization) and its inverse.
std::vector<double> reflect_extend(const ScalarField& f);
ScalarField restrict_slab(const GridPtr& g, const std::vector<double>& ext,
                          Parity parity);

SpectralField to_spectral(const ScalarField& f);
ScalarField from_spectral(const SpectralField& F);

// Spectral derivative along axis 0,1,2; axis 2 flips parity. Nyquist modes
// are zeroed.
SpectralField deriv(const SpectralField& F, int axis);
ScalarField deriv_phys(const ScalarField& f, int axis);

void dealias_inplace(SpectralField& F);

// <u> = (1 + u^2)^{1/2} and the characteristic weight <u>^{1+sigma}.
double bracket(double u);
double weight(double u, double sigma);

struct CharCoords {
  double u_plus;   // x1 - t
  double u_minus;  // x1 + t
};
CharCoords characteristic_coords(double t, double x1);

/// Trigonometric-interpolant values of the extension at the walls
/// x3 = +delta / -delta (the walls are not collocation points).
struct WallValues {
  std::vector<double> top, bottom;  // nx*ny each, row-major (i, j)
};
WallValues wall_values(const ScalarField& f);
double max_abs_wall_value(const ScalarField& f);

double max_abs(const std::vector<double>& v);

}  // namespace slabmhd
