#include "slabmhd/pressure.hpp"

#include <cmath>
#include <stdexcept>

namespace slabmhd {

namespace {

// physical-space derivative fields d_a z^c for one vector field
std::array<std::array<ScalarField, 3>, 3> all_derivs(const VectorField& z,
                                                     bool dealias) {
  std::array<std::array<ScalarField, 3>, 3> d;
  for (int c = 0; c < 3; ++c) {
    SpectralField Z = to_spectral(z.comp[c]);
    if (dealias) dealias_inplace(Z);
    for (int a = 0; a < 3; ++a) d[a][c] = from_spectral(deriv(Z, a));
  }
  return d;
}

}  // namespace

ScalarField pressure_source(const ElsasserState& s) {
  const GridPtr& g = s.grid();
  bool deal = g->spec.dealias;
  auto dp = all_derivs(s.zp, deal);
  auto dm = all_derivs(s.zm, deal);
  ScalarField f(g, Parity::Even);
  for (std::size_t n = 0; n < f.v.size(); ++n) {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) acc += dp[i][j].v[n] * dm[j][i].v[n];
    f.v[n] = -acc;
  }
  return f;
}

PressureField solve_pressure(const ElsasserState& s) {
  const Grid& g = *s.grid();
  // parity-label sanity: odd-labelled vertical components must vanish at the
  // walls, otherwise the reflection extension of the source is inconsistent
  for (const VectorField* z : {&s.zp, &s.zm}) {
    double m = max_norm(*z);
    if (m > 0 && max_abs_wall_value(z->comp[2]) > 1e-8 * m)
      throw std::runtime_error(
          "solve_pressure: source extension parity inconsistency "
          "(z^3 does not vanish at the walls)");
  }
  ScalarField f = pressure_source(s);
  SpectralField F = to_spectral(f);
  if (g.spec.dealias) dealias_inplace(F);
  SpectralField P(s.grid(), Parity::Even);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      for (int m = 0; m <= g.nz; ++m) {
        double k0 = g.kx[i], k1 = g.ky[j], k2 = g.kz[m];
        double k2sum = k0 * k0 + k1 * k1 + k2 * k2;
        std::size_t n = g.sidx(i, j, m);
        P.c[n] = k2sum == 0.0 ? cplx(0.0) : -F.c[n] / k2sum;
      }
  PressureField out;
  out.p = from_spectral(P);
  return out;
}

VectorField gradient(const PressureField& p) {
  SpectralField P = to_spectral(p.p);
  VectorField g(p.p.grid);
  g.comp[0] = from_spectral(deriv(P, 0));
  g.comp[1] = from_spectral(deriv(P, 1));
  g.comp[2] = from_spectral(deriv(P, 2));
  return g;
}

double green_tail_bound(double rho, double delta, int K) {
  // Per-pair majorant (2 rho + 8 delta)/(4 pi (rho^2 + 4 (k-1)^2 delta^2)^{3/2}):
  // the vertical components of an image pair telescope and the horizontal
  // offset stays rho while the vertical distance grows like 2(k-1) delta.
  // Sum over k > K bounded by the integral from K-1.
  double c = 2.0 * delta;
  double T = K - 1;
  double R = std::sqrt(rho * rho + c * c * T * T);
  double integral = 1.0 / (c * R * (R + c * T));
  return (2.0 * rho + 8.0 * delta) / (4.0 * M_PI) * integral;
}

GreenEval green_grad(const std::array<double, 3>& x,
                     const std::array<double, 3>& y, double delta, double tol) {
  if (std::abs(x[2]) > delta || std::abs(y[2]) > delta)
    throw std::invalid_argument("green_grad: points must lie in the slab");
  if (x == y) throw std::invalid_argument("green_grad: x == y");

  double hx = x[0] - y[0], hy = x[1] - y[1];
  double rho2 = hx * hx + hy * hy;
  double rho = std::sqrt(rho2);

  auto add_charge = [&](double dz, double sz, std::array<double, 3>& acc) {
    // grad_x of 1/|x_img - y| where the image height depends on x3 with
    // slope sz and the vertical offset is dz = x_img^3 - y3
    double r2 = rho2 + dz * dz;
    double r3 = r2 * std::sqrt(r2);
    acc[0] -= hx / r3;
    acc[1] -= hy / r3;
    acc[2] -= sz * dz / r3;
  };

  std::array<double, 3> acc{0.0, 0.0, 0.0};
  add_charge(x[2] - y[2], 1.0, acc);

  int K = 2;
  while (green_tail_bound(rho, delta, K) > tol && K < 100000000) K = K * 3 / 2 + 1;
  for (int k = 1; k <= K; ++k) {
    double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    // x_{+,k} = (x_h, (-1)^k (x3 - 2 k delta)), x_{-,k} with +2 k delta
    add_charge(sgn * (x[2] - 2 * k * delta) - y[2], sgn, acc);
    add_charge(sgn * (x[2] + 2 * k * delta) - y[2], sgn, acc);
  }
  GreenEval out;
  double c = 1.0 / (4.0 * M_PI);
  out.grad = {c * acc[0], c * acc[1], c * acc[2]};
  out.tail_bound = green_tail_bound(rho, delta, K);
  out.kmax = K;
  return out;
}

GreenPressureResult grad_pressure_via_green(
    const ElsasserState& s, const std::vector<std::array<double, 3>>& samples,
    const GreenQuadOptions& opt) {
  const Grid& g = *s.grid();
  double Lx = g.spec.Lx, Ly = g.spec.Ly, delta = g.spec.delta;
  ScalarField f = pressure_source(s);
  // the kernel convention (2.2) integrates grad G against d_i z_+^j d_j z_-^i,
  // which is -f for our Delta p = f source
  std::vector<double> src(f.v.size());
  for (std::size_t n = 0; n < src.size(); ++n) src[n] = -f.v[n];

  // grad of the source for the mean-value correction of the excluded cell
  std::array<ScalarField, 3> dsrc;
  {
    SpectralField F = to_spectral(f);
    for (int a = 0; a < 3; ++a) {
      dsrc[a] = from_spectral(deriv(F, a));
      for (double& v : dsrc[a].v) v = -v;
    }
  }

  double r_excl = std::max({g.dx, g.dy, g.dz});
  double dV = g.cell_volume();
  int M = opt.horizontal_images;

  GreenPressureResult res;
  res.grad.reserve(samples.size());
  for (const auto& x : samples) {
    std::array<double, 3> acc{0.0, 0.0, 0.0};
    bool near_node = false;
    for (int i = 0; i < g.nx; ++i)
      for (int j = 0; j < g.ny; ++j)
        for (int k = 0; k < g.nz; ++k) {
          double fy = src[g.idx(i, j, k)];
          for (int mi = -M; mi <= M; ++mi)
            for (int mj = -M; mj <= M; ++mj) {
              std::array<double, 3> y{g.x1[i] + 2 * Lx * mi,
                                      g.x2[j] + 2 * Ly * mj, g.x3[k]};
              double d0 = x[0] - y[0], d1 = x[1] - y[1], d2 = x[2] - y[2];
              double dist = std::sqrt(d0 * d0 + d1 * d1 + d2 * d2);
              if (dist < r_excl) {
                if (dist < 0.25 * r_excl) near_node = true;
                continue;  // excluded self-cell, handled below
              }
              // shift the evaluation point instead of the kernel arguments:
              // the kernel depends on x_h - y_h only
              GreenEval ge = green_grad({x[0] - 2 * Lx * mi, x[1] - 2 * Ly * mj, x[2]},
                                        {g.x1[i], g.x2[j], g.x3[k]}, delta, opt.tol);
              for (int c = 0; c < 3; ++c) acc[c] += ge.grad[c] * fy * dV;
            }
        }
    // local mean-value correction for the excluded ball: the odd kernel
    // annihilates the constant part; the linear part integrates to
    // r^2/6 * grad f_src
    auto grad_at = [&](const ScalarField& field) {
      // nearest-cell lookup is enough for the correction term
      auto wrap = [](double v, double L) {
        double w = std::fmod(v + L, 2 * L);
        if (w < 0) w += 2 * L;
        return w - L;
      };
      int i = int(std::floor((wrap(x[0], Lx) + Lx) / g.dx + 0.5)) % g.nx;
      int j = int(std::floor((wrap(x[1], Ly) + Ly) / g.dy + 0.5)) % g.ny;
      int k = std::min(g.nz - 1, std::max(0, int(std::floor((x[2] + delta) / g.dz))));
      return field.at(i, j, k);
    };
    double corr = r_excl * r_excl / 6.0;
    for (int c = 0; c < 3; ++c) acc[c] += corr * grad_at(dsrc[c]);
    if (near_node)
      res.warnings.push_back("sample point within a quarter cell of a quadrature node");
    res.grad.push_back(acc);
  }
  return res;
}

std::vector<std::array<double, 3>> grad_pressure_spectral_at(
    const ElsasserState& s, const std::vector<std::array<double, 3>>& samples) {
  const Grid& g = *s.grid();
  PressureField p = solve_pressure(s);
  SpectralField P = to_spectral(p.p);
  std::vector<std::array<double, 3>> out;
  out.reserve(samples.size());
  // direct evaluation of the trig interpolant's gradient; sample counts are
  // small so the O(N^3) mode sum per point is fine
  for (const auto& x : samples) {
    std::array<double, 3> acc{0.0, 0.0, 0.0};
    for (int i = 0; i < g.nx; ++i)
      for (int j = 0; j < g.ny; ++j)
        for (int m = 0; m <= g.nz; ++m) {
          if (i == g.nx / 2 || j == g.ny / 2 || m == g.nz) continue;  // Nyquist
          double k0 = g.kx[i], k1 = g.ky[j], k2 = g.kz[m];
          // vertical phase is relative to the first extended sample at
          // x3 = -delta + dz/2
          double phase = k0 * (x[0] + g.spec.Lx) + k1 * (x[1] + g.spec.Ly) +
                         k2 * (x[2] + g.spec.delta - 0.5 * g.dz);
          cplx e = std::polar(1.0, phase);
          cplx val = P.c[g.sidx(i, j, m)] * e;
          double mult = m == 0 ? 1.0 : 2.0;  // conjugate vertical pair
          acc[0] += mult * (cplx(0.0, k0) * val).real();
          acc[1] += mult * (cplx(0.0, k1) * val).real();
          acc[2] += mult * (cplx(0.0, k2) * val).real();
        }
    double n = double(g.nx) * g.ny * g.nzext;
    out.push_back({acc[0] / n, acc[1] / n, acc[2] / n});
  }
  return out;
}

}  // namespace slabmhd
