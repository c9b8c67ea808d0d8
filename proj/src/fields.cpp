#include "slabmhd/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace slabmhd {

namespace {

void check_state_invariants(const VectorField& z, double tol, const char* who) {
  double div = divergence_rel(z);
  if (div > tol)
    throw std::invalid_argument(std::string(who) + ": divergence residual " +
                                std::to_string(div) + " exceeds tolerance");
  double m = max_norm(z);
  if (m > 0 && max_abs_wall_value(z.comp[2]) > tol * m)
    throw std::invalid_argument(std::string(who) +
                                ": vertical component does not vanish at the walls");
}

}  // namespace

ElsasserState elsasser_from_vb(const VectorField& v, const VectorField& b,
                               double tol) {
  check_state_invariants(v, tol, "elsasser_from_vb(v)");
  check_state_invariants(b, tol, "elsasser_from_vb(b)");
  ElsasserState s(v.grid());
  for (int c = 0; c < 3; ++c) {
    std::size_t n = v.comp[c].v.size();
    for (std::size_t i = 0; i < n; ++i) {
      s.zp.comp[c].v[i] = v.comp[c].v[i] + b.comp[c].v[i];
      s.zm.comp[c].v[i] = v.comp[c].v[i] - b.comp[c].v[i];
    }
  }
  // subtract / add the background B0 = e1
  for (std::size_t i = 0; i < s.zp.comp[0].v.size(); ++i) {
    s.zp.comp[0].v[i] -= 1.0;
    s.zm.comp[0].v[i] += 1.0;
  }
  return s;
}

void vb_from_elsasser(const ElsasserState& s, VectorField& v, VectorField& b) {
  v = VectorField(s.grid());
  b = VectorField(s.grid());
  for (int c = 0; c < 3; ++c) {
    std::size_t n = v.comp[c].v.size();
    for (std::size_t i = 0; i < n; ++i) {
      double zp = s.zp.comp[c].v[i], zm = s.zm.comp[c].v[i];
      v.comp[c].v[i] = 0.5 * (zp + zm);
      b.comp[c].v[i] = 0.5 * (zp - zm) + (c == 0 ? 1.0 : 0.0);
    }
  }
}

VectorField project_divfree(const VectorField& z) {
  const Grid& g = *z.grid();
  SpectralField Z0 = to_spectral(z.comp[0]);
  SpectralField Z1 = to_spectral(z.comp[1]);
  SpectralField Z2 = to_spectral(z.comp[2]);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      for (int m = 0; m <= g.nz; ++m) {
        double k0 = i == g.nx / 2 ? 0.0 : g.kx[i];
        double k1 = j == g.ny / 2 ? 0.0 : g.ky[j];
        double k2 = m == g.nz ? 0.0 : g.kz[m];
        double k2sum = k0 * k0 + k1 * k1 + k2 * k2;
        if (k2sum == 0.0) continue;
        std::size_t n = g.sidx(i, j, m);
        cplx kdotz = k0 * Z0.c[n] + k1 * Z1.c[n] + k2 * Z2.c[n];
        cplx f = kdotz / k2sum;
        Z0.c[n] -= k0 * f;
        Z1.c[n] -= k1 * f;
        Z2.c[n] -= k2 * f;
      }
  VectorField out(z.grid());
  out.comp[0] = from_spectral(Z0);
  out.comp[1] = from_spectral(Z1);
  out.comp[2] = from_spectral(Z2);
  return out;
}

ScalarField divergence(const VectorField& z) {
  SpectralField D = deriv(to_spectral(z.comp[0]), 0);
  SpectralField D1 = deriv(to_spectral(z.comp[1]), 1);
  SpectralField D2 = deriv(to_spectral(z.comp[2]), 2);
  for (std::size_t n = 0; n < D.c.size(); ++n) D.c[n] += D1.c[n] + D2.c[n];
  return from_spectral(D);
}

double divergence_rel(const VectorField& z) {
  double dmax = max_abs(divergence(z).v);
  double gmax = 0.0;
  for (int c = 0; c < 3; ++c)
    for (int a = 0; a < 3; ++a)
      gmax = std::max(gmax, max_abs(deriv_phys(z.comp[c], a).v));
  if (gmax == 0.0) return dmax == 0.0 ? 0.0 : 1.0;
  return dmax / gmax;
}

VectorField curl(const VectorField& z) {
  SpectralField Z0 = to_spectral(z.comp[0]);
  SpectralField Z1 = to_spectral(z.comp[1]);
  SpectralField Z2 = to_spectral(z.comp[2]);
  SpectralField c0 = deriv(Z2, 1), c0b = deriv(Z1, 2);
  SpectralField c1 = deriv(Z0, 2), c1b = deriv(Z2, 0);
  SpectralField c2 = deriv(Z1, 0), c2b = deriv(Z0, 1);
  for (std::size_t n = 0; n < c0.c.size(); ++n) {
    c0.c[n] -= c0b.c[n];
    c1.c[n] -= c1b.c[n];
    c2.c[n] -= c2b.c[n];
  }
  VectorField out(z.grid());
  out.comp[0] = from_spectral(c0);
  out.comp[1] = from_spectral(c1);
  out.comp[2] = from_spectral(c2);
  return out;
}

double max_norm(const VectorField& z) {
  double m = 0.0;
  for (int c = 0; c < 3; ++c) m = std::max(m, max_abs(z.comp[c].v));
  return m;
}

double l2_norm_sq(const VectorField& z) {
  double s = 0.0;
  for (int c = 0; c < 3; ++c)
    for (double v : z.comp[c].v) s += v * v;
  return s * z.grid()->cell_volume();
}

VectorField axpy(double a, const VectorField& x, const VectorField& y) {
  VectorField out(y.grid());
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < out.comp[c].v.size(); ++i)
      out.comp[c].v[i] = a * x.comp[c].v[i] + y.comp[c].v[i];
  return out;
}

ElsasserState axpy(double a, const ElsasserState& x, const ElsasserState& y) {
  ElsasserState out(y.grid());
  out.t = y.t;
  out.zp = axpy(a, x.zp, y.zp);
  out.zm = axpy(a, x.zm, y.zm);
  return out;
}

InitialFamily initial_family_from_string(const std::string& s) {
  if (s == "sheet") return InitialFamily::Sheet;
  if (s == "tube") return InitialFamily::Tube;
  if (s == "lifted2d") return InitialFamily::Lifted2D;
  throw std::invalid_argument("unknown initial-data family: " + s);
}

double packet_stream(double x1, double x2, double Lx, double Ly, double center,
                     double wx, double wy, int mode) {
  // exactly periodic Gaussian-like envelope: exp((cos(th)-1)(L/(pi w))^2)
  // matches exp(-(x-c)^2/(2 w^2)) near the center
  double tx = M_PI * (x1 - center) / Lx;
  double ty = M_PI * x2 / Ly;
  double ax = Lx / (M_PI * wx), ay = Ly / (M_PI * wy);
  double env = std::exp((std::cos(tx) - 1.0) * ax * ax) *
               std::exp((std::cos(ty) - 1.0) * ay * ay);
  double k0 = mode * M_PI / Lx;
  return env * std::cos(k0 * (x1 - center));
}

namespace {

// z^h = eps * grad_h^perp psi / sup|grad_h^perp psi|, z^3 = 0; exactly
// x3-independent
VectorField sheet_wave(const GridPtr& g, const InitialParams& p, double center) {
  ScalarField psi(g, Parity::Even);
  for (int i = 0; i < g->nx; ++i)
    for (int j = 0; j < g->ny; ++j) {
      double s = packet_stream(g->x1[i], g->x2[j], g->spec.Lx, g->spec.Ly,
                               center, p.width_x, p.width_y, p.carrier_mode);
      for (int k = 0; k < g->nz; ++k) psi.at(i, j, k) = s;
    }
  SpectralField Psi = to_spectral(psi);
  VectorField z(g);
  z.comp[0] = from_spectral(deriv(Psi, 1));  // -d2 psi
  for (double& v : z.comp[0].v) v = -v;
  z.comp[1] = from_spectral(deriv(Psi, 0));  // +d1 psi
  double sup = 0.0;
  for (std::size_t n = 0; n < z.comp[0].v.size(); ++n)
    sup = std::max(sup, std::hypot(z.comp[0].v[n], z.comp[1].v[n]));
  double scale = p.epsilon / sup;
  for (int c = 0; c < 2; ++c)
    for (double& v : z.comp[c].v) v *= scale;
  return z;
}

// z = eps * curl A / sup|curl A| with A^h = a(x_h) cos(pi(2m-1)x3/(2 delta)),
// A^3 = 0; the vertical profile is an odd half-wave so z^h is even and z^3
// odd with exact wall zeros
VectorField tube_wave(const GridPtr& g, const InitialParams& p, double center) {
  double theta = M_PI * (2 * p.vertical_mode - 1) / (2 * g->spec.delta);
  ScalarField A1(g, Parity::Odd), A2(g, Parity::Odd);
  for (int i = 0; i < g->nx; ++i)
    for (int j = 0; j < g->ny; ++j) {
      double a = packet_stream(g->x1[i], g->x2[j], g->spec.Lx, g->spec.Ly,
                               center, p.width_x, p.width_y, p.carrier_mode);
      double a1 = packet_stream(g->x1[i], g->x2[j], g->spec.Lx, g->spec.Ly,
                                center, 1.25 * p.width_x, p.width_y, 0);
      for (int k = 0; k < g->nz; ++k) {
        double prof = std::cos(theta * g->x3[k]);
        A1.at(i, j, k) = 0.5 * a1 * prof;
        A2.at(i, j, k) = a * prof;
      }
    }
  SpectralField SA1 = to_spectral(A1), SA2 = to_spectral(A2);
  VectorField z(g);
  z.comp[0] = from_spectral(deriv(SA2, 2));  // -d3 A2
  for (double& v : z.comp[0].v) v = -v;
  z.comp[1] = from_spectral(deriv(SA1, 2));  // +d3 A1
  SpectralField Z2 = deriv(SA2, 0);          // d1 A2 - d2 A1
  SpectralField Z2b = deriv(SA1, 1);
  for (std::size_t n = 0; n < Z2.c.size(); ++n) Z2.c[n] -= Z2b.c[n];
  z.comp[2] = from_spectral(Z2);
  double sup = 0.0;
  for (std::size_t n = 0; n < z.comp[0].v.size(); ++n)
    sup = std::max(sup, std::sqrt(z.comp[0].v[n] * z.comp[0].v[n] +
                                  z.comp[1].v[n] * z.comp[1].v[n] +
                                  z.comp[2].v[n] * z.comp[2].v[n]));
  double scale = p.epsilon / sup;
  for (int c = 0; c < 3; ++c)
    for (double& v : z.comp[c].v) v *= scale;
  return z;
}

}  // namespace

ElsasserState make_initial(const GridPtr& g, const InitialParams& p) {
  if (!(p.epsilon > 0)) throw std::invalid_argument("make_initial: epsilon must be positive");
  double reach = std::max(std::abs(p.center_plus), std::abs(p.center_minus)) +
                 3.0 * p.width_x;
  if (reach >= g->spec.Lx)
    throw std::invalid_argument(
        "make_initial: packet envelope does not fit inside the torus "
        "(|center| + 3 width >= Lx)");
  if (3.0 * p.width_y >= g->spec.Ly)
    throw std::invalid_argument("make_initial: envelope too wide in x2");

  ElsasserState s(g);
  switch (p.family) {
    case InitialFamily::Sheet:
      s.zp = sheet_wave(g, p, p.center_plus);
      s.zm = sheet_wave(g, p, p.center_minus);
      break;
    case InitialFamily::Tube:
      s.zp = tube_wave(g, p, p.center_plus);
      s.zm = tube_wave(g, p, p.center_minus);
      break;
    case InitialFamily::Lifted2D: {
      s.zp = sheet_wave(g, p, p.center_plus);
      s.zm = sheet_wave(g, p, p.center_minus);
      if (p.eta != 0.0) {
        s.zp = axpy(p.eta, tube_wave(g, p, p.center_plus), s.zp);
        s.zm = axpy(p.eta, tube_wave(g, p, p.center_minus), s.zm);
      }
      break;
    }
  }
  return s;
}

}  // namespace slabmhd
