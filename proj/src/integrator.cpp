#include "slabmhd/integrator.hpp"

#include <cmath>
#include <stdexcept>

namespace slabmhd {

void StepperConfig::validate() const {
  if (!(cfl > 0) || !(cfl < 1))
    throw std::invalid_argument("StepperConfig: cfl must lie in (0, 1)");
  if (t_end < 0) throw std::invalid_argument("StepperConfig: t_end must be >= 0");
  if (!(snapshot_cadence > 0))
    throw std::invalid_argument("StepperConfig: snapshot_cadence must be positive");
}

Tendency rhs(const ElsasserState& s) {
  const Grid& g = *s.grid();
  bool deal = g.spec.dealias;

  std::array<SpectralField, 3> Zp, Zm, Tp, Tm;  // full and truncated spectra
  for (int c = 0; c < 3; ++c) {
    Zp[c] = to_spectral(s.zp.comp[c]);
    Zm[c] = to_spectral(s.zm.comp[c]);
    Tp[c] = Zp[c];
    Tm[c] = Zm[c];
    if (deal) {
      dealias_inplace(Tp[c]);
      dealias_inplace(Tm[c]);
    }
  }

  // advecting fields and all first derivatives, on the truncated band
  std::array<ScalarField, 3> zp_ph, zm_ph;
  std::array<std::array<ScalarField, 3>, 3> dp, dm;  // d[a][c] = d_a z^c
  for (int c = 0; c < 3; ++c) {
    zp_ph[c] = from_spectral(Tp[c]);
    zm_ph[c] = from_spectral(Tm[c]);
    for (int a = 0; a < 3; ++a) {
      dp[a][c] = from_spectral(deriv(Tp[c], a));
      dm[a][c] = from_spectral(deriv(Tm[c], a));
    }
  }

  std::size_t nsl = g.nslab();
  // (z_- . grad) z_+ and (z_+ . grad) z_-
  std::array<ScalarField, 3> advp, advm;
  for (int c = 0; c < 3; ++c) {
    advp[c] = ScalarField(s.grid(), dp[0][c].parity);
    advm[c] = ScalarField(s.grid(), dm[0][c].parity);
    for (std::size_t n = 0; n < nsl; ++n) {
      advp[c].v[n] = zm_ph[0].v[n] * dp[0][c].v[n] + zm_ph[1].v[n] * dp[1][c].v[n] +
                     zm_ph[2].v[n] * dp[2][c].v[n];
      advm[c].v[n] = zp_ph[0].v[n] * dm[0][c].v[n] + zp_ph[1].v[n] * dm[1][c].v[n] +
                     zp_ph[2].v[n] * dm[2][c].v[n];
    }
  }

  // pressure source f with Delta p = f, f = -(d_i z_+^j)(d_j z_-^i)
  ScalarField f(s.grid(), Parity::Even);
  for (std::size_t n = 0; n < nsl; ++n) {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) acc += dp[i][j].v[n] * dm[j][i].v[n];
    f.v[n] = -acc;
  }
  SpectralField F = to_spectral(f);
  if (deal) dealias_inplace(F);
  SpectralField P(s.grid(), Parity::Even);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      for (int m = 0; m <= g.nz; ++m) {
        double k2sum = g.kx[i] * g.kx[i] + g.ky[j] * g.ky[j] + g.kz[m] * g.kz[m];
        std::size_t n = g.sidx(i, j, m);
        P.c[n] = k2sum == 0.0 ? cplx(0.0) : -F.c[n] / k2sum;
      }

  // assemble spectral tendencies and project
  Tendency out;
  out.dzp = VectorField(s.grid());
  out.dzm = VectorField(s.grid());
  std::array<SpectralField, 3> Dp, Dm;
  for (int c = 0; c < 3; ++c) {
    Dp[c] = SpectralField(s.grid(), advp[c].parity);
    Dm[c] = SpectralField(s.grid(), advm[c].parity);
    SpectralField Ap = to_spectral(advp[c]);
    SpectralField Am = to_spectral(advm[c]);
    if (deal) {
      dealias_inplace(Ap);
      dealias_inplace(Am);
    }
    SpectralField Lp = deriv(Zp[c], 0);  // background transport +d1 z_+
    SpectralField Lm = deriv(Zm[c], 0);
    for (int i = 0; i < g.nx; ++i)
      for (int j = 0; j < g.ny; ++j)
        for (int m = 0; m <= g.nz; ++m) {
          std::size_t n = g.sidx(i, j, m);
          double kc = c == 0 ? g.kx[i] : c == 1 ? g.ky[j] : g.kz[m];
          bool nyq = (c == 0 && i == g.nx / 2) || (c == 1 && j == g.ny / 2) ||
                     (c == 2 && m == g.nz);
          cplx gp = nyq ? cplx(0.0) : cplx(0.0, kc) * P.c[n];
          Dp[c].c[n] = Lp.c[n] - Ap.c[n] - gp;
          Dm[c].c[n] = -Lm.c[n] - Am.c[n] - gp;
        }
  }
  // projection absorbs the discrete pressure error
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      for (int m = 0; m <= g.nz; ++m) {
        double k0 = i == g.nx / 2 ? 0.0 : g.kx[i];
        double k1 = j == g.ny / 2 ? 0.0 : g.ky[j];
        double k2 = m == g.nz ? 0.0 : g.kz[m];
        double k2sum = k0 * k0 + k1 * k1 + k2 * k2;
        if (k2sum == 0.0) continue;
        std::size_t n = g.sidx(i, j, m);
        cplx fp = (k0 * Dp[0].c[n] + k1 * Dp[1].c[n] + k2 * Dp[2].c[n]) / k2sum;
        cplx fm = (k0 * Dm[0].c[n] + k1 * Dm[1].c[n] + k2 * Dm[2].c[n]) / k2sum;
        Dp[0].c[n] -= k0 * fp;
        Dp[1].c[n] -= k1 * fp;
        Dp[2].c[n] -= k2 * fp;
        Dm[0].c[n] -= k0 * fm;
        Dm[1].c[n] -= k1 * fm;
        Dm[2].c[n] -= k2 * fm;
      }
  for (int c = 0; c < 3; ++c) {
    out.dzp.comp[c] = from_spectral(Dp[c]);
    out.dzm.comp[c] = from_spectral(Dm[c]);
  }
  out.p.p = from_spectral(P);
  return out;
}

double cfl_dt(const ElsasserState& s, double cfl) {
  const Grid& g = *s.grid();
  double h = std::min({g.dx, g.dy, g.dz});
  double speed = 1.0 + std::max(max_norm(s.zp), max_norm(s.zm));
  return cfl * h / speed;
}

namespace {

void check_health(const ElsasserState& s, double threshold) {
  for (const VectorField* z : {&s.zp, &s.zm})
    for (int c = 0; c < 3; ++c)
      for (double v : z->comp[c].v)
        if (!std::isfinite(v) || std::abs(v) > threshold)
          throw std::runtime_error("blow-up guard: field value " +
                                   std::to_string(v));
}

}  // namespace

ElsasserState step(const ElsasserState& s, double dt) {
  Tendency k1 = rhs(s);
  ElsasserState s2(s.grid());
  s2.t = s.t + 0.5 * dt;
  s2.zp = axpy(0.5 * dt, k1.dzp, s.zp);
  s2.zm = axpy(0.5 * dt, k1.dzm, s.zm);
  Tendency k2 = rhs(s2);
  ElsasserState s3(s.grid());
  s3.t = s.t + 0.5 * dt;
  s3.zp = axpy(0.5 * dt, k2.dzp, s.zp);
  s3.zm = axpy(0.5 * dt, k2.dzm, s.zm);
  Tendency k3 = rhs(s3);
  ElsasserState s4(s.grid());
  s4.t = s.t + dt;
  s4.zp = axpy(dt, k3.dzp, s.zp);
  s4.zm = axpy(dt, k3.dzm, s.zm);
  Tendency k4 = rhs(s4);

  ElsasserState out(s.grid());
  out.t = s.t + dt;
  auto combine = [&](const VectorField& y, const VectorField& a,
                     const VectorField& b, const VectorField& c,
                     const VectorField& d) {
    VectorField r = axpy(dt / 6.0, a, y);
    r = axpy(dt / 3.0, b, r);
    r = axpy(dt / 3.0, c, r);
    r = axpy(dt / 6.0, d, r);
    return r;
  };
  out.zp = project_divfree(combine(s.zp, k1.dzp, k2.dzp, k3.dzp, k4.dzp));
  out.zm = project_divfree(combine(s.zm, k1.dzm, k2.dzm, k3.dzm, k4.dzm));
  check_health(out, kBlowupThreshold);
  return out;
}

Trajectory run(const ElsasserState& init, const StepperConfig& sc,
               const std::vector<double>* replay_dts) {
  sc.validate();
  Trajectory traj;
  traj.snaps.push_back(init);
  traj.snap_times.push_back(init.t);
  if (sc.t_end <= 0) return traj;

  ElsasserState state = init;
  double t0 = init.t;
  double next_snap = t0 + sc.snapshot_cadence;
  long stepno = 0;
  // normalization for the relative divergence log entry, refreshed per snapshot
  double gradmax = 0.0;
  auto refresh_gradmax = [&]() {
    gradmax = 0.0;
    for (const VectorField* z : {&state.zp, &state.zm})
      for (int c = 0; c < 3; ++c)
        for (int a = 0; a < 3; ++a)
          gradmax = std::max(gradmax, max_abs(deriv_phys(z->comp[c], a).v));
  };
  refresh_gradmax();

  while (state.t < t0 + sc.t_end - 1e-12) {
    double dt;
    if (replay_dts) {
      if (stepno >= long(replay_dts->size()))
        throw std::runtime_error("run: replay dt sequence exhausted");
      dt = (*replay_dts)[stepno];
    } else {
      dt = cfl_dt(state, sc.cfl);
      dt = std::min(dt, next_snap - state.t);
      dt = std::min(dt, t0 + sc.t_end - state.t);
    }
    try {
      state = step(state, dt);
    } catch (const std::exception& e) {
      traj.blew_up = true;
      traj.abort_reason = e.what();
      break;
    }
    ++stepno;
    traj.dts.push_back(dt);
    double dmax = std::max(max_abs(divergence(state.zp).v),
                           max_abs(divergence(state.zm).v));
    StepRecord rec;
    rec.step = stepno;
    rec.t = state.t;
    rec.dt = dt;
    rec.energy = l2_norm_sq(state.zp) + l2_norm_sq(state.zm);
    rec.div_rel = gradmax > 0 ? dmax / gradmax : dmax;
    traj.log.push_back(rec);
    if (std::abs(state.t - next_snap) < 1e-10) {
      traj.snaps.push_back(state);
      traj.snap_times.push_back(state.t);
      next_snap += sc.snapshot_cadence;
      refresh_gradmax();
    }
  }
  return traj;
}

}  // namespace slabmhd
