#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slabmhd/fields.hpp"
#include "slabmhd/pressure.hpp"

namespace slabmhd {

struct StepperConfig {
  double cfl = 0.4;               // Courant factor, in (0, 1)
  double t_end = 2.0;
  double snapshot_cadence = 0.1;  // diagnostics / flux quadrature interval

  void validate() const;
};

// Blow-up guard: any field value with magnitude above this, or non-finite,
// aborts the run.
inline constexpr double kBlowupThreshold = 1e6;

struct Tendency {
  VectorField dzp, dzm;
  PressureField p;
};

// dz_+ = d1 z_+ - (z_- . grad) z_+ - grad p,
// dz_- = -d1 z_- - (z_+ . grad) z_- - grad p, both re-projected.
Tendency rhs(const ElsasserState& s);

// dt <= cfl * min(dx,dy,dz) / (1 + max(|z_+|, |z_-|)); the 1 is the unit
// Alfven speed of the background field.
double cfl_dt(const ElsasserState& s, double cfl);

// Classical RK4 with pressure projection inside each stage; the result is
// re-projected. Throws on non-finite or blown-up fields.
ElsasserState step(const ElsasserState& s, double dt);

struct StepRecord {
  long step;
  double t, dt, energy, div_rel;
};

struct Trajectory {
  std::vector<ElsasserState> snaps;  // uniform cadence, snaps.front() at t=0
  std::vector<double> snap_times;
  std::vector<double> dts;  // every accepted step, for paired-run replay
  std::vector<StepRecord> log;
  bool blew_up = false;
  std::string abort_reason;

  const ElsasserState& final_state() const { return snaps.back(); }
};

// Advance to t_end, storing snapshots at the configured cadence (dt is
// clamped so snapshot times are hit exactly). A blow-up aborts the run and
// keeps the last healthy snapshot. If replay_dts is given the step sizes
// are taken from it verbatim (paired 3D/2D runs).
Trajectory run(const ElsasserState& init, const StepperConfig& sc,
               const std::vector<double>* replay_dts = nullptr);

}  // namespace slabmhd
