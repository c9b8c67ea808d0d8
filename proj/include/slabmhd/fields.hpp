#pragma once

#include <array>
#include <string>

#include "slabmhd/grid.hpp"

namespace slabmhd {

/// Three-component field with the slab parities (even, even, odd), so the
/// vertical component vanishes at the walls by construction.
struct VectorField {
  std::array<ScalarField, 3> comp;

  VectorField() = default;
  explicit VectorField(const GridPtr& g)
      : comp{ScalarField(g, Parity::Even), ScalarField(g, Parity::Even),
             ScalarField(g, Parity::Odd)} {}

  const GridPtr& grid() const { return comp[0].grid; }
};

struct ElsasserState {
  VectorField zp;  // z_+
  VectorField zm;  // z_-
  double t = 0.0;

  ElsasserState() = default;
  explicit ElsasserState(const GridPtr& g) : zp(g), zm(g) {}
  const GridPtr& grid() const { return zp.grid(); }
};

// z_+ = (v + b) - B0, z_- = (v - b) + B0 with B0 = e1. Throws if v or b
// violate the divergence / wall invariants beyond tol.
ElsasserState elsasser_from_vb(const VectorField& v, const VectorField& b,
                               double tol = 1e-8);
void vb_from_elsasser(const ElsasserState& s, VectorField& v, VectorField& b);

// Leray projection onto spectrally divergence-free fields on the extended
// box; preserves component parities.
VectorField project_divfree(const VectorField& z);

ScalarField divergence(const VectorField& z);
// max |div z| over the grid, relative to max |grad z| (0 if z == 0)
double divergence_rel(const VectorField& z);

VectorField curl(const VectorField& z);  // output parities (odd, odd, even)

double max_norm(const VectorField& z);
double l2_norm_sq(const VectorField& z);  // unweighted integral of |z|^2

// state algebra used by the integrator and the initial-data families
VectorField axpy(double a, const VectorField& x, const VectorField& y);
ElsasserState axpy(double a, const ElsasserState& x, const ElsasserState& y);

enum class InitialFamily { Sheet, Tube, Lifted2D };

InitialFamily initial_family_from_string(const std::string& s);

struct InitialParams {
  InitialFamily family = InitialFamily::Sheet;
  double epsilon = 1e-3;     // sup-norm amplitude of each wave
  double width_x = 1.0;      // horizontal envelope widths
  double width_y = 0.8;
  int carrier_mode = 2;      // packet carrier, wavenumber carrier_mode*pi/Lx
  int vertical_mode = 1;     // m: vertical half-wave index (tube family)
  double center_plus = 1.0;  // x1 packet centers
  double center_minus = -1.0;
  double eta = 0.0;          // lifted2d: tube admixture coefficient
};

// Divergence-free, boundary-compatible initial data built from stream
// functions / vector potentials. Throws if the envelope does not fit on the
// torus.
ElsasserState make_initial(const GridPtr& g, const InitialParams& p);

// Periodic Gaussian-enveloped packet stream function, shared with the 2D
// solver: env(x1 - c) * env(x2) * cos(k0 (x1 - c)).
double packet_stream(double x1, double x2, double Lx, double Ly, double center,
                     double wx, double wy, int mode);

}  // namespace slabmhd
