#pragma once

#include <array>
#include <string>
#include <vector>

#include "slabmhd/fields.hpp"

namespace slabmhd {

/// Pressure on the slab: even parity (so the Neumann condition holds
/// structurally) and mean-zero gauge.
struct PressureField {
  ScalarField p;
};

// Source with Delta p = f: f = -(d_i z_+^j)(d_j z_-^i), computed
// pseudo-spectrally with 2/3-rule dealiasing when the grid requests it.
ScalarField pressure_source(const ElsasserState& s);

// Spectral solve of the Neumann problem via the reflection extension:
// p_hat = -f_hat/|k|^2, zero-mode gauge. Throws if the state's parity
// labels are inconsistent (vertical components not vanishing at the walls).
PressureField solve_pressure(const ElsasserState& s);

VectorField gradient(const PressureField& p);

struct GreenEval {
  std::array<double, 3> grad;  // grad_x G_delta(x, y), truncated image series
  double tail_bound;           // analytic remainder bound, <= requested tol
  int kmax;                    // number of image pairs summed
};

// Truncated image series for grad_x G_delta (paper kernel, no horizontal
// periodization). Points may lie on the closed slab |x3| <= delta; x != y.
GreenEval green_grad(const std::array<double, 3>& x,
                     const std::array<double, 3>& y, double delta, double tol);

// Analytic tail majorant after K image pairs (monotone decreasing in K).
double green_tail_bound(double rho, double delta, int K);

struct GreenQuadOptions {
  double tol = 1e-7;          // kernel truncation tolerance per evaluation
  int horizontal_images = 1;  // sum kernel over (2M+1)^2 torus images
};

struct GreenPressureResult {
  std::vector<std::array<double, 3>> grad;
  std::vector<std::string> warnings;
};

// Validation path: trapezoidal quadrature of the image kernel against the
// pseudo-spectral source, with the singular self-cell excluded and replaced
// by the local mean-value correction. Accuracy class 1-2%.
GreenPressureResult grad_pressure_via_green(
    const ElsasserState& s, const std::vector<std::array<double, 3>>& samples,
    const GreenQuadOptions& opt = {});

// Spectral grad p at arbitrary interior points (trig interpolation), used to
// compare against the Green quadrature at the same samples.
std::vector<std::array<double, 3>> grad_pressure_spectral_at(
    const ElsasserState& s, const std::vector<std::array<double, 3>>& samples);

}  // namespace slabmhd
