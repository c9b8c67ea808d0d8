#pragma once

#include <utility>
#include <vector>

#include "slabmhd/integrator.hpp"

namespace slabmhd {

enum class Sign { Plus, Minus };
enum class Part { Full, Horizontal, Vertical, D3 };

// E_+/-^{(alpha_h, l)}: || <u_mp>^{1+sigma} d_h^{alpha_h} d_3^l z ||^2 over
// the slab, with the weight evaluated on the unwrapped torus coordinate.
// Part::D3 measures the field d_3 z. Quadrature is the collocation sum
// (exact rectangle rule horizontally, trapezoid over the periodic extension
// vertically).
double weighted_energy_alpha(const ElsasserState& s, Sign sign, int a1, int a2,
                             int l, Part part);
// sum over |alpha_h| = k
double weighted_energy(const ElsasserState& s, Sign sign, int k, int l, Part part);

/// Per-(sign, k, l, part) weighted energies at one time.
struct EnergyReport {
  double t = 0.0;
  double sigma = 0.0;
  int max_order = 4;  // reports cover k + l <= max_order
  std::vector<double> values;  // indexed by report_index()

  static int report_index(int max_order, Sign sign, int k, int l, Part part);
  double E(Sign sign, int k, int l, Part part) const {
    return values[report_index(max_order, sign, k, l, part)];
  }
};

EnergyReport energy_report(const ElsasserState& s, int max_order);

/// Accumulates F_+/-^{(k,l)} by trapezoidal time quadrature between
/// snapshots; the integrand <u_mp>^{2(1+sigma)}/<u_pm>^{1+sigma} |d z|^2 is
/// non-negative so the running values never decrease.
class FluxAccumulator {
 public:
  explicit FluxAccumulator(int max_order) : max_order_(max_order) {}

  void add_snapshot(const ElsasserState& s);  // throws on out-of-order times

  double F(Sign sign, int k, int l) const;
  double last_time() const { return last_t_; }
  int max_order() const { return max_order_; }

 private:
  int max_order_;
  bool started_ = false;
  double last_t_ = 0.0;
  std::vector<double> last_integrand_, acc_;
};

// The delta-weighted total of Theorem 1.1: delta^{2(l-1/2)} on z and d3 z
// terms, delta^{-3} on the z^3 terms (desk-scale order cap from the report).
double total_energy_functional(const EnergyReport& r, double delta);

// M_delta f: vertical average over the slab, returned as an nx*ny plane.
std::vector<double> mean_project(const ScalarField& f);
ScalarField broadcast_plane(const GridPtr& g, const std::vector<double>& plane,
                            Parity parity = Parity::Even);

struct MeanPair {
  std::vector<double> c1, c2;  // vertical averages of the horizontal comps
};

struct Decomposition {
  MeanPair zbar_p, zbar_m;
  ElsasserState w;  // w^h = z^h - zbar^h, w^3 = z^3
};

Decomposition decompose(const ElsasserState& s);
ElsasserState reassemble(const Decomposition& d);

// 2D weighted energy E_{+/-,h}^{(k)} of an nx*ny plane on the horizontal
// torus (weights from the 3D grid's sigma and the given time).
double horizontal_energy_plane(const Grid& g, const std::vector<double>& plane,
                               Sign sign, int k, double t);
// per-slice variant for slab fields; slice < 0 takes the sup over slices
double horizontal_energy_slice(const ScalarField& f, Sign sign, int k, double t,
                               int slice);

// E^{(k,0)}(z^3) / (delta * E^{(k+1,0)}(z^h)) for one sign (z^3-gain check).
double zgain_ratio(const ElsasserState& s, Sign sign, int k);

// fraction of |z_+|^2 + |z_-|^2 outside |x1| <= Lx/2 (run-health metric)
double envelope_outside_fraction(const ElsasserState& s);

struct FluxIdentityReport {
  double spacetime;       // sqrt(2) * direct spacetime quadrature
  double characteristic;  // reparameterized over (u, tau, x2, x3) bins
  double rel_diff;
};

// Two-route evaluation of the characteristic-surface flux identity for
// |f| = |z_pm| along the trajectory's snapshots (uniform cadence; u-bin
// width equals the cadence).
FluxIdentityReport flux_surface_identity_check(const Trajectory& traj, Sign sign);

}  // namespace slabmhd
