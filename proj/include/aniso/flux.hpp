#pragma once

#include <cstdint>

namespace aniso {

class Rng;

// Scalar per-direction flux for the singular axes. The prototype is
// A(xi) = |xi|^{p-2} xi, regularized to (eps^2 + xi^2)^{(p-2)/2} xi so that
// the energy density stays C^2 at xi = 0 (the unregularized derivative blows
// up there for p < 2, which stalls Newton-type updates).
struct FluxModel {
  double p = 1.5;
  double epsilon = 1e-8;
  double C1 = 1.0;
  double C2 = 1.0;
  double C = 0.0;

  double flux(double xi) const;
  double flux_prime(double xi) const;
  // Antiderivative of flux with value 0 at xi = 0.
  double energy_density(double xi) const;
};

FluxModel prototype_flux(double p, double epsilon = 1e-8);

struct StructureCheckReport {
  // Worst sampled margins; the structure conditions hold when both are
  // >= -slack for the regularization slack epsilon^p.
  double coercivity_margin = 0;  // min of A(xi) xi - (C1 |xi|^p - C)
  double growth_margin = 0;      // min of C2 |xi|^{p-1} + C - |A(xi)|
  double slack = 0;
  bool ok = false;
};

// Samples the coercivity and growth inequalities on random gradient values.
StructureCheckReport check_structure(const FluxModel& flux, int samples, std::uint64_t seed);

}  // namespace aniso
