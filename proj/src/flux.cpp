#include "aniso/flux.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aniso/rng.hpp"

namespace aniso {

double FluxModel::flux(double xi) const {
  if (epsilon == 0.0) {
    if (xi == 0.0) return 0.0;
    return std::pow(std::abs(xi), p - 2.0) * xi;
  }
  return std::pow(epsilon * epsilon + xi * xi, (p - 2.0) / 2.0) * xi;
}

double FluxModel::flux_prime(double xi) const {
  const double e2 = epsilon * epsilon;
  if (epsilon == 0.0 && xi == 0.0) return std::numeric_limits<double>::infinity();
  return std::pow(e2 + xi * xi, (p - 4.0) / 2.0) * (e2 + (p - 1.0) * xi * xi);
}

double FluxModel::energy_density(double xi) const {
  if (epsilon == 0.0) return std::pow(std::abs(xi), p) / p;
  return (std::pow(epsilon * epsilon + xi * xi, p / 2.0) - std::pow(epsilon, p)) / p;
}

FluxModel prototype_flux(double p, double epsilon) {
  FluxModel f;
  f.p = p;
  f.epsilon = epsilon;
  f.C1 = 1.0;
  f.C2 = 1.0;
  f.C = 0.0;
  return f;
}

StructureCheckReport check_structure(const FluxModel& flux, int samples, std::uint64_t seed) {
  Rng rng(seed);
  StructureCheckReport rep;
  rep.coercivity_margin = std::numeric_limits<double>::infinity();
  rep.growth_margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    // Log-uniform magnitudes cover the singular region and the tails.
    const double mag = std::pow(10.0, rng.uniform(-6.0, 2.0));
    const double xi = rng.uniform() < 0.5 ? mag : -mag;
    const double a = flux.flux(xi);
    const double coer = a * xi - (flux.C1 * std::pow(std::abs(xi), flux.p) - flux.C);
    const double grow = flux.C2 * std::pow(std::abs(xi), flux.p - 1.0) + flux.C - std::abs(a);
    rep.coercivity_margin = std::min(rep.coercivity_margin, coer);
    rep.growth_margin = std::min(rep.growth_margin, grow);
  }
  rep.slack = std::pow(flux.epsilon, flux.p) + 1e-12;
  rep.ok = rep.coercivity_margin >= -rep.slack && rep.growth_margin >= -rep.slack;
  return rep;
}

}  // namespace aniso
