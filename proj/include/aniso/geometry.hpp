#pragma once

#include <Eigen/Dense>
#include <vector>

#include "aniso/field.hpp"

namespace aniso {

// Point split into the nondegenerate block x' (s coords) and the singular
// block x'' (N-s coords).
struct SplitPoint {
  Eigen::VectorXd prime;
  Eigen::VectorXd doubleprime;

  int dim() const { return static_cast<int>(prime.size() + doubleprime.size()); }
  int split() const { return static_cast<int>(prime.size()); }
  Eigen::VectorXd full() const;
  static SplitPoint of(const Eigen::VectorXd& x, int s);
};

// Intrinsic cylinder B_theta(x') x B_rho(x'') with Euclidean block balls.
struct Polydisc {
  SplitPoint center;
  double theta = 1;
  double rho = 1;

  Polydisc() = default;
  Polydisc(SplitPoint c, double theta_, double rho_);

  // Strict membership: |x'-c'| < theta and |x''-c''| < rho.
  bool contains(const Eigen::VectorXd& x) const;
};

// max{ |x'-y'|^{2/p} M^{-2/p}, |x''-y''| }. The prime component satisfies
// the triangle inequality only up to 2^{2/p-1}; the doubleprime component
// is a metric.
struct QuasiMetric {
  double M = 1;
  double p = 1.5;
  double gamma_q = 1;  // 2^{2/p-1}

  QuasiMetric() = default;
  QuasiMetric(double M_, double p_);
};

double d_M(const SplitPoint& x, const SplitPoint& y, const QuasiMetric& q);

// The d_M-ball of radius rho is exactly the polydisc with theta = rho^{p/2} M.
Polydisc quasimetric_ball(const SplitPoint& center, double rho, const QuasiMetric& q);

// Anisotropic distance between finite point sets:
//   min over pairs of |x'-y'|^{2/p} uinf^{(p-2)/p} + |x''-y''|.
double twop_dist(const std::vector<Eigen::VectorXd>& K,
                 const std::vector<Eigen::VectorXd>& boundary, double uinf, double p,
                 int s);

struct RegionStats {
  double sup = 0;
  double inf = 0;
  double osc = 0;
  double mean = 0;
  double measure = 0;  // node count * cell volume
  Index nodes = 0;
  bool clipped = false;  // region bounding box extends beyond the grid box
};

// Statistics over grid nodes inside the polydisc. Throws if no node falls
// inside the region.
RegionStats region_stats(const ScalarField& field, const Polydisc& region);

// Cell-counting measure of {u <= level} (or {u < level} when strict) within
// the region.
double sublevel_measure(const ScalarField& field, const Polydisc& region, double level,
                        bool strict = false);

// Whether the polydisc lies inside the grid box (block balls included).
bool polydisc_contained(const Grid& grid, const Polydisc& region);

// Measure of the n-dimensional Euclidean unit ball, for continuum
// cross-checks of the cell-counted measures.
double unit_ball_volume(int n);

// All grid nodes inside the polydisc, as flat indices.
std::vector<Index> nodes_in_polydisc(const Grid& grid, const Polydisc& region);

}  // namespace aniso
