#include "aniso/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace aniso {

Eigen::VectorXd SplitPoint::full() const {
  Eigen::VectorXd x(dim());
  x.head(prime.size()) = prime;
  x.tail(doubleprime.size()) = doubleprime;
  return x;
}

SplitPoint SplitPoint::of(const Eigen::VectorXd& x, int s) {
  if (s < 1 || s >= x.size())
    throw std::invalid_argument("SplitPoint: split must satisfy 1 <= s <= N-1");
  return SplitPoint{x.head(s), x.tail(x.size() - s)};
}

Polydisc::Polydisc(SplitPoint c, double theta_, double rho_)
    : center(std::move(c)), theta(theta_), rho(rho_) {
  if (!(theta > 0) || !(rho > 0))
    throw std::invalid_argument("Polydisc: radii must be positive");
}

bool Polydisc::contains(const Eigen::VectorXd& x) const {
  const int s = center.split();
  const double dp = (x.head(s) - center.prime).norm();
  const double dq = (x.tail(x.size() - s) - center.doubleprime).norm();
  return dp < theta && dq < rho;
}

QuasiMetric::QuasiMetric(double M_, double p_) : M(M_), p(p_) {
  if (!(M > 0)) throw std::invalid_argument("QuasiMetric: M must be positive");
  if (!(p > 1.0 && p <= 2.0)) throw std::invalid_argument("QuasiMetric: p must be in (1, 2]");
  gamma_q = std::pow(2.0, 2.0 / p - 1.0);
}

double d_M(const SplitPoint& x, const SplitPoint& y, const QuasiMetric& q) {
  if (x.prime.size() != y.prime.size() || x.doubleprime.size() != y.doubleprime.size())
    throw std::invalid_argument("d_M: mismatched split structure");
  const double dp = (x.prime - y.prime).norm();
  const double dq = (x.doubleprime - y.doubleprime).norm();
  return std::max(std::pow(dp, 2.0 / q.p) * std::pow(q.M, -2.0 / q.p), dq);
}

Polydisc quasimetric_ball(const SplitPoint& center, double rho, const QuasiMetric& q) {
  if (!(rho > 0)) throw std::invalid_argument("quasimetric_ball: rho must be positive");
  return Polydisc(center, std::pow(rho, q.p / 2.0) * q.M, rho);
}

double twop_dist(const std::vector<Eigen::VectorXd>& K,
                 const std::vector<Eigen::VectorXd>& boundary, double uinf, double p,
                 int s) {
  if (K.empty() || boundary.empty())
    throw std::invalid_argument("twop_dist: empty input set");
  if (!(uinf > 0)) throw std::invalid_argument("twop_dist: uinf must be positive");
  const double weight = std::pow(uinf, (p - 2.0) / p);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& x : K) {
    const auto xs = SplitPoint::of(x, s);
    for (const auto& y : boundary) {
      const auto ys = SplitPoint::of(y, s);
      const double dp = (xs.prime - ys.prime).norm();
      const double dq = (xs.doubleprime - ys.doubleprime).norm();
      best = std::min(best, std::pow(dp, 2.0 / p) * weight + dq);
    }
  }
  return best;
}

namespace {

struct IndexBox {
  Eigen::VectorXi lo;
  Eigen::VectorXi hi;  // inclusive
  bool empty = false;
};

// Index bounding box of the polydisc, clamped to the grid.
IndexBox index_box(const Grid& g, const Polydisc& region, bool* clipped) {
  const int n = g.ndim();
  const Eigen::VectorXd c = region.center.full();
  const Eigen::VectorXd box_hi = g.box_max();
  IndexBox b;
  b.lo.resize(n);
  b.hi.resize(n);
  if (clipped) *clipped = false;
  for (int i = 0; i < n; ++i) {
    const double r = i < g.split ? region.theta : region.rho;
    const double xlo = c[i] - r, xhi = c[i] + r;
    if (clipped && (xlo < g.origin[i] - 1e-12 || xhi > box_hi[i] + 1e-12))
      *clipped = true;
    int klo = static_cast<int>(std::ceil((xlo - g.origin[i]) / g.spacing[i]));
    int khi = static_cast<int>(std::floor((xhi - g.origin[i]) / g.spacing[i]));
    klo = std::max(klo, 0);
    khi = std::min(khi, g.dims[i] - 1);
    if (klo > khi) b.empty = true;
    b.lo[i] = klo;
    b.hi[i] = khi;
  }
  return b;
}

// Calls fn(flat) for every node in the box whose coordinate lies inside the
// polydisc, in ascending flat order.
template <typename Fn>
void for_each_member(const Grid& g, const Polydisc& region, const IndexBox& b, Fn&& fn) {
  if (b.empty) return;
  const int n = g.ndim();
  Eigen::VectorXi m = b.lo;
  while (true) {
    const Eigen::VectorXd x = g.node_coord(m);
    if (region.contains(x)) fn(g.flatten(m));
    int i = n - 1;
    for (; i >= 0; --i) {
      if (m[i] < b.hi[i]) {
        ++m[i];
        break;
      }
      m[i] = b.lo[i];
    }
    if (i < 0) break;
  }
}

}  // namespace

std::vector<Index> nodes_in_polydisc(const Grid& grid, const Polydisc& region) {
  std::vector<Index> out;
  const IndexBox b = index_box(grid, region, nullptr);
  for_each_member(grid, region, b, [&](Index f) { out.push_back(f); });
  return out;
}

RegionStats region_stats(const ScalarField& field, const Polydisc& region) {
  const Grid& g = field.grid;
  RegionStats st;
  const IndexBox b = index_box(g, region, &st.clipped);
  double sum = 0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  Index count = 0;
  for_each_member(g, region, b, [&](Index f) {
    const double v = field.values[f];
    sum += v;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    ++count;
  });
  if (count == 0) throw std::invalid_argument("region_stats: empty intersection with grid");
  st.sup = hi;
  st.inf = lo;
  st.osc = hi - lo;
  st.mean = sum / static_cast<double>(count);
  st.nodes = count;
  st.measure = static_cast<double>(count) * g.cell_volume();
  return st;
}

double sublevel_measure(const ScalarField& field, const Polydisc& region, double level,
                        bool strict) {
  const Grid& g = field.grid;
  bool clipped = false;
  const IndexBox b = index_box(g, region, &clipped);
  Index total = 0, below = 0;
  for_each_member(g, region, b, [&](Index f) {
    ++total;
    const double v = field.values[f];
    if (strict ? v < level : v <= level) ++below;
  });
  if (total == 0)
    throw std::invalid_argument("sublevel_measure: empty intersection with grid");
  return static_cast<double>(below) * g.cell_volume();
}

bool polydisc_contained(const Grid& grid, const Polydisc& region) {
  const Eigen::VectorXd c = region.center.full();
  const Eigen::VectorXd lo = grid.box_min();
  const Eigen::VectorXd hi = grid.box_max();
  for (int i = 0; i < grid.ndim(); ++i) {
    const double r = i < grid.split ? region.theta : region.rho;
    if (c[i] - r < lo[i] - 1e-12 || c[i] + r > hi[i] + 1e-12) return false;
  }
  return true;
}

double unit_ball_volume(int n) {
  if (n < 0) throw std::invalid_argument("unit_ball_volume: negative dimension");
  return std::pow(M_PI, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

}  // namespace aniso
