#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

namespace aniso {

using Index = std::int64_t;

// Rectangular node-centered grid with uniform per-axis spacing. Axes are
// split: the first `split` axes are the nondegenerate (prime) block, the
// rest the singular (doubleprime) block. Flat indexing is row-major with
// the last axis fastest.
struct Grid {
  Eigen::VectorXi dims;     // nodes per axis, each >= 2
  Eigen::VectorXd spacing;  // h_i > 0
  Eigen::VectorXd origin;   // coordinates of node (0,...,0)
  int split = 1;            // s

  Grid() = default;
  Grid(Eigen::VectorXi dims, Eigen::VectorXd spacing, Eigen::VectorXd origin, int split);

  int ndim() const { return static_cast<int>(dims.size()); }
  Index node_count() const;
  double cell_volume() const { return spacing.prod(); }

  // Axis-aligned bounding box of the node set.
  Eigen::VectorXd box_min() const { return origin; }
  Eigen::VectorXd box_max() const;

  Eigen::VectorXi unflatten(Index flat) const;
  Index flatten(const Eigen::VectorXi& multi) const;
  Eigen::VectorXd node_coord(const Eigen::VectorXi& multi) const;
  Eigen::VectorXd node_coord(Index flat) const { return node_coord(unflatten(flat)); }

  bool is_boundary(const Eigen::VectorXi& multi) const;
  bool is_interior(const Eigen::VectorXi& multi) const;

  // Flat indices of all boundary nodes, ascending.
  std::vector<Index> boundary_nodes() const;

  // Nearest node to a coordinate, clamped into range.
  Eigen::VectorXi nearest_node(const Eigen::VectorXd& x) const;

  bool same_layout(const Grid& other) const;
};

// Uniform grid over the box [lo, hi]^N given nodes per axis.
Grid make_uniform_grid(int N, int nodes_per_axis, double lo, double hi, int split);
Grid make_grid_on_box(const Eigen::VectorXi& dims, const Eigen::VectorXd& lo,
                      const Eigen::VectorXd& hi, int split);

struct ScalarField {
  Grid grid;
  Eigen::ArrayXd values;  // one per node, row-major (last axis fastest)

  ScalarField() = default;
  ScalarField(Grid g, Eigen::ArrayXd v);
  static ScalarField constant(const Grid& g, double c);
  // Sample an analytic function at the nodes.
  static ScalarField sample(const Grid& g,
                            const std::function<double(const Eigen::VectorXd&)>& f);

  double operator()(const Eigen::VectorXi& multi) const {
    return values[grid.flatten(multi)];
  }
  double& operator()(const Eigen::VectorXi& multi) {
    return values[grid.flatten(multi)];
  }

  double min() const { return values.minCoeff(); }
  double max() const { return values.maxCoeff(); }
  double sup_norm() const { return values.abs().maxCoeff(); }
};

// Multilinear interpolation at an arbitrary point of the grid box.
// Throws if x lies outside the box (beyond a relative 1e-12 slack).
double interpolate(const ScalarField& field, const Eigen::VectorXd& x);

// Face-centered forward difference along `axis` (0-based): values live on a
// grid with dims[axis]-1 nodes, origin shifted by spacing/2 along the axis.
ScalarField partial(const ScalarField& field, int axis);

enum class TruncSign { Plus, Minus };

// (u-k)_+ = max(u-k, 0); (u-k)_- = max(k-u, 0). Both are nonnegative.
ScalarField truncate(const ScalarField& field, double k, TruncSign sign);

// Dirichlet data: one value per boundary node, ordered by ascending flat
// node index (the order of Grid::boundary_nodes).
struct BoundaryData {
  Eigen::ArrayXd values;

  static BoundaryData from_function(const Grid& g,
                                    const std::function<double(const Eigen::VectorXd&)>& f);
  // Rows of (flat boundary-node index, value); every boundary node must be
  // covered exactly once.
  static BoundaryData from_csv(const Grid& g, const std::string& path);

  double min() const { return values.minCoeff(); }
  double max() const { return values.maxCoeff(); }
};

// Writes bc onto the boundary nodes of a field.
void apply_boundary(ScalarField& field, const BoundaryData& bc);

}  // namespace aniso
