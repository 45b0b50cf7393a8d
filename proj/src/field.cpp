#include "aniso/field.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace aniso {

Grid::Grid(Eigen::VectorXi d, Eigen::VectorXd h, Eigen::VectorXd o, int s)
    : dims(std::move(d)), spacing(std::move(h)), origin(std::move(o)), split(s) {
  const int n = ndim();
  if (n < 1) throw std::invalid_argument("Grid: needs at least one axis");
  if (spacing.size() != n || origin.size() != n)
    throw std::invalid_argument("Grid: dims/spacing/origin size mismatch");
  for (int i = 0; i < n; ++i) {
    if (dims[i] < 2) throw std::invalid_argument("Grid: each axis needs >= 2 nodes");
    if (!(spacing[i] > 0)) throw std::invalid_argument("Grid: spacing must be positive");
  }
  if (split < 1 || split > n - 1)
    throw std::invalid_argument("Grid: split must satisfy 1 <= s <= N-1");
}

Index Grid::node_count() const {
  Index n = 1;
  for (int i = 0; i < ndim(); ++i) n *= dims[i];
  return n;
}

Eigen::VectorXd Grid::box_max() const {
  Eigen::VectorXd hi = origin;
  for (int i = 0; i < ndim(); ++i) hi[i] += spacing[i] * (dims[i] - 1);
  return hi;
}

Eigen::VectorXi Grid::unflatten(Index flat) const {
  const int n = ndim();
  Eigen::VectorXi multi(n);
  for (int i = n - 1; i >= 0; --i) {
    multi[i] = static_cast<int>(flat % dims[i]);
    flat /= dims[i];
  }
  return multi;
}

Index Grid::flatten(const Eigen::VectorXi& multi) const {
  Index flat = 0;
  for (int i = 0; i < ndim(); ++i) flat = flat * dims[i] + multi[i];
  return flat;
}

Eigen::VectorXd Grid::node_coord(const Eigen::VectorXi& multi) const {
  Eigen::VectorXd x(ndim());
  for (int i = 0; i < ndim(); ++i) x[i] = origin[i] + spacing[i] * multi[i];
  return x;
}

bool Grid::is_boundary(const Eigen::VectorXi& multi) const {
  for (int i = 0; i < ndim(); ++i)
    if (multi[i] == 0 || multi[i] == dims[i] - 1) return true;
  return false;
}

bool Grid::is_interior(const Eigen::VectorXi& multi) const { return !is_boundary(multi); }

std::vector<Index> Grid::boundary_nodes() const {
  std::vector<Index> out;
  const Index n = node_count();
  for (Index f = 0; f < n; ++f)
    if (is_boundary(unflatten(f))) out.push_back(f);
  return out;
}

Eigen::VectorXi Grid::nearest_node(const Eigen::VectorXd& x) const {
  Eigen::VectorXi multi(ndim());
  for (int i = 0; i < ndim(); ++i) {
    const double t = (x[i] - origin[i]) / spacing[i];
    int k = static_cast<int>(std::lround(t));
    if (k < 0) k = 0;
    if (k > dims[i] - 1) k = dims[i] - 1;
    multi[i] = k;
  }
  return multi;
}

bool Grid::same_layout(const Grid& other) const {
  return dims == other.dims && spacing == other.spacing && origin == other.origin &&
         split == other.split;
}

Grid make_uniform_grid(int N, int nodes_per_axis, double lo, double hi, int split) {
  Eigen::VectorXi dims = Eigen::VectorXi::Constant(N, nodes_per_axis);
  return make_grid_on_box(dims, Eigen::VectorXd::Constant(N, lo),
                          Eigen::VectorXd::Constant(N, hi), split);
}

Grid make_grid_on_box(const Eigen::VectorXi& dims, const Eigen::VectorXd& lo,
                      const Eigen::VectorXd& hi, int split) {
  const int n = static_cast<int>(dims.size());
  Eigen::VectorXd spacing(n);
  for (int i = 0; i < n; ++i) {
    if (!(hi[i] > lo[i])) throw std::invalid_argument("make_grid_on_box: empty box");
    spacing[i] = (hi[i] - lo[i]) / (dims[i] - 1);
  }
  return Grid(dims, spacing, lo, split);
}

ScalarField::ScalarField(Grid g, Eigen::ArrayXd v) : grid(std::move(g)), values(std::move(v)) {
  if (values.size() != grid.node_count())
    throw std::invalid_argument("ScalarField: value count does not match grid");
  if (!values.isFinite().all())
    throw std::invalid_argument("ScalarField: values must be finite");
}

ScalarField ScalarField::constant(const Grid& g, double c) {
  return ScalarField(g, Eigen::ArrayXd::Constant(g.node_count(), c));
}

ScalarField ScalarField::sample(const Grid& g,
                                const std::function<double(const Eigen::VectorXd&)>& f) {
  Eigen::ArrayXd v(g.node_count());
  for (Index i = 0; i < g.node_count(); ++i) v[i] = f(g.node_coord(i));
  return ScalarField(g, std::move(v));
}

double interpolate(const ScalarField& field, const Eigen::VectorXd& x) {
  const Grid& g = field.grid;
  const int n = g.ndim();
  Eigen::VectorXi base(n);
  Eigen::VectorXd frac(n);
  for (int i = 0; i < n; ++i) {
    double t = (x[i] - g.origin[i]) / g.spacing[i];
    const double slack = 1e-12 * (std::abs(t) + 1.0);
    if (t < -slack || t > g.dims[i] - 1 + slack)
      throw std::invalid_argument("interpolate: point outside grid box");
    t = std::min(std::max(t, 0.0), static_cast<double>(g.dims[i] - 1));
    int k = static_cast<int>(std::floor(t));
    if (k > g.dims[i] - 2) k = g.dims[i] - 2;
    base[i] = k;
    frac[i] = t - k;
  }
  // Accumulate over the 2^n cell corners.
  double acc = 0.0;
  Eigen::VectorXi corner(n);
  for (int mask = 0; mask < (1 << n); ++mask) {
    double w = 1.0;
    for (int i = 0; i < n; ++i) {
      const int bit = (mask >> i) & 1;
      corner[i] = base[i] + bit;
      w *= bit ? frac[i] : 1.0 - frac[i];
    }
    if (w != 0.0) acc += w * field(corner);
  }
  return acc;
}

ScalarField partial(const ScalarField& field, int axis) {
  const Grid& g = field.grid;
  if (axis < 0 || axis >= g.ndim()) throw std::invalid_argument("partial: axis out of range");
  if (g.dims[axis] < 2) throw std::invalid_argument("partial: axis too short");
  Eigen::VectorXi fdims = g.dims;
  fdims[axis] -= 1;
  Eigen::VectorXd forigin = g.origin;
  forigin[axis] += 0.5 * g.spacing[axis];
  Grid face(fdims, g.spacing, forigin, g.split);

  Eigen::ArrayXd out(face.node_count());
  const double inv_h = 1.0 / g.spacing[axis];
  for (Index f = 0; f < face.node_count(); ++f) {
    Eigen::VectorXi m = face.unflatten(f);
    const Index a = g.flatten(m);
    Eigen::VectorXi m2 = m;
    m2[axis] += 1;
    out[f] = (field.values[g.flatten(m2)] - field.values[a]) * inv_h;
  }
  return ScalarField(face, std::move(out));
}

ScalarField truncate(const ScalarField& field, double k, TruncSign sign) {
  Eigen::ArrayXd v = sign == TruncSign::Plus ? (field.values - k).max(0.0)
                                             : (k - field.values).max(0.0);
  return ScalarField(field.grid, std::move(v));
}

BoundaryData BoundaryData::from_function(
    const Grid& g, const std::function<double(const Eigen::VectorXd&)>& f) {
  const auto nodes = g.boundary_nodes();
  BoundaryData bc;
  bc.values.resize(static_cast<Index>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i)
    bc.values[static_cast<Index>(i)] = f(g.node_coord(nodes[i]));
  return bc;
}

BoundaryData BoundaryData::from_csv(const Grid& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open boundary csv: " + path);
  std::map<Index, double> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    Index idx;
    double val;
    if (!(ss >> idx >> val))
      throw std::runtime_error("boundary csv: malformed line: " + line);
    if (rows.count(idx))
      throw std::runtime_error("boundary csv: node covered twice");
    rows[idx] = val;
  }
  const auto nodes = g.boundary_nodes();
  if (rows.size() != nodes.size())
    throw std::runtime_error("boundary csv: does not cover every boundary node exactly once");
  BoundaryData bc;
  bc.values.resize(static_cast<Index>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto it = rows.find(nodes[i]);
    if (it == rows.end())
      throw std::runtime_error("boundary csv: missing boundary node");
    bc.values[static_cast<Index>(i)] = it->second;
  }
  return bc;
}

void apply_boundary(ScalarField& field, const BoundaryData& bc) {
  const auto nodes = field.grid.boundary_nodes();
  if (bc.values.size() != static_cast<Index>(nodes.size()))
    throw std::invalid_argument("apply_boundary: boundary data size mismatch");
  for (std::size_t i = 0; i < nodes.size(); ++i)
    field.values[nodes[i]] = bc.values[static_cast<Index>(i)];
}

}  // namespace aniso
