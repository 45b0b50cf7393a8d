#include "aniso/params.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace aniso {

void StructureParams::validate(bool allow_p_equal_2) const {
  if (N < 2) throw std::invalid_argument("StructureParams: N must be >= 2");
  if (s < 1 || s > N - 1)
    throw std::invalid_argument("StructureParams: s must satisfy 1 <= s <= N-1");
  const bool p_ok = p > 1.0 && (allow_p_equal_2 ? p <= 2.0 : p < 2.0);
  if (!p_ok)
    throw std::invalid_argument(allow_p_equal_2
                                    ? "StructureParams: p must be in (1, 2]"
                                    : "StructureParams: p must be in (1, 2)");
  if (!(C1 > 0) || !(C2 > 0))
    throw std::invalid_argument("StructureParams: C1 and C2 must be positive");
  if (C < 0) throw std::invalid_argument("StructureParams: C must be >= 0");
}

double harmonic_mean(const StructureParams& params) {
  params.validate(/*allow_p_equal_2=*/true);
  const double N = params.N, s = params.s, p = params.p;
  return 2.0 * N * p / (2.0 * (N - s) + p * s);
}

double chi(const StructureParams& params) {
  params.validate(/*allow_p_equal_2=*/true);
  return params.p + (params.N - params.s) * (params.p - 2.0);
}

double lambda_l(const StructureParams& params, double l) {
  if (!(l >= 1.0 && l <= 2.0))
    throw std::invalid_argument("lambda_l: l must be in [1, 2]");
  const double pbar = harmonic_mean(params);
  return params.N * (pbar - 2.0) + l * pbar;
}

bool is_supercritical(const StructureParams& params) {
  return chi(params) > 0.0;
}

double intrinsic_theta(double M, double rho, double p, double delta_bar) {
  if (!(M > 0) || !(rho > 0) || !(delta_bar > 0))
    throw std::invalid_argument("intrinsic_theta: M, rho, delta_bar must be positive");
  if (!(p > 1.0 && p <= 2.0))
    throw std::invalid_argument("intrinsic_theta: p must be in (1, 2]");
  return delta_bar * std::pow(M, (2.0 - p) / 2.0) * std::pow(rho, p / 2.0);
}

ExponentTable exponent_table(const StructureParams& params) {
  ExponentTable t;
  t.pbar = harmonic_mean(params);
  t.pbar_star = t.pbar < params.N
                    ? params.N * t.pbar / (params.N - t.pbar)
                    : std::numeric_limits<double>::infinity();
  t.chi = chi(params);
  t.lambda = [params](double l) { return lambda_l(params, l); };
  return t;
}

IntrinsicScale make_intrinsic_scale(double M, double rho, double p, double delta_bar) {
  if (!(delta_bar > 0 && delta_bar <= 1.0))
    throw std::invalid_argument("make_intrinsic_scale: delta_bar must be in (0, 1]");
  IntrinsicScale s;
  s.M = M;
  s.rho = rho;
  s.delta_bar = delta_bar;
  s.theta = intrinsic_theta(M, rho, p, delta_bar);
  return s;
}

}  // namespace aniso
