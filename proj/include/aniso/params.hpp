#pragma once

#include <functional>

namespace aniso {

// Equation class (N, s, p, C1, C2, C): Laplacian behaviour along the first s
// axes, singular p-growth (1 < p < 2) along the remaining N-s axes.
struct StructureParams {
  int N = 2;       // dimension, >= 2
  int s = 1;       // nondegenerate direction count, 1 <= s <= N-1
  double p = 1.5;  // singular exponent
  double C1 = 1.0;
  double C2 = 1.0;
  double C = 0.0;  // inhomogeneity constant

  // Throws std::invalid_argument on violation. Formula-level callers accept
  // p = 2 for degenerate-limit cross-checks; the solver and the verification
  // pipeline require 1 < p < 2 strictly.
  void validate(bool allow_p_equal_2 = false) const;
};

// Harmonic mean of the exponent tuple (2,...,2,p,...,p): 2Np/(2(N-s)+ps).
// Always in (1, 2], equal to 2 iff p = 2.
double harmonic_mean(const StructureParams& params);

// Supercritical gap p + (N-s)(p-2). Its sign gates the Harnack machinery.
double chi(const StructureParams& params);

// N(pbar-2) + l*pbar for l in [1, 2].
double lambda_l(const StructureParams& params, double l);

// chi > 0. Equivalent to lambda_l(.,1) > 0 and to pbar > 2N/(N+1); the three
// closed forms differ by positive factors only.
bool is_supercritical(const StructureParams& params);

// Intrinsic prime-block radius delta_bar * M^((2-p)/2) * rho^(p/2).
// With delta_bar = 1 and M = sup|u| this is the containment height used to
// decide whether an intrinsic polydisc fits inside the domain.
double intrinsic_theta(double M, double rho, double p, double delta_bar);

struct ExponentTable {
  double pbar = 0;       // harmonic mean
  double pbar_star = 0;  // Sobolev exponent N*pbar/(N-pbar); +inf if pbar >= N
  double chi = 0;
  std::function<double(double)> lambda;  // l in [1,2] -> lambda_l
};

ExponentTable exponent_table(const StructureParams& params);

// Intrinsic cylinder scale: prime radius derived from (M, rho).
struct IntrinsicScale {
  double M = 1;
  double rho = 1;
  double delta_bar = 1;  // in (0, 1]
  double theta = 1;      // delta_bar * M^((2-p)/2) * rho^(p/2)
};

IntrinsicScale make_intrinsic_scale(double M, double rho, double p, double delta_bar);

}  // namespace aniso
