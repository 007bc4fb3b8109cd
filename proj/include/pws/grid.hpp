#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "pws/level3.hpp"

namespace pws {

// weighted sup-norm parameters: sup of (1+|lambda|^2)^{-N} e^{-r|Re lambda|} ||phi||
struct NormSpec {
  double r = 0.0;  // support radius, >= 0
  int N = 0;       // polynomial weight order, >= 0
};

// uniform grid over [-R_max, R_max]^2 per complex variable
struct SampleGrid {
  double r_max = 10.0;
  int resolution = 101;  // points per real axis
  int dimension = 1;     // number of complex variables

  long total_points() const {
    long n = 1;
    for (int a = 0; a < 2 * dimension; ++a) n *= resolution;
    return n;
  }
  double axis_value(int k) const {
    if (resolution <= 1) return 0.0;
    return -r_max + (2.0 * r_max) * k / (resolution - 1);
  }
  // decode a flat index into a lambda sample (axes ordered Re_1, Im_1, Re_2, ...)
  std::vector<std::complex<double>> point(long flat) const {
    std::vector<std::complex<double>> z(dimension);
    for (int f = dimension - 1; f >= 0; --f) {
      const int im = static_cast<int>(flat % resolution);
      flat /= resolution;
      const int re = static_cast<int>(flat % resolution);
      flat /= resolution;
      z[f] = {axis_value(re), axis_value(im)};
    }
    return z;
  }
};

// deterministic callable lambda -> vector of component values
using Evaluator =
    std::function<std::vector<std::complex<double>>(std::span<const std::complex<double>>)>;

// (1 + sum |lambda_f|^2)^{-exponent} * exp(-r * |Re lambda|)
double grid_weight(std::span<const std::complex<double>> lambda, double r, double exponent);

// sup over the grid of weight * max-component-modulus; `weight_exponent`
// generalizes N to the half-integer exponents of derivative norms
double weighted_sup_norm_general(const Evaluator& phi, double r, double weight_exponent,
                                 const SampleGrid& grid);
double weighted_sup_norm_general_serial(const Evaluator& phi, double r, double weight_exponent,
                                        const SampleGrid& grid);

double weighted_sup_norm(const Evaluator& phi, const NormSpec& spec, const SampleGrid& grid);
double weighted_sup_norm_serial(const Evaluator& phi, const NormSpec& spec,
                                const SampleGrid& grid);

// the full twisted functions phi_j(lambda) = h_j(lambda^2) q_{mu,n_j}(lambda)
Evaluator make_evaluator(const Level3Vector& v);
Evaluator make_evaluator(const LambdaPoly& p);

}  // namespace pws
