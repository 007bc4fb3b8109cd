#include "pws/grid.hpp"

#include <cmath>
#include <memory>

namespace pws {

double grid_weight(std::span<const std::complex<double>> lambda, double r, double exponent) {
  double abs2 = 0.0, re2 = 0.0;
  for (const auto& z : lambda) {
    abs2 += std::norm(z);
    re2 += z.real() * z.real();
  }
  return std::pow(1.0 + abs2, -exponent) * std::exp(-r * std::sqrt(re2));
}

namespace {

double sample_value(const Evaluator& phi, const SampleGrid& grid, long flat, double r,
                    double exponent) {
  const std::vector<std::complex<double>> z = grid.point(flat);
  double mod = 0.0;
  for (const auto& c : phi(z)) mod = std::max(mod, std::abs(c));
  return grid_weight(z, r, exponent) * mod;
}

}  // namespace

double weighted_sup_norm_general_serial(const Evaluator& phi, double r, double weight_exponent,
                                        const SampleGrid& grid) {
  const long total = grid.total_points();
  double best = 0.0;
  for (long flat = 0; flat < total; ++flat)
    best = std::max(best, sample_value(phi, grid, flat, r, weight_exponent));
  return best;
}

double weighted_sup_norm_general(const Evaluator& phi, double r, double weight_exponent,
                                 const SampleGrid& grid) {
  const long total = grid.total_points();
  double best = 0.0;
#pragma omp parallel for reduction(max : best) schedule(static)
  for (long flat = 0; flat < total; ++flat)
    best = std::max(best, sample_value(phi, grid, flat, r, weight_exponent));
  return best;
}

double weighted_sup_norm(const Evaluator& phi, const NormSpec& spec, const SampleGrid& grid) {
  return weighted_sup_norm_general(phi, spec.r, spec.N, grid);
}

double weighted_sup_norm_serial(const Evaluator& phi, const NormSpec& spec,
                                const SampleGrid& grid) {
  return weighted_sup_norm_general_serial(phi, spec.r, spec.N, grid);
}

Evaluator make_evaluator(const Level3Vector& v) {
  auto full = std::make_shared<std::vector<LambdaPoly>>();
  for (const auto& c : v.components) {
    if (c.h.is_zero()) {
      full->push_back(LambdaPoly::zero(c.h.nvars()));
    } else {
      full->push_back(expand_even(c.h) * q_poly(c.source, c.target).poly);
    }
  }
  return [full](std::span<const std::complex<double>> z) {
    std::vector<std::complex<double>> out;
    out.reserve(full->size());
    for (const auto& p : *full) out.push_back(p.eval(z));
    return out;
  };
}

Evaluator make_evaluator(const LambdaPoly& p) {
  auto pp = std::make_shared<LambdaPoly>(p);
  return [pp](std::span<const std::complex<double>> z) {
    return std::vector<std::complex<double>>{pp->eval(z)};
  };
}

}  // namespace pws
