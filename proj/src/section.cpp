#include "pws/section.hpp"

#include <cmath>
#include <numbers>

namespace pws {

Level2Section Level2Section::assemble(const std::vector<Level3Vector>& components,
                                      std::optional<std::vector<KType>> targets) {
  Level2Section s;
  if (targets) s.targets_ = std::move(*targets);
  for (const auto& v : components) {
    for (const auto& c : v.components)
      if (c.source != v.ktype)
        throw std::invalid_argument("Level2Section: component with mixed sources");
    if (s.targets_.empty() && s.components_.empty()) {
      s.targets_ = v.targets();
    } else if (v.targets() != s.targets_) {
      throw std::invalid_argument("Level2Section: inconsistent targets across components");
    }
    if (!s.components_.emplace(v.ktype, v).second)
      throw std::invalid_argument("Level2Section: duplicate component for mu = " + v.ktype.str());
  }
  return s;
}

Level2Section Level2Section::without(const KType& mu) const {
  Level2Section s;
  s.targets_ = targets_;
  for (const auto& [k, v] : components_)
    if (k != mu) s.components_.emplace(k, v);
  return s;
}

namespace {

// precomputed lambda-polynomials w_{mu,i}(lambda) = h_{mu,i}(lambda^2) q_{mu,m_i}(lambda)
struct ExpandedSection {
  std::vector<KType> mus;
  std::vector<std::vector<LambdaPoly>> polys;  // [component][target]
  int n_targets = 0;
  int rank = 1;

  explicit ExpandedSection(const Level2Section& s) {
    rank = s.rank();
    n_targets = static_cast<int>(s.targets().size());
    for (const auto& [mu, v] : s.components()) {
      mus.push_back(mu);
      std::vector<LambdaPoly> row;
      row.reserve(v.components.size());
      for (const auto& c : v.components) {
        if (c.h.is_zero())
          row.push_back(LambdaPoly::zero(rank));
        else
          row.push_back(expand_even(c.h) * q_poly(c.source, c.target).poly);
      }
      polys.push_back(std::move(row));
    }
  }
};

std::complex<double> phase(const KType& mu, std::span<const double> theta) {
  double dot = 0.0;
  for (int f = 0; f < mu.rank(); ++f) dot += mu.weight(f) * theta[f];
  return std::polar(1.0, -dot);  // e^{-i mu.theta}
}

// shared body of the serial/parallel section norms
template <bool Parallel>
double section_norm_impl(const Level2Section& s, double r, double weight_exponent,
                         const std::function<double(const KType&)>& mu_scale,
                         const SampleGrid& grid, int theta_samples_per_factor) {
  if (s.components().empty()) return 0.0;
  const ExpandedSection ex(s);
  const int d = ex.rank;
  int t_per = theta_samples_per_factor;
  if (t_per <= 0) t_per = 2 * s.max_weight() + 9;
  long t_total = 1;
  for (int f = 0; f < d; ++f) t_total *= t_per;

  std::vector<double> scales;
  scales.reserve(ex.mus.size());
  for (const auto& mu : ex.mus) scales.push_back(mu_scale(mu));

  const long total = grid.total_points();
  const int ncomp = static_cast<int>(ex.mus.size());
  double best = 0.0;
#pragma omp parallel for reduction(max : best) schedule(static) if (Parallel)
  for (long flat = 0; flat < total; ++flat) {
    const std::vector<std::complex<double>> z = grid.point(flat);
    const double w = grid_weight(z, r, weight_exponent);
    // component values at this lambda, entering every theta sample
    std::vector<std::complex<double>> vals(static_cast<size_t>(ncomp) * ex.n_targets);
    for (int c = 0; c < ncomp; ++c)
      for (int i = 0; i < ex.n_targets; ++i)
        vals[static_cast<size_t>(c) * ex.n_targets + i] = scales[c] * ex.polys[c][i].eval(z);
    std::vector<double> theta(d);
    for (long tf = 0; tf < t_total; ++tf) {
      long rem = tf;
      for (int f = d - 1; f >= 0; --f) {
        theta[f] = 2.0 * std::numbers::pi * (rem % t_per) / t_per;
        rem /= t_per;
      }
      double mod = 0.0;
      for (int i = 0; i < ex.n_targets; ++i) {
        std::complex<double> acc = 0.0;
        for (int c = 0; c < ncomp; ++c)
          acc += vals[static_cast<size_t>(c) * ex.n_targets + i] * phase(ex.mus[c], theta);
        mod = std::max(mod, std::abs(acc));
      }
      best = std::max(best, w * mod);
    }
  }
  return best;
}

}  // namespace

std::vector<std::complex<double>> evaluate(const Level2Section& s,
                                           std::span<const std::complex<double>> lambda,
                                           std::span<const double> theta) {
  const int n = static_cast<int>(s.targets().size());
  std::vector<std::complex<double>> out(n, 0.0);
  if (static_cast<int>(lambda.size()) != s.rank() && !s.components().empty())
    throw std::invalid_argument("evaluate: lambda dimension mismatch");
  if (static_cast<int>(theta.size()) != s.rank() && !s.components().empty())
    throw std::invalid_argument("evaluate: theta dimension mismatch");
  for (const auto& [mu, v] : s.components()) {
    const std::complex<double> ph = phase(mu, theta);
    for (int i = 0; i < n; ++i) {
      const auto& c = v.components[i];
      if (c.h.is_zero()) continue;
      const LambdaPoly full = expand_even(c.h) * q_poly(c.source, c.target).poly;
      out[i] += full.eval(lambda) * ph;
    }
  }
  return out;
}

Level2Section apply_operator_level2(const Level3Operator& p, const Level2Section& s) {
  if (s.targets() != p.sources())
    throw std::invalid_argument("apply_operator_level2: section targets must match operator sources");
  std::vector<Level3Vector> out;
  out.reserve(s.components().size());
  for (const auto& [mu, v] : s.components()) out.push_back(apply(p, v));
  return Level2Section::assemble(out, p.targets());
}

double section_sup_norm(const Level2Section& s, double r, double weight_exponent,
                        const std::function<double(const KType&)>& mu_scale,
                        const SampleGrid& grid, int theta_samples_per_factor) {
  return section_norm_impl<true>(s, r, weight_exponent, mu_scale, grid,
                                 theta_samples_per_factor);
}

double section_sup_norm_serial(const Level2Section& s, double r, double weight_exponent,
                               const std::function<double(const KType&)>& mu_scale,
                               const SampleGrid& grid, int theta_samples_per_factor) {
  return section_norm_impl<false>(s, r, weight_exponent, mu_scale, grid,
                                  theta_samples_per_factor);
}

namespace {

double mu_abs(const KType& mu) {
  double s = 0.0;
  for (int f = 0; f < mu.rank(); ++f) s += static_cast<double>(mu.weight(f)) * mu.weight(f);
  return std::sqrt(s);
}

}  // namespace

double derivative_sup_norm(const Level2Section& s, const NormSpec& spec, int order,
                           const SampleGrid& grid) {
  if (order < 0) throw std::invalid_argument("derivative_sup_norm: order must be >= 0");
  return section_sup_norm(
      s, spec.r, spec.N + order / 2.0,
      [order](const KType& mu) { return std::pow(mu_abs(mu), order); }, grid);
}

double derivative_sup_norm_serial(const Level2Section& s, const NormSpec& spec, int order,
                                  const SampleGrid& grid) {
  if (order < 0) throw std::invalid_argument("derivative_sup_norm: order must be >= 0");
  return section_sup_norm_serial(
      s, spec.r, spec.N + order / 2.0,
      [order](const KType& mu) { return std::pow(mu_abs(mu), order); }, grid);
}

}  // namespace pws
