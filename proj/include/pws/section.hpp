#pragma once

#include <map>
#include <optional>

#include "pws/grid.hpp"
#include "pws/level3.hpp"

namespace pws {

// Finite Fourier series over K-types: finitely many components mu, each a
// Level3Vector with source mu and the section's common target list.
class Level2Section {
 public:
  Level2Section() = default;  // zero section with no declared targets

  static Level2Section assemble(const std::vector<Level3Vector>& components,
                                std::optional<std::vector<KType>> targets = std::nullopt);

  const std::vector<KType>& targets() const { return targets_; }
  const std::map<KType, Level3Vector>& components() const { return components_; }

  bool is_zero() const {
    for (const auto& [mu, v] : components_)
      if (!v.is_zero()) return false;
    return true;
  }

  int rank() const {
    if (!targets_.empty()) return targets_[0].rank();
    if (!components_.empty()) return components_.begin()->first.rank();
    return 1;
  }

  // largest |mu_f| over stored components and factors (0 when empty)
  int max_weight() const {
    int w = 0;
    for (const auto& [mu, v] : components_)
      for (int f = 0; f < mu.rank(); ++f) w = std::max(w, std::abs(mu.weight(f)));
    return w;
  }

  Level2Section without(const KType& mu) const;  // drop one component

 private:
  std::vector<KType> targets_;
  std::map<KType, Level3Vector> components_;
};

// entry i = sum_mu h_{mu,i}(lambda^2) q_{mu,m_i}(lambda) e^{-i mu.theta}
std::vector<std::complex<double>> evaluate(const Level2Section& s,
                                           std::span<const std::complex<double>> lambda,
                                           std::span<const double> theta);

// componentwise Level-3 apply per mu
Level2Section apply_operator_level2(const Level3Operator& p, const Level2Section& s);

// sup over (lambda grid) x (theta samples) of
//   weight(lambda; r, weight_exponent) * max_i | sum_mu scale(mu) w_{mu,i}(lambda) e^{-i mu.theta} |
// theta_samples_per_factor must exceed twice the largest |mu_f| for the
// discrete Fourier bound to be exact; <= 0 picks that automatically.
double section_sup_norm(const Level2Section& s, double r, double weight_exponent,
                        const std::function<double(const KType&)>& mu_scale,
                        const SampleGrid& grid, int theta_samples_per_factor = 0);
double section_sup_norm_serial(const Level2Section& s, double r, double weight_exponent,
                               const std::function<double(const KType&)>& mu_scale,
                               const SampleGrid& grid, int theta_samples_per_factor = 0);

// norm of the order-th theta derivative: component mu scales by |mu|^order,
// weight exponent becomes N + order/2
double derivative_sup_norm(const Level2Section& s, const NormSpec& spec, int order,
                           const SampleGrid& grid);
double derivative_sup_norm_serial(const Level2Section& s, const NormSpec& spec, int order,
                                  const SampleGrid& grid);

}  // namespace pws
