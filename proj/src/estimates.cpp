#include "pws/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace pws {

MaxPrincipleReport verify_max_principle(
    const std::function<std::complex<double>(std::complex<double>)>& f, const LambdaPoly& p,
    std::complex<double> lambda0, int circle_samples, double tolerance) {
  if (p.nvars() != 1) throw std::invalid_argument("verify_max_principle: univariate p only");
  if (p.is_zero()) throw std::domain_error("verify_max_principle: zero polynomial");
  if (circle_samples < 1) throw std::invalid_argument("verify_max_principle: need samples");

  const double ak = std::abs(p.leading_coeff().to_double());
  MaxPrincipleReport rep;
  rep.lhs = std::abs(f(lambda0));
  double best = 0.0;
  for (int j = 0; j < circle_samples; ++j) {
    const std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi * j / circle_samples);
    const std::complex<double> w = lambda0 + z;
    const double val = std::abs(f(w) * p.eval1(w));
    if (val >= best) {
      best = val;
      rep.witness = z;
    }
  }
  rep.rhs = best / ak;
  rep.margin = rep.rhs - rep.lhs;
  rep.holds = rep.margin >= -tolerance;
  return rep;
}

namespace {

// generic leading-direction search on the top homogeneous component
template <class Tag>
LeadingDirection leading_direction_impl(const BasicPoly<Tag>& p) {
  if (p.is_zero()) throw std::domain_error("leading_direction: zero polynomial");
  const int d = p.nvars();
  const int deg = p.degree();
  std::vector<std::pair<std::vector<int>, Rational>> top;
  p.for_each_term([&](const std::vector<int>& e, const Rational& c) {
    int s = 0;
    for (int k : e) s += k;
    if (s == deg) top.emplace_back(e, c);
  });
  const BasicPoly<Tag> pk = BasicPoly<Tag>::from_terms(d, top);

  LeadingDirection out;
  out.v.assign(d, 0.0);
  if (d == 1) {
    out.v[0] = 1.0;
    out.magnitude = std::abs(pk.eval(out.v));
    return out;
  }

  auto consider = [&](const std::vector<std::complex<double>>& v) {
    const double m = std::abs(pk.eval(v));
    if (m > out.magnitude) {
      out.magnitude = m;
      out.v = v;
    }
  };

  if (d == 2) {
    // phase-reduced sphere: v = (cos a, sin a e^{i phi})
    const int na = 64, nphi = 128;
    std::vector<std::complex<double>> v(2);
    for (int ia = 0; ia <= na; ++ia) {
      const double a = (std::numbers::pi / 2) * ia / na;
      for (int ip = 0; ip < nphi; ++ip) {
        const double phi = 2.0 * std::numbers::pi * ip / nphi;
        v[0] = std::cos(a);
        v[1] = std::polar(std::sin(a), phi);
        consider(v);
      }
    }
  }
  // deterministic pseudo-random directions; also the fallback for d > 2 and
  // for the (measure-zero) case where the grid landed on the zero set
  unsigned long long state = 0x9e3779b97f4a7c15ull;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return (state >> 11) * (1.0 / 9007199254740992.0);  // [0,1)
  };
  for (int trial = 0; trial < 4096 && !(out.magnitude > 0.0 && trial >= 512); ++trial) {
    std::vector<std::complex<double>> v(d);
    double norm2 = 0.0;
    for (int k = 0; k < d; ++k) {
      v[k] = {next() - 0.5, next() - 0.5};
      norm2 += std::norm(v[k]);
    }
    if (norm2 == 0.0) continue;
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& c : v) c *= inv;
    consider(v);
  }
  if (!(out.magnitude > 0.0))
    throw std::logic_error("leading_direction: sampling failed to find p_k(v) != 0");
  return out;
}

}  // namespace

LeadingDirection leading_direction(const LambdaPoly& p) { return leading_direction_impl(p); }
LeadingDirection leading_direction(const EvenPoly& p) { return leading_direction_impl(p); }

SolutionEstimate verify_solution_estimate(const Level3Operator& p, const Level3Vector& u,
                                          const Level3Vector& v, const NormSpec& spec, int m,
                                          const SampleGrid& grid) {
  SolutionEstimate est;
  const Level3Vector pu = apply(p, u);
  const Level3Vector pv = apply(p, v);
  est.precondition_ok = (pu == pv);
  if (!est.precondition_ok) {
    est.ratio = std::numeric_limits<double>::quiet_NaN();
    return est;
  }
  est.norm_v = weighted_sup_norm(make_evaluator(v), NormSpec{spec.r, spec.N + m}, grid);
  est.norm_w = weighted_sup_norm(make_evaluator(pu), spec, grid);
  if (est.norm_w == 0.0) {
    if (est.norm_v == 0.0) {
      est.ratio = 0.0;
    } else {
      est.denominator_zero = true;
      est.ratio = std::numeric_limits<double>::infinity();
    }
    return est;
  }
  est.ratio = est.norm_v / est.norm_w;
  return est;
}

std::vector<TailMargin> fourier_tail_bound(const Level2Section& w, int p, const NormSpec& spec,
                                           const SampleGrid& grid) {
  if (p < 0) throw std::invalid_argument("fourier_tail_bound: p must be >= 0");
  std::vector<TailMargin> out;
  if (w.components().empty()) return out;

  // ||Z_p w||_{r,N}: the Casimir weight acts on component mu by (1+|mu|^2)^p
  auto zp_scale = [p](const KType& mu) {
    return std::pow(1.0 + casimir_eigenvalue(mu).to_double(), p);
  };
  const double zp_norm = section_sup_norm(w, spec.r, spec.N, zp_scale, grid);

  for (const auto& [mu, comp] : w.components()) {
    TailMargin t;
    t.mu = mu;
    t.lhs = weighted_sup_norm(make_evaluator(comp), NormSpec{spec.r, spec.N + p}, grid);
    t.rhs = std::pow(1.0 + casimir_eigenvalue(mu).to_double(), -p) * zp_norm;
    t.margin = t.rhs - t.lhs;
    out.push_back(std::move(t));
  }
  return out;
}

LUniformity l_uniformity_experiment(const Level3Operator& p, const std::vector<EvenPoly>& u_h,
                                    int l_min, int l_max, const NormSpec& spec, int m,
                                    const SampleGrid& grid, Strategy strategy) {
  if (p.rank() != 1)
    throw std::invalid_argument("l_uniformity_experiment: rank-1 sweeps only");
  LUniformity rep;
  std::vector<int> candidates;
  for (int l = l_min; l <= l_max; ++l) {
    bool ok = true;
    for (const auto& k : p.sources())
      if (!parity_compatible(KType(l), k)) ok = false;
    for (const auto& k : p.targets())
      if (!parity_compatible(KType(l), k)) ok = false;
    if (ok)
      candidates.push_back(l);
    else
      rep.skipped.push_back(l);
  }

  std::vector<LRatioEntry> entries(candidates.size());
  std::vector<char> valid(candidates.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (size_t idx = 0; idx < candidates.size(); ++idx) {
    const KType l(candidates[idx]);
    const Level3Vector u = Level3Vector::make(l, p.sources(), u_h);
    const Level3Vector w = apply(p, u);
    SolveOptions opt;
    opt.strategy = strategy;
    const SolveReport sol = solve_system(p, w, l, opt);
    if (sol.status != SolveStatus::solved) continue;  // cannot happen: w = P u
    const SolutionEstimate est = verify_solution_estimate(p, u, *sol.solution, spec, m, grid);
    if (!est.precondition_ok || est.denominator_zero || est.norm_w == 0.0) continue;
    entries[idx] = {candidates[idx], est.ratio, est.norm_v, est.norm_w};
    valid[idx] = 1;
  }
  for (size_t idx = 0; idx < candidates.size(); ++idx)
    if (valid[idx]) rep.entries.push_back(entries[idx]);

  if (!rep.entries.empty()) {
    std::vector<double> ratios;
    ratios.reserve(rep.entries.size());
    for (const auto& e : rep.entries) ratios.push_back(e.ratio);
    std::sort(ratios.begin(), ratios.end());
    rep.max_ratio = ratios.back();
    const size_t n = ratios.size();
    rep.median_ratio = n % 2 ? ratios[n / 2] : 0.5 * (ratios[n / 2 - 1] + ratios[n / 2]);
    rep.max_over_median = rep.median_ratio > 0 ? rep.max_ratio / rep.median_ratio
                                               : std::numeric_limits<double>::infinity();
  }
  return rep;
}

}  // namespace pws
