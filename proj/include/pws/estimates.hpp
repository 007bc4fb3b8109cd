#pragma once

#include <complex>
#include <functional>

#include "pws/section.hpp"
#include "pws/solver.hpp"

namespace pws {

// All checks here are sampled evidence: margins are reported, inequalities
// are judged against an absolute tolerance, and nothing is claimed proven.

inline constexpr double kMarginTolerance = 1e-9;

struct MaxPrincipleReport {
  double lhs = 0.0;     // |f(lambda0)|
  double rhs = 0.0;     // |a_k|^{-1} max over circle of |f p|
  double margin = 0.0;  // rhs - lhs
  bool holds = false;   // margin >= -tolerance
  std::complex<double> witness;  // circle point achieving the max
};

MaxPrincipleReport verify_max_principle(
    const std::function<std::complex<double>(std::complex<double>)>& f, const LambdaPoly& p,
    std::complex<double> lambda0, int circle_samples, double tolerance = kMarginTolerance);

struct LeadingDirection {
  std::vector<std::complex<double>> v;  // unit vector
  double magnitude = 0.0;               // |p_k(v)| where p_k is the top homogeneous part
};

LeadingDirection leading_direction(const LambdaPoly& p);
LeadingDirection leading_direction(const EvenPoly& p);

struct SolutionEstimate {
  bool precondition_ok = false;  // apply(P,u) == apply(P,v) exactly
  double norm_v = 0.0;           // ||v||_{r, N+M}
  double norm_w = 0.0;           // ||P u||_{r, N}
  double ratio = 0.0;            // norm_v / norm_w; 0 when both vanish
  bool denominator_zero = false; // ||P u|| = 0 with ||v|| > 0 (ratio = +inf)
};

SolutionEstimate verify_solution_estimate(const Level3Operator& p, const Level3Vector& u,
                                          const Level3Vector& v, const NormSpec& spec, int m,
                                          const SampleGrid& grid);

struct TailMargin {
  KType mu;
  double lhs = 0.0;     // ||w_mu||_{r, N+p}
  double rhs = 0.0;     // (1+|mu|^2)^{-p} ||Z_p w||_{r, N}
  double margin = 0.0;  // rhs - lhs
};

std::vector<TailMargin> fourier_tail_bound(const Level2Section& w, int p, const NormSpec& spec,
                                           const SampleGrid& grid);

struct LRatioEntry {
  int l = 0;
  double ratio = 0.0;
  double norm_v = 0.0;
  double norm_w = 0.0;
};

struct LUniformity {
  std::vector<LRatioEntry> entries;  // parity-compatible l only
  std::vector<int> skipped;          // incompatible l in the requested range
  double max_ratio = 0.0;
  double median_ratio = 0.0;
  double max_over_median = 0.0;
};

// Constant-tracking experiment: for fixed u-coordinates, sweep l, solve
// P v = P u at each compatible l and record ||v||_{r,N+M} / ||P u||_{r,N}.
// Evidence-level only; the sweep is parallel over l.
LUniformity l_uniformity_experiment(const Level3Operator& p, const std::vector<EvenPoly>& u_h,
                                    int l_min, int l_max, const NormSpec& spec, int m,
                                    const SampleGrid& grid,
                                    Strategy strategy = Strategy::snf_direct);

}  // namespace pws
