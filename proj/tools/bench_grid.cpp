// Benchmark: serial vs OpenMP grid kernels for weighted sup-norms.
#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pws/grid.hpp"
#include "pws/ktype.hpp"
#include "pws/section.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

pws::Level2Section demo_section(int mu_max) {
  std::vector<pws::Level3Vector> comps;
  const std::vector<pws::KType> targets{pws::KType(0), pws::KType(2)};
  for (int mu = -mu_max; mu <= mu_max; mu += 2) {
    std::vector<pws::EvenPoly> h;
    h.push_back(pws::EvenPoly::from_coeffs({pws::Rational(1, 1 + std::abs(mu))}));
    h.push_back(pws::EvenPoly::from_coeffs({pws::Rational(0), pws::Rational(1, 2)}));
    comps.push_back(pws::Level3Vector::make(pws::KType(mu), targets, h));
  }
  return pws::Level2Section::assemble(comps, targets);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both columns run the serial kernel\n");
#endif

  const pws::NormSpec spec{0.5, 2};

  // Plain weighted sup-norm of a single evaluator over a 1-D complex grid.
  const pws::LambdaPoly f =
      pws::LambdaPoly::from_coeffs({pws::Rational(1), pws::Rational(0), pws::Rational(1)});
  const pws::Evaluator ev = pws::make_evaluator(f);
  std::printf("\nweighted_sup_norm (quadratic symbol, r=%.1f, N=%d)\n", spec.r, spec.N);
  std::printf("%10s %12s %12s %9s\n", "points", "serial (s)", "parallel (s)", "speedup");
  for (int res : {201, 401, 801, 1601}) {
    pws::SampleGrid grid;
    grid.resolution = res;
    auto t0 = Clock::now();
    const double a = pws::weighted_sup_norm_serial(ev, spec, grid);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    const double b = pws::weighted_sup_norm(ev, spec, grid);
    const double tp = seconds_since(t0);
    if (a != b) {
      std::printf("MISMATCH at res %d: %.17g vs %.17g\n", res, a, b);
      return 1;
    }
    std::printf("%10lld %12.4f %12.4f %8.2fx\n",
                static_cast<long long>(grid.total_points()), ts, tp, ts / tp);
  }

  // Section sup-norm: lambda grid times a theta sweep.
  const pws::Level2Section s = demo_section(8);
  std::printf("\nsection_sup_norm (|mu| <= 8, r=%.1f, N=%d)\n", spec.r, spec.N);
  std::printf("%10s %12s %12s %9s\n", "points", "serial (s)", "parallel (s)", "speedup");
  for (int res : {101, 201, 401}) {
    pws::SampleGrid grid;
    grid.resolution = res;
    auto t0 = Clock::now();
    const double a = pws::derivative_sup_norm_serial(s, spec, 0, grid);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    const double b = pws::derivative_sup_norm(s, spec, 0, grid);
    const double tp = seconds_since(t0);
    if (a != b) {
      std::printf("MISMATCH at res %d: %.17g vs %.17g\n", res, a, b);
      return 1;
    }
    std::printf("%10lld %12.4f %12.4f %8.2fx\n",
                static_cast<long long>(grid.total_points()), ts, tp, ts / tp);
  }
  return 0;
}
