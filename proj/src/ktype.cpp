#include "pws/ktype.hpp"

#include <cassert>
#include <cstdlib>

namespace pws {

bool parity_compatible(const KType& n, const KType& m) {
  if (n.rank() != m.rank()) throw std::invalid_argument("parity_compatible: group mismatch");
  for (int f = 0; f < n.rank(); ++f)
    if ((n.weight(f) - m.weight(f)) % 2 != 0) return false;
  return true;
}

namespace {

// (lambda + k/2) for integer k
LambdaPoly half_node_factor(int k) {
  return LambdaPoly::from_coeffs({Rational(k, 2), Rational(1)});
}

// single-factor q_{n,m} per the case table; n ≡ m (mod 2) assumed
LambdaPoly q_factor(int n, int m) {
  if (n == m) return LambdaPoly::one();
  const int an = std::abs(n), am = std::abs(m);
  LambdaPoly p = LambdaPoly::one();
  if (n >= 0 ? m >= 0 : m <= 0) {  // same signs (zero counts as either)
    if (an > am) {
      for (int k = am + 1; k <= an - 1; k += 2) p *= half_node_factor(k);
    } else {
      for (int k = an + 1; k <= am - 1; k += 2) p *= half_node_factor(-k);
    }
  } else {
    // different signs: descending chain from +(|n|-1)/2 to -(|m|-1)/2
    for (int k = an - 1; k >= -(am - 1); k -= 2) p *= half_node_factor(k);
  }
  return p;
}

// single-factor r^l_{n,m} as a lambda-polynomial product per the case table
LambdaPoly r_factor_lambda(int l, int n, int m) {
  if ((l <= n && n <= m) || (m <= n && n <= l)) return LambdaPoly::one();
  if ((l <= m && m < n) || (n < m && m <= l)) return q_factor(n, m) * q_factor(m, n);
  assert((m < l && l < n) || (n < l && l < m));
  return q_factor(n, l) * q_factor(l, n);
}

#ifndef NDEBUG
// ground truth for the case table: q_{n,m} q_{l,n} = r q_{l,m}
void check_r_identity(int l, int n, int m, const LambdaPoly& r) {
  LambdaPoly lhs = q_factor(n, m) * q_factor(l, n);
  LambdaPoly rhs = r * q_factor(l, m);
  if (lhs != rhs)
    throw std::logic_error("r_poly: case table violates the product identity at (l=" +
                           std::to_string(l) + ", n=" + std::to_string(n) +
                           ", m=" + std::to_string(m) + ")");
}
#endif

}  // namespace

TwistGenerator q_poly(const KType& n, const KType& m) {
  if (!parity_compatible(n, m)) throw ParityError("Hom_M is zero");
  const int d = n.rank();
  LambdaPoly p = LambdaPoly::one(d);
  for (int f = 0; f < d; ++f)
    p *= LambdaPoly::embed(q_factor(n.weight(f), m.weight(f)), f, d);
  return TwistGenerator{n, m, p};
}

EvenPoly r_poly(const KType& l, const KType& n, const KType& m) {
  if (!parity_compatible(l, n) || !parity_compatible(n, m) || !parity_compatible(l, m))
    throw ParityError("Hom_M is zero");
  const int d = l.rank();
  LambdaPoly p = LambdaPoly::one(d);
  for (int f = 0; f < d; ++f) {
    LambdaPoly rf = r_factor_lambda(l.weight(f), n.weight(f), m.weight(f));
#ifndef NDEBUG
    check_r_identity(l.weight(f), n.weight(f), m.weight(f), rf);
#endif
    p *= LambdaPoly::embed(rf, f, d);
  }
  EvenPoly r = symmetrize_even(p);
  assert(expand_even(r) == p);  // the case-table product is genuinely even
  return r;
}

std::vector<Rational> rho_k(int rank) { return std::vector<Rational>(rank, Rational(0)); }

Rational casimir_eigenvalue(const KType& mu) {
  const std::vector<Rational> rho = rho_k(mu.rank());
  Rational shifted(0), base(0);
  for (int f = 0; f < mu.rank(); ++f) {
    const Rational x = Rational(mu.weight(f)) + rho[f];
    shifted += x * x;
    base += rho[f] * rho[f];
  }
  return shifted - base;
}

}  // namespace pws
