#include <doctest.h>

#include "pws/ktype.hpp"
#include "test_util.hpp"

using namespace pws;
namespace tu = pws::testutil;

namespace {

LambdaPoly node(int num, int den) {  // λ + num/den
  return LambdaPoly::from_coeffs({Rational(num, den), Rational(1)});
}

}  // namespace

TEST_CASE("KType basics") {
  CHECK(KType(4).rank() == 1);
  CHECK(KType(4).value() == 4);
  CHECK(KType(4).str() == "4");
  const KType k({2, -1});
  CHECK(k.rank() == 2);
  CHECK(k.weight(1) == -1);
  CHECK(k.str() == "(2,-1)");
  CHECK_THROWS_AS(k.value(), std::invalid_argument);
  CHECK_THROWS_AS(KType(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("parity compatibility is per factor") {
  CHECK(parity_compatible(KType(4), KType(2)));
  CHECK(parity_compatible(KType(-3), KType(5)));
  CHECK(!parity_compatible(KType(1), KType(2)));
  CHECK(parity_compatible(KType({1, 2}), KType({3, 0})));
  CHECK(!parity_compatible(KType({1, 2}), KType({3, 1})));
  CHECK_THROWS_AS(parity_compatible(KType(1), KType({1, 1})), std::invalid_argument);
}

TEST_CASE("q_poly golden table") {
  // q_{n,n} = 1
  for (int n = -6; n <= 6; ++n) CHECK(q_poly(KType(n), KType(n)).poly == LambdaPoly::one());
  CHECK(q_poly(KType(4), KType(2)).poly == node(3, 2));       // λ + 3/2
  CHECK(q_poly(KType(4), KType(2)).poly.str() == "λ + 3/2");
  CHECK(q_poly(KType(2), KType(4)).poly == LambdaPoly::from_coeffs({Rational(-3, 2), Rational(1)}));
  CHECK(q_poly(KType(2), KType(4)).poly.str() == "λ - 3/2");
  // q_{-2,2} = (λ + 1/2)(λ - 1/2) = λ² - 1/4
  CHECK(q_poly(KType(-2), KType(2)).poly ==
        LambdaPoly::from_coeffs({Rational(-1, 4), Rational(0), Rational(1)}));
  CHECK_THROWS_AS(q_poly(KType(1), KType(2)), ParityError);
}

TEST_CASE("q_poly degree law: deg q = sum |n_f - m_f| / 2") {
  auto rng = tu::make_rng(51);
  for (int n = -12; n <= 12; ++n)
    for (int m = -12; m <= 12; ++m) {
      if ((n - m) % 2 != 0) continue;
      const auto q = q_poly(KType(n), KType(m));
      CHECK(q.poly.degree() == std::abs(n - m) / 2);
      CHECK(q.poly.leading_coeff() == Rational(1));
    }
  // product groups multiply per-factor generators
  for (int i = 0; i < 40; ++i) {
    const int n1 = tu::random_parity_weight(rng, 0, 8), m1 = tu::random_parity_weight(rng, 0, 8);
    const int n2 = tu::random_parity_weight(rng, 1, 8), m2 = tu::random_parity_weight(rng, 1, 8);
    const auto q = q_poly(KType({n1, n2}), KType({m1, m2}));
    CHECK(q.poly.degree() == (std::abs(n1 - m1) + std::abs(n2 - m2)) / 2);
    const LambdaPoly expect =
        LambdaPoly::embed(q_poly(KType(n1), KType(m1)).poly, 0, 2) *
        LambdaPoly::embed(q_poly(KType(n2), KType(m2)).poly, 1, 2);
    CHECK(q.poly == expect);
  }
}

TEST_CASE("r_poly trivial cases: sandwiched middle type gives 1") {
  for (int l = -8; l <= 8; ++l)
    for (int n = -8; n <= 8; ++n) {
      if ((l - n) % 2 != 0) continue;
      // r^l_{l,n} = 1 and r^l_{n,n} = 1
      CHECK(r_poly(KType(l), KType(l), KType(n)) == EvenPoly::one());
      CHECK(r_poly(KType(l), KType(n), KType(n)) == EvenPoly::one());
      // l <= n <= m or m <= n <= l with m = n covers above; generic sandwich:
    }
  CHECK(r_poly(KType(0), KType(2), KType(4)) == EvenPoly::one());   // 0 <= 2 <= 4
  CHECK(r_poly(KType(4), KType(2), KType(0)) == EvenPoly::one());   // 0 <= 2 <= 4 reversed
  CHECK_THROWS_AS(r_poly(KType(1), KType(2), KType(3)), ParityError);
}

TEST_CASE("r_poly is even and satisfies the defining identity") {
  auto rng = tu::make_rng(52);
  for (int i = 0; i < 300; ++i) {
    const int l = tu::random_parity_weight(rng, 0, 10);
    const int n = tu::random_parity_weight(rng, 0, 10);
    const int m = tu::random_parity_weight(rng, 0, 10);
    const EvenPoly r = r_poly(KType(l), KType(n), KType(m));
    // q_{n,m} q_{l,n} = r^l_{n,m} q_{l,m}
    const LambdaPoly lhs = q_poly(KType(n), KType(m)).poly * q_poly(KType(l), KType(n)).poly;
    const LambdaPoly rhs = expand_even(r) * q_poly(KType(l), KType(m)).poly;
    CHECK(lhs == rhs);
  }
  // odd parity class too
  for (int i = 0; i < 100; ++i) {
    const int l = tu::random_parity_weight(rng, 1, 9);
    const int n = tu::random_parity_weight(rng, 1, 9);
    const int m = tu::random_parity_weight(rng, 1, 9);
    const LambdaPoly lhs = q_poly(KType(n), KType(m)).poly * q_poly(KType(l), KType(n)).poly;
    const LambdaPoly rhs =
        expand_even(r_poly(KType(l), KType(n), KType(m))) * q_poly(KType(l), KType(m)).poly;
    CHECK(lhs == rhs);
  }
  // rank 2: per-factor products
  for (int i = 0; i < 60; ++i) {
    const KType l({tu::random_parity_weight(rng, 0, 6), tu::random_parity_weight(rng, 1, 6)});
    const KType n({tu::random_parity_weight(rng, 0, 6), tu::random_parity_weight(rng, 1, 6)});
    const KType m({tu::random_parity_weight(rng, 0, 6), tu::random_parity_weight(rng, 1, 6)});
    const LambdaPoly lhs = q_poly(n, m).poly * q_poly(l, n).poly;
    const LambdaPoly rhs = expand_even(r_poly(l, n, m)) * q_poly(l, m).poly;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("r_poly golden: outside types multiply both branches") {
  // l=0, n=4, m=2: 0 <= m < n, so r = q_{n,m} q_{m,n} in t-coordinates
  const EvenPoly r = r_poly(KType(0), KType(4), KType(2));
  // q_{4,2} q_{2,4} = (λ+3/2)(λ−3/2) = λ² − 9/4 → t − 9/4
  CHECK(r == EvenPoly::from_coeffs({Rational(-9, 4), Rational(1)}));
  // m < l < n: r = q_{n,l} q_{l,n}; l=2, n=4, m=0 → (λ+3/2)(λ−3/2)
  CHECK(r_poly(KType(2), KType(4), KType(0)) ==
        EvenPoly::from_coeffs({Rational(-9, 4), Rational(1)}));
}

TEST_CASE("rho_k vanishes and the Casimir eigenvalue is |mu|^2") {
  for (int rank : {1, 2, 3}) {
    const auto rho = rho_k(rank);
    CHECK(rho.size() == static_cast<size_t>(rank));
    for (const auto& x : rho) CHECK(x.is_zero());
  }
  CHECK(casimir_eigenvalue(KType(0)) == Rational(0));
  CHECK(casimir_eigenvalue(KType(2)) == Rational(4));
  CHECK(casimir_eigenvalue(KType(-3)) == Rational(9));
  CHECK(casimir_eigenvalue(KType({1, 2})) == Rational(5));
}
