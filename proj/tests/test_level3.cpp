#include <doctest.h>

#include "pws/level3.hpp"
#include "test_util.hpp"

using namespace pws;
namespace tu = pws::testutil;

namespace {

Level3Vector random_vector(std::mt19937_64& rng, const KType& mu,
                           const std::vector<KType>& targets, int max_deg) {
  std::vector<EvenPoly> h;
  h.reserve(targets.size());
  for (size_t i = 0; i < targets.size(); ++i) h.push_back(tu::random_even_poly(rng, max_deg));
  return Level3Vector::make(mu, targets, std::move(h));
}

}  // namespace

TEST_CASE("Level3Element validates its data") {
  CHECK_THROWS_AS(Level3Element(KType(1), KType(2), EvenPoly::one()), ParityError);
  // a zero component between incompatible types is fine
  CHECK_NOTHROW(Level3Element(KType(1), KType(2), EvenPoly::zero()));
  CHECK_THROWS_AS(Level3Element(KType(1), KType({1, 1}), EvenPoly::one()),
                  std::invalid_argument);
  CHECK_THROWS_AS(Level3Element(KType(1), KType(3), EvenPoly::one(2)), std::invalid_argument);
}

TEST_CASE("Level3Operator validates shape and parity") {
  const std::vector<KType> s{KType(0), KType(2)}, t{KType(4)};
  CHECK_NOTHROW(Level3Operator(s, t, {EvenPoly::one(), EvenPoly::one()}));
  CHECK_THROWS_AS(Level3Operator(s, t, {EvenPoly::one()}), std::invalid_argument);
  CHECK_THROWS_AS(Level3Operator(s, {KType(1)}, {EvenPoly::one(), EvenPoly::one()}),
                  ParityError);
  // mixed-parity types are legal while the crossing entries stay zero
  CHECK_NOTHROW(Level3Operator({KType(0), KType(1)}, {KType(1)},
                               {EvenPoly::zero(), EvenPoly::one()}));
  CHECK_THROWS_AS(Level3Operator({}, {}, {}), std::invalid_argument);  // needs a target
}

TEST_CASE("untwist uses r-polynomials entrywise") {
  // single entry a = 1, source n = 4, target m = 2, at l = 0:
  // untwist = r^0_{4,2} = t - 9/4
  const Level3Operator p({KType(4)}, {KType(2)}, {EvenPoly::one()});
  const PolyMatrix m = untwist(p, KType(0));
  CHECK(m.rows() == 1);
  CHECK(m.cols() == 1);
  CHECK(m.at(0, 0) == EvenPoly::from_coeffs({Rational(-9, 4), Rational(1)}));
  // l equal to the source type is trivial: r^4_{4,2} = 1, since q_{4,4} = 1
  CHECK(untwist(p, KType(4)).at(0, 0) == EvenPoly::one());
  // at l = 2 the product q_{4,2} q_{2,4} = lambda^2 - 9/4 collapses onto q_{2,2} = 1
  CHECK(untwist(p, KType(2)).at(0, 0) == EvenPoly::from_coeffs({Rational(-9, 4), Rational(1)}));
  CHECK_THROWS_AS(untwist(p, KType(1)), ParityError);
}

TEST_CASE("apply agrees with untwisted matrix action on h-coordinates") {
  auto rng = tu::make_rng(61);
  for (int i = 0; i < 100; ++i) {
    const int parity = static_cast<int>(rng() % 2);
    const int rows = 1 + static_cast<int>(rng() % 3);
    const int cols = 1 + static_cast<int>(rng() % 3);
    const Level3Operator p = tu::random_operator(rng, rows, cols, parity, 8, 2);
    const KType mu(tu::random_parity_weight(rng, parity, 8));
    const Level3Vector u = random_vector(rng, mu, p.sources(), 2);
    const Level3Vector w = apply(p, u);
    CHECK(w.ktype == mu);
    CHECK(w.targets() == p.targets());
    const auto expect = mat_vec(untwist(p, mu), u.h_coords());
    CHECK(w.h_coords() == expect);
  }
}

TEST_CASE("apply validates source/target alignment") {
  const Level3Operator p({KType(0)}, {KType(2)}, {EvenPoly::one()});
  const Level3Vector good = Level3Vector::make(KType(0), {KType(0)}, {EvenPoly::one()});
  CHECK_NOTHROW(apply(p, good));
  const Level3Vector bad = Level3Vector::make(KType(0), {KType(2)}, {EvenPoly::one()});
  CHECK_THROWS_AS(apply(p, bad), std::invalid_argument);
}

TEST_CASE("compose is the twisted product: apply factors through it") {
  auto rng = tu::make_rng(62);
  for (int i = 0; i < 80; ++i) {
    const int parity = static_cast<int>(rng() % 2);
    const int a = 1 + static_cast<int>(rng() % 2);
    const int b = 1 + static_cast<int>(rng() % 2);
    const int c = 1 + static_cast<int>(rng() % 2);
    const Level3Operator p1 = tu::random_operator(rng, b, a, parity, 6, 2);
    // p2 must consume p1's targets
    std::vector<EvenPoly> e2;
    for (int k = 0; k < c * b; ++k) e2.push_back(tu::random_even_poly(rng, 2, 1, true));
    const Level3Operator p2(p1.targets(), tu::random_ktypes(rng, c, parity, 6), std::move(e2));
    const Level3Operator comp = compose(p2, p1);
    CHECK(comp.sources() == p1.sources());
    CHECK(comp.targets() == p2.targets());
    const KType mu(tu::random_parity_weight(rng, parity, 6));
    const Level3Vector u = random_vector(rng, mu, p1.sources(), 2);
    CHECK(apply(comp, u) == apply(p2, apply(p1, u)));
    // untwisting is multiplicative
    CHECK(untwist(comp, mu) == untwist(p2, mu) * untwist(p1, mu));
  }
}

TEST_CASE("compose rejects mismatched interfaces") {
  const Level3Operator p({KType(0)}, {KType(2)}, {EvenPoly::one()});
  const Level3Operator q({KType(4)}, {KType(0)}, {EvenPoly::one()});
  CHECK_NOTHROW(compose(p, q));  // q: 4 -> 0, then p: 0 -> 2
  CHECK_THROWS_AS(compose(q, p), std::invalid_argument);
}

TEST_CASE("identity and zero factories behave") {
  const std::vector<KType> types{KType(0), KType(2)};
  const Level3Operator id = Level3Operator::identity(types);
  auto rng = tu::make_rng(63);
  const Level3Vector u = random_vector(rng, KType(4), types, 2);
  CHECK(apply(id, u) == u);
  const Level3Operator z = Level3Operator::zero(types, types);
  CHECK(z.is_zero());
  CHECK(apply(z, u).is_zero());
}

TEST_CASE("product-group untwist stays per-factor consistent") {
  // rank-2 operator with a single entry: a = t1, source (2,0), target (0,0)
  const EvenPoly t1 = EvenPoly::variable(0, 2);
  const Level3Operator p({KType({2, 0})}, {KType({0, 0})}, {t1});
  const KType l({0, 0});
  // r^(0,0)_{(2,0),(0,0)} = (t1 - 1/4) x 1 per the factor table
  const PolyMatrix m = untwist(p, l);
  const EvenPoly expect =
      t1 * EvenPoly::embed(EvenPoly::from_coeffs({Rational(-1, 4), Rational(1)}), 0, 2);
  CHECK(m.at(0, 0) == expect);
}
