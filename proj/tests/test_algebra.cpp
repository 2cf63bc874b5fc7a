#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "flatband/numberfield.hpp"
#include "flatband/unipoly.hpp"

using namespace flatband;

namespace {

UniPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  for (long x : coeffs) c.emplace_back(x);
  return UniPoly(std::move(c));
}

UniPoly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> coef(-4, 4);
  std::vector<Rat> c(static_cast<size_t>(deg(rng)) + 1);
  for (auto& x : c) x = Rat(coef(rng));
  return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("rational string round trips") {
  CHECK(rat_to_string(rat_from_string("-1/2")) == "-1/2");
  CHECK(rat_to_string(rat_from_string("6/4")) == "3/2");
  CHECK(rat_to_fraction_string(Rat(1, 3)) == "1/3");
  CHECK(rat_to_fraction_string(Rat(2)) == "2/1");
  CHECK(rat_to_decimal(Rat(-3, 2), 12) == "-1.500000000000");
  CHECK(rat_to_decimal(Rat(1, 3), 5) == "0.33333");
  CHECK(rat_to_decimal(Rat(0), 3) == "0.000");
  CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
}

TEST_CASE("unipoly arithmetic and division") {
  UniPoly x = UniPoly::variable();
  UniPoly p = x * x - UniPoly(Rat(1));  // x^2 - 1
  UniPoly q = x - UniPoly(Rat(1));
  auto [quo, rem] = UniPoly::divmod(p, q);
  CHECK(quo == x + UniPoly(Rat(1)));
  CHECK(rem.is_zero());
  CHECK(p.divide_exact(q) == quo);
  CHECK(p.eval(Rat(3)) == Rat(8));
  CHECK(p.derivative() == x * Rat(2));
  CHECK(p.shift_argument(Rat(1)) == x * x + x * Rat(2));  // (x+1)^2 - 1
  CHECK(poly({0, 0, 0}).is_zero());
  CHECK(p.to_string("mu") == "mu^2 + (-1)");
}

TEST_CASE("gcd examples") {
  UniPoly x = UniPoly::variable();
  // gcd(mu^2, mu^3 - mu^2) = mu^2
  CHECK(unipoly_gcd(x * x, x * x * x - x * x) == x * x);
  // gcd(2mu+1, 4mu^2-1) = mu + 1/2
  UniPoly a = poly({1, 2});
  UniPoly b = poly({-1, 0, 4});
  CHECK(unipoly_gcd(a, b) == UniPoly::linear(Rat(1, 2), Rat(1)));
  // gcd(1, anything) = 1
  CHECK(unipoly_gcd(UniPoly(Rat(1)), b) == UniPoly(Rat(1)));
  std::vector<UniPoly> all_zero(3);
  CHECK_THROWS_AS(unipoly_gcd(std::span<const UniPoly>(all_zero)),
                  std::invalid_argument);
}

TEST_CASE("squarefree decomposition") {
  UniPoly x = UniPoly::variable();
  auto parts = squarefree_decomposition(x * x * x - x * x);  // mu^2 (mu - 1)
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == x - UniPoly(Rat(1)));
  CHECK(parts[0].second == 1);
  CHECK(parts[1].first == x);
  CHECK(parts[1].second == 2);
}

TEST_CASE("factor_rational spec examples") {
  UniPoly x = UniPoly::variable();
  SUBCASE("mu^2 - 1/4 splits") {
    auto f = factor_rational(poly({0, 0, 1}) - UniPoly(Rat(1, 4)));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == UniPoly::linear(Rat(-1, 2), Rat(1)));
    CHECK(f.factors[1].first == UniPoly::linear(Rat(1, 2), Rat(1)));
    CHECK(f.factors[0].second == 1);
  }
  SUBCASE("mu^2 + 1 irreducible") {
    auto f = factor_rational(poly({1, 0, 1}));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == poly({1, 0, 1}));
    CHECK(f.factors[0].second == 1);
  }
  SUBCASE("mu^3 - mu^2 = mu^2 (mu-1)") {
    auto f = factor_rational(x * x * x - x * x);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == x - UniPoly(Rat(1)));
    CHECK(f.factors[0].second == 1);
    CHECK(f.factors[1].first == x);
    CHECK(f.factors[1].second == 2);
  }
  SUBCASE("zero polynomial is an error") {
    CHECK_THROWS_AS(factor_rational(UniPoly()), std::invalid_argument);
  }
}

TEST_CASE("factor_rational harder cases") {
  UniPoly x = UniPoly::variable();
  SUBCASE("degree 4 with two irreducible quadratics, no rational roots") {
    // (x^2+1)(x^2-2)
    auto f = factor_rational(poly({1, 0, 1}) * poly({-2, 0, 1}));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == poly({-2, 0, 1}));
    CHECK(f.factors[1].first == poly({1, 0, 1}));
  }
  SUBCASE("non-monic with fractions") {
    // (2x+1)(3x-2)(x^2+x+1), constant 6
    UniPoly p = poly({1, 2}) * poly({-2, 3}) * poly({1, 1, 1});
    auto f = factor_rational(p);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.constant == Rat(6));
    UniPoly prod(UniPoly(f.constant));
    for (const auto& [q, m] : f.factors)
      for (int k = 0; k < m; ++k) prod = prod * q;
    CHECK(prod == p);
  }
  SUBCASE("repeated irreducible quadratic") {
    UniPoly p = poly({1, 1, 1}) * poly({1, 1, 1}) * poly({-1, 1});
    auto f = factor_rational(p);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == poly({-1, 1}));
    CHECK(f.factors[0].second == 1);
    CHECK(f.factors[1].first == poly({1, 1, 1}));
    CHECK(f.factors[1].second == 2);
  }
  SUBCASE("degree six swinnerton-dyer-ish irreducible") {
    // minimal polynomial of sqrt(2)+sqrt(3): x^4 - 10x^2 + 1 (irreducible,
    // but factors into 4 linears mod every prime: exercises recombination)
    auto f = factor_rational(poly({1, 0, -10, 0, 1}));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == poly({1, 0, -10, 0, 1}));
  }
}

TEST_CASE("factorization reproduces the input on random products") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 25; ++trial) {
    UniPoly p = random_poly(rng, 3);
    UniPoly q = random_poly(rng, 3);
    if (p.is_zero() || q.is_zero()) continue;
    UniPoly prod = p * q;
    auto f = factor_rational(prod);
    UniPoly recomposed(UniPoly(f.constant));
    for (const auto& [irr, m] : f.factors) {
      CHECK(irr.leading() == Rat(1));
      for (int k = 0; k < m; ++k) recomposed = recomposed * irr;
    }
    CHECK(recomposed == prod);
  }
}

TEST_CASE("sturm real root isolation") {
  UniPoly x = UniPoly::variable();
  SUBCASE("mixed real and complex roots") {
    // (x - 1/2)(x + 3)(x^2 + 1): two real roots
    UniPoly p = UniPoly::linear(Rat(-1, 2), Rat(1)) * poly({3, 1}) * poly({1, 0, 1});
    CHECK(count_real_roots(p) == 2);
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 2);
    // ascending, disjoint, and each interval contains its root
    RootInterval lo = refine_root(p, roots[0], Rat(1, 1000000));
    RootInterval hi = refine_root(p, roots[1], Rat(1, 1000000));
    CHECK(lo.midpoint() < hi.midpoint());
    CHECK(abs(lo.midpoint() + 3) < Rat(1, 1000));
    CHECK(abs(hi.midpoint() - Rat(1, 2)) < Rat(1, 1000));
  }
  SUBCASE("no real roots") {
    CHECK(count_real_roots(poly({1, 0, 1})) == 0);
    CHECK(isolate_real_roots(poly({1, 0, 1})).empty());
  }
  SUBCASE("multiple roots counted once") {
    UniPoly p = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1});
    CHECK(count_real_roots(p) == 2);
  }
  SUBCASE("rational root isolated exactly or tightly") {
    auto roots = isolate_real_roots(poly({-1, 0, 1}));  // x^2-1
    REQUIRE(roots.size() == 2);
    RootInterval r0 = refine_root(poly({-1, 0, 1}), roots[0], Rat(1, 1 << 20));
    CHECK(abs(r0.midpoint() + 1) <= Rat(1, 1 << 20));
  }
}

TEST_CASE("number field arithmetic") {
  UniPoly x = UniPoly::variable();
  SUBCASE("rational field is a degree-1 field") {
    FieldPtr q = rational_field();
    NFElem a = NFElem::from_rational(q, Rat(2, 3));
    NFElem b = NFElem::from_rational(q, Rat(3, 2));
    CHECK((a * b).is_one());
    CHECK(a.inverse() == b);
    CHECK(q->is_rational());
  }
  SUBCASE("Q[sqrt 2]") {
    FieldPtr f = make_field(poly({-2, 0, 1}));  // mu^2 - 2
    NFElem s = NFElem::generator(f);
    CHECK((s * s) == NFElem::from_rational(f, Rat(2)));
    // (1 + sqrt2)(sqrt2 - 1) = 1
    NFElem a = NFElem::one(f) + s;
    NFElem b = s - NFElem::one(f);
    CHECK((a * b).is_one());
    CHECK(a.inverse() == b);
  }
  SUBCASE("inverse property on random elements of a cubic field") {
    FieldPtr f = make_field(poly({-2, 0, 0, 1}));  // mu^3 - 2, irreducible
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rat> c(3);
      for (auto& v : c) v = Rat(coef(rng));
      NFElem a = NFElem::from_poly(f, UniPoly(c));
      if (a.is_zero()) continue;
      CHECK((a * a.inverse()).is_one());
    }
  }
  SUBCASE("degree-1 generator value") {
    FieldPtr f = make_field(UniPoly::linear(Rat(1, 2), Rat(1)));  // mu + 1/2
    CHECK(NFElem::generator(f).rational_value() == Rat(-1, 2));
  }
  SUBCASE("field mismatch is rejected") {
    FieldPtr f1 = make_field(poly({-2, 0, 1}));
    FieldPtr f2 = make_field(poly({-3, 0, 1}));
    NFElem a = NFElem::generator(f1);
    NFElem b = NFElem::generator(f2);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
  }
}

TEST_CASE("nf linear algebra") {
  FieldPtr q = rational_field();
  auto e = [&](long v) { return NFElem::from_rational(q, Rat(v)); };
  SUBCASE("rank and nullity") {
    NFMatrix m = {{e(1), e(2), e(3)}, {e(2), e(4), e(6)}, {e(0), e(1), e(1)}};
    NFMatrix c = m;
    CHECK(nf_rank(c) == 2);
    CHECK(nf_nullity(m, 3) == 1);
  }
  SUBCASE("kernel basis solves the system") {
    NFMatrix m = {{e(1), e(1), e(0)}, {e(0), e(1), e(1)}};
    auto basis = nf_kernel_basis(m, 3, q);
    REQUIRE(basis.size() == 1);
    // m * v == 0
    for (const auto& row : m) {
      NFElem acc = NFElem::zero(q);
      for (size_t k = 0; k < 3; ++k) acc = acc + row[k] * basis[0][k];
      CHECK(acc.is_zero());
    }
  }
  SUBCASE("solvability") {
    NFMatrix m = {{e(1), e(0)}, {e(0), e(0)}};
    CHECK(nf_solvable(m, {e(5), e(0)}));
    CHECK_FALSE(nf_solvable(m, {e(5), e(1)}));
  }
}
