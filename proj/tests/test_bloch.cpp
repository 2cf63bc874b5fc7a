#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "flatband/bloch.hpp"
#include "flatband/builtins.hpp"

using namespace flatband;

namespace {

QuotientGraph builtin(const std::string& name) {
  return QuotientGraph::parse(builtin_graph_text(name));
}

Laurent<Rat> rmono(int dim, IntVec e, long c = 1) {
  return Laurent<Rat>::monomial(dim, e, Rat(c));
}

// a disconnected quotient: kagome plus a 2d two-pendant comb, analyzed jointly
const char* kUnionGraph =
    "dim 2\n"
    "vertices w1 w2 w3 b p1 p2\n"
    "edge w1 w2 0 0\n"
    "edge w1 w2 0 1\n"
    "edge w1 w3 0 0\n"
    "edge w1 w3 1 0\n"
    "edge w2 w3 0 0\n"
    "edge w2 w3 1 -1\n"
    "edge b b 1 0\n"
    "edge b b 0 1\n"
    "edge b p1 0 0\n"
    "edge b p2 0 0\n";

// a chain decorated with a pentagon per cell: the reflection-antisymmetric
// pentagon modes vanish at the attachment vertex and give a flat band with
// an irrational eigenvalue pair, minpoly mu^2 + mu/2 - 1/4
const char* kPentagonChain =
    "dim 1\n"
    "vertices c p1 p2 p3 p4 p5\n"
    "edge c c 1\n"
    "edge c p1 0\n"
    "edge p1 p2 0\n"
    "edge p2 p3 0\n"
    "edge p3 p4 0\n"
    "edge p4 p5 0\n"
    "edge p5 p1 0\n";

}  // namespace

TEST_CASE("bloch matrix of the builtins") {
  SUBCASE("kagome matches the displayed symbol") {
    BlochSystem b = build_bloch(builtin("kagome"));
    CHECK(b.degrees == std::vector<int>{4, 4, 4});
    CHECK(b.a_hat.at(0, 0).is_zero());
    CHECK(b.a_hat.at(0, 1) == rmono(2, {0, 0}) + rmono(2, {0, 1}));
    CHECK(b.a_hat.at(0, 2) == rmono(2, {0, 0}) + rmono(2, {1, 0}));
    CHECK(b.a_hat.at(1, 0) == rmono(2, {0, 0}) + rmono(2, {0, -1}));
    CHECK(b.a_hat.at(1, 2) == rmono(2, {0, 0}) + rmono(2, {1, -1}));
    CHECK(b.a_hat.at(2, 0) == rmono(2, {0, 0}) + rmono(2, {-1, 0}));
    CHECK(b.a_hat.at(2, 1) == rmono(2, {0, 0}) + rmono(2, {-1, 1}));
  }
  SUBCASE("cycle") {
    BlochSystem b = build_bloch(builtin("cycle"));
    CHECK(b.a_hat.at(0, 0) == rmono(1, {1}) + rmono(1, {-1}));
    CHECK(b.degrees == std::vector<int>{2});
  }
  SUBCASE("square") {
    BlochSystem b = build_bloch(builtin("square"));
    CHECK(b.a_hat.at(0, 0) ==
          rmono(2, {1, 0}) + rmono(2, {-1, 0}) + rmono(2, {0, 1}) + rmono(2, {0, -1}));
  }
}

TEST_CASE("self-adjointness of the symbol") {
  for (const std::string& name : builtin_names()) {
    BlochSystem b = build_bloch(builtin(name));
    for (int i = 0; i < b.n; ++i)
      for (int j = 0; j < b.n; ++j)
        CHECK(b.a_hat.at(i, j) == b.a_hat.at(j, i).conjugated());
    // consequently the characteristic determinant is z -> z^-1 invariant
    Laurent<UniPoly> det = char_det(b);
    Laurent<UniPoly> conj(det.dim());
    for (const auto& [e, c] : det.terms()) conj.add_term(ivec_neg(e), c);
    CHECK(det == conj);
  }
}

TEST_CASE("characteristic determinants") {
  SUBCASE("cycle: z + z^-1 - 2 mu") {
    Laurent<UniPoly> det = char_det(build_bloch(builtin("cycle")));
    Laurent<UniPoly> want(1);
    want.add_term({1}, UniPoly(Rat(1)));
    want.add_term({-1}, UniPoly(Rat(1)));
    want.add_term({0}, UniPoly::linear(Rat(0), Rat(-2)));
    CHECK(det == want);
  }
  SUBCASE("square: z1 + z1^-1 + z2 + z2^-1 - 4 mu") {
    Laurent<UniPoly> det = char_det(build_bloch(builtin("square")));
    Laurent<UniPoly> want(2);
    for (IntVec e : {IntVec{1, 0}, IntVec{-1, 0}, IntVec{0, 1}, IntVec{0, -1}})
      want.add_term(e, UniPoly(Rat(1)));
    want.add_term({0, 0}, UniPoly::linear(Rat(0), Rat(-4)));
    CHECK(det == want);
  }
  SUBCASE("kagome: -t^3 + 6t + 4 + (t+2) Sigma at t = 4 mu") {
    Laurent<UniPoly> det = char_det(build_bloch(builtin("kagome")));
    Laurent<UniPoly> want(2);
    // constant coefficient: 4 + 24 mu - 64 mu^3
    want.add_term({0, 0}, UniPoly(std::vector<Rat>{Rat(4), Rat(24), Rat(0), Rat(-64)}));
    // six-term symmetric sum with coefficient 2 + 4 mu
    for (IntVec e : {IntVec{1, 0}, IntVec{-1, 0}, IntVec{0, 1}, IntVec{0, -1},
                     IntVec{1, -1}, IntVec{-1, 1}})
      want.add_term(e, UniPoly::linear(Rat(2), Rat(4)));
    CHECK(det == want);
  }
}

TEST_CASE("flat band detection") {
  SUBCASE("kagome: exactly one band at mu = -1/2") {
    auto bands = flat_bands(build_bloch(builtin("kagome")));
    REQUIRE(bands.size() == 1);
    CHECK(bands[0].minpoly_mu == UniPoly::linear(Rat(1, 2), Rat(1)));
    CHECK(bands[0].minpoly_lambda == UniPoly::linear(Rat(3, 2), Rat(1)));
    CHECK(bands[0].multiplicity_in_gcd == 1);
    CHECK(bands[0].mu.rational_value() == Rat(-1, 2));
    CHECK(bands[0].lambda.rational_value() == Rat(-3, 2));
  }
  SUBCASE("square and cycle have none") {
    CHECK(flat_bands(build_bloch(builtin("square"))).empty());
    CHECK(flat_bands(build_bloch(builtin("cycle"))).empty());
  }
  SUBCASE("comb2: mu = 0, lambda = -1") {
    auto bands = flat_bands(build_bloch(builtin("comb2")));
    REQUIRE(bands.size() == 1);
    CHECK(bands[0].minpoly_mu == UniPoly::variable());
    CHECK(bands[0].lambda.rational_value() == Rat(-1));
  }
  SUBCASE("disconnected union is analyzed jointly, bands sorted ascending") {
    auto bands = flat_bands(build_bloch(QuotientGraph::parse(kUnionGraph)));
    REQUIRE(bands.size() == 2);
    CHECK(bands[0].mu.rational_value() == Rat(-1, 2));  // lambda = -3/2 first
    CHECK(bands[1].mu.rational_value() == Rat(0));      // lambda = -1 second
  }
  SUBCASE("pentagon chain: one band with an irrational conjugate pair") {
    auto bands = flat_bands(build_bloch(QuotientGraph::parse(kPentagonChain)));
    REQUIRE(bands.size() == 1);
    // 4 mu^2 + 2 mu - 1, monic
    CHECK(bands[0].minpoly_mu ==
          UniPoly(std::vector<Rat>{Rat(-1, 4), Rat(1, 2), Rat(1)}));
    CHECK(bands[0].mu_roots.size() == 2);  // both real embeddings, one band
    CHECK_FALSE(bands[0].mu.is_rational());
    // the residue satisfies its minimal polynomial
    NFElem mu = bands[0].mu;
    NFElem lhs = mu * mu + mu * NFElem::from_rational(bands[0].field, Rat(1, 2));
    CHECK(lhs == NFElem::from_rational(bands[0].field, Rat(1, 4)));
  }
  SUBCASE("specialized pencils of genuine bands are rank deficient") {
    for (const char* name : {"kagome", "comb2"}) {
      BlochSystem sys = build_bloch(builtin(name));
      for (const FlatBand& band : flat_bands(sys)) {
        PolyMatrix<NFElem> m = specialize(sys, band);
        Laurent<NFElem> one = Laurent<NFElem>::constant(sys.dim, NFElem::one(band.field));
        CHECK(fraction_field_rank(m, one) < sys.n);
      }
    }
  }
  SUBCASE("every band's lambda roots lie in [-2, 0]") {
    for (const char* name : {"kagome", "comb2"}) {
      for (const FlatBand& band : flat_bands(build_bloch(builtin(name)))) {
        for (RootInterval iv : band.mu_roots) {
          iv = refine_root(band.minpoly_mu, iv, Rat(1, 1000));
          Rat lambda_lo = iv.lo - 1, lambda_hi = iv.hi - 1;
          CHECK(lambda_hi >= Rat(-2));
          CHECK(lambda_lo <= Rat(0));
          CHECK(lambda_lo >= Rat(-2) - Rat(1, 1000));
          CHECK(lambda_hi <= Rat(0) + Rat(1, 1000));
        }
      }
    }
  }
}

TEST_CASE("specialization") {
  SUBCASE("kagome at mu=-1/2 is four times the reference system") {
    BlochSystem sys = build_bloch(builtin("kagome"));
    auto bands = flat_bands(sys);
    REQUIRE(bands.size() == 1);
    PolyMatrix<NFElem> m = specialize(sys, bands[0]);
    const FieldPtr& f = bands[0].field;
    auto want = [&](int i, int j, const Laurent<Rat>& expect) {
      Laurent<NFElem> lifted = map_laurent<NFElem>(
          expect, [&](const Rat& c) { return NFElem::from_rational(f, c); });
      CHECK(m.at(i, j) == lifted);
    };
    want(0, 0, rmono(2, {0, 0}, 2));
    want(1, 1, rmono(2, {0, 0}, 2));
    want(2, 2, rmono(2, {0, 0}, 2));
    want(0, 1, rmono(2, {0, 0}) + rmono(2, {0, 1}));
    want(1, 2, rmono(2, {0, 0}) + rmono(2, {1, -1}));
    want(2, 0, rmono(2, {0, 0}) + rmono(2, {-1, 0}));
  }
  SUBCASE("cycle at a rational probe") {
    BlochSystem sys = build_bloch(builtin("cycle"));
    FlatBand probe = make_rational_band(Rat(1, 3));
    PolyMatrix<NFElem> m = specialize(sys, probe);
    Laurent<NFElem> want(1);
    const FieldPtr& f = probe.field;
    want.add_term({1}, NFElem::one(f));
    want.add_term({-1}, NFElem::one(f));
    want.add_term({0}, NFElem::from_rational(f, Rat(-2, 3)));
    CHECK(m.at(0, 0) == want);
  }
  SUBCASE("non-root specialization leaves a nonzero determinant") {
    Laurent<UniPoly> det = char_det(build_bloch(builtin("kagome")));
    for (Rat probe : {Rat(1, 3), Rat(0), Rat(-1)}) {  // 1/3 is the mu of lambda=-2/3
      bool any_nonzero = false;
      for (const auto& [e, c] : det.terms()) {
        (void)e;
        if (!rat_is_zero(c.eval(probe))) any_nonzero = true;
      }
      CHECK(any_nonzero);
    }
  }
}

TEST_CASE("eigenfunction realization") {
  QuotientGraph g = builtin("kagome");
  FieldPtr f = rational_field();
  auto nf = [&](long v) { return NFElem::from_rational(f, Rat(v)); };
  SUBCASE("the reference kernel generator covers six vertices") {
    std::vector<Laurent<NFElem>> v(3, Laurent<NFElem>(2));
    v[0].add_term({1, 0}, nf(1));
    v[0].add_term({0, 1}, nf(-1));
    v[1].add_term({0, 0}, nf(1));
    v[1].add_term({1, 0}, nf(-1));
    v[2].add_term({0, 1}, nf(1));
    v[2].add_term({0, 0}, nf(-1));
    EigenfunctionTable t = realize_eigenfunction(v, g);
    REQUIRE(t.entries.size() == 6);
    CHECK(t.entries.at({IntVec{1, 0}, 0}) == nf(1));
    CHECK(t.entries.at({IntVec{0, 1}, 0}) == nf(-1));
    CHECK(t.entries.at({IntVec{0, 0}, 1}) == nf(1));
    CHECK(t.entries.at({IntVec{1, 0}, 1}) == nf(-1));
    CHECK(t.entries.at({IntVec{0, 1}, 2}) == nf(1));
    CHECK(t.entries.at({IntVec{0, 0}, 2}) == nf(-1));
  }
  SUBCASE("unit vector gives a single vertex at the origin") {
    std::vector<Laurent<NFElem>> v(3, Laurent<NFElem>(2));
    v[0].add_term({0, 0}, nf(1));
    EigenfunctionTable t = realize_eigenfunction(v, g);
    REQUIRE(t.entries.size() == 1);
    CHECK(t.entries.begin()->first == CellVertex{IntVec{0, 0}, 0});
  }
  SUBCASE("zero vector is rejected") {
    std::vector<Laurent<NFElem>> v(3, Laurent<NFElem>(2));
    CHECK_THROWS_AS(realize_eigenfunction(v, g), std::invalid_argument);
  }
  SUBCASE("realize is a left inverse of the transform on random tables") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> cell(-3, 3), vert(0, 2);
    std::uniform_int_distribution<long> val(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
      EigenfunctionTable t;
      for (int k = 0; k < 5; ++k) {
        long v = val(rng);
        if (v == 0) continue;
        t.entries[{IntVec{cell(rng), cell(rng)}, vert(rng)}] = nf(v);
      }
      if (t.entries.empty()) continue;
      auto vec = bloch_transform(t, 3, 2, f);
      EigenfunctionTable back = realize_eigenfunction(vec, g);
      CHECK(back.entries == t.entries);
    }
  }
}
