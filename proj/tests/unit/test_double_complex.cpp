#include <gtest/gtest.h>

#include <random>

#include "bgc/cohomology.hpp"
#include "bgc/errors.hpp"
#include "bgc/generators.hpp"
#include "oracles.hpp"

using namespace bgc;

namespace {

// Cohomology dimensions from ranks of block matrices only.
struct RankOracle {
  const DoubleComplex& c;

  Matrix dp(int p, int q) const { return c.dPrime({p, q}); }
  Matrix ds(int p, int q) const { return c.dSecond({p, q}); }

  std::size_t dprime(int p, int q) const { return oracle::nullity(dp(p, q)) - oracle::rankOf(dp(p - 1, q)); }
  std::size_t dsecond(int p, int q) const { return oracle::nullity(ds(p, q)) - oracle::rankOf(ds(p, q - 1)); }
  std::size_t bc(int p, int q) const {
    const std::size_t kernel = c.dim({p, q}) - oracle::rankOf(vstack(dp(p, q), ds(p, q)));
    return kernel - oracle::rankOf(dp(p - 1, q) * ds(p - 1, q - 1));
  }
  std::size_t aeppli(int p, int q) const {
    const std::size_t kernel = oracle::nullity(dp(p, q + 1) * ds(p, q));
    return kernel - oracle::rankOf(hstack(dp(p - 1, q), ds(p, q - 1)));
  }
  // total differential assembled block by block, slices ordered by p
  Matrix total(int k) const {
    std::vector<Bidegree> src, tgt;
    for (const auto& [b, n] : c.support()) {
      if (b.total() == k) src.push_back(b);
      if (b.total() == k + 1) tgt.push_back(b);
    }
    std::size_t rows = 0, cols = 0;
    for (auto b : src) cols += c.dim(b);
    for (auto b : tgt) rows += c.dim(b);
    Matrix d(rows, cols);
    std::size_t c0 = 0;
    for (auto s : src) {
      std::size_t r0 = 0;
      for (auto t : tgt) {
        Matrix blk(c.dim(t), c.dim(s));
        if (t.p == s.p + 1) blk = dp(s.p, s.q);
        if (t.q == s.q + 1) blk = ds(s.p, s.q);
        for (std::size_t i = 0; i < blk.rows(); ++i)
          for (std::size_t j = 0; j < blk.cols(); ++j) d(r0 + i, c0 + j) = blk(i, j);
        r0 += c.dim(t);
      }
      c0 += c.dim(s);
    }
    return d;
  }
  std::size_t deRham(int k) const { return oracle::nullity(total(k)) - oracle::rankOf(total(k - 1)); }
};

DoubleComplex zigzag() { return generateElementary(Zigzag{{0, 1}, 2, true, true}); }

void expectMatchesOracle(const DoubleComplex& c) {
  const ComplexAnalysis a(c);
  const RankOracle o{c};
  const auto bc = a.bottChern(), ae = a.aeppli(), d1 = a.dPrimeCohomology(), d2 = a.dSecondCohomology();
  for (const auto& [b, n] : c.support()) {
    EXPECT_EQ(bc.at(b), o.bc(b.p, b.q)) << to_string(b);
    EXPECT_EQ(ae.at(b), o.aeppli(b.p, b.q)) << to_string(b);
    EXPECT_EQ(d1.at(b), o.dprime(b.p, b.q)) << to_string(b);
    EXPECT_EQ(d2.at(b), o.dsecond(b.p, b.q)) << to_string(b);
  }
  const auto dr = a.deRham();
  for (int k = c.minTotal(); k <= c.maxTotal(); ++k) EXPECT_EQ(dr.atTotal(k), o.deRham(k)) << k;
}

}  // namespace

TEST(Validate, Examples) {
  EXPECT_TRUE(validate(generateElementary(Dot{{0, 0}})).empty());
  DoubleComplex bad = generateElementary(Square{{0, 0}});
  bad.setDSecond({1, 0}, Matrix{{1}});  // now d'd'' = +d''d'
  const auto v = validate(bad);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::Anticommutation);
  EXPECT_EQ(v[0].at, (Bidegree{0, 0}));
}

TEST(Validate, ShapeAndSquares) {
  DoubleComplex c;
  c.setSpace({0, 0}, 2);
  c.setSpace({1, 0}, 1);
  c.setDPrime({0, 0}, Matrix{{1}});
  EXPECT_EQ(validate(c).front().kind, Violation::Kind::Shape);

  DoubleComplex sq;
  sq.setSpace({0, 0}, 1);
  sq.setSpace({1, 0}, 1);
  sq.setSpace({2, 0}, 1);
  sq.setDPrime({0, 0}, Matrix{{1}});
  sq.setDPrime({1, 0}, Matrix{{1}});
  EXPECT_EQ(validate(sq).front().kind, Violation::Kind::DPrimeSquare);
}

TEST(Generators, SquareSupport) {
  const auto c = generateElementary(Square{{0, 0}});
  const std::map<Bidegree, std::size_t> want{{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}};
  EXPECT_EQ(c.support(), want);
  EXPECT_TRUE(validate(c).empty());
}

TEST(Generators, ZigzagShape) {
  const auto c = zigzag();
  const std::map<Bidegree, std::size_t> want{{{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 1}};
  EXPECT_EQ(c.support(), want);
  EXPECT_EQ(c.dPrime({0, 1}), (Matrix{{1}}));
  EXPECT_EQ(c.dSecond({1, 0}), (Matrix{{1}}));
  EXPECT_THROW(generateElementary(Zigzag{{0, 0}, 0}), PreconditionError);
}

TEST(DeRham, Examples) {
  EXPECT_EQ(deRham(generateElementary(Dot{{0, 0}})).atTotal(0), 1u);
  const auto sq = deRham(generateElementary(Square{{0, 0}}));
  for (int k = 0; k <= 2; ++k) EXPECT_EQ(sq.atTotal(k), 0u);
  const auto z = deRham(zigzag());
  EXPECT_EQ(z.atTotal(1), 1u);
  EXPECT_EQ(z.atTotal(2), 0u);
}

TEST(RowColumn, Examples) {
  auto [d1, d2] = rowColumnCohomology(generateElementary(Dot{{0, 0}}));
  EXPECT_EQ(d1.at({0, 0}), 1u);
  EXPECT_EQ(d2.at({0, 0}), 1u);

  auto [s1, s2] = rowColumnCohomology(generateElementary(Square{{0, 0}}));
  for (auto b : {Bidegree{0, 0}, Bidegree{1, 0}, Bidegree{0, 1}, Bidegree{1, 1}}) {
    EXPECT_EQ(s1.at(b), 0u);
    EXPECT_EQ(s2.at(b), 0u);
  }

  auto [z1, z2] = rowColumnCohomology(zigzag());
  EXPECT_EQ(z1.at({0, 1}), 0u);  // a -> c under d'
  EXPECT_EQ(z1.at({1, 0}), 1u);
  EXPECT_EQ(z1.at({1, 1}), 0u);
  EXPECT_EQ(z2.at({0, 1}), 1u);
  EXPECT_EQ(z2.at({1, 0}), 0u);
  EXPECT_EQ(z2.at({1, 1}), 0u);
}

TEST(BottChernAeppli, Examples) {
  EXPECT_EQ(bottChern(generateElementary(Dot{{0, 0}})).at({0, 0}), 1u);
  EXPECT_EQ(aeppli(generateElementary(Dot{{0, 0}})).at({0, 0}), 1u);
  const auto sq = generateElementary(Square{{0, 0}});
  for (const auto& [b, n] : sq.support()) {
    EXPECT_EQ(bottChern(sq).at(b), 0u);
    EXPECT_EQ(aeppli(sq).at(b), 0u);
  }
  const auto z = zigzag();
  EXPECT_EQ(bottChern(z).at({1, 1}), 1u);
  EXPECT_EQ(aeppli(z).at({0, 1}), 1u);
  EXPECT_EQ(aeppli(z).at({1, 0}), 1u);
  EXPECT_EQ(aeppli(z).at({1, 1}), 0u);
  EXPECT_EQ(aeppli(z).at({5, 5}), 0u);
}

TEST(Cohomology, AllTheoriesMatchRankOracle) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 40; ++t) {
    const auto g = randomComplex(rng);
    SCOPED_TRACE(t);
    expectMatchesOracle(g.complex);
  }
}

TEST(Lattice, Examples) {
  // zero differentials: the whole space sits in the top and bottom steps
  LatticeEntry want;
  want.p0 = want.v0 = 1;
  EXPECT_EQ(latticeInvariants(generateElementary(Dot{{0, 0}})).at({0, 0}), want);

  const auto z = latticeInvariants(zigzag()).at({1, 1});
  EXPECT_EQ(z.sPlus, 0u);
  EXPECT_EQ(z.s0, 1u);

  EXPECT_EQ(latticeInvariants(generateElementary(Square{{0, 0}})).at({1, 1}).s0, 0u);
}

TEST(Lemma, Examples) {
  EXPECT_TRUE(ddbarLemmaAt(generateElementary(Dot{{0, 0}}), 0, 0));
  const auto sq = generateElementary(Square{{0, 0}});
  for (int p = -1; p <= 2; ++p)
    for (int q = -1; q <= 2; ++q) EXPECT_TRUE(ddbarLemmaAt(sq, p, q));
  EXPECT_FALSE(ddbarLemmaAt(zigzag(), 1, 1));
  // a single arrow also breaks it at its target
  EXPECT_FALSE(ddbarLemmaAt(generateElementary(Zigzag{{0, 0}, 1}), 1, 0));
}

TEST(NaturalMaps, Examples) {
  const auto dot = naturalMaps(generateElementary(Dot{{0, 0}}));
  EXPECT_TRUE(NaturalMaps::lookup(dot.phiTotal, 0).bijective());

  const auto z = naturalMaps(zigzag());
  const auto& phi11 = NaturalMaps::lookup(z.phi, {1, 1});
  EXPECT_EQ(phi11.sourceDim, 1u);
  EXPECT_EQ(phi11.targetDim, 0u);
  EXPECT_FALSE(phi11.injective);
  EXPECT_FALSE(NaturalMaps::lookup(z.phiTotal, 2).injective);

  const auto sq = naturalMaps(generateElementary(Square{{0, 0}}));
  for (const auto& [b, m] : sq.phi) EXPECT_TRUE(m.bijective());
  for (const auto& [k, m] : sq.psiTotal) EXPECT_TRUE(m.bijective());
}

TEST(NaturalMaps, FlagsAgreeWithRanks) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    const auto maps = naturalMaps(randomComplex(rng).complex);
    for (const auto* family : {&maps.phi, &maps.phiPlus, &maps.phiMinus, &maps.psiPlus, &maps.psiMinus})
      for (const auto& [b, m] : *family) {
        const std::size_t r = oracle::rankOf(m.matrix);
        EXPECT_EQ(m.rank, r);
        EXPECT_EQ(m.injective, r == m.sourceDim);
        EXPECT_EQ(m.surjective, r == m.targetDim);
      }
  }
}

TEST(Theorem, Examples) {
  const auto dot = checkTheoremEquivalences(generateElementary(Dot{{0, 0}}));
  EXPECT_TRUE(dot.lemmaEverywhere && dot.bcMatchesRowColumn && dot.aeppliMatchesRowColumn && dot.bcMatchesDeRham &&
              dot.aeppliMatchesDeRham);

  const std::vector<DoubleComplex> parts{generateElementary(Square{{0, 0}}), generateElementary(Dot{{1, 0}}),
                                         generateElementary(Dot{{-1, 2}})};
  const auto sum = checkTheoremEquivalences(scrambleBasis(directSum(parts), 9));
  EXPECT_TRUE(sum.consistent());
  EXPECT_TRUE(sum.lemmaEverywhere);

  const auto z = checkTheoremEquivalences(zigzag());
  EXPECT_TRUE(z.consistent());
  EXPECT_FALSE(z.lemmaEverywhere || z.bcMatchesRowColumn || z.aeppliMatchesRowColumn || z.bcMatchesDeRham ||
               z.aeppliMatchesDeRham);
}

TEST(Generators, ScrambleInvariance) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 20; ++t) {
    GeneratorOptions o;
    o.scramble = false;
    const auto g = randomComplex(rng, o);
    const auto s = scrambleBasis(g.complex, rng());
    EXPECT_TRUE(validate(s).empty());
    EXPECT_NE(s.storedDPrime(), g.complex.storedDPrime());
    EXPECT_EQ(bottChern(s).dims, bottChern(g.complex).dims);
    EXPECT_EQ(aeppli(s).dims, aeppli(g.complex).dims);
    EXPECT_EQ(deRham(s).totalDims, deRham(g.complex).totalDims);
    EXPECT_EQ(latticeInvariants(s), latticeInvariants(g.complex));
  }
}

TEST(Generators, ScrambleIsDeterministic) {
  const auto z = zigzag();
  EXPECT_EQ(scrambleBasis(z, 5).storedDSecond(), scrambleBasis(z, 5).storedDSecond());
}

TEST(Generators, DirectSumAdditivity) {
  const std::vector<DoubleComplex> dots{generateElementary(Dot{{0, 0}}), generateElementary(Dot{{1, -1}})};
  EXPECT_EQ(deRham(directSum(dots)).atTotal(0), 2u);

  std::mt19937_64 rng(53);
  for (int t = 0; t < 15; ++t) {
    const auto a = randomComplex(rng).complex, b = randomComplex(rng).complex;
    const std::vector<DoubleComplex> both{a, b};
    const auto s = directSum(both);
    const auto bs = bottChern(s), ba = bottChern(a), bb = bottChern(b);
    for (const auto& [x, n] : s.support()) EXPECT_EQ(bs.at(x), ba.at(x) + bb.at(x));
    const auto ds = deRham(s), da = deRham(a), db = deRham(b);
    for (int k = s.minTotal(); k <= s.maxTotal(); ++k) EXPECT_EQ(ds.atTotal(k), da.atTotal(k) + db.atTotal(k));
  }
}

TEST(Generators, RandomComplexesAreValid) {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 50; ++t) EXPECT_TRUE(validate(randomComplex(rng).complex).empty());
}
