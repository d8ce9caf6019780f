#include <gtest/gtest.h>

#include <random>

#include "bgc/errors.hpp"
#include "bgc/linalg.hpp"
#include "oracles.hpp"

using namespace bgc;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }
Scalar cx(long re, long im) { return Scalar(Rational(re), Rational(im)); }

Subspace randomSubspace(std::mt19937_64& rng, std::size_t ambient, std::size_t dim) {
  return Subspace::span(oracle::randomOfRank(rng, ambient, dim, dim));
}

}  // namespace

TEST(Scalar, ParsesLiteralGrammar) {
  EXPECT_EQ(Scalar::parse("-3"), q(-3));
  EXPECT_EQ(Scalar::parse("3/4"), q(3, 4));
  EXPECT_EQ(Scalar::parse("2i"), cx(0, 2));
  EXPECT_EQ(Scalar::parse("i"), Scalar::i());
  EXPECT_EQ(Scalar::parse("1/2+3/4i"), Scalar(Rational(1, 2), Rational(3, 4)));
  EXPECT_EQ(Scalar::parse("-1/2-1i"), Scalar(Rational(-1, 2), Rational(-1)));
  EXPECT_EQ(Scalar::parse("6/8"), q(3, 4));  // canonicalized
}

TEST(Scalar, RejectsMalformedLiterals) {
  for (const char* bad : {"3//4", "", "1/0", "x", "1+", "ii", "1/2/3", " 1"})
    EXPECT_THROW(Scalar::parse(bad), ParseError) << bad;
}

TEST(Scalar, ToStringRoundTrips) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-9, 9), den(1, 9);
  for (int t = 0; t < 200; ++t) {
    Scalar z(Rational(d(rng), den(rng)), Rational(d(rng), den(rng)));
    EXPECT_EQ(Scalar::parse(z.toString()), z) << z.toString();
  }
}

TEST(Scalar, FieldArithmetic) {
  const Scalar z = cx(3, -4);
  EXPECT_EQ(z * z.conj(), q(25));
  EXPECT_EQ(z * z.inverse(), q(1));
  EXPECT_EQ(Scalar::i() * Scalar::i(), q(-1));
}

TEST(Rref, Identity) {
  const auto r = rref(Matrix::identity(2));
  EXPECT_EQ(r.reduced, Matrix::identity(2));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, Zero) {
  const auto r = rref(Matrix(2, 2));
  EXPECT_EQ(r.reduced, Matrix(2, 2));
  EXPECT_TRUE(r.pivots.empty());
}

TEST(Rref, RankOneHandElimination) {
  const auto r = rref(Matrix{{1, 2}, {2, 4}});
  EXPECT_EQ(r.reduced, (Matrix{{1, 2}, {0, 0}}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(Rref, RankMatchesOracle) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5, k = rng() % (std::min(r, c) + 1);
    const Matrix m = k == 0 ? Matrix(r, c) : oracle::randomOfRank(rng, r, c, k);
    EXPECT_EQ(rank(m), oracle::rankOf(m));
    EXPECT_EQ(rank(m), k);
    // reduced form: pivot entries 1, rest of pivot column zero
    const auto red = rref(m);
    for (std::size_t i = 0; i < red.pivots.size(); ++i)
      for (std::size_t row = 0; row < r; ++row)
        EXPECT_EQ(red.reduced(row, red.pivots[i]), row == i ? q(1) : q(0));
  }
}

TEST(Determinant, MatchesLeibniz) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const Matrix m = oracle::random(rng, n, n);
    EXPECT_EQ(determinant(m), oracle::leibniz(m));
  }
}

TEST(Inverse, RoundTripAndSingular) {
  std::mt19937_64 rng(5);
  const Matrix m = oracle::randomOfRank(rng, 4, 4, 4);
  EXPECT_EQ(m * inverse(m), Matrix::identity(4));
  EXPECT_THROW(inverse(Matrix{{1, 2}, {2, 4}}), SingularError);
}

TEST(Solve, ConsistentAndInconsistent) {
  const Matrix a{{1, 2}, {2, 4}};
  const auto x = solve(a, Vector{q(3), q(6)});
  ASSERT_TRUE(x);
  EXPECT_EQ(a * *x, (Vector{q(3), q(6)}));
  EXPECT_FALSE(solve(a, Vector{q(1), q(0)}));
}

TEST(PositiveDefinite, SmallCases) {
  EXPECT_TRUE(isPositiveDefinite(Matrix{{2, cx(0, 1)}, {cx(0, -1), 2}}));
  EXPECT_FALSE(isPositiveDefinite(Matrix{{1, 2}, {2, 1}}));
  EXPECT_FALSE(isPositiveDefinite(Matrix{{0, 0}, {0, 1}}));
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernelBasis(Matrix::identity(3)).isZero());
  EXPECT_TRUE(kernelBasis(Matrix(3, 3)).isFull());
  const Subspace k = kernelBasis(Matrix{{1, 1}});
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_TRUE(k.contains(Vector{q(1), q(-1)}));
  EXPECT_TRUE((Matrix{{1, 1}} * k.basis()).isZero());
}

TEST(Image, Examples) {
  EXPECT_TRUE(imageBasis(Matrix::identity(3)).isFull());
  EXPECT_TRUE(imageBasis(Matrix(3, 2)).isZero());
  const Subspace im = imageBasis(Matrix{{1, 2}, {2, 4}});
  EXPECT_EQ(im.dim(), 1u);
  EXPECT_TRUE(im.contains(Vector{q(1), q(2)}));
}

TEST(Kernel, RankNullityAgainstOracle) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    const Matrix m = oracle::randomOfRank(rng, r, c, rng() % std::min(r, c) + 1);
    const Subspace k = kernelBasis(m);
    EXPECT_EQ(k.dim(), oracle::nullity(m));
    EXPECT_TRUE((m * k.basis()).isZero());
    EXPECT_EQ(imageBasis(m).dim(), oracle::rankOf(m));
  }
}

TEST(Subspace, CanonicalFormIsUnique) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const Matrix b = oracle::randomOfRank(rng, 5, 3, 3);
    const Matrix mix = oracle::randomOfRank(rng, 3, 3, 3);
    EXPECT_EQ(Subspace::span(b), Subspace::span(b * mix));
    EXPECT_EQ(Subspace::span(b).basis(), Subspace::span(b * mix).basis());
  }
}

TEST(Subspace, SumAndIntersectionBasics) {
  const Subspace x = Subspace::span(Matrix{{1}, {0}}), y = Subspace::span(Matrix{{0}, {1}});
  EXPECT_EQ(subspaceSum(x, x), x);
  EXPECT_EQ(subspaceIntersection(x, x), x);
  EXPECT_TRUE(subspaceIntersection(x, y).isZero());
  EXPECT_TRUE(subspaceSum(x, y).isFull());
  EXPECT_THROW(subspaceSum(x, Subspace::full(3)), DimensionError);
}

TEST(Subspace, DimensionFormula) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 60; ++t) {
    const Subspace u = randomSubspace(rng, 4, 2), w = randomSubspace(rng, 4, 3);
    const Subspace s = subspaceSum(u, w), i = subspaceIntersection(u, w);
    EXPECT_EQ(s.dim() + i.dim(), u.dim() + w.dim());
    // oracle: dim of the sum is the rank of the concatenated bases
    EXPECT_EQ(s.dim(), oracle::rankOf(oracle::hstack(u.basis(), w.basis())));
    for (std::size_t c = 0; c < i.dim(); ++c) {
      EXPECT_TRUE(u.contains(i.basis().column(c)));
      EXPECT_TRUE(w.contains(i.basis().column(c)));
    }
  }
}

// H in G, H' in G': modular-law identities
TEST(Subspace, ModularIdentitiesOnRandomInstances) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 5;
    const Matrix gb = oracle::randomOfRank(rng, n, 3, 3), gpb = oracle::randomOfRank(rng, n, 3, 3);
    const Subspace g = Subspace::span(gb), gp = Subspace::span(gpb);
    const Subspace h = Subspace::span(gb * oracle::random(rng, 3, 1 + rng() % 2));
    const Subspace hp = Subspace::span(gpb * oracle::random(rng, 3, 1 + rng() % 2));
    ASSERT_TRUE(g.contains(h));
    ASSERT_TRUE(gp.contains(hp));

    const Subspace lhs2 = subspaceIntersection(subspaceSum(gp, h), subspaceSum(g, hp));
    const Subspace rhs2 = subspaceSum(subspaceSum(hp, h), subspaceIntersection(gp, g));
    EXPECT_EQ(lhs2, rhs2);

    const Subspace lhs3 = subspaceSum(subspaceIntersection(gp, h), subspaceIntersection(g, hp));
    const Subspace rhs3 = subspaceIntersection(subspaceIntersection(gp, g), subspaceSum(hp, h));
    EXPECT_EQ(lhs3, rhs3);
  }
}

TEST(Quotient, Dimensions) {
  const Subspace full = Subspace::full(3);
  EXPECT_EQ(quotientDim(full, full), 0u);
  EXPECT_EQ(quotientDim(full, Subspace::zero(3)), 3u);
  const Subspace plane = Subspace::full(2), diag = Subspace::span(Matrix{{1}, {1}});
  EXPECT_EQ(quotientDim(plane, diag), 1u);
  EXPECT_THROW(quotientDim(diag, Subspace::span(Matrix{{1}, {0}})), PreconditionError);
}

TEST(Quotient, RepresentativesComplementSmall) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 30; ++t) {
    const Matrix bb = oracle::randomOfRank(rng, 5, 4, 4);
    const Subspace big = Subspace::span(bb), small = Subspace::span(bb * oracle::randomOfRank(rng, 4, 2, 2));
    const Matrix reps = quotientRepresentatives(big, small);
    EXPECT_EQ(reps.cols(), 2u);
    EXPECT_EQ(oracle::rankOf(oracle::hstack(small.basis(), reps)), 4u);
  }
}

TEST(Vandermonde, Examples) {
  const Vector u{q(5)};
  const std::vector<Scalar> one{cx(2, 1)};
  const std::vector<Vector> m1{u};
  EXPECT_EQ(solveVandermonde(one, m1), std::vector<Vector>{u});

  // L = diag(i, -i), u = e1 + e2
  const std::vector<Scalar> ev{Scalar::i(), -Scalar::i()};
  const std::vector<Vector> moments{{q(1), q(1)}, {Scalar::i(), -Scalar::i()}};
  const auto parts = solveVandermonde(ev, moments);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], (Vector{q(1), q(0)}));
  EXPECT_EQ(parts[1], (Vector{q(0), q(1)}));

  const std::vector<Scalar> repeated{q(1), q(1)};
  EXPECT_THROW(solveVandermonde(repeated, moments), SingularError);
  EXPECT_THROW(solveVandermonde(ev, m1), DimensionError);
}

TEST(Vandermonde, ComponentsAreEigenvectorsSummingToInput) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    // L = S D S^-1 with distinct eigenvalues 0, i, 2i, -i on a 4-space
    const std::vector<Scalar> ev{q(0), cx(0, 1), cx(0, 2), cx(0, -1)};
    const Matrix s = oracle::randomOfRank(rng, 4, 4, 4);
    Matrix dg(4, 4);
    for (std::size_t j = 0; j < 4; ++j) dg(j, j) = ev[j];
    const Matrix l = s * dg * inverse(s);
    Vector u = oracle::random(rng, 4, 1).column(0);
    std::vector<Vector> moments{u};
    for (int r = 1; r < 4; ++r) moments.push_back(l * moments.back());
    const auto parts = solveVandermonde(ev, moments);
    Vector sum(4);
    for (std::size_t j = 0; j < 4; ++j) {
      const Vector lv = l * parts[j];
      for (std::size_t c = 0; c < 4; ++c) {
        EXPECT_EQ(lv[c], ev[j] * parts[j][c]);
        sum[c] += parts[j][c];
      }
    }
    EXPECT_EQ(sum, u);
  }
}
