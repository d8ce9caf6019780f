#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "bgc/errors.hpp"
#include "bgc/flat_model.hpp"
#include "bgc/spinor.hpp"
#include "oracles.hpp"

using namespace bgc;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

// Clifford action straight from the bitmask rule: the sign is the parity of
// the number of indices below j.
Matrix cliffordOracle(const SpinorSpace& s, const Vector& e) {
  const int m = s.realDim();
  Matrix out(s.dim(), s.dim());
  for (std::size_t col = 0; col < s.dim(); ++col) {
    const std::uint32_t S = s.mask(col);
    for (int j = 0; j < m; ++j) {
      const int below = std::popcount(S & ((1u << j) - 1));
      const Scalar sign(below % 2 ? -1 : 1);
      const std::uint32_t bit = 1u << j;
      if ((S & bit) && !e[j].isZero()) out(s.indexOf(S ^ bit), col) += sign * e[j];
      if (!(S & bit) && !e[m + j].isZero()) out(s.indexOf(S | bit), col) += sign * e[m + j];
    }
  }
  return out;
}

Vector add(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
Vector scale(Vector a, const Scalar& z) {
  for (auto& x : a) x *= z;
  return a;
}

Subspace conjugate(const Subspace& u) { return Subspace::span(u.basis().conj()); }

Vector randomGeneralized(std::mt19937_64& rng, int n) { return oracle::random(rng, 4 * n, 1).column(0); }

}  // namespace

TEST(SpinorSpace, BasisOrderingIsLexicographic) {
  const SpinorSpace s(1);
  ASSERT_EQ(s.dim(), 4u);
  EXPECT_EQ(s.label(0), "1");
  EXPECT_EQ(s.label(1), "dx");
  EXPECT_EQ(s.label(2), "dx^dy");
  EXPECT_EQ(s.label(3), "dy");
  EXPECT_EQ(SpinorSpace(2).dim(), 16u);
}

TEST(Clifford, DefinitionCases) {
  const SpinorSpace s(1);
  const Vector one = s.basisForm(s.indexOf(0));
  EXPECT_EQ(s.act(s.partial(0), one), Vector(4));
  EXPECT_EQ(s.act(s.dx(0), one), s.basisForm(s.indexOf(1)));
}

TEST(Clifford, SignExample) {
  const SpinorSpace s(1);
  const Vector e = add(s.partial(1), s.dx(1));
  const Vector dxdy = s.basisForm(s.indexOf(0b11));
  EXPECT_EQ(s.act(e, s.basisForm(s.indexOf(0b01))), scale(dxdy, q(-1)));
}

TEST(Clifford, MatchesBitmaskOracle) {
  std::mt19937_64 rng(61);
  for (int n : {1, 2}) {
    const SpinorSpace s(n);
    for (int t = 0; t < 10; ++t) {
      const Vector e = randomGeneralized(rng, n);
      EXPECT_EQ(s.clifford(e), cliffordOracle(s, e));
    }
  }
}

TEST(Clifford, SquaresToPairing) {
  const SpinorSpace s(1);
  const Vector e = add(s.partial(0), s.dx(0));
  EXPECT_EQ(s.clifford(e) * s.clifford(e), Matrix::identity(4));

  std::mt19937_64 rng(67);
  for (int n : {1, 2}) {
    const SpinorSpace sp(n);
    for (int t = 0; t < 8; ++t) {
      const Vector u = randomGeneralized(rng, n), v = randomGeneralized(rng, n);
      EXPECT_EQ(anticommutator(sp.clifford(u), sp.clifford(v)),
                Matrix::identity(sp.dim()) * (q(2) * naturalPairing(u, v)));
    }
  }
}

TEST(Pairing, Examples) {
  const SpinorSpace s(1);
  EXPECT_EQ(naturalPairing(s.partial(0), s.dx(0)), q(1, 2));
  EXPECT_EQ(naturalPairing(s.partial(0), s.partial(1)), q(0));
  const Vector e = add(s.partial(0), s.dx(0));
  EXPECT_EQ(naturalPairing(e, e), q(1));
  const Matrix p = pairingMatrix(1);
  EXPECT_EQ(p, p.transpose());
  EXPECT_EQ(determinant(p), q(1, 16));
}

TEST(Eigenbundle, MaximalIsotropic) {
  for (const auto& m : {planeModel(0, 1, -1, 0, 1, -1), fourSpaceModel()}) {
    for (const Matrix& j : {m.j1, m.j2}) {
      const Subspace l = iEigenbundle(j, m.n);
      EXPECT_EQ(l.dim(), static_cast<std::size_t>(2 * m.n));
      const Matrix gram = l.basis().transpose() * pairingMatrix(m.n) * l.basis();
      EXPECT_TRUE(gram.isZero());
      EXPECT_EQ(iEigenbundle(-j, m.n), conjugate(l));
    }
  }
}

TEST(Eigenbundle, RejectsBadStructure) {
  Matrix j = Matrix::identity(4);
  EXPECT_THROW(iEigenbundle(j, 1), PreconditionError);
  EXPECT_FALSE(generalizedComplexViolations(j, 1).empty());
}

TEST(CanonicalLine, ComplexTypeIsDz) {
  const SpinorSpace s(1);
  const auto m = planeModel(0, 1, -1, 0, 1, -1);
  const Subspace line = canonicalLine(s, m.j2);
  ASSERT_EQ(line.dim(), 1u);
  const Vector dz = add(s.basisForm(s.indexOf(0b01)), scale(s.basisForm(s.indexOf(0b10)), Scalar::i()));
  EXPECT_TRUE(line.contains(dz));
}

TEST(CanonicalLine, SymplecticTypeIsMixedDegree) {
  const SpinorSpace s(1);
  const Subspace line = canonicalLine(s, planeModel(0, 1, -1, 0, 1, -1).j1);
  ASSERT_EQ(line.dim(), 1u);
  const Vector v = line.basis().column(0);
  EXPECT_FALSE(v[s.indexOf(0)].isZero());
  EXPECT_FALSE(v[s.indexOf(0b11)].isZero());
  EXPECT_TRUE(v[s.indexOf(0b01)].isZero());
}

TEST(CanonicalLine, FourSpaceJ2IsDz1Dz2) {
  const SpinorSpace s(2);
  const Subspace line = canonicalLine(s, fourSpaceModel().j2);
  ASSERT_EQ(line.dim(), 1u);
  // dz1 ^ dz2 with z_j = x_j + i y_j, coordinates (x1,y1,x2,y2) = bits 0..3
  const Vector dz1 = add(s.basisForm(s.indexOf(0b0001)), scale(s.basisForm(s.indexOf(0b0010)), Scalar::i()));
  const Vector dz2 = add(s.basisForm(s.indexOf(0b0100)), scale(s.basisForm(s.indexOf(0b1000)), Scalar::i()));
  EXPECT_TRUE(line.contains(s.wedge(dz1, dz2)));
}

TEST(Grading, BinomialDimensions) {
  const auto plane = planeModel(0, 1, -1, 0, 1, -1);
  const SpinorSpace s1(1);
  const Grading g1 = uGrading(s1, plane.j2);
  EXPECT_EQ(g1.at(1).dim(), 1u);
  EXPECT_EQ(g1.at(0).dim(), 2u);
  EXPECT_EQ(g1.at(-1).dim(), 1u);
  EXPECT_TRUE(g1.at(0).contains(s1.basisForm(s1.indexOf(0))));
  EXPECT_TRUE(g1.at(0).contains(s1.basisForm(s1.indexOf(0b11))));

  const SpinorSpace s2(2);
  const Grading g2 = uGrading(s2, fourSpaceModel().j2);
  const std::size_t binom[] = {1, 4, 6, 4, 1};
  for (int p = -2; p <= 2; ++p) EXPECT_EQ(g2.at(p).dim(), binom[2 - p]);
}

TEST(Grading, ConjugationFlipsDegree) {
  for (const auto& m : {planeModel(0, 1, -1, 0, 1, -1), fourSpaceModel()}) {
    const SpinorSpace s(m.n);
    for (const Matrix& j : {m.j1, m.j2}) {
      const Grading g = uGrading(s, j);
      for (int p = -m.n; p <= m.n; ++p) EXPECT_EQ(conjugate(g.at(p)), g.at(-p));
    }
    const JointGrading jg = jointGrading(s, m.j1, m.j2);
    for (const auto& [b, u] : jg.pieces) EXPECT_EQ(conjugate(u), jg.at({-b.p, -b.q})) << to_string(b);
  }
}

TEST(Grading, FlipExchangesDegrees) {
  const SpinorSpace s(1);
  const Matrix j = planeModel(0, 1, -1, 0, 1, -1).j2;
  EXPECT_EQ(uGrading(s, j, true).at(1), uGrading(s, j).at(-1));
}

TEST(Grading, OperatorActsByIp) {
  const SpinorSpace s(2);
  const Grading g = uGrading(s, fourSpaceModel().j1);
  const Matrix op = gradingOperator(s, g);
  for (int p = -2; p <= 2; ++p)
    EXPECT_EQ(op * g.at(p).basis(), g.at(p).basis() * Scalar(Rational(0), Rational(p)));
}

TEST(JointGrading, PlaneTable) {
  const auto m = planeModel(0, 1, -1, 0, 1, -1);
  const JointGrading jg = jointGrading(SpinorSpace(1), m.j1, m.j2);
  for (int p = -1; p <= 1; ++p)
    for (int qq = -1; qq <= 1; ++qq)
      EXPECT_EQ(jg.dim({p, qq}), (std::abs(p) + std::abs(qq) == 1) ? 1u : 0u) << p << "," << qq;
  EXPECT_EQ(jg.totalDim(), 4u);
}

TEST(JointGrading, FourSpaceTable) {
  const auto m = fourSpaceModel();
  const JointGrading jg = jointGrading(SpinorSpace(2), m.j1, m.j2);
  EXPECT_EQ(jg.dim({0, 0}), 4u);
  for (int a : {-1, 1})
    for (int b : {-1, 1}) EXPECT_EQ(jg.dim({a, b}), 2u);
  for (auto b : {Bidegree{2, 0}, Bidegree{-2, 0}, Bidegree{0, 2}, Bidegree{0, -2}}) EXPECT_EQ(jg.dim(b), 1u);
  EXPECT_EQ(jg.totalDim(), 16u);
  EXPECT_EQ(oracle::rankOf(jg.adaptedBasis()), 16u);
}

TEST(JointGrading, SelfPairIsDiagonal) {
  const auto m = fourSpaceModel();
  const SpinorSpace s(2);
  const JointGrading jg = jointGrading(s, m.j2, m.j2);
  const Grading g = uGrading(s, m.j2);
  for (int p = -2; p <= 2; ++p)
    for (int qq = -2; qq <= 2; ++qq) {
      if (p == qq)
        EXPECT_EQ(jg.at({p, p}), g.at(p));
      else
        EXPECT_EQ(jg.dim({p, qq}), 0u);
    }
}

TEST(JointGrading, VandermondeCrossCheck) {
  for (const auto& m : {planeModel(0, 1, -1, 0, 1, -1), planeModel(1, 1, -2, 0, 1, -1), fourSpaceModel()}) {
    const SpinorSpace s(m.n);
    const JointGrading a = jointGrading(s, m.j1, m.j2), b = vandermondeJointGrading(s, m.j1, m.j2);
    for (const auto& [k, u] : a.pieces) EXPECT_EQ(u, b.at(k)) << to_string(k);
    for (const auto& [k, u] : b.pieces) EXPECT_EQ(u, a.at(k)) << to_string(k);
  }
}

TEST(Sigma, DegreeSigns) {
  const SpinorSpace s(2);
  const int signs[] = {1, 1, -1, -1, 1};
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Vector b = s.basisForm(i);
    EXPECT_EQ(sigma(s, b), scale(b, q(signs[s.degree(i)])));
  }
  // tilde: odd degrees shift by one
  const int tilde[] = {1, -1, -1, 1, 1};
  for (std::size_t i = 0; i < s.dim(); ++i) EXPECT_EQ(tildeSigma(s, s.basisForm(i)), scale(s.basisForm(i), q(tilde[s.degree(i)])));
}

TEST(Chevalley, Examples) {
  const SpinorSpace s(1);
  EXPECT_EQ(chevalleyPairing(s, s.basisForm(s.indexOf(0)), s.basisForm(s.indexOf(0b11))), q(-1));
}

TEST(Chevalley, TopDegreeFormula) {
  for (int n : {1, 2}) {
    const SpinorSpace s(n);
    const Matrix k = chevalleyMatrix(s);
    for (std::size_t a = 0; a < s.dim(); ++a)
      for (std::size_t b = 0; b < s.dim(); ++b) {
        const Vector top = s.wedge(sigma(s, s.basisForm(a)), s.basisForm(b));
        EXPECT_EQ(chevalleyPairing(s, s.basisForm(a), s.basisForm(b)), -top[s.topIndex()]);
        EXPECT_EQ(k(a, b), -top[s.topIndex()]);
      }
  }
}

TEST(Chevalley, SymmetryRegression) {
  // (a,b) = (-1)^n (b,a) in these dimensions; recorded, not a claim of the API
  const SpinorSpace s(1);
  EXPECT_EQ(chevalleyMatrix(s).transpose(), -chevalleyMatrix(s));
  const SpinorSpace s2(2);
  EXPECT_EQ(chevalleyMatrix(s2).transpose(), chevalleyMatrix(s2));
}

TEST(HodgeStar, StandardPlane) {
  const SpinorSpace s(1);
  Matrix g(4, 4);
  for (int j = 0; j < 2; ++j) g(j, 2 + j) = g(2 + j, j) = 1;
  EXPECT_TRUE(generalizedMetricViolations(g, 1).empty());
  const Matrix star = hodgeStar(s, g);
  EXPECT_EQ(star * s.basisForm(s.indexOf(0)), s.basisForm(s.indexOf(0b11)));
  // regression: the square is -1 on every degree for n = 1
  EXPECT_EQ(star * star, -Matrix::identity(4));

  // a rotated positive orthonormal basis of V+ gives the same operator
  const Vector e1 = add(s.partial(0), s.dx(0)), e2 = add(s.partial(1), s.dx(1));
  const std::vector<Vector> rotated{add(scale(e1, q(3, 5)), scale(e2, q(4, 5))),
                                    add(scale(e1, q(-4, 5)), scale(e2, q(3, 5)))};
  EXPECT_EQ(hodgeStarFromBasis(s, g, rotated), star);
  const std::vector<Vector> negative{e2, e1};
  EXPECT_THROW(hodgeStarFromBasis(s, g, negative), PreconditionError);
}

TEST(HodgeStar, FourSpaceMetric) {
  const auto m = fourSpaceModel();
  const SpinorSpace s(2);
  EXPECT_TRUE(generalizedMetricViolations(m.g, 2).empty());
  // <G e, e> = |X|^2 + |xi|^2 for the swap
  std::mt19937_64 rng(71);
  for (int t = 0; t < 10; ++t) {
    const Vector e = oracle::random(rng, 8, 1, 3, false).column(0);
    Scalar norm;
    for (const auto& x : e) norm += x * x;
    EXPECT_EQ(q(2) * naturalPairing(m.g * e, e), norm);
  }
  const Matrix star = hodgeStar(s, m.g);
  EXPECT_EQ(star.rows(), 16u);
  EXPECT_EQ(star * star, Matrix::identity(16));
}

TEST(HodgeStar, RejectsNonPositiveMetric) {
  Matrix g(4, 4);
  for (int j = 0; j < 2; ++j) g(j, 2 + j) = g(2 + j, j) = -1;
  EXPECT_THROW(hodgeStar(SpinorSpace(1), g), PreconditionError);
}
