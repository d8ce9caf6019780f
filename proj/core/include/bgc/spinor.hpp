#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bgc/double_complex.hpp"
#include "bgc/linalg.hpp"

namespace bgc {

/// Exterior algebra of (C^{2n})^* with coordinates x^0..x^{2n-1}.
///
/// Basis: dx^S for sorted subsets S, ordered lexicographically as index
/// sequences (1, dx0, dx0dx1, dx0dx1dx2, ..., dx1, ...). Subsets are stored as
/// bitmasks. Signs: dx^j ^ dx^S and i_{d_j} dx^S both carry (-1)^{#{s in S : s < j}}.
class SpinorSpace {
 public:
  explicit SpinorSpace(int n);

  int n() const { return n_; }
  /// Real dimension 2n of the base.
  int realDim() const { return 2 * n_; }
  std::size_t dim() const { return masks_.size(); }
  /// Dimension 4n of the generalized tangent fiber.
  std::size_t fiberDim() const { return 4 * static_cast<std::size_t>(n_); }

  std::uint32_t mask(std::size_t index) const { return masks_[index]; }
  std::size_t indexOf(std::uint32_t mask) const { return index_[mask]; }
  int degree(std::size_t index) const;
  std::size_t topIndex() const { return indexOf((1u << realDim()) - 1); }
  /// "1", "dx", "dx^dy", or "dx1^dy2" style names (x,y per complex coordinate).
  std::string label(std::size_t index) const;
  std::string coordinateName(int j) const;

  /// Matrix of e . (X + xi) acting by i_X + xi ^, e in the ordered basis
  /// d_0..d_{2n-1}, dx^0..dx^{2n-1}.
  Matrix clifford(const Vector& e) const;
  Vector act(const Vector& e, const Vector& phi) const;

  Matrix wedgeMatrix(int j) const;
  Matrix contractMatrix(int j) const;
  /// alpha ^ beta for arbitrary forms.
  Vector wedge(const Vector& alpha, const Vector& beta) const;

  Vector basisForm(std::size_t index) const;
  /// Generalized vector d_j or dx^j.
  Vector partial(int j) const;
  Vector dx(int j) const;

 private:
  int n_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::size_t> index_;
};

/// <X+xi, Y+eta> = (xi(Y) + eta(X)) / 2.
Scalar naturalPairing(const Vector& u, const Vector& v);
/// 4n x 4n Gram matrix of the natural pairing, so <u,v> = u^T P v.
Matrix pairingMatrix(int n);

/// Every failed identity for a generalized complex structure, empty if none.
std::vector<std::string> generalizedComplexViolations(const Matrix& j, int n);

/// L = ker(J - i). Throws PreconditionError naming the violated identity
/// when J^2 != -1 or J does not preserve the pairing.
Subspace iEigenbundle(const Matrix& j, int n);

/// The joint annihilator of L under Clifford action (the pure-spinor line).
/// Throws PreconditionError if it is not one-dimensional.
Subspace canonicalLine(const SpinorSpace& s, const Matrix& j);

/// U^p for p in [-n, n].
struct Grading {
  std::map<int, Subspace> pieces;

  const Subspace& at(int p) const { return pieces.at(p); }
};

/// U^{p,q} keyed by (p,q); absent keys are zero spaces.
struct JointGrading {
  std::map<Bidegree, Subspace> pieces;
  std::size_t ambient = 0;

  std::size_t dim(Bidegree b) const;
  Subspace at(Bidegree b) const;
  std::size_t totalDim() const;
  /// Columns are the slice bases concatenated in key order.
  Matrix adaptedBasis() const;
  /// Column offset of each slice inside adaptedBasis().
  std::map<Bidegree, std::size_t> offsets() const;
};

/// U^{n-k} = span of lbar_{i1} . ... . lbar_{ik} . U^n over i1 < ... < ik.
/// `flip` exchanges U^p and U^{-p} globally.
Grading uGrading(const SpinorSpace& s, const Matrix& j, bool flip = false);

/// The operator acting by i p on U^p.
Matrix gradingOperator(const SpinorSpace& s, const Grading& g);

/// U^{p,q} = U^p_1 n U^q_2 for commuting J1, J2.
JointGrading jointGrading(const SpinorSpace& s, const Matrix& j1, const Matrix& j2, bool flip = false);
/// Same decomposition obtained by splitting each U^q_2 basis vector into
/// eigencomponents of the grading operator of J1 with solveVandermonde.
JointGrading vandermondeJointGrading(const SpinorSpace& s, const Matrix& j1, const Matrix& j2, bool flip = false);

/// Degree-a part scaled by (-1)^{a/2} (a even) or (-1)^{(a-1)/2} (a odd).
Vector sigma(const SpinorSpace& s, const Vector& alpha);
/// Degree-a part scaled by (-1)^{a/2} (a even) or (-1)^{(a+1)/2} (a odd).
Vector tildeSigma(const SpinorSpace& s, const Vector& alpha);
/// -sum_j (-1)^j (a^{2j} ^ b^{2n-2j} + a^{2j+1} ^ b^{2n-2j-1}), as the
/// coefficient of dx^0 ^ ... ^ dx^{2n-1}. Bilinear (no conjugation).
Scalar chevalleyPairing(const SpinorSpace& s, const Vector& alpha, const Vector& beta);
/// K with (alpha, beta)_Ch = alpha^T K beta.
Matrix chevalleyMatrix(const SpinorSpace& s);

/// Matrix of -e_{2n} . ... . e_1 for a positive orthonormal basis of V_+ = ker(G - 1).
/// Throws PreconditionError if G is not a generalized metric and
/// NotRationalError if normalizing V_+ leaves Q(i).
Matrix hodgeStar(const SpinorSpace& s, const Matrix& g);
/// The same product for a caller-chosen basis, which must be orthonormal,
/// positively oriented and inside V_+ (checked).
Matrix hodgeStarFromBasis(const SpinorSpace& s, const Matrix& g, const std::vector<Vector>& basis);

/// Every failed generalized-metric identity of G, empty if none.
std::vector<std::string> generalizedMetricViolations(const Matrix& g, int n);

}  // namespace bgc
