#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bgc/matrix.hpp"

namespace bgc {

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Inverse of a square matrix; throws SingularError when it does not exist.
Matrix inverse(const Matrix& m);

Scalar determinant(const Matrix& m);
/// True when the Hermitian matrix h has only positive leading pivots in an
/// unpivoted LDL^H elimination, i.e. h is positive definite.
bool isPositiveDefinite(const Matrix& h);
/// Some x with a * x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// A linear subspace of C^n held by its unique reduced column echelon basis:
/// each basis column has a leading 1 in a distinct pivot row and every other
/// basis column is zero in that row. Two Subspace values are equal exactly
/// when they span the same space.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  /// Column span of `columns` (ambient = columns.rows()).
  static Subspace span(const Matrix& columns);
  static Subspace span(std::size_t ambient, std::span<const Vector> vectors);

  std::size_t ambientDim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  bool isZero() const { return dim() == 0; }
  bool isFull() const { return dim() == ambient_; }

  /// ambient x dim, reduced column echelon.
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivotRows() const { return pivotRows_; }

  /// v minus its projection along the canonical basis; zero iff v is in the subspace.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivotRows_(std::move(pivots)) {}

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivotRows_;
};

/// {v : m v = 0}, a subspace of C^{m.cols()}.
Subspace kernelBasis(const Matrix& m);
/// Column span of m, a subspace of C^{m.rows()}.
Subspace imageBasis(const Matrix& m);
/// m applied to every vector of s.
Subspace imageOf(const Matrix& m, const Subspace& s);
/// {v : m v in target}.
Subspace preimage(const Matrix& m, const Subspace& target);

Subspace subspaceSum(const Subspace& u, const Subspace& w);
/// Intersection through the kernel of the block system [B_u | -B_w].
Subspace subspaceIntersection(const Subspace& u, const Subspace& w);
/// dim big - dim small; throws PreconditionError unless small is contained in big.
std::size_t quotientDim(const Subspace& big, const Subspace& small);

/// Canonical representatives of big/small: the canonical basis columns of
/// `big`, scanned left to right, that are independent modulo `small` and the
/// columns already chosen. Requires small to be contained in big.
Matrix quotientRepresentatives(const Subspace& big, const Subspace& small);

/// Splits u = sum_q v_q into eigencomponents of a diagonalizable L with
/// L v_q = eigenvalues[q] v_q, given moments[r] = L^r u for r < m, by
/// inverting the Vandermonde system a_{rq} = eigenvalues[q]^r.
/// Throws SingularError on repeated eigenvalues and DimensionError when
/// moments and eigenvalues disagree in number.
std::vector<Vector> solveVandermonde(std::span<const Scalar> eigenvalues, std::span<const Vector> moments);

}  // namespace bgc
