#include "bgc/linalg.hpp"

#include <algorithm>

#include "bgc/errors.hpp"

namespace bgc {

namespace {

// Cheap proxy for pivot quality: prefer units, then small real entries.
std::size_t pivotCost(const Scalar& x) {
  if (x.isOne()) return 0;
  std::size_t cost = mpz_sizeinbase(x.real().get_num_mpz_t(), 2) + mpz_sizeinbase(x.real().get_den_mpz_t(), 2);
  if (!x.isReal()) cost += 1 + mpz_sizeinbase(x.imag().get_num_mpz_t(), 2) + mpz_sizeinbase(x.imag().get_den_mpz_t(), 2);
  return cost;
}

void rrefInPlace(Matrix& a, std::vector<std::size_t>& pivots) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    std::size_t bestCost = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (a(i, c).isZero()) continue;
      std::size_t cost = pivotCost(a(i, c));
      if (best == rows || cost < bestCost) {
        best = i;
        bestCost = cost;
        if (cost == 0) break;
      }
    }
    if (best == rows) continue;
    if (best != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a(best, j), a(r, j));
    if (!a(r, c).isOne()) {
      Scalar inv = a(r, c).inverse();
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).isZero()) a(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).isZero()) continue;
      Scalar factor = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).isZero()) a(i, j).subMul(factor, a(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
}

}  // namespace

RrefResult rref(const Matrix& m) {
  RrefResult out{m, {}};
  rrefInPlace(out.reduced, out.pivots);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix inverse(const Matrix& m) {
  if (!m.isSquare()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RrefResult r = rref(hstack(m, Matrix::identity(n)));
  if (r.rank() < n || (n > 0 && r.pivots[n - 1] != n - 1)) throw SingularError("matrix is singular");
  return r.reduced.block(0, n, n, n);
}

Scalar determinant(const Matrix& m) {
  if (!m.isSquare()) throw DimensionError("determinant of a non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a(r, c).isZero()) ++r;
    if (r == n) return Scalar(0);
    if (r != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a(r, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const Scalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).isZero()) continue;
      const Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j).subMul(f, a(c, j));
    }
  }
  return det;
}

bool isPositiveDefinite(const Matrix& h) {
  if (!h.isSquare() || h != h.adjointH()) return false;
  Matrix a = h;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    // Hermitian, so the pivot is real; a positive definite leading block keeps it positive.
    if (!a(c, c).isReal() || sgn(a(c, c).real()) <= 0) return false;
    const Scalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).isZero()) continue;
      const Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j).subMul(f, a(c, j));
    }
  }
  return true;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw DimensionError("solve: right-hand side length mismatch");
  RrefResult r = rref(hstack(a, Matrix::columnVector(b)));
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t i = 0; i < r.rank(); ++i) x[r.pivots[i]] = r.reduced(i, a.cols());
  return x;
}

Subspace Subspace::zero(std::size_t ambient) { return {ambient, Matrix(ambient, 0), {}}; }

Subspace Subspace::full(std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return {ambient, Matrix::identity(ambient), std::move(pivots)};
}

Subspace Subspace::span(const Matrix& columns) {
  RrefResult r = rref(columns.transpose());
  Matrix basis(columns.rows(), r.rank());
  for (std::size_t j = 0; j < r.rank(); ++j)
    for (std::size_t i = 0; i < columns.rows(); ++i) basis(i, j) = r.reduced(j, i);
  return {columns.rows(), std::move(basis), std::move(r.pivots)};
}

Subspace Subspace::span(std::size_t ambient, std::span<const Vector> vectors) {
  return span(Matrix::fromColumns(ambient, vectors));
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_) throw DimensionError("vector length differs from ambient dimension");
  for (std::size_t j = 0; j < pivotRows_.size(); ++j) {
    Scalar coeff = v[pivotRows_[j]];
    if (coeff.isZero()) continue;
    for (std::size_t i = 0; i < ambient_; ++i)
      if (!basis_(i, j).isZero()) v[i].subMul(coeff, basis_(i, j));
  }
  return v;
}

bool Subspace::contains(const Vector& v) const {
  Vector rest = reduce(v);
  return std::all_of(rest.begin(), rest.end(), [](const Scalar& x) { return x.isZero(); });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("ambient dimension mismatch");
  if (other.dim() > dim()) return false;
  for (std::size_t j = 0; j < other.dim(); ++j)
    if (!contains(other.basis_.column(j))) return false;
  return true;
}

Subspace kernelBasis(const Matrix& m) {
  RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> isPivot(n, false);
  for (auto p : r.pivots) isPivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t free = 0; free < n; ++free) {
    if (isPivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank(); ++i) v[r.pivots[i]] = -r.reduced(i, free);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

Subspace imageBasis(const Matrix& m) { return Subspace::span(m); }

Subspace imageOf(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambientDim()) throw DimensionError("imageOf: map domain differs from subspace ambient");
  return Subspace::span(m * s.basis());
}

Subspace preimage(const Matrix& m, const Subspace& target) {
  if (m.rows() != target.ambientDim()) throw DimensionError("preimage: map codomain differs from subspace ambient");
  // {v : m v in T} = first block of ker [m | -B_T]
  Matrix system = hstack(m, -target.basis());
  Subspace joint = kernelBasis(system);
  return Subspace::span(joint.basis().block(0, 0, m.cols(), joint.dim()));
}

Subspace subspaceSum(const Subspace& u, const Subspace& w) {
  if (u.ambientDim() != w.ambientDim()) throw DimensionError("subspaceSum: ambient dimension mismatch");
  if (u.isZero()) return w;
  if (w.isZero()) return u;
  return Subspace::span(hstack(u.basis(), w.basis()));
}

Subspace subspaceIntersection(const Subspace& u, const Subspace& w) {
  if (u.ambientDim() != w.ambientDim()) throw DimensionError("subspaceIntersection: ambient dimension mismatch");
  if (u.isZero() || w.isZero()) return Subspace::zero(u.ambientDim());
  if (u.isFull()) return w;
  if (w.isFull()) return u;
  Subspace coeffs = kernelBasis(hstack(u.basis(), -w.basis()));
  return Subspace::span(u.basis() * coeffs.basis().block(0, 0, u.dim(), coeffs.dim()));
}

std::size_t quotientDim(const Subspace& big, const Subspace& small) {
  if (!big.contains(small)) throw PreconditionError("quotientDim: subspace is not contained in the ambient subspace");
  return big.dim() - small.dim();
}

Matrix quotientRepresentatives(const Subspace& big, const Subspace& small) {
  if (!big.contains(small)) throw PreconditionError("quotientRepresentatives: containment violated");
  std::vector<Vector> chosen;
  Subspace acc = small;
  for (std::size_t j = 0; j < big.dim() && acc.dim() < big.dim(); ++j) {
    Vector v = big.basis().column(j);
    if (acc.contains(v)) continue;
    chosen.push_back(v);
    acc = subspaceSum(acc, Subspace::span(Matrix::columnVector(v)));
  }
  return Matrix::fromColumns(big.ambientDim(), chosen);
}

std::vector<Vector> solveVandermonde(std::span<const Scalar> eigenvalues, std::span<const Vector> moments) {
  const std::size_t m = eigenvalues.size();
  if (moments.size() != m) throw DimensionError("solveVandermonde: need one moment per eigenvalue");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (eigenvalues[a] == eigenvalues[b]) throw SingularError("solveVandermonde: repeated eigenvalue " + eigenvalues[a].toString());
  if (m == 0) return {};
  const std::size_t len = moments[0].size();
  Matrix vander(m, m);
  for (std::size_t q = 0; q < m; ++q) {
    Scalar power = 1;
    for (std::size_t r = 0; r < m; ++r) {
      vander(r, q) = power;
      power *= eigenvalues[q];
    }
  }
  Matrix inv = inverse(vander);
  std::vector<Vector> components(m, Vector(len));
  for (std::size_t q = 0; q < m; ++q)
    for (std::size_t r = 0; r < m; ++r) {
      if (moments[r].size() != len) throw DimensionError("solveVandermonde: moment length mismatch");
      if (inv(q, r).isZero()) continue;
      for (std::size_t i = 0; i < len; ++i) components[q][i].addMul(inv(q, r), moments[r][i]);
    }
  return components;
}

}  // namespace bgc
