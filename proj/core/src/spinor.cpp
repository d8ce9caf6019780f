#include "bgc/spinor.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "bgc/errors.hpp"

namespace bgc {

namespace {

int belowCount(std::uint32_t s, int j) { return std::popcount(s & ((1u << j) - 1u)); }

// Sign of dx^A ^ dx^B relative to dx^{A u B}: one flip per pair a > b.
int mergeSign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (std::uint32_t rest = b; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  return swaps % 2 ? -1 : 1;
}

int floorHalfSign(int d) { return (d / 2) % 2 ? -1 : 1; }

std::vector<std::uint32_t> lexOrderedMasks(int realDim) {
  std::vector<std::uint32_t> masks(std::size_t{1} << realDim);
  for (std::size_t m = 0; m < masks.size(); ++m) masks[m] = static_cast<std::uint32_t>(m);
  // Sorted index sequences compared lexicographically, prefixes first.
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    while (a && b) {
      const int ia = std::countr_zero(a), ib = std::countr_zero(b);
      if (ia != ib) return ia < ib;
      a &= a - 1;
      b &= b - 1;
    }
    return a == 0 && b != 0;
  });
  return masks;
}

Rational exactSqrt(const Rational& x) {
  if (sgn(x) < 0 || !mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t()))
    throw NotRationalError("normalization needs sqrt(" + x.get_str() + "), which is not rational");
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), x.get_den_mpz_t());
  return Rational(num, den);
}

std::string entryNote(const Matrix& diff) {
  for (std::size_t r = 0; r < diff.rows(); ++r)
    for (std::size_t c = 0; c < diff.cols(); ++c)
      if (!diff(r, c).isZero()) return " (first mismatch at entry (" + std::to_string(r) + "," + std::to_string(c) + "))";
  return "";
}

void requireShape(const Matrix& m, int n, const char* name) {
  const std::size_t d = 4 * static_cast<std::size_t>(n);
  if (m.rows() != d || m.cols() != d)
    throw DimensionError(std::string(name) + " must be " + std::to_string(d) + "x" + std::to_string(d));
}

Scalar dot(const Vector& a, const Vector& b) {
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i) s.addMul(a[i], b[i]);
  return s;
}

Vector scaled(Vector v, const Scalar& k) {
  for (auto& x : v) x *= k;
  return v;
}

Vector conjugate(Vector v) {
  for (auto& x : v) x = x.conj();
  return v;
}

Scalar tmDeterminant(const std::vector<Vector>& basis, std::size_t realDim) {
  Matrix proj(realDim, basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t r = 0; r < realDim; ++r) proj(r, c) = basis[c][r];
  return determinant(proj);
}

Matrix cliffordProductStar(const SpinorSpace& s, const std::vector<Vector>& basis) {
  // -e_{2n} ... e_1 : e_1 acts first.
  Matrix m = Matrix::identity(s.dim());
  for (const auto& e : basis) m = s.clifford(e) * m;
  return -m;
}

}  // namespace

SpinorSpace::SpinorSpace(int n) : n_(n) {
  if (n < 1 || n > 6) throw PreconditionError("spinor space needs 1 <= n <= 6");
  masks_ = lexOrderedMasks(2 * n);
  index_.assign(masks_.size(), 0);
  for (std::size_t i = 0; i < masks_.size(); ++i) index_[masks_[i]] = i;
}

int SpinorSpace::degree(std::size_t index) const { return std::popcount(masks_[index]); }

std::string SpinorSpace::coordinateName(int j) const {
  const char* xy = (j % 2 == 0) ? "x" : "y";
  return n_ == 1 ? std::string(xy) : xy + std::to_string(j / 2 + 1);
}

std::string SpinorSpace::label(std::size_t index) const {
  std::uint32_t m = masks_[index];
  if (m == 0) return "1";
  std::string out;
  for (; m; m &= m - 1) {
    if (!out.empty()) out += "^";
    out += "d" + coordinateName(std::countr_zero(m));
  }
  return out;
}

Matrix SpinorSpace::clifford(const Vector& e) const {
  const int N = realDim();
  if (e.size() != fiberDim()) throw DimensionError("generalized vector has wrong length");
  Matrix m(dim(), dim());
  for (std::size_t col = 0; col < dim(); ++col) {
    const std::uint32_t s = masks_[col];
    for (int j = 0; j < N; ++j) {
      const int sign = belowCount(s, j) % 2 ? -1 : 1;
      const std::uint32_t bit = 1u << j;
      if ((s & bit) && !e[j].isZero()) m(index_[s & ~bit], col) += sign == 1 ? e[j] : -e[j];
      if (!(s & bit) && !e[N + j].isZero()) m(index_[s | bit], col) += sign == 1 ? e[N + j] : -e[N + j];
    }
  }
  return m;
}

Vector SpinorSpace::act(const Vector& e, const Vector& phi) const {
  if (phi.size() != dim()) throw DimensionError("spinor has wrong length");
  return clifford(e) * phi;
}

Matrix SpinorSpace::wedgeMatrix(int j) const { return clifford(dx(j)); }
Matrix SpinorSpace::contractMatrix(int j) const { return clifford(partial(j)); }

Vector SpinorSpace::wedge(const Vector& alpha, const Vector& beta) const {
  Vector out(dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    if (alpha[a].isZero()) continue;
    for (std::size_t b = 0; b < dim(); ++b) {
      if (beta[b].isZero() || (masks_[a] & masks_[b])) continue;
      const Scalar term = alpha[a] * beta[b];
      auto& slot = out[index_[masks_[a] | masks_[b]]];
      if (mergeSign(masks_[a], masks_[b]) == 1)
        slot += term;
      else
        slot -= term;
    }
  }
  return out;
}

Vector SpinorSpace::basisForm(std::size_t index) const {
  Vector v(dim());
  v.at(index) = 1;
  return v;
}

Vector SpinorSpace::partial(int j) const {
  Vector v(fiberDim());
  v.at(j) = 1;
  return v;
}

Vector SpinorSpace::dx(int j) const {
  Vector v(fiberDim());
  v.at(realDim() + j) = 1;
  return v;
}

Scalar naturalPairing(const Vector& u, const Vector& v) {
  if (u.size() != v.size() || u.size() % 2) throw DimensionError("pairing of mismatched generalized vectors");
  const std::size_t N = u.size() / 2;
  Scalar s;
  for (std::size_t j = 0; j < N; ++j) {
    s.addMul(u[N + j], v[j]);
    s.addMul(v[N + j], u[j]);
  }
  return s * Scalar(Rational(1, 2));
}

Matrix pairingMatrix(int n) {
  const std::size_t N = 2 * static_cast<std::size_t>(n);
  Matrix p(2 * N, 2 * N);
  for (std::size_t j = 0; j < N; ++j) {
    p(j, N + j) = Scalar(Rational(1, 2));
    p(N + j, j) = Scalar(Rational(1, 2));
  }
  return p;
}

std::vector<std::string> generalizedComplexViolations(const Matrix& j, int n) {
  std::vector<std::string> out;
  const std::size_t d = 4 * static_cast<std::size_t>(n);
  if (j.rows() != d || j.cols() != d) {
    out.push_back("shape: expected " + std::to_string(d) + "x" + std::to_string(d));
    return out;
  }
  const Matrix sq = j * j + Matrix::identity(d);
  if (!sq.isZero()) out.push_back("J^2 = -1 fails" + entryNote(sq));
  const Matrix p = pairingMatrix(n);
  const Matrix orth = j.transpose() * p * j - p;
  if (!orth.isZero()) out.push_back("<Ju,Jv> = <u,v> fails" + entryNote(orth));
  return out;
}

Subspace iEigenbundle(const Matrix& j, int n) {
  requireShape(j, n, "J");
  auto bad = generalizedComplexViolations(j, n);
  if (!bad.empty()) throw PreconditionError(bad.front());
  const std::size_t d = j.rows();
  Subspace l = kernelBasis(j - Scalar::i() * Matrix::identity(d));
  if (l.dim() != d / 2) throw PreconditionError("+i eigenbundle has dimension " + std::to_string(l.dim()));
  if (!(l.basis().transpose() * pairingMatrix(n) * l.basis()).isZero())
    throw PreconditionError("+i eigenbundle is not isotropic");
  return l;
}

Subspace canonicalLine(const SpinorSpace& s, const Matrix& j) {
  const Subspace l = iEigenbundle(j, s.n());
  Matrix stacked(0, s.dim());
  for (std::size_t c = 0; c < l.dim(); ++c) stacked = vstack(stacked, s.clifford(l.basis().column(c)));
  Subspace line = kernelBasis(stacked);
  if (line.dim() != 1)
    throw PreconditionError("annihilator of L has dimension " + std::to_string(line.dim()) + ", expected 1");
  return line;
}

std::size_t JointGrading::dim(Bidegree b) const {
  auto it = pieces.find(b);
  return it == pieces.end() ? 0 : it->second.dim();
}

Subspace JointGrading::at(Bidegree b) const {
  auto it = pieces.find(b);
  return it == pieces.end() ? Subspace::zero(ambient) : it->second;
}

std::size_t JointGrading::totalDim() const {
  std::size_t t = 0;
  for (const auto& [b, u] : pieces) t += u.dim();
  return t;
}

Matrix JointGrading::adaptedBasis() const {
  Matrix t(ambient, 0);
  for (const auto& [b, u] : pieces) t = hstack(t, u.basis());
  return t;
}

std::map<Bidegree, std::size_t> JointGrading::offsets() const {
  std::map<Bidegree, std::size_t> out;
  std::size_t off = 0;
  for (const auto& [b, u] : pieces) {
    out[b] = off;
    off += u.dim();
  }
  return out;
}

Grading uGrading(const SpinorSpace& s, const Matrix& j, bool flip) {
  const Subspace line = canonicalLine(s, j);
  const Subspace l = iEigenbundle(j, s.n());
  std::vector<Matrix> lbar;
  for (std::size_t c = 0; c < l.dim(); ++c) lbar.push_back(s.clifford(conjugate(l.basis().column(c))));

  const int N = s.realDim();
  std::map<int, std::vector<Vector>> spans;
  // subset bit i <-> lbar[i]; products applied with the highest index first
  for (std::uint32_t subset = 0; subset < (1u << N); ++subset) {
    Vector v = line.basis().column(0);
    for (int i = N - 1; i >= 0; --i)
      if (subset & (1u << i)) v = lbar[i] * v;
    int p = s.n() - std::popcount(subset);
    if (flip) p = -p;
    spans[p].push_back(std::move(v));
  }

  Grading g;
  std::size_t total = 0;
  for (auto& [p, vecs] : spans) {
    Subspace u = Subspace::span(s.dim(), vecs);
    if (u.dim() != vecs.size())
      throw PreconditionError("U^" + std::to_string(p) + " has dimension " + std::to_string(u.dim()) + ", expected " +
                              std::to_string(vecs.size()));
    total += u.dim();
    g.pieces.emplace(p, std::move(u));
  }
  Matrix all(s.dim(), 0);
  for (const auto& [p, u] : g.pieces) all = hstack(all, u.basis());
  if (total != s.dim() || rank(all) != s.dim()) throw PreconditionError("U^p pieces do not span the spinor space");
  return g;
}

Matrix gradingOperator(const SpinorSpace& s, const Grading& g) {
  Matrix t(s.dim(), 0);
  std::vector<Scalar> diag;
  for (const auto& [p, u] : g.pieces) {
    t = hstack(t, u.basis());
    for (std::size_t c = 0; c < u.dim(); ++c) diag.push_back(Scalar(Rational(0), Rational(p)));
  }
  Matrix d(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
  return t * d * inverse(t);
}

namespace {

void requireCommuting(const Matrix& j1, const Matrix& j2) {
  const Matrix c = commutator(j1, j2);
  if (!c.isZero()) throw PreconditionError("J1 J2 = J2 J1 fails" + entryNote(c));
}

}  // namespace

JointGrading jointGrading(const SpinorSpace& s, const Matrix& j1, const Matrix& j2, bool flip) {
  requireCommuting(j1, j2);
  const Grading g1 = uGrading(s, j1, flip);
  const Grading g2 = uGrading(s, j2, flip);
  JointGrading out;
  out.ambient = s.dim();
  for (const auto& [p, u1] : g1.pieces)
    for (const auto& [q, u2] : g2.pieces) {
      Subspace u = subspaceIntersection(u1, u2);
      if (!u.isZero()) out.pieces.emplace(Bidegree{p, q}, std::move(u));
    }
  if (out.totalDim() != s.dim())
    throw PreconditionError("joint grading covers " + std::to_string(out.totalDim()) + " of " + std::to_string(s.dim()) +
                            " dimensions");
  return out;
}

JointGrading vandermondeJointGrading(const SpinorSpace& s, const Matrix& j1, const Matrix& j2, bool flip) {
  requireCommuting(j1, j2);
  const Grading g1 = uGrading(s, j1, flip);
  const Grading g2 = uGrading(s, j2, flip);
  const Matrix l1 = gradingOperator(s, g1);

  std::vector<int> labels;
  std::vector<Scalar> eigenvalues;
  for (const auto& [p, u] : g1.pieces) {
    labels.push_back(p);
    eigenvalues.push_back(Scalar(Rational(0), Rational(p)));
  }

  std::map<Bidegree, std::vector<Vector>> parts;
  for (const auto& [q, u2] : g2.pieces) {
    for (std::size_t c = 0; c < u2.dim(); ++c) {
      std::vector<Vector> moments{u2.basis().column(c)};
      while (moments.size() < eigenvalues.size()) moments.push_back(l1 * moments.back());
      auto comps = solveVandermonde(eigenvalues, moments);
      for (std::size_t k = 0; k < comps.size(); ++k) parts[{labels[k], q}].push_back(std::move(comps[k]));
    }
  }
  JointGrading out;
  out.ambient = s.dim();
  for (auto& [b, vecs] : parts) {
    Subspace u = Subspace::span(s.dim(), vecs);
    if (!u.isZero()) out.pieces.emplace(b, std::move(u));
  }
  return out;
}

Vector sigma(const SpinorSpace& s, const Vector& alpha) {
  Vector out = alpha;
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (floorHalfSign(s.degree(i)) < 0) out[i] = -out[i];
  return out;
}

Vector tildeSigma(const SpinorSpace& s, const Vector& alpha) {
  Vector out = alpha;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const int d = s.degree(i);
    const int sign = d % 2 == 0 ? floorHalfSign(d) : (((d + 1) / 2) % 2 ? -1 : 1);
    if (sign < 0) out[i] = -out[i];
  }
  return out;
}

Matrix chevalleyMatrix(const SpinorSpace& s) {
  const std::uint32_t full = (1u << s.realDim()) - 1u;
  Matrix k(s.dim(), s.dim());
  for (std::size_t a = 0; a < s.dim(); ++a) {
    const std::uint32_t ma = s.mask(a);
    const std::size_t b = s.indexOf(full & ~ma);
    // degree 2j and 2j+1 both carry -(-1)^j
    k(a, b) = -floorHalfSign(s.degree(a)) * mergeSign(ma, full & ~ma);
  }
  return k;
}

Scalar chevalleyPairing(const SpinorSpace& s, const Vector& alpha, const Vector& beta) {
  if (alpha.size() != s.dim() || beta.size() != s.dim()) throw DimensionError("form has wrong length");
  return dot(alpha, chevalleyMatrix(s) * beta);
}

std::vector<std::string> generalizedMetricViolations(const Matrix& g, int n) {
  std::vector<std::string> out;
  const std::size_t d = 4 * static_cast<std::size_t>(n);
  if (g.rows() != d || g.cols() != d) {
    out.push_back("shape: expected " + std::to_string(d) + "x" + std::to_string(d));
    return out;
  }
  if (g != g.conj()) out.push_back("G must be real");
  const Matrix p = pairingMatrix(n);
  const Matrix pg = p * g;
  const Matrix selfAdj = pg - pg.transpose();
  if (!selfAdj.isZero()) out.push_back("G self-adjoint for the pairing fails" + entryNote(selfAdj));
  const Matrix orth = g.transpose() * p * g - p;
  if (!orth.isZero()) out.push_back("G orthogonal for the pairing fails" + entryNote(orth));
  if (selfAdj.isZero() && !isPositiveDefinite(pg)) out.push_back("<Ge,e> > 0 fails");
  return out;
}

Matrix hodgeStar(const SpinorSpace& s, const Matrix& g) {
  requireShape(g, s.n(), "G");
  auto bad = generalizedMetricViolations(g, s.n());
  if (!bad.empty()) throw PreconditionError(bad.front());
  const std::size_t N = static_cast<std::size_t>(s.realDim());
  const Subspace vplus = kernelBasis(g - Matrix::identity(g.rows()));
  if (vplus.dim() != N) throw PreconditionError("V+ has dimension " + std::to_string(vplus.dim()));

  // Gram-Schmidt for the pairing, which is positive on V+.
  std::vector<Vector> f;
  for (std::size_t c = 0; c < N; ++c) {
    Vector v = vplus.basis().column(c);
    for (const auto& prev : f) {
      const Scalar coef = naturalPairing(v, prev) / naturalPairing(prev, prev);
      for (std::size_t i = 0; i < v.size(); ++i) v[i].subMul(coef, prev[i]);
    }
    f.push_back(std::move(v));
  }
  Rational norms(1);
  for (const auto& v : f) norms *= naturalPairing(v, v).real();
  const Rational root = exactSqrt(norms);

  const Scalar det = tmDeterminant(f, N);
  if (det.isZero()) throw PreconditionError("V+ does not project onto TM");
  if (sgn(det.real()) < 0) f.front() = scaled(f.front(), Scalar(-1));
  return cliffordProductStar(s, f) * Scalar(Rational(1) / root);
}

Matrix hodgeStarFromBasis(const SpinorSpace& s, const Matrix& g, const std::vector<Vector>& basis) {
  requireShape(g, s.n(), "G");
  const std::size_t N = static_cast<std::size_t>(s.realDim());
  if (basis.size() != N) throw DimensionError("V+ basis needs " + std::to_string(N) + " vectors");
  for (std::size_t a = 0; a < N; ++a) {
    if (g * basis[a] != basis[a]) throw PreconditionError("basis vector " + std::to_string(a) + " is not in V+");
    for (std::size_t b = 0; b < N; ++b)
      if (naturalPairing(basis[a], basis[b]) != Scalar(a == b ? 1 : 0))
        throw PreconditionError("basis is not orthonormal");
  }
  const Scalar det = tmDeterminant(basis, N);
  if (!det.isReal() || sgn(det.real()) <= 0) throw PreconditionError("basis is not positively oriented");
  return cliffordProductStar(s, basis);
}

}  // namespace bgc
