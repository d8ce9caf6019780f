#include "bgc/flat_model.hpp"

#include <sstream>

#include "bgc/errors.hpp"

namespace bgc {

namespace {

Matrix fromRows(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (long v : row) m(r, c++) = Scalar(v);
    ++r;
  }
  return m;
}

Matrix entrywiseConj(const Matrix& m) { return m.conj(); }

std::string mismatch(const Matrix& diff) {
  for (std::size_t r = 0; r < diff.rows(); ++r)
    for (std::size_t c = 0; c < diff.cols(); ++c)
      if (!diff(r, c).isZero()) return " at entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
  return "";
}

}  // namespace

FlatBiGcModel planeModel(long a, long b, long c, long p, long q, long r) {
  FlatBiGcModel m;
  m.n = 1;
  m.j1 = fromRows({{a, 0, 0, b}, {0, a, -b, 0}, {0, -c, -a, 0}, {c, 0, 0, -a}});
  m.j2 = fromRows({{p, q, 0, 0}, {r, -p, 0, 0}, {0, 0, -p, -r}, {0, 0, -q, p}});
  m.g = -(m.j1 * m.j2);
  m.metricFromProduct = true;
  std::ostringstream os;
  os << "plane(a=" << a << ",b=" << b << ",c=" << c << ";p=" << p << ",q=" << q << ",r=" << r << ")";
  m.label = os.str();
  return m;
}

FlatBiGcModel fourSpaceModel() {
  FlatBiGcModel m;
  m.n = 2;
  m.j1 = fromRows({{0, 0, 0, 0, 0, 0, 1, 0},
                   {0, 0, 0, 0, 0, 0, 0, 1},
                   {0, 0, 0, 0, -1, 0, 0, 0},
                   {0, 0, 0, 0, 0, -1, 0, 0},
                   {0, 0, 1, 0, 0, 0, 0, 0},
                   {0, 0, 0, 1, 0, 0, 0, 0},
                   {-1, 0, 0, 0, 0, 0, 0, 0},
                   {0, -1, 0, 0, 0, 0, 0, 0}});
  m.j2 = fromRows({{0, 1, 0, 0, 0, 0, 0, 0},
                   {-1, 0, 0, 0, 0, 0, 0, 0},
                   {0, 0, 0, 1, 0, 0, 0, 0},
                   {0, 0, -1, 0, 0, 0, 0, 0},
                   {0, 0, 0, 0, 0, 1, 0, 0},
                   {0, 0, 0, 0, -1, 0, 0, 0},
                   {0, 0, 0, 0, 0, 0, 0, 1},
                   {0, 0, 0, 0, 0, 0, -1, 0}});
  m.g = Matrix(8, 8);
  for (std::size_t j = 0; j < 4; ++j) {
    m.g(j, 4 + j) = 1;
    m.g(4 + j, j) = 1;
  }
  m.label = "four-space";
  return m;
}

std::vector<ModelViolation> validateModel(const FlatBiGcModel& m) {
  std::vector<ModelViolation> out;
  if (m.n < 1) return {{"n", "n must be positive"}};
  const std::size_t d = 4 * static_cast<std::size_t>(m.n);
  auto shapeOk = [&](const Matrix& x, const char* name) {
    if (x.rows() == d && x.cols() == d) return true;
    out.push_back({std::string(name) + " shape", std::string(name) + " must be " + std::to_string(d) + "x" + std::to_string(d)});
    return false;
  };
  const bool ok1 = shapeOk(m.j1, "J1"), ok2 = shapeOk(m.j2, "J2"), okg = shapeOk(m.g, "G");
  if (ok1 && m.j1 != m.j1.conj()) out.push_back({"J1 real", "J1 must have real entries"});
  if (ok2 && m.j2 != m.j2.conj()) out.push_back({"J2 real", "J2 must have real entries"});
  if (ok1)
    for (auto& v : generalizedComplexViolations(m.j1, m.n)) out.push_back({"J1", v});
  if (ok2)
    for (auto& v : generalizedComplexViolations(m.j2, m.n)) out.push_back({"J2", v});
  if (ok1 && ok2) {
    const Matrix c = commutator(m.j1, m.j2);
    if (!c.isZero()) out.push_back({"J1J2=J2J1", "J1 J2 = J2 J1 fails" + mismatch(c)});
  }
  if (okg) {
    for (auto& v : generalizedMetricViolations(m.g, m.n)) out.push_back({"G", v});
    if (ok1) {
      const Matrix c = commutator(m.g, m.j1);
      if (!c.isZero()) out.push_back({"GJ1=J1G", "G J1 = J1 G fails" + mismatch(c)});
    }
    if (ok2) {
      const Matrix c = commutator(m.g, m.j2);
      if (!c.isZero()) out.push_back({"GJ2=J2G", "G J2 = J2 G fails" + mismatch(c)});
    }
  }
  return out;
}

bool isGeneralizedKahler(const FlatBiGcModel& m) { return m.g == -(m.j1 * m.j2); }

Bidegree shift(Delta d) {
  switch (d) {
    case Delta::Plus: return {1, 1};
    case Delta::Minus: return {1, -1};
    case Delta::BarPlus: return {-1, -1};
    case Delta::BarMinus: return {-1, 1};
  }
  return {};
}

std::string to_string(Delta d) {
  switch (d) {
    case Delta::Plus: return "delta+";
    case Delta::Minus: return "delta-";
    case Delta::BarPlus: return "deltabar+";
    case Delta::BarMinus: return "deltabar-";
  }
  return "?";
}

Delta numberedDelta(int i) {
  switch (i) {
    case 1: return Delta::Plus;
    case 2: return Delta::Minus;
    case 3: return Delta::BarMinus;
    case 4: return Delta::BarPlus;
  }
  throw PreconditionError("delta index must be 1..4");
}

Delta conjugateOf(Delta d) {
  switch (d) {
    case Delta::Plus: return Delta::BarPlus;
    case Delta::Minus: return Delta::BarMinus;
    case Delta::BarPlus: return Delta::Plus;
    case Delta::BarMinus: return Delta::Minus;
  }
  return d;
}

std::string to_string(const Mode& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + ")";
}

FlatGeometry::FlatGeometry(FlatBiGcModel model, bool flipGrading) : model_(std::move(model)), space_(model_.n) {
  auto bad = validateModel(model_);
  if (!bad.empty()) {
    std::string msg = "invalid model";
    for (const auto& v : bad) msg += "; " + v.message;
    throw PreconditionError(msg);
  }
  grading_ = jointGrading(space_, model_.j1, model_.j2, flipGrading);
  t_ = grading_.adaptedBasis();
  tinv_ = inverse(t_);
  offsets_ = grading_.offsets();
  star_ = hodgeStar(space_, model_.g);
  rawGram_ = (chevalleyMatrix(space_) * star_).transpose();

  const Matrix adaptedRaw = t_.adjointH() * rawGram_ * t_;
  Matrix adapted(t_.cols(), t_.cols());
  for (const auto& [b, u] : grading_.pieces) {
    const std::size_t off = offsets_.at(b);
    for (const auto& [b2, u2] : grading_.pieces) {
      if (b2 == b) continue;
      if (!adaptedRaw.block(offsets_.at(b2), off, u2.dim(), u.dim()).isZero())
        throw PreconditionError("Hodge form couples U" + to_string(b) + " and U" + to_string(b2));
    }
    const Matrix block = adaptedRaw.block(off, off, u.dim(), u.dim());
    int sign = 0;
    if (isPositiveDefinite(block))
      sign = 1;
    else if (isPositiveDefinite(-block))
      sign = -1;
    else
      throw PreconditionError("Hodge form is indefinite on U" + to_string(b));
    signs_[b] = sign;
    adapted.setBlock(off, off, block * Scalar(sign));
  }
  gram_ = tinv_.adjointH() * adapted * tinv_;
}

Matrix FlatGeometry::projector(Bidegree b) const {
  auto it = grading_.pieces.find(b);
  if (it == grading_.pieces.end()) return Matrix(space_.dim(), space_.dim());
  const std::size_t off = offsets_.at(b), dim = it->second.dim();
  return t_.block(0, off, t_.rows(), dim) * tinv_.block(off, 0, dim, tinv_.cols());
}

Matrix FlatGeometry::sliceGram(Bidegree b) const {
  const Matrix basis = grading_.at(b).basis();
  return basis.adjointH() * gram_ * basis;
}

Matrix FlatGeometry::modeOperator(const Mode& k) const {
  if (k.size() != static_cast<std::size_t>(space_.realDim()))
    throw DimensionError("mode vector needs " + std::to_string(space_.realDim()) + " entries");
  Vector kappa(space_.fiberDim());
  for (int j = 0; j < space_.realDim(); ++j) kappa[space_.realDim() + j] = Scalar(Rational(0), Rational(k[j]));
  return space_.clifford(kappa);
}

ModeComplex FlatGeometry::modeComplex(const Mode& k) const {
  ModeComplex mc;
  mc.k = k;
  mc.d = modeOperator(k);
  const Matrix dAdapted = tinv_ * mc.d * t_;
  Matrix covered(dAdapted.rows(), dAdapted.cols());
  for (Delta x : kAllDeltas) {
    Matrix full(dAdapted.rows(), dAdapted.cols());
    for (const auto& [b, u] : grading_.pieces) {
      const Bidegree s = shift(x);
      const Bidegree target{b.p + s.p, b.q + s.q};
      auto it = grading_.pieces.find(target);
      if (it == grading_.pieces.end()) continue;
      const Matrix block = dAdapted.block(offsets_.at(target), offsets_.at(b), it->second.dim(), u.dim());
      if (block.isZero()) continue;
      full.setBlock(offsets_.at(target), offsets_.at(b), block);
      mc.blocks[static_cast<int>(x)].emplace(b, block);
    }
    covered += full;
    mc.op[static_cast<int>(x)] = t_ * full * tinv_;
  }
  mc.exhaustive = covered == dAdapted;
  return mc;
}

std::string to_string(Pair p) {
  switch (p) {
    case Pair::PP: return "pp";
    case Pair::PB: return "pb";
    case Pair::BP: return "bp";
    case Pair::BB: return "bb";
  }
  return "?";
}

Pair pairFromString(const std::string& s) {
  if (s == "pp") return Pair::PP;
  if (s == "pb") return Pair::PB;
  if (s == "bp") return Pair::BP;
  if (s == "bb") return Pair::BB;
  throw ParseError("unknown pair '" + s + "' (expected pp, pb, bp or bb)");
}

std::array<Delta, 2> pairOperators(Pair p) {
  switch (p) {
    case Pair::PP: return {Delta::Plus, Delta::Minus};
    case Pair::PB: return {Delta::Plus, Delta::BarMinus};
    case Pair::BP: return {Delta::BarPlus, Delta::Minus};
    case Pair::BB: return {Delta::BarPlus, Delta::BarMinus};
  }
  return {Delta::Plus, Delta::Minus};
}

Bidegree Reindexed::toU(Bidegree ab) const {
  const int a = ab.p, b = ab.q, c = offset;
  switch (pair) {
    case Pair::PP: return {a + b + c, a - b};
    case Pair::PB: return {a - b + c, a + b};
    case Pair::BP: return {b - a + c, -a - b};
    case Pair::BB: return {-a - b + c, b - a};
  }
  return {};
}

Bidegree Reindexed::fromU(Bidegree pq) const {
  const int p = pq.p - offset, q = pq.q;
  int twoA = 0, twoB = 0;
  switch (pair) {
    case Pair::PP: twoA = p + q, twoB = p - q; break;
    case Pair::PB: twoA = p + q, twoB = q - p; break;
    case Pair::BP: twoA = -p - q, twoB = p - q; break;
    case Pair::BB: twoA = -p - q, twoB = q - p; break;
  }
  if (twoA % 2 != 0 || twoB % 2 != 0)
    throw PreconditionError("slice " + to_string(pq) + " has the wrong parity for reindexing");
  return {twoA / 2, twoB / 2};
}

int Reindexed::totalLabel(int k) const {
  switch (pair) {
    case Pair::PP: return k + offset;
    case Pair::PB: return k;
    case Pair::BP: return -k;
    case Pair::BB: return -k + offset;
  }
  return k;
}

Reindexed reindexToDoubleComplex(const FlatGeometry& g, const ModeComplex& mc, Pair pair) {
  Reindexed out;
  out.pair = pair;
  out.offset = ((g.space().n() % 2) + 2) % 2;
  for (const auto& [b, u] : g.grading().pieces) out.complex.setSpace(out.fromU(b), u.dim());
  const auto [first, second] = pairOperators(pair);
  for (const auto& [b, m] : mc.blocksOf(first)) {
    const Bidegree ab = out.fromU(b);
    const Bidegree s = shift(first);
    if (out.fromU({b.p + s.p, b.q + s.q}) != Bidegree{ab.p + 1, ab.q})
      throw PreconditionError("first operator does not have bidegree (1,0) after reindexing");
    out.complex.setDPrime(ab, m);
  }
  for (const auto& [b, m] : mc.blocksOf(second)) {
    const Bidegree ab = out.fromU(b);
    const Bidegree s = shift(second);
    if (out.fromU({b.p + s.p, b.q + s.q}) != Bidegree{ab.p, ab.q + 1})
      throw PreconditionError("second operator does not have bidegree (0,1) after reindexing");
    out.complex.setDSecond(ab, m);
  }
  return out;
}

Matrix adjointOf(const Matrix& op, const Matrix& gram) { return inverse(gram) * op.adjointH() * gram; }

bool AdjointReport::statementHoldsEverywhere() const {
  for (const auto& c : checks)
    if (!c.statementForm) return false;
  return true;
}

bool AdjointReport::proofEndHoldsEverywhere() const {
  for (const auto& c : checks)
    if (!c.proofEndForm) return false;
  return true;
}

std::string AdjointReport::verdict() const {
  const bool s = statementHoldsEverywhere(), p = proofEndHoldsEverywhere();
  if (s && p) return "both";
  if (s) return "statement";
  if (p) return "proof-end";
  return "neither";
}

AdjointReport checkAdjointFormulas(const FlatGeometry& g, const ModeComplex& mc) {
  // conj-star conjugation sends mode k to -k, so the operator inside acts there.
  Mode neg = mc.k;
  for (auto& x : neg) x = -x;
  const ModeComplex opposite = g.modeComplex(neg);
  const Matrix& s = g.star();
  const Matrix sinv = inverse(s);
  AdjointReport report;
  for (Delta x : kAllDeltas) {
    const Matrix adj = adjointOf(mc.of(x), g.hodgeGram());
    const Matrix inner = entrywiseConj(opposite.of(x));
    const Matrix statement = -(sinv * inner * s);
    report.checks.push_back({x, adj == statement, adj == -(s * inner * s), adj == -statement});
  }
  return report;
}

Laplacians laplacians(const FlatGeometry& g, const ModeComplex& mc) {
  const Matrix& h = g.hodgeGram();
  auto lap = [&](const Matrix& a) {
    const Matrix as = adjointOf(a, h);
    return a * as + as * a;
  };
  Laplacians out;
  std::array<Matrix, 4> adj;
  for (Delta x : kAllDeltas) {
    out.delta[static_cast<int>(x)] = lap(mc.of(x));
    adj[static_cast<int>(x)] = adjointOf(mc.of(x), h);
  }
  out.partial1 = lap(mc.of(Delta::Plus) + mc.of(Delta::Minus));
  out.partial2 = lap(mc.of(Delta::Plus) + mc.of(Delta::BarMinus));
  out.d = lap(mc.d);
  for (const auto& [i, j] : kLaplacianPairs) {
    const Matrix& di = mc.of(numberedDelta(i));
    const Matrix& dj = mc.of(numberedDelta(j));
    const Matrix& ai = adj[static_cast<int>(numberedDelta(i))];
    const Matrix& aj = adj[static_cast<int>(numberedDelta(j))];
    out.mixed[{i, j}] = di * dj * aj * ai + aj * ai * di * dj + aj * di * ai * dj + ai * dj * aj * di + ai * di + aj * dj;
  }
  return out;
}

HarmonicDecomposition harmonicDecomposition(const FlatGeometry& g, const ModeComplex& mc, int i, int j, Bidegree pq) {
  return harmonicDecomposition(g, mc, laplacians(g, mc), i, j, pq);
}

HarmonicDecomposition harmonicDecomposition(const FlatGeometry& g, const ModeComplex& mc, const Laplacians& lap, int i,
                                            int j, Bidegree pq) {
  HarmonicDecomposition out;
  const Subspace slice = g.grading().at(pq);
  if (slice.isZero()) {
    out.verified = true;
    return out;
  }
  const Matrix basis = slice.basis();
  const Matrix& di = mc.of(numberedDelta(i));
  const Matrix& dj = mc.of(numberedDelta(j));
  const Matrix& box = lap.mixed.at({i, j});

  const Subspace kerCoords = kernelBasis(vstack(di * basis, dj * basis));
  const Subspace harmCoords = kernelBasis(box * basis);
  const Subspace kernel = imageOf(basis, kerCoords);
  const Subspace harmonic = imageOf(basis, harmCoords);
  const Subspace image = subspaceIntersection(imageBasis(di * dj), slice);

  out.kernelDim = kernel.dim();
  out.harmonicDim = harmonic.dim();
  out.imageDim = image.dim();
  out.verified = subspaceIntersection(harmonic, image).isZero() && subspaceSum(harmonic, image) == kernel;
  return out;
}

std::vector<IdentityCheck> modeIdentities(const FlatGeometry& g, const Mode& k) {
  const ModeComplex mc = g.modeComplex(k);
  Mode neg = k;
  for (auto& x : neg) x = -x;
  const ModeComplex opp = g.modeComplex(neg);
  const Matrix& dp = mc.of(Delta::Plus);
  const Matrix& dm = mc.of(Delta::Minus);
  const Matrix& bp = mc.of(Delta::BarPlus);
  const Matrix& bm = mc.of(Delta::BarMinus);

  std::vector<IdentityCheck> out;
  out.push_back({"d^2 = 0", (mc.d * mc.d).isZero()});
  out.push_back({"components sum to d", mc.exhaustive && dp + dm + bp + bm == mc.d});
  for (Delta x : kAllDeltas) out.push_back({to_string(x) + "^2 = 0", (mc.of(x) * mc.of(x)).isZero()});
  out.push_back({"delta+ delta- = -delta- delta+", anticommutator(dp, dm).isZero()});
  out.push_back({"delta+ deltabar- = -deltabar- delta+", anticommutator(dp, bm).isZero()});
  out.push_back({"deltabar+ deltabar- = -deltabar- deltabar+", anticommutator(bp, bm).isZero()});
  out.push_back({"deltabar+ delta- = -delta- deltabar+", anticommutator(bp, dm).isZero()});
  out.push_back({"four-term identity", (anticommutator(dp, bp) + anticommutator(dm, bm)).isZero()});
  for (Delta x : kAllDeltas)
    out.push_back({"conj(" + to_string(x) + " a) = " + to_string(conjugateOf(x)) + "(conj a)",
                   entrywiseConj(mc.of(x)) == opp.of(conjugateOf(x))});
  return out;
}

std::vector<IdentityCheck> kahlerIdentities(const FlatGeometry& g, const ModeComplex& mc) {
  const Matrix& h = g.hodgeGram();
  std::array<Matrix, 5> d, a;
  for (int i = 1; i <= 4; ++i) {
    d[i] = mc.of(numberedDelta(i));
    a[i] = adjointOf(d[i], h);
  }
  std::vector<IdentityCheck> out;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      const std::string ij = std::to_string(i) + std::to_string(j);
      out.push_back({"d" + std::to_string(i) + "* d" + std::to_string(j) + " = -d" + std::to_string(j) + " d" +
                         std::to_string(i) + "*",
                     anticommutator(a[i], d[j]).isZero()});
      out.push_back({"d" + std::to_string(i) + " d" + std::to_string(j) + "* = -d" + std::to_string(j) + "* d" +
                         std::to_string(i),
                     anticommutator(d[i], a[j]).isZero()});
    }
  for (const auto& [i, j] : kLaplacianPairs)
    out.push_back({"d" + std::to_string(i) + "* d" + std::to_string(j) + "* anticommute", anticommutator(a[i], a[j]).isZero()});

  const Laplacians lap = laplacians(g, mc);
  const Matrix& lp = lap.delta[static_cast<int>(Delta::Plus)];
  const Matrix& lm = lap.delta[static_cast<int>(Delta::Minus)];
  out.push_back({"Delta_d = 2 Delta_d1", lap.d == lap.partial1 * Scalar(2)});
  out.push_back({"Delta_d = 2 Delta_d2", lap.d == lap.partial2 * Scalar(2)});
  out.push_back({"Delta_d = 4 Delta_delta+", lap.d == lp * Scalar(4)});
  out.push_back({"Delta_d = 4 Delta_delta-", lap.d == lm * Scalar(4)});
  return out;
}

}  // namespace bgc
