#include "bgc/cohomology.hpp"

#include <stdexcept>

#include "bgc/errors.hpp"

namespace bgc {

std::string to_string(Theory t) {
  switch (t) {
    case Theory::BottChern: return "bc";
    case Theory::Aeppli: return "aeppli";
    case Theory::DPrime: return "dprime";
    case Theory::DSecond: return "dsecond";
    case Theory::DeRham: return "derham";
  }
  return "unknown";
}

Theory theoryFromString(const std::string& name) {
  if (name == "bc") return Theory::BottChern;
  if (name == "aeppli") return Theory::Aeppli;
  if (name == "dprime") return Theory::DPrime;
  if (name == "dsecond") return Theory::DSecond;
  if (name == "derham") return Theory::DeRham;
  throw ParseError("unknown cohomology theory '" + name + "'");
}

std::size_t CohomologyReport::at(Bidegree b) const {
  auto it = dims.find(b);
  return it == dims.end() ? 0 : it->second;
}

std::size_t CohomologyReport::atTotal(int k) const {
  auto it = totalDims.find(k);
  return it == totalDims.end() ? 0 : it->second;
}

const InducedMap& NaturalMaps::lookup(const std::map<Bidegree, InducedMap>& m, Bidegree b) {
  static const InducedMap kZero{};
  auto it = m.find(b);
  return it == m.end() ? kZero : it->second;
}

const InducedMap& NaturalMaps::lookup(const std::map<int, InducedMap>& m, int k) {
  static const InducedMap kZero{};
  auto it = m.find(k);
  return it == m.end() ? kZero : it->second;
}

namespace {

struct QuotientData {
  std::size_t dim;
  Matrix reps;
};

QuotientData quotient(const Subspace& z, const Subspace& b) { return {quotientDim(z, b), quotientRepresentatives(z, b)}; }

// Map of Zs/Bs -> Zt/Bt induced by `embed` (target ambient x source ambient).
InducedMap induced(const Subspace& zs, const Subspace& bs, const Subspace& zt, const Subspace& bt, const Matrix& embed) {
  InducedMap out;
  Matrix repsS = quotientRepresentatives(zs, bs);
  Matrix repsT = quotientRepresentatives(zt, bt);
  out.sourceDim = repsS.cols();
  out.targetDim = repsT.cols();
  out.matrix = Matrix(out.targetDim, out.sourceDim);
  if (out.sourceDim > 0 && out.targetDim > 0) {
    Matrix system = hstack(repsT, bt.basis());
    Matrix images = embed * repsS;
    for (std::size_t j = 0; j < out.sourceDim; ++j) {
      auto x = solve(system, images.column(j));
      if (!x) throw std::logic_error("induced map: image of a cocycle left the target cocycles");
      for (std::size_t i = 0; i < out.targetDim; ++i) out.matrix(i, j) = (*x)[i];
    }
  }
  out.rank = out.sourceDim && out.targetDim ? rank(out.matrix) : 0;
  out.injective = out.rank == out.sourceDim;
  out.surjective = out.rank == out.targetDim;
  return out;
}

}  // namespace

ComplexAnalysis::ComplexAnalysis(DoubleComplex c) : complex_(std::move(c)) {
  const auto& cx = complex_;
  for (const auto& [b, d] : cx.support()) {
    SliceSpaces s;
    s.kerDPrime = kernelBasis(cx.dPrime(b));
    s.kerDSecond = kernelBasis(cx.dSecond(b));
    s.imDPrime = imageBasis(cx.dPrime({b.p - 1, b.q}));
    s.imDSecond = imageBasis(cx.dSecond({b.p, b.q - 1}));
    s.imDPrimeDSecond = imageBasis(cx.dPrime({b.p - 1, b.q}) * cx.dSecond({b.p - 1, b.q - 1}));
    s.kerDPrimeDSecond = kernelBasis(cx.dPrime({b.p, b.q + 1}) * cx.dSecond(b));
    slices_.emplace(b, std::move(s));
  }
}

const SliceSpaces& ComplexAnalysis::slice(Bidegree b) const {
  auto it = slices_.find(b);
  if (it == slices_.end()) throw DimensionError("no space at " + to_string(b));
  return it->second;
}

CohomologyReport ComplexAnalysis::bigraded(Theory t) const {
  CohomologyReport r;
  r.theory = t;
  for (const auto& [b, s] : slices_) {
    QuotientData qd{0, {}};
    switch (t) {
      case Theory::BottChern:
        qd = quotient(subspaceIntersection(s.kerDPrime, s.kerDSecond), s.imDPrimeDSecond);
        break;
      case Theory::Aeppli:
        qd = quotient(s.kerDPrimeDSecond, subspaceSum(s.imDPrime, s.imDSecond));
        break;
      case Theory::DPrime:
        qd = quotient(s.kerDPrime, s.imDPrime);
        break;
      case Theory::DSecond:
        qd = quotient(s.kerDSecond, s.imDSecond);
        break;
      case Theory::DeRham:
        throw std::logic_error("de Rham is not bigraded");
    }
    r.dims[b] = qd.dim;
    r.totalDims[b.total()] += qd.dim;
    r.representatives[b] = std::move(qd.reps);
  }
  return r;
}

CohomologyReport ComplexAnalysis::bottChern() const { return bigraded(Theory::BottChern); }
CohomologyReport ComplexAnalysis::aeppli() const { return bigraded(Theory::Aeppli); }
CohomologyReport ComplexAnalysis::dPrimeCohomology() const { return bigraded(Theory::DPrime); }
CohomologyReport ComplexAnalysis::dSecondCohomology() const { return bigraded(Theory::DSecond); }

CohomologyReport ComplexAnalysis::deRham() const {
  CohomologyReport r;
  r.theory = Theory::DeRham;
  if (complex_.empty()) return r;
  for (int k = complex_.minTotal(); k <= complex_.maxTotal(); ++k) {
    Subspace z = kernelBasis(complex_.totalDifferential(k));
    Subspace b = imageBasis(complex_.totalDifferential(k - 1));
    QuotientData qd = quotient(z, b);
    r.totalDims[k] = qd.dim;
    r.totalRepresentatives[k] = std::move(qd.reps);
  }
  return r;
}

LatticeInvariants ComplexAnalysis::lattice() const {
  LatticeInvariants out;
  for (const auto& [b, s] : slices_) {
    LatticeEntry e;
    const Subspace imSum = subspaceSum(s.imDPrime, s.imDSecond);
    // upper diagram
    const Subspace top1 = subspaceIntersection(s.kerDPrime, s.kerDSecond);
    const Subspace x1 = subspaceIntersection(top1, imSum);
    const Subspace left1 = subspaceIntersection(s.imDPrime, s.kerDSecond);
    const Subspace right1 = subspaceIntersection(s.kerDPrime, s.imDSecond);
    const Subspace mid1 = subspaceIntersection(s.imDPrime, s.imDSecond);
    e.p0 = quotientDim(top1, x1);
    e.pPlus = quotientDim(x1, left1);
    e.pMinus = quotientDim(x1, right1);
    e.sPlus = quotientDim(left1, mid1);
    e.sMinus = quotientDim(right1, mid1);
    e.s0 = quotientDim(mid1, s.imDPrimeDSecond);
    // lower diagram
    const Subspace top2 = s.kerDPrimeDSecond;
    const Subspace y2 = subspaceSum(s.kerDPrime, s.kerDSecond);
    const Subspace left2 = subspaceSum(s.kerDPrime, s.imDSecond);
    const Subspace right2 = subspaceSum(s.imDPrime, s.kerDSecond);
    const Subspace mid2 = subspaceSum(imSum, top1);
    e.u0 = quotientDim(top2, y2);
    e.uPlus = quotientDim(y2, left2);
    e.uMinus = quotientDim(y2, right2);
    e.vPlus = quotientDim(left2, mid2);
    e.vMinus = quotientDim(right2, mid2);
    e.v0 = quotientDim(mid2, imSum);
    out[b] = e;
  }
  return out;
}

bool ComplexAnalysis::lemmaAt(Bidegree b) const {
  auto it = slices_.find(b);
  if (it == slices_.end()) return true;
  const SliceSpaces& s = it->second;
  const Subspace left = subspaceIntersection(s.imDPrime, s.kerDSecond);
  const Subspace right = subspaceIntersection(s.kerDPrime, s.imDSecond);
  return left == right && right == s.imDPrimeDSecond;
}

bool ComplexAnalysis::lemmaAtTotal(int k) const {
  for (const auto& b : complex_.bidegreesOfTotal(k))
    if (!lemmaAt(b)) return false;
  return true;
}

bool ComplexAnalysis::lemmaEverywhere() const {
  for (const auto& [b, s] : slices_)
    if (!lemmaAt(b)) return false;
  return true;
}

NaturalMaps ComplexAnalysis::naturalMaps() const {
  NaturalMaps out;
  const auto& cx = complex_;
  if (cx.empty()) return out;

  auto embedding = [&](Bidegree b) {
    Matrix e(cx.totalDim(b.total()), cx.dim(b));
    e.setBlock(cx.offsetInTotal(b), 0, Matrix::identity(cx.dim(b)));
    return e;
  };
  auto embedSum = [&](int k, auto pick) {
    Subspace acc = Subspace::zero(cx.totalDim(k));
    for (const auto& b : cx.bidegreesOfTotal(k)) acc = subspaceSum(acc, imageOf(embedding(b), pick(slice(b))));
    return acc;
  };

  std::map<int, Subspace> cocycles, coboundaries;
  for (int k = cx.minTotal() - 1; k <= cx.maxTotal() + 1; ++k) {
    cocycles[k] = kernelBasis(cx.totalDifferential(k));
    coboundaries[k] = imageBasis(cx.totalDifferential(k - 1));
  }

  for (const auto& [b, s] : slices_) {
    const Subspace bcCycles = subspaceIntersection(s.kerDPrime, s.kerDSecond);
    const Subspace aBoundaries = subspaceSum(s.imDPrime, s.imDSecond);
    const Matrix id = Matrix::identity(cx.dim(b));
    out.phi[b] = induced(bcCycles, s.imDPrimeDSecond, cocycles[b.total()], coboundaries[b.total()], embedding(b));
    out.phiPlus[b] = induced(bcCycles, s.imDPrimeDSecond, s.kerDPrime, s.imDPrime, id);
    out.phiMinus[b] = induced(bcCycles, s.imDPrimeDSecond, s.kerDSecond, s.imDSecond, id);
    out.psiPlus[b] = induced(s.kerDPrime, s.imDPrime, s.kerDPrimeDSecond, aBoundaries, id);
    out.psiMinus[b] = induced(s.kerDSecond, s.imDSecond, s.kerDPrimeDSecond, aBoundaries, id);
  }

  for (int k = cx.minTotal() - 1; k <= cx.maxTotal() + 1; ++k) {
    const Matrix id = Matrix::identity(cx.totalDim(k));
    const Subspace bcCycles = embedSum(k, [](const SliceSpaces& s) { return subspaceIntersection(s.kerDPrime, s.kerDSecond); });
    const Subspace bcBoundaries = embedSum(k, [](const SliceSpaces& s) { return s.imDPrimeDSecond; });
    const Subspace aCycles = embedSum(k, [](const SliceSpaces& s) { return s.kerDPrimeDSecond; });
    const Subspace aBoundaries = embedSum(k, [](const SliceSpaces& s) { return subspaceSum(s.imDPrime, s.imDSecond); });
    out.phiTotal[k] = induced(bcCycles, bcBoundaries, cocycles[k], coboundaries[k], id);
    out.psiTotal[k] = induced(cocycles[k], coboundaries[k], aCycles, aBoundaries, id);
  }
  return out;
}

TheoremEquivalences ComplexAnalysis::theoremEquivalences() const {
  TheoremEquivalences t;
  const CohomologyReport bc = bottChern();
  const CohomologyReport a = aeppli();
  const CohomologyReport d1 = dPrimeCohomology();
  const CohomologyReport d2 = dSecondCohomology();
  const CohomologyReport dr = deRham();
  t.lemmaEverywhere = lemmaEverywhere();
  t.bcMatchesRowColumn = true;
  t.aeppliMatchesRowColumn = true;
  for (const auto& [b, s] : slices_) {
    if (bc.at(b) != d1.at(b) || bc.at(b) != d2.at(b)) t.bcMatchesRowColumn = false;
    if (a.at(b) != d1.at(b) || a.at(b) != d2.at(b)) t.aeppliMatchesRowColumn = false;
  }
  t.bcMatchesDeRham = true;
  t.aeppliMatchesDeRham = true;
  if (!complex_.empty()) {
    for (int k = complex_.minTotal(); k <= complex_.maxTotal(); ++k) {
      if (bc.atTotal(k) != dr.atTotal(k)) t.bcMatchesDeRham = false;
      if (a.atTotal(k) != dr.atTotal(k)) t.aeppliMatchesDeRham = false;
    }
  }
  return t;
}

CohomologyReport deRham(const DoubleComplex& c) { return ComplexAnalysis(c).deRham(); }

std::pair<CohomologyReport, CohomologyReport> rowColumnCohomology(const DoubleComplex& c) {
  ComplexAnalysis a(c);
  return {a.dPrimeCohomology(), a.dSecondCohomology()};
}

CohomologyReport bottChern(const DoubleComplex& c) { return ComplexAnalysis(c).bottChern(); }
CohomologyReport aeppli(const DoubleComplex& c) { return ComplexAnalysis(c).aeppli(); }
LatticeInvariants latticeInvariants(const DoubleComplex& c) { return ComplexAnalysis(c).lattice(); }
bool ddbarLemmaAt(const DoubleComplex& c, int p, int q) { return ComplexAnalysis(c).lemmaAt({p, q}); }
NaturalMaps naturalMaps(const DoubleComplex& c) { return ComplexAnalysis(c).naturalMaps(); }
TheoremEquivalences checkTheoremEquivalences(const DoubleComplex& c) { return ComplexAnalysis(c).theoremEquivalences(); }

}  // namespace bgc
