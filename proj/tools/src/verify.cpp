#include "verify.hpp"

#include <map>
#include <random>
#include <sstream>

#include "bgc/cohomology.hpp"
#include "bgc/flat_model.hpp"
#include "bgc/generators.hpp"
#include "bgc/torus.hpp"

namespace bgc::cli {

void PropertyTally::record(bool holds, const std::string& instance) {
  ++total;
  if (holds) {
    ++passed;
  } else if (failures.size() < 5) {
    failures.push_back(instance);
  }
}

bool SuiteResult::validationFailed() const {
  for (const auto& p : properties)
    if (p.validation && !p.ok()) return true;
  return false;
}

bool SuiteResult::propertyFailed() const {
  for (const auto& p : properties)
    if (!p.validation && !p.ok()) return true;
  return false;
}

namespace {

class Tallies {
 public:
  explicit Tallies(std::string prefix) : prefix_(std::move(prefix)) {}

  PropertyTally& operator[](const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return list_[it->second];
    index_[name] = list_.size();
    list_.push_back(PropertyTally{prefix_ + name, 0, 0, false, {}});
    return list_.back();
  }
  std::vector<PropertyTally> take() { return std::move(list_); }

 private:
  std::string prefix_;
  std::map<std::string, std::size_t> index_;
  std::vector<PropertyTally> list_;
};

// all five theories, zeros dropped, so tables compare structurally
struct Dims {
  std::map<std::pair<int, Bidegree>, std::size_t> bigraded;
  std::map<int, std::size_t> total;

  friend bool operator==(const Dims&, const Dims&) = default;
  void add(const Dims& o) {
    for (const auto& [k, d] : o.bigraded) bigraded[k] += d;
    for (const auto& [k, d] : o.total) total[k] += d;
  }
};

Dims dimsOf(const ComplexAnalysis& a) {
  Dims out;
  const CohomologyReport reps[] = {a.bottChern(), a.aeppli(), a.dPrimeCohomology(), a.dSecondCohomology()};
  for (const auto& r : reps)
    for (const auto& [b, d] : r.dims)
      if (d) out.bigraded[{static_cast<int>(r.theory), b}] = d;
  for (const auto& [k, d] : a.deRham().totalDims)
    if (d) out.total[k] = d;
  return out;
}

DoubleComplex corruptSign(const DoubleComplex& c) {
  // negate stored d'' maps one at a time until the anticommutation breaks
  for (const auto& [b, m] : c.storedDSecond()) {
    DoubleComplex bad = c;
    bad.setDSecond(b, -m);
    if (!validate(bad).empty()) return bad;
  }
  return c;
}

std::string describeInstance(int i, const GeneratedComplex& g) {
  std::ostringstream os;
  os << "#" << i << " [";
  for (std::size_t j = 0; j < g.pieces.size(); ++j) os << (j ? " + " : "") << describe(g.pieces[j]);
  os << "]";
  return os.str();
}

}  // namespace

SuiteResult runCoreSuite(const SuiteOptions& o) {
  Tallies t("core.");
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < o.count; ++i) {
    GeneratedComplex g = randomComplex(rng, {});
    if (i == 0 && o.injectFault) {
      const DoubleComplex parts[] = {g.complex, generateElementary(Square{{0, 0}})};
      g.pieces.push_back(Square{{0, 0}});
      g.complex = corruptSign(directSum(parts));
    }
    const std::string id = describeInstance(i, g);
    const bool valid = validate(g.complex).empty();
    t["validate"].validation = true;
    t["validate"].record(valid, id);
    if (!valid) continue;

    const ComplexAnalysis a(g.complex);
    const TheoremEquivalences th = a.theoremEquivalences();
    t["theorem-consistent"].record(th.consistent(), id);
    t["zigzag-classification"].record(th.lemmaEverywhere == !g.containsZigzag(), id);

    const auto bc = a.bottChern(), ae = a.aeppli(), d1 = a.dPrimeCohomology(), d2 = a.dSecondCohomology();
    bool lemmaIds = true, compare = true, rowCol = true;
    for (const auto& [b, e] : a.lattice()) {
      lemmaIds = lemmaIds && e.pPlus == e.sMinus && e.pMinus == e.sPlus && e.uPlus == e.vMinus && e.uMinus == e.vPlus &&
                 e.p0 == e.v0 && bc.at(b) == e.p0 + e.pPlus + e.sPlus + e.s0 &&
                 bc.at(b) == e.p0 + e.pMinus + e.sMinus + e.s0 && ae.at(b) == e.u0 + e.uPlus + e.vPlus + e.v0 &&
                 ae.at(b) == e.u0 + e.uMinus + e.vMinus + e.v0;
      compare = compare && bc.at(b) + ae.at(b) == d1.at(b) + d2.at(b) + e.u0 + e.s0;
      rowCol = rowCol && d1.at(b) == e.sMinus + e.vPlus + e.v0 && d2.at(b) == e.sPlus + e.vMinus + e.v0;
    }
    t["lattice-identities"].record(lemmaIds, id);
    t["bc-plus-aeppli"].record(compare, id);
    t["row-column-decomposition"].record(rowCol, id);

    const NaturalMaps maps = a.naturalMaps();
    const int lo = g.complex.minTotal() - 1, hi = g.complex.maxTotal() + 1;
    bool derhamImpl = true;
    for (int k = lo; k <= hi; ++k) {
      const auto& phiK = NaturalMaps::lookup(maps.phiTotal, k);
      const auto& phiPrev = NaturalMaps::lookup(maps.phiTotal, k - 1);
      const auto& psiK = NaturalMaps::lookup(maps.psiTotal, k);
      const auto& psiNext = NaturalMaps::lookup(maps.psiTotal, k + 1);
      const auto& psiPrev = NaturalMaps::lookup(maps.psiTotal, k - 1);
      if (phiK.injective && !phiPrev.surjective) derhamImpl = false;
      if (psiK.surjective && !psiNext.injective) derhamImpl = false;
      if (phiK.injective != psiPrev.surjective || phiK.injective != a.lemmaAtTotal(k)) derhamImpl = false;
    }
    t["bc-derham-implications"].record(derhamImpl, id);

    bool partialImpl = true, literal = true;
    for (int p = -8; p <= 8; ++p)
      for (int q = -8; q <= 8; ++q) {
        auto inj = [&](const std::map<Bidegree, InducedMap>& m, int x, int y) { return NaturalMaps::lookup(m, {x, y}).injective; };
        auto sur = [&](const std::map<Bidegree, InducedMap>& m, int x, int y) { return NaturalMaps::lookup(m, {x, y}).surjective; };
        if (inj(maps.phiPlus, p, q) && !sur(maps.phiMinus, p - 1, q)) partialImpl = false;
        if (inj(maps.phiMinus, p, q) && !sur(maps.phiPlus, p, q - 1)) partialImpl = false;
        if (sur(maps.psiPlus, p, q) && !inj(maps.psiMinus, p + 1, q)) partialImpl = false;
        if (sur(maps.psiMinus, p, q) && !inj(maps.psiPlus, p, q + 1)) partialImpl = false;
        if (sur(maps.psiMinus, p, q) && !inj(maps.psiPlus, p + 1, q)) literal = false;
      }
    t["bc-partial-implications"].record(partialImpl, id);
    // variant shifting p instead of q: known to fail, tallied separately
    PropertyTally& lit = t["bc-partial-p-shift-variant"];
    lit.record(literal, id);

    const Dims whole = dimsOf(a);
    t["scramble-invariance"].record(dimsOf(ComplexAnalysis(scrambleBasis(g.complex, o.seed * 7919 + i))) == whole, id);
    Dims summed;
    for (const auto& piece : g.pieces) summed.add(dimsOf(ComplexAnalysis(generateElementary(piece))));
    t["direct-sum-additivity"].record(summed == whole, id);
  }
  SuiteResult out;
  out.properties = t.take();
  for (auto it = out.properties.begin(); it != out.properties.end(); ++it) {
    if (it->name == "core.bc-partial-p-shift-variant") {
      std::ostringstream os;
      os << "psi-^{p,q} onto => psi+^{p+1,q} injective held on " << it->passed << "/" << it->total << " complexes";
      out.diagnostics.push_back({it->name, os.str()});
      out.properties.erase(it);
      break;
    }
  }
  return out;
}

namespace {

Mode randomMode(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-2, 2);
  Mode k(2 * n);
  do {
    for (auto& x : k) x = d(rng);
  } while (std::all_of(k.begin(), k.end(), [](int x) { return x == 0; }));
  return k;
}

template <typename Map>
bool symmetric(const Map& dims) {
  for (const auto& [b, d] : dims) {
    auto it = dims.find({-b.p, -b.q});
    if ((it == dims.end() ? 0 : it->second) != d) return false;
  }
  return true;
}

long eulerOf(const std::map<Bidegree, std::size_t>& m) {
  long s = 0;
  for (const auto& [b, d] : m) s += ((b.p + b.q) % 2 == 0 ? 1 : -1) * static_cast<long>(d);
  return s;
}

}  // namespace

SuiteResult runGeometrySuite(const SuiteOptions& o) {
  Tallies t("geometry.");
  SuiteResult out;
  std::mt19937_64 rng(o.seed);
  const FlatBiGcModel models[] = {planeModel(0, 1, -1, 0, 1, -1), fourSpaceModel()};
  for (const FlatBiGcModel& m : models) {
    const std::string name = m.label;
    const auto violations = validateModel(m);
    t["model-valid"].validation = true;
    t["model-valid"].record(violations.empty(), name);
    if (!violations.empty()) continue;
    const FlatGeometry g(m);
    const SpinorSpace& s = g.space();

    t["grading-complete"].record(g.grading().totalDim() == (std::size_t{1} << s.realDim()), name);
    const JointGrading v = vandermondeJointGrading(s, m.j1, m.j2);
    t["vandermonde-grading"].record(v.pieces == g.grading().pieces, name);

    std::map<std::string, std::size_t> verdicts;
    for (int i = 0; i < o.count; ++i) {
      const Mode k = randomMode(rng, m.n);
      const std::string id = name + " k=" + to_string(k);
      const ModeComplex mc = g.modeComplex(k);

      bool ids = true;
      for (const auto& c : modeIdentities(g, k)) ids = ids && c.holds;
      t["mode-identities"].record(ids, id);

      bool kahler = true;
      for (const auto& c : kahlerIdentities(g, mc)) kahler = kahler && c.holds;
      t["kahler-identities"].record(kahler, id);

      ++verdicts[checkAdjointFormulas(g, mc).verdict()];

      bool reindexOk = true, lemma = true, euler = true, ddToBc = true, vanish = true;
      for (Pair p : {Pair::PP, Pair::PB, Pair::BP, Pair::BB}) {
        const Reindexed r = reindexToDoubleComplex(g, mc, p);
        reindexOk = reindexOk && validate(r.complex).empty();
        const ComplexAnalysis a(r.complex);
        lemma = lemma && a.lemmaEverywhere();
        const long chi = eulerOf(r.complex.support());
        const auto bc = a.bottChern(), ae = a.aeppli(), d1 = a.dPrimeCohomology(), d2 = a.dSecondCohomology();
        long b = 0;
        for (const auto& [deg, d] : a.deRham().totalDims) b += (deg % 2 == 0 ? 1 : -1) * static_cast<long>(d);
        euler = euler && chi == eulerOf(bc.dims) && chi == eulerOf(ae.dims) && chi == eulerOf(d1.dims) &&
                chi == eulerOf(d2.dims) && chi == b;
        if (p == Pair::PP)
          for (const auto& [at, d] : r.complex.support())
            ddToBc = ddToBc && d1.at(at) == d2.at(at) && d1.at(at) == bc.at(at);
        for (const auto* rep : {&bc, &ae, &d1, &d2})
          for (const auto& [at, d] : rep->dims) vanish = vanish && d == 0;
      }
      t["reindex-valid"].record(reindexOk, id);
      t["mode-dd-lemma"].record(lemma, id);
      t["euler-characteristic"].record(euler, id);
      t["dd-to-bc"].record(ddToBc, id);
      t["nonzero-mode-vanishes"].record(vanish, id);

      if (m.n == 2) {
        const bool pde = pdeSliceCheck(g, k, "H^{0,-2}").agrees() && pdeSliceCheck(g, k, "H^{0,2}").agrees();
        t["pde-slice"].record(pde, id);
      }
      if (i < o.harmonicModes) {
        const Laplacians lap = laplacians(g, mc);
        bool ok = true;
        for (const auto& [ii, jj] : kLaplacianPairs)
          for (const auto& [b, u] : g.grading().pieces) ok = ok && harmonicDecomposition(g, mc, lap, ii, jj, b).verified;
        t["harmonic-decomposition"].record(ok, id);
      }
    }
    std::ostringstream vs;
    for (const auto& [verdict, n] : verdicts) vs << (vs.tellp() ? ", " : "") << verdict << " at " << n << " modes";
    out.diagnostics.push_back({"geometry.adjoint-convention " + name, vs.str()});

    const TorusReport pp = torusCohomology(g, {Theory::BottChern, Theory::DPrime, Theory::DSecond}, Pair::PP, 1);
    const TorusReport bb = torusCohomology(g, {Theory::BottChern}, Pair::BB, 1);
    t["box-complete"].record(pp.complete() && bb.complete(), name);
    bool conj = true;
    for (const auto& [b, d] : pp.dims.at(Theory::BottChern)) conj = conj && bb.at(Theory::BottChern, {-b.p, -b.q}) == d;
    t["conjugation-symmetry"].record(conj, name);
    t["serre-duality"].record(symmetric(pp.dims.at(Theory::BottChern)) && symmetric(pp.dims.at(Theory::DPrime)) &&
                                  symmetric(pp.dims.at(Theory::DSecond)),
                              name);
  }
  out.properties = t.take();
  return out;
}

}  // namespace bgc::cli
