#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bgc/double_complex.hpp"
#include "bgc/linalg.hpp"

namespace bgc {

enum class Theory { BottChern, Aeppli, DPrime, DSecond, DeRham };

std::string to_string(Theory t);
/// Accepts "bc", "aeppli", "dprime", "dsecond", "derham".
Theory theoryFromString(const std::string& name);

/// Dimensions (and optionally representatives) of one cohomology theory.
/// Bigraded theories fill `dims` and the total-degree sums in `totalDims`;
/// de Rham fills only `totalDims`.
struct CohomologyReport {
  Theory theory = Theory::BottChern;
  std::map<Bidegree, std::size_t> dims;
  std::map<int, std::size_t> totalDims;
  /// Representative cocycles as columns in A^{p,q} (or A^k for de Rham).
  std::map<Bidegree, Matrix> representatives;
  std::map<int, Matrix> totalRepresentatives;

  std::size_t at(Bidegree b) const;
  std::size_t atTotal(int k) const;
};

/// Coimage dimensions of the inclusions in the two lattice diagrams at one
/// bidegree. Upper diagram, top to bottom:
///   ker d' n ker d''  >  ker d' n ker d'' n (Im d' + Im d'')  >  {Im d' n ker d'', ker d' n Im d''}
///   >  Im d' n Im d''  >  Im d'd''
/// Lower diagram:
///   ker d'd''  >  ker d' + ker d''  >  {ker d' + Im d'', Im d' + ker d''}
///   >  Im d' + Im d'' + (ker d' n ker d'')  >  Im d' + Im d''
struct LatticeEntry {
  std::size_t p0 = 0, pPlus = 0, pMinus = 0;
  std::size_t sPlus = 0, sMinus = 0, s0 = 0;
  std::size_t u0 = 0, uPlus = 0, uMinus = 0;
  std::size_t vPlus = 0, vMinus = 0, v0 = 0;

  friend bool operator==(const LatticeEntry&, const LatticeEntry&) = default;
};

using LatticeInvariants = std::map<Bidegree, LatticeEntry>;

/// A map between quotient spaces induced by inclusions, realized as a matrix
/// between the canonical representative bases of source and target.
struct InducedMap {
  Matrix matrix;
  std::size_t sourceDim = 0;
  std::size_t targetDim = 0;
  std::size_t rank = 0;
  bool injective = true;
  bool surjective = true;

  bool bijective() const { return injective && surjective; }
};

/// phi : H_BC -> H_dR, psi : H_dR -> H_A and the bigraded maps
/// phi_+ : H_BC -> H_d', phi_- : H_BC -> H_d'', psi_+ : H_d' -> H_A,
/// psi_- : H_d'' -> H_A. Bigraded maps cover the support, total maps cover
/// [minTotal - 1, maxTotal + 1]; anything outside is a map between zero spaces.
struct NaturalMaps {
  std::map<Bidegree, InducedMap> phi;  // phi^{p,q} : H_BC^{p,q} -> H^{p+q}
  std::map<Bidegree, InducedMap> phiPlus;
  std::map<Bidegree, InducedMap> phiMinus;
  std::map<Bidegree, InducedMap> psiPlus;
  std::map<Bidegree, InducedMap> psiMinus;
  std::map<int, InducedMap> phiTotal;  // phi^k
  std::map<int, InducedMap> psiTotal;  // psi^k

  static const InducedMap& lookup(const std::map<Bidegree, InducedMap>& m, Bidegree b);
  static const InducedMap& lookup(const std::map<int, InducedMap>& m, int k);
};

struct TheoremEquivalences {
  bool lemmaEverywhere = false;       // (1)
  bool bcMatchesRowColumn = false;    // (2) h_BC = h_d' = h_d''
  bool aeppliMatchesRowColumn = false;  // (3) h_A = h_d' = h_d''
  bool bcMatchesDeRham = false;       // (4) h^k_BC = b^k
  bool aeppliMatchesDeRham = false;   // (5) h^k_A = b^k

  bool consistent() const {
    return lemmaEverywhere == bcMatchesRowColumn && lemmaEverywhere == aeppliMatchesRowColumn &&
           lemmaEverywhere == bcMatchesDeRham && lemmaEverywhere == aeppliMatchesDeRham;
  }
};

/// Subspaces of A^{p,q} that every bigraded theory is built from.
struct SliceSpaces {
  Subspace kerDPrime, kerDSecond;  // ker d', ker d''
  Subspace imDPrime, imDSecond;    // d' A^{p-1,q}, d'' A^{p,q-1}
  Subspace imDPrimeDSecond;        // d'd'' A^{p-1,q-1}
  Subspace kerDPrimeDSecond;       // ker (d'd'' : A^{p,q} -> A^{p+1,q+1})
};

/// All computations on one validated complex. Slice subspaces are computed
/// once on construction; each query below is then cheap.
class ComplexAnalysis {
 public:
  explicit ComplexAnalysis(DoubleComplex c);

  const DoubleComplex& complex() const { return complex_; }
  const SliceSpaces& slice(Bidegree b) const;

  CohomologyReport deRham() const;
  CohomologyReport dPrimeCohomology() const;
  CohomologyReport dSecondCohomology() const;
  CohomologyReport bottChern() const;
  CohomologyReport aeppli() const;
  LatticeInvariants lattice() const;
  bool lemmaAt(Bidegree b) const;
  /// Lemma at every (p,q) with p + q = k.
  bool lemmaAtTotal(int k) const;
  bool lemmaEverywhere() const;
  NaturalMaps naturalMaps() const;
  TheoremEquivalences theoremEquivalences() const;

 private:
  CohomologyReport bigraded(Theory t) const;

  DoubleComplex complex_;
  std::map<Bidegree, SliceSpaces> slices_;
};

// Free-function forms of the queries above.
CohomologyReport deRham(const DoubleComplex& c);
std::pair<CohomologyReport, CohomologyReport> rowColumnCohomology(const DoubleComplex& c);
CohomologyReport bottChern(const DoubleComplex& c);
CohomologyReport aeppli(const DoubleComplex& c);
LatticeInvariants latticeInvariants(const DoubleComplex& c);
bool ddbarLemmaAt(const DoubleComplex& c, int p, int q);
NaturalMaps naturalMaps(const DoubleComplex& c);
TheoremEquivalences checkTheoremEquivalences(const DoubleComplex& c);

}  // namespace bgc
