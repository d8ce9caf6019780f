#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bgc/cohomology.hpp"
#include "bgc/spinor.hpp"

namespace bgc {

/// Constant structures (J1, J2, G) on the generalized tangent fiber of flat
/// R^{2n} or T^{2n}, in the basis d_0..d_{2n-1}, dx^0..dx^{2n-1}. Matrices act
/// on column vectors.
struct FlatBiGcModel {
  int n = 1;
  Matrix j1, j2, g;
  std::string label;
  bool metricFromProduct = false;  // G was given as -J1 J2
};

/// The two-parameter family on R^2: J1 from (a,b,c) with a^2 + bc = -1,
/// J2 from (p,q,r) with p^2 + qr = -1, G = -J1 J2.
FlatBiGcModel planeModel(long a, long b, long c, long p, long q, long r);
/// The R^4 model: J1 from dx1^dx2 + dy1^dy2, J2 the complex structure of C^2, G the swap.
FlatBiGcModel fourSpaceModel();

struct ModelViolation {
  std::string identity;
  std::string message;
};

/// Every failing identity among J_i^2 = -1, pairing preservation, J1 J2 = J2 J1,
/// the generalized-metric conditions on G and G J_i = J_i G.
std::vector<ModelViolation> validateModel(const FlatBiGcModel& m);
bool isGeneralizedKahler(const FlatBiGcModel& m);

/// delta_+ : (p,q) -> (p+1,q+1), delta_- : (p+1,q-1), deltabar_+ : (p-1,q-1), deltabar_- : (p-1,q+1).
enum class Delta { Plus = 0, Minus = 1, BarPlus = 2, BarMinus = 3 };
inline constexpr std::array<Delta, 4> kAllDeltas{Delta::Plus, Delta::Minus, Delta::BarPlus, Delta::BarMinus};
Bidegree shift(Delta d);
std::string to_string(Delta d);
/// delta_1 = delta_+, delta_2 = delta_-, delta_3 = deltabar_-, delta_4 = deltabar_+.
Delta numberedDelta(int i);
/// Complex conjugate partner: + <-> bar+, - <-> bar-.
Delta conjugateOf(Delta d);

using Mode = std::vector<int>;
std::string to_string(const Mode& k);

/// Per-mode operators. `op` matrices act on spinor coordinates; `blocks` are
/// the same operators between slice bases, keyed by source slice.
struct ModeComplex {
  Mode k;
  Matrix d;
  std::array<Matrix, 4> op;
  std::array<std::map<Bidegree, Matrix>, 4> blocks;
  /// Whether the four components add up to d (no other bidegree leaks).
  bool exhaustive = true;

  const Matrix& of(Delta x) const { return op[static_cast<int>(x)]; }
  const std::map<Bidegree, Matrix>& blocksOf(Delta x) const { return blocks[static_cast<int>(x)]; }
};

/// Everything about a validated model that does not depend on the mode.
class FlatGeometry {
 public:
  /// Throws PreconditionError listing the violations of an invalid model.
  explicit FlatGeometry(FlatBiGcModel model, bool flipGrading = false);

  const FlatBiGcModel& model() const { return model_; }
  const SpinorSpace& space() const { return space_; }
  const JointGrading& grading() const { return grading_; }
  /// Columns: slice bases concatenated in (p,q) order.
  const Matrix& adaptedBasis() const { return t_; }
  const Matrix& adaptedInverse() const { return tinv_; }
  std::size_t offset(Bidegree b) const { return offsets_.at(b); }
  /// Projection onto U^{p,q} along the other slices (spinor coordinates).
  Matrix projector(Bidegree b) const;

  /// Generalized Hodge star, real, in spinor coordinates.
  const Matrix& star() const { return star_; }
  /// Raw Gram matrix R with (alpha, star conj(beta))_Ch = beta^H R alpha.
  const Matrix& rawGram() const { return rawGram_; }
  /// Positive definite Hermitian H with h(alpha, beta) = beta^H H alpha.
  const Matrix& hodgeGram() const { return gram_; }
  /// Sign applied to the raw form on each slice to make it positive.
  const std::map<Bidegree, int>& sliceSigns() const { return signs_; }
  /// Gram matrix of h restricted to U^{p,q} in its slice basis.
  Matrix sliceGram(Bidegree b) const;

  /// Wedge by i kappa, kappa = sum_j k_j dx^j.
  Matrix modeOperator(const Mode& k) const;
  ModeComplex modeComplex(const Mode& k) const;

 private:
  FlatBiGcModel model_;
  SpinorSpace space_;
  JointGrading grading_;
  Matrix t_, tinv_;
  std::map<Bidegree, std::size_t> offsets_;
  Matrix star_, rawGram_, gram_;
  std::map<Bidegree, int> signs_;
};

enum class Pair { PP, PB, BP, BB };
std::string to_string(Pair p);
/// Accepts "pp", "pb", "bp", "bb".
Pair pairFromString(const std::string& s);
/// The two operators used as (d', d'').
std::array<Delta, 2> pairOperators(Pair p);

/// A mode complex in the (1,0)/(0,1) convention, with the slice relabeling.
/// PP: A^{a,b} = U^{a+b+c, a-b}; PB: U^{a-b+c, a+b}; BP: U^{b-a+c, -a-b};
/// BB: U^{-a-b+c, b-a}; c = n mod 2.
struct Reindexed {
  Pair pair = Pair::PP;
  int offset = 0;
  DoubleComplex complex;

  Bidegree toU(Bidegree ab) const;
  Bidegree fromU(Bidegree pq) const;
  /// The U index carried along total degree k (p for PP, q for PB, -q for BP, -p for BB... shifted by c).
  int totalLabel(int k) const;
};

Reindexed reindexToDoubleComplex(const FlatGeometry& g, const ModeComplex& mc, Pair pair);

/// A* with h(A x, y) = h(x, A* y) for h(x,y) = y^H H x.
Matrix adjointOf(const Matrix& op, const Matrix& gram);

struct AdjointFormulaCheck {
  Delta delta;
  bool statementForm = false;  // delta* = -star^-1 conj(delta) star
  bool proofEndForm = false;   // delta* = -star conj(delta) star
  bool flippedForm = false;    // delta* = +star^-1 conj(delta) star (diagnostic only)
};

struct AdjointReport {
  std::vector<AdjointFormulaCheck> checks;
  bool statementHoldsEverywhere() const;
  bool proofEndHoldsEverywhere() const;
  /// "statement", "proof-end", "both" or "neither".
  std::string verdict() const;
};

AdjointReport checkAdjointFormulas(const FlatGeometry& g, const ModeComplex& mc);

struct Laplacians {
  std::array<Matrix, 4> delta;  // indexed by Delta
  Matrix partial1, partial2, d;
  std::map<std::pair<int, int>, Matrix> mixed;  // Delta_{i,j}, numbered deltas
};

inline constexpr std::array<std::pair<int, int>, 4> kLaplacianPairs{{{1, 2}, {1, 3}, {2, 4}, {3, 4}}};

Laplacians laplacians(const FlatGeometry& g, const ModeComplex& mc);

struct HarmonicDecomposition {
  std::size_t kernelDim = 0;    // dim ker delta_i n ker delta_j on the slice
  std::size_t harmonicDim = 0;  // dim ker Delta_{i,j} on the slice
  std::size_t imageDim = 0;     // dim Im delta_i delta_j n U^{p,q}
  bool verified = false;        // ker n ker = harmonic (+) image, sum direct
};

HarmonicDecomposition harmonicDecomposition(const FlatGeometry& g, const ModeComplex& mc, int i, int j, Bidegree pq);
/// Same, reusing Laplacians already computed for this mode.
HarmonicDecomposition harmonicDecomposition(const FlatGeometry& g, const ModeComplex& mc, const Laplacians& lap, int i,
                                            int j, Bidegree pq);

/// Per-mode checks of the operator identities; each entry names one identity.
struct IdentityCheck {
  std::string name;
  bool holds = false;
};

/// Anticommutators, the four-term identity, component exhaustion, reality
/// (against the mode -k) and slice placement.
std::vector<IdentityCheck> modeIdentities(const FlatGeometry& g, const Mode& k);
/// delta_i* delta_j = -delta_j delta_i* and delta_i delta_j* = -delta_j* delta_i (i < j),
/// delta_i* delta_j* = -delta_j* delta_i* on the Laplacian pairs, and
/// Delta_d = 2 Delta_{d1} = 2 Delta_{d2} = 4 Delta_{+} = 4 Delta_{-}.
std::vector<IdentityCheck> kahlerIdentities(const FlatGeometry& g, const ModeComplex& mc);

}  // namespace bgc
