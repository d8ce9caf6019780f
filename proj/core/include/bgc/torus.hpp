#pragma once

#include <map>
#include <string>
#include <vector>

#include "bgc/cohomology.hpp"
#include "bgc/flat_model.hpp"

namespace bgc {

/// One mode's dimensions, keyed by U^{p,q} labels. De Rham dims are keyed by
/// the U label the total degree carries (Reindexed::totalLabel).
struct ModeContribution {
  Mode k;
  std::map<Theory, std::map<Bidegree, std::size_t>> dims;
  std::map<int, std::size_t> deRham;

  bool zero() const;
};

struct TorusReport {
  std::string label;
  int n = 1;
  Pair pair = Pair::PP;
  int radius = 0;
  std::vector<Theory> theories;
  /// dim U^{p,q}; the table hull.
  std::map<Bidegree, std::size_t> sliceDims;

  std::map<Theory, std::map<Bidegree, std::size_t>> dims;
  std::map<int, std::size_t> deRham;
  /// The zero mode and every nonzero mode that contributed.
  std::vector<ModeContribution> breakdown;
  std::size_t modesSwept = 0;
  std::vector<Mode> contributingNonzeroModes;

  bool nonzeroModeContributed() const { return !contributingNonzeroModes.empty(); }
  /// The box sum is only claimed as the torus answer when nothing outside k = 0 showed up.
  bool complete() const { return !nonzeroModeContributed(); }
  std::size_t at(Theory t, Bidegree b) const;
};

/// All k in {-R..R}^{2n}, lexicographic.
std::vector<Mode> modeBox(int n, int radius);

ModeContribution modeCohomology(const FlatGeometry& g, const Mode& k, const std::vector<Theory>& theories, Pair pair);

/// Sweeps the box on `threads` workers (0 = hardware concurrency). The sum is
/// taken in box order, so the result does not depend on scheduling.
TorusReport torusCohomology(const FlatGeometry& g, const std::vector<Theory>& theories, Pair pair, int radius,
                            unsigned threads = 0);

/// H^{0,-2} (holomorphic functions) or H^{0,2} (antiholomorphic) at one mode of
/// an n = 2 model: the BC dimension there against the Cauchy-Riemann
/// constraint on the character e^{ik.x}.
struct PdeSliceCheck {
  std::size_t dim = 0;
  bool constraintHolds = false;
  bool agrees() const { return (dim == 1) == constraintHolds && dim <= 1; }
};

/// Throws PreconditionError for other descriptors or n != 2.
PdeSliceCheck pdeSliceCheck(const FlatGeometry& g, const Mode& k, const std::string& descriptor);

/// Search for a generalized metric commuting with two plane-model structures.
/// The commutant {G : G J_i = J_i G, P G symmetric} is linear; integer points of
/// it are sampled and tested. A hit proves existence, a miss is only evidence.
struct MetricProbe {
  std::size_t commutantDim = 0;
  std::size_t samples = 0;
  std::size_t positiveSamples = 0;  // P G positive definite
  bool found = false;               // a sample passed every metric identity
  Matrix witness;
};

MetricProbe probeCompatibleMetric(const Matrix& j1, const Matrix& j2, int n, int coefficientRange = 2,
                                  std::size_t maxSamples = 4096);

}  // namespace bgc
