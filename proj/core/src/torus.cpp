#include "bgc/torus.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "bgc/errors.hpp"

namespace bgc {

bool ModeContribution::zero() const {
  for (const auto& [t, table] : dims)
    for (const auto& [b, d] : table)
      if (d != 0) return false;
  return std::all_of(deRham.begin(), deRham.end(), [](const auto& e) { return e.second == 0; });
}

std::size_t TorusReport::at(Theory t, Bidegree b) const {
  auto it = dims.find(t);
  if (it == dims.end()) return 0;
  auto jt = it->second.find(b);
  return jt == it->second.end() ? 0 : jt->second;
}

std::vector<Mode> modeBox(int n, int radius) {
  if (radius < 0) throw PreconditionError("mode-box radius must be >= 0");
  const int dim = 2 * n;
  std::vector<Mode> out;
  Mode k(dim, -radius);
  while (true) {
    out.push_back(k);
    int j = dim - 1;
    while (j >= 0 && k[j] == radius) k[j--] = -radius;
    if (j < 0) break;
    ++k[j];
  }
  return out;
}

ModeContribution modeCohomology(const FlatGeometry& g, const Mode& k, const std::vector<Theory>& theories, Pair pair) {
  ModeContribution out;
  out.k = k;
  const Reindexed r = reindexToDoubleComplex(g, g.modeComplex(k), pair);
  const ComplexAnalysis a(r.complex);
  for (Theory t : theories) {
    CohomologyReport rep;
    switch (t) {
      case Theory::BottChern: rep = a.bottChern(); break;
      case Theory::Aeppli: rep = a.aeppli(); break;
      case Theory::DPrime: rep = a.dPrimeCohomology(); break;
      case Theory::DSecond: rep = a.dSecondCohomology(); break;
      case Theory::DeRham:
        for (const auto& [deg, d] : a.deRham().totalDims) out.deRham[r.totalLabel(deg)] += d;
        continue;
    }
    auto& table = out.dims[t];
    for (const auto& [ab, d] : rep.dims) table[r.toU(ab)] += d;
  }
  return out;
}

TorusReport torusCohomology(const FlatGeometry& g, const std::vector<Theory>& theories, Pair pair, int radius,
                            unsigned threads) {
  TorusReport rep;
  rep.label = g.model().label;
  rep.n = g.space().n();
  rep.pair = pair;
  rep.radius = radius;
  rep.theories = theories;
  for (const auto& [b, u] : g.grading().pieces) rep.sliceDims[b] = u.dim();

  const std::vector<Mode> box = modeBox(rep.n, radius);
  std::vector<ModeContribution> results(box.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(box.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i; !failed && (i = next++) < box.size();) {
      try {
        results[i] = modeCohomology(g, box[i], theories, pair);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  rep.modesSwept = box.size();
  for (Theory t : theories)
    if (t != Theory::DeRham)
      for (const auto& [b, d] : rep.sliceDims) rep.dims[t][b];
  for (auto& mc : results) {
    for (const auto& [t, table] : mc.dims)
      for (const auto& [b, d] : table) rep.dims[t][b] += d;
    for (const auto& [deg, d] : mc.deRham) rep.deRham[deg] += d;
    const bool isZeroMode = std::all_of(mc.k.begin(), mc.k.end(), [](int x) { return x == 0; });
    if (!isZeroMode && !mc.zero()) rep.contributingNonzeroModes.push_back(mc.k);
    if (isZeroMode || !mc.zero()) rep.breakdown.push_back(std::move(mc));
  }
  return rep;
}

PdeSliceCheck pdeSliceCheck(const FlatGeometry& g, const Mode& k, const std::string& descriptor) {
  if (g.space().n() != 2) throw PreconditionError("pdeSliceCheck needs an n = 2 model");
  Bidegree at;
  // e^{ik.x} is killed by d/dzbar_j iff i k_x - k_y = 0, by d/dz_j iff i k_x + k_y = 0;
  // with real k both read k_x = k_y = 0
  int sign = 0;
  if (descriptor == "H^{0,-2}") {
    at = {0, -2};
    sign = -1;
  } else if (descriptor == "H^{0,2}") {
    at = {0, 2};
    sign = +1;
  } else {
    throw PreconditionError("unsupported descriptor '" + descriptor + "' (H^{0,-2} or H^{0,2})");
  }
  PdeSliceCheck out;
  out.constraintHolds = true;
  for (int j = 0; j < 2; ++j) {
    const Scalar value = Scalar(Rational(0), Rational(k.at(2 * j))) + Scalar(sign * k.at(2 * j + 1));
    if (!value.isZero()) out.constraintHolds = false;
  }
  const ModeContribution mc = modeCohomology(g, k, {Theory::BottChern}, Pair::PP);
  const auto& table = mc.dims.at(Theory::BottChern);
  auto it = table.find(at);
  out.dim = it == table.end() ? 0 : it->second;
  return out;
}

MetricProbe probeCompatibleMetric(const Matrix& j1, const Matrix& j2, int n, int coefficientRange,
                                  std::size_t maxSamples) {
  const std::size_t m = 4 * static_cast<std::size_t>(n);
  const Matrix p = pairingMatrix(n);
  // unknown G as a vector of m*m entries, row-major; each constraint is linear in G
  auto unit = [&](std::size_t idx) {
    Matrix e(m, m);
    e(idx / m, idx % m) = Scalar(1);
    return e;
  };
  std::vector<Matrix> images;
  for (std::size_t idx = 0; idx < m * m; ++idx) {
    const Matrix e = unit(idx);
    const Matrix pe = p * e;
    images.push_back(vstack(vstack(e * j1 - j1 * e, e * j2 - j2 * e), pe - pe.transpose()));
  }
  const std::size_t eqs = images.front().rows() * m;
  Matrix system(eqs, m * m);
  for (std::size_t idx = 0; idx < m * m; ++idx)
    for (std::size_t r = 0; r < images[idx].rows(); ++r)
      for (std::size_t c = 0; c < m; ++c) system(r * m + c, idx) = images[idx](r, c);
  const Subspace commutant = kernelBasis(system);

  MetricProbe out;
  out.commutantDim = commutant.dim();
  if (commutant.dim() == 0) return out;

  std::vector<Matrix> basis;
  for (std::size_t c = 0; c < commutant.dim(); ++c) {
    const Vector v = commutant.basis().column(c);
    Matrix g(m, m);
    for (std::size_t idx = 0; idx < m * m; ++idx) g(idx / m, idx % m) = v[idx];
    basis.push_back(std::move(g));
  }

  auto tryCandidate = [&](const Matrix& g) {
    ++out.samples;
    if (!isPositiveDefinite(p * g)) return false;
    ++out.positiveSamples;
    if (!generalizedMetricViolations(g, n).empty()) return false;
    out.found = true;
    out.witness = g;
    return true;
  };
  // G^2 = 1 is quadratic, so random points of the commutant rarely hit it;
  // the products +-J1 J2 always lie in it and go first
  const Matrix prod = j1 * j2;
  if (tryCandidate(-prod) || tryCandidate(prod)) return out;

  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<int> coef(-coefficientRange, coefficientRange);
  while (out.samples < maxSamples) {
    Matrix g(m, m);
    for (const Matrix& b : basis) {
      Matrix term = b;
      term *= Scalar(coef(rng));
      g += term;
    }
    if (tryCandidate(g)) break;
  }
  return out;
}

}  // namespace bgc
