#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bgc/double_complex.hpp"

namespace bgc {

struct Dot {
  Bidegree at;
};

/// x at (p,q) with d'x, d''x and d'd''x = -d''d'x filling the unit square.
struct Square {
  Bidegree at;
};

/// A staircase of `length` arrows (length + 1 generators) starting at `at`.
/// The walk alternates arrow types; sources sit in one total degree and
/// targets in the next. `startIsSource` chooses whether the first generator
/// emits its arrow or receives it; `firstArrowIsDPrime` chooses d' or d''.
struct Zigzag {
  Bidegree at;
  int length = 1;
  bool startIsSource = true;
  bool firstArrowIsDPrime = true;
};

using ElementaryShape = std::variant<Dot, Square, Zigzag>;

std::string describe(const ElementaryShape& shape);

DoubleComplex generateElementary(const ElementaryShape& shape);
DoubleComplex directSum(std::span<const DoubleComplex> parts);
/// Conjugates every A^{p,q} by a random invertible Gaussian-integer matrix S_{p,q}
/// and replaces d by S d S^{-1}. Deterministic in `seed`.
DoubleComplex scrambleBasis(const DoubleComplex& c, std::uint64_t seed);

/// A random direct sum of elementary pieces, remembered alongside the result.
struct GeneratedComplex {
  std::vector<ElementaryShape> pieces;
  DoubleComplex complex;

  bool containsZigzag() const;
};

struct GeneratorOptions {
  int maxPieces = 4;
  int maxZigzagLength = 5;
  int bidegreeRange = 2;  // piece origins drawn from [-range, range]^2
  double zigzagProbability = 0.4;
  bool scramble = true;
};

GeneratedComplex randomComplex(std::mt19937_64& rng, const GeneratorOptions& options = {});

}  // namespace bgc
