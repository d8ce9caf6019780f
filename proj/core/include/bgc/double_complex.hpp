#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bgc/matrix.hpp"

namespace bgc {

struct Bidegree {
  int p = 0;
  int q = 0;

  int total() const { return p + q; }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

std::string to_string(const Bidegree& b);

/// A finitely supported double complex of finite-dimensional spaces A^{p,q}
/// with d' of bidegree (1,0) and d'' of bidegree (0,1).
///
/// Convention: d'd' = 0, d''d'' = 0 and d'd'' + d''d' = 0, so that d = d' + d''
/// squares to zero. Maps that are not stored are zero. Spaces of dimension
/// zero are not stored.
class DoubleComplex {
 public:
  DoubleComplex() = default;

  void setSpace(Bidegree at, std::size_t dim);
  /// d' : A^{p,q} -> A^{p+1,q}, shape dim(p+1,q) x dim(p,q).
  void setDPrime(Bidegree from, Matrix m);
  /// d'' : A^{p,q} -> A^{p,q+1}, shape dim(p,q+1) x dim(p,q).
  void setDSecond(Bidegree from, Matrix m);

  std::size_t dim(Bidegree at) const;
  const std::map<Bidegree, std::size_t>& support() const { return support_; }
  const std::map<Bidegree, Matrix>& storedDPrime() const { return dprime_; }
  const std::map<Bidegree, Matrix>& storedDSecond() const { return dsecond_; }

  /// Always shaped dim(target) x dim(source); zero when not stored.
  Matrix dPrime(Bidegree from) const;
  Matrix dSecond(Bidegree from) const;

  bool empty() const { return support_.empty(); }
  /// Inclusive bounds of the support; meaningless for an empty complex.
  int minTotal() const;
  int maxTotal() const;
  std::size_t totalDim() const;

  /// Bidegrees (p,q) in the support with p + q = k, ordered by p.
  std::vector<Bidegree> bidegreesOfTotal(int k) const;
  /// dim A^k = sum over p + q = k.
  std::size_t totalDim(int k) const;
  /// Offset of A^{p,q} inside A^{p+q}, blocks ordered by ascending p.
  std::size_t offsetInTotal(Bidegree at) const;
  /// d = d' + d'' : A^k -> A^{k+1}.
  Matrix totalDifferential(int k) const;

 private:
  std::map<Bidegree, std::size_t> support_;
  std::map<Bidegree, Matrix> dprime_;
  std::map<Bidegree, Matrix> dsecond_;
};

struct Violation {
  enum class Kind { Shape, DPrimeSquare, DSecondSquare, Anticommutation, Unsupported };
  Kind kind;
  Bidegree at;
  std::string message;
};

std::string to_string(Violation::Kind kind);

/// Every broken shape, square or anticommutation square with its source (p,q).
std::vector<Violation> validate(const DoubleComplex& c);

}  // namespace bgc
