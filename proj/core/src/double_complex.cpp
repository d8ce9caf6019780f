#include "bgc/double_complex.hpp"

#include <algorithm>
#include <sstream>

#include "bgc/errors.hpp"

namespace bgc {

std::string to_string(const Bidegree& b) { return "(" + std::to_string(b.p) + "," + std::to_string(b.q) + ")"; }

void DoubleComplex::setSpace(Bidegree at, std::size_t dim) {
  if (dim == 0)
    support_.erase(at);
  else
    support_[at] = dim;
}

void DoubleComplex::setDPrime(Bidegree from, Matrix m) {
  if (m.isZero())
    dprime_.erase(from);
  else
    dprime_[from] = std::move(m);
}

void DoubleComplex::setDSecond(Bidegree from, Matrix m) {
  if (m.isZero())
    dsecond_.erase(from);
  else
    dsecond_[from] = std::move(m);
}

std::size_t DoubleComplex::dim(Bidegree at) const {
  auto it = support_.find(at);
  return it == support_.end() ? 0 : it->second;
}

Matrix DoubleComplex::dPrime(Bidegree from) const {
  auto it = dprime_.find(from);
  if (it != dprime_.end()) return it->second;
  return Matrix::zero(dim({from.p + 1, from.q}), dim(from));
}

Matrix DoubleComplex::dSecond(Bidegree from) const {
  auto it = dsecond_.find(from);
  if (it != dsecond_.end()) return it->second;
  return Matrix::zero(dim({from.p, from.q + 1}), dim(from));
}

int DoubleComplex::minTotal() const {
  int k = 0;
  bool first = true;
  for (const auto& [b, d] : support_) {
    if (first || b.total() < k) k = b.total();
    first = false;
  }
  return k;
}

int DoubleComplex::maxTotal() const {
  int k = 0;
  bool first = true;
  for (const auto& [b, d] : support_) {
    if (first || b.total() > k) k = b.total();
    first = false;
  }
  return k;
}

std::size_t DoubleComplex::totalDim() const {
  std::size_t n = 0;
  for (const auto& [b, d] : support_) n += d;
  return n;
}

std::vector<Bidegree> DoubleComplex::bidegreesOfTotal(int k) const {
  std::vector<Bidegree> out;
  for (const auto& [b, d] : support_)
    if (b.total() == k) out.push_back(b);
  // std::map orders by (p,q), which for fixed p+q is ascending p
  return out;
}

std::size_t DoubleComplex::totalDim(int k) const {
  std::size_t n = 0;
  for (const auto& b : bidegreesOfTotal(k)) n += dim(b);
  return n;
}

std::size_t DoubleComplex::offsetInTotal(Bidegree at) const {
  std::size_t off = 0;
  for (const auto& b : bidegreesOfTotal(at.total())) {
    if (b == at) return off;
    off += dim(b);
  }
  throw DimensionError("bidegree " + to_string(at) + " is not in the support");
}

Matrix DoubleComplex::totalDifferential(int k) const {
  Matrix d(totalDim(k + 1), totalDim(k));
  for (const auto& b : bidegreesOfTotal(k)) {
    const std::size_t col = offsetInTotal(b);
    Bidegree right{b.p + 1, b.q};
    Bidegree up{b.p, b.q + 1};
    if (dim(right) > 0) d.setBlock(offsetInTotal(right), col, dPrime(b));
    if (dim(up) > 0) d.setBlock(offsetInTotal(up), col, dSecond(b));
  }
  return d;
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Shape: return "shape";
    case Violation::Kind::DPrimeSquare: return "d'd' != 0";
    case Violation::Kind::DSecondSquare: return "d''d'' != 0";
    case Violation::Kind::Anticommutation: return "d'd'' + d''d' != 0";
    case Violation::Kind::Unsupported: return "map touches an absent space";
  }
  return "unknown";
}

std::vector<Violation> validate(const DoubleComplex& c) {
  std::vector<Violation> out;
  auto shapeCheck = [&](const std::map<Bidegree, Matrix>& maps, int dp, int dq, const char* name) {
    for (const auto& [from, m] : maps) {
      Bidegree to{from.p + dp, from.q + dq};
      if (c.dim(from) == 0 || c.dim(to) == 0) {
        out.push_back({Violation::Kind::Unsupported, from, std::string(name) + " from " + to_string(from) + " to " + to_string(to)});
        continue;
      }
      if (m.rows() != c.dim(to) || m.cols() != c.dim(from)) {
        std::ostringstream msg;
        msg << name << " at " << to_string(from) << " is " << m.rows() << "x" << m.cols() << ", expected " << c.dim(to) << "x"
            << c.dim(from);
        out.push_back({Violation::Kind::Shape, from, msg.str()});
      }
    }
  };
  shapeCheck(c.storedDPrime(), 1, 0, "d'");
  shapeCheck(c.storedDSecond(), 0, 1, "d''");
  if (!out.empty()) return out;

  for (const auto& [b, d] : c.support()) {
    if (!(c.dPrime({b.p + 1, b.q}) * c.dPrime(b)).isZero())
      out.push_back({Violation::Kind::DPrimeSquare, b, "d'd' != 0 at " + to_string(b)});
    if (!(c.dSecond({b.p, b.q + 1}) * c.dSecond(b)).isZero())
      out.push_back({Violation::Kind::DSecondSquare, b, "d''d'' != 0 at " + to_string(b)});
    Matrix anti = c.dPrime({b.p, b.q + 1}) * c.dSecond(b) + c.dSecond({b.p + 1, b.q}) * c.dPrime(b);
    if (!anti.isZero()) out.push_back({Violation::Kind::Anticommutation, b, "d'd'' + d''d' != 0 at " + to_string(b)});
  }
  return out;
}

}  // namespace bgc
