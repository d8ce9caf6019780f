#include "bgc/generators.hpp"

#include <map>
#include <sstream>

#include "bgc/errors.hpp"
#include "bgc/linalg.hpp"

namespace bgc {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// One generator per basis vector; arrows are unit entries between generators.
struct Generators {
  std::vector<Bidegree> at;
  struct Arrow {
    std::size_t from, to;
    bool dprime;
    int sign;
  };
  std::vector<Arrow> arrows;

  DoubleComplex build() const {
    DoubleComplex c;
    std::map<Bidegree, std::size_t> counts;
    std::vector<std::size_t> index(at.size());
    for (std::size_t g = 0; g < at.size(); ++g) index[g] = counts[at[g]]++;
    for (const auto& [b, n] : counts) c.setSpace(b, n);
    std::map<Bidegree, Matrix> dp, ds;
    for (const auto& a : arrows) {
      const Bidegree src = at[a.from];
      auto& maps = a.dprime ? dp : ds;
      auto it = maps.find(src);
      if (it == maps.end()) {
        const Bidegree tgt = a.dprime ? Bidegree{src.p + 1, src.q} : Bidegree{src.p, src.q + 1};
        it = maps.emplace(src, Matrix(counts[tgt], counts[src])).first;
      }
      it->second(index[a.to], index[a.from]) = a.sign;
    }
    for (auto& [b, m] : dp) c.setDPrime(b, std::move(m));
    for (auto& [b, m] : ds) c.setDSecond(b, std::move(m));
    return c;
  }
};

Generators generatorsOf(const ElementaryShape& shape) {
  Generators g;
  std::visit(Overloaded{
                 [&](const Dot& d) { g.at.push_back(d.at); },
                 [&](const Square& s) {
                   const auto [p, q] = s.at;
                   g.at = {{p, q}, {p + 1, q}, {p, q + 1}, {p + 1, q + 1}};
                   g.arrows = {{0, 1, true, 1}, {0, 2, false, 1}, {2, 3, true, 1}, {1, 3, false, -1}};
                 },
                 [&](const Zigzag& z) {
                   if (z.length < 1) throw PreconditionError("zigzag length must be at least 1");
                   Bidegree pos = z.at;
                   bool source = z.startIsSource;
                   bool dprime = z.firstArrowIsDPrime;
                   g.at.push_back(pos);
                   for (int i = 0; i < z.length; ++i) {
                     const Bidegree step = dprime ? Bidegree{1, 0} : Bidegree{0, 1};
                     const Bidegree next = source ? Bidegree{pos.p + step.p, pos.q + step.q} : Bidegree{pos.p - step.p, pos.q - step.q};
                     const std::size_t cur = g.at.size() - 1;
                     g.at.push_back(next);
                     if (source)
                       g.arrows.push_back({cur, cur + 1, dprime, 1});
                     else
                       g.arrows.push_back({cur + 1, cur, dprime, 1});
                     pos = next;
                     source = !source;
                     dprime = !dprime;
                   }
                 },
             },
             shape);
  return g;
}

Matrix randomInvertible(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(-2, 2);
  std::uniform_int_distribution<int> unit(0, 3);
  Matrix lower = Matrix::identity(n);
  Matrix upper(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    static const Scalar units[] = {Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()};
    upper(i, i) = units[unit(rng)];
    for (std::size_t j = 0; j < n; ++j) {
      if (j < i) lower(i, j) = Scalar(Rational(small(rng)), Rational(small(rng)));
      if (j > i) upper(i, j) = Scalar(Rational(small(rng)), Rational(small(rng)));
    }
  }
  return lower * upper;
}

}  // namespace

std::string describe(const ElementaryShape& shape) {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const Dot& d) { os << "dot" << to_string(d.at); },
                 [&](const Square& s) { os << "square" << to_string(s.at); },
                 [&](const Zigzag& z) {
                   os << "zigzag" << to_string(z.at) << "[len=" << z.length << (z.startIsSource ? ",src" : ",tgt")
                      << (z.firstArrowIsDPrime ? ",d']" : ",d'']");
                 },
             },
             shape);
  return os.str();
}

DoubleComplex generateElementary(const ElementaryShape& shape) { return generatorsOf(shape).build(); }

DoubleComplex directSum(std::span<const DoubleComplex> parts) {
  DoubleComplex out;
  std::map<Bidegree, std::size_t> dims;
  for (const auto& c : parts)
    for (const auto& [b, d] : c.support()) dims[b] += d;
  for (const auto& [b, d] : dims) out.setSpace(b, d);

  // offsets of each part inside every summed space
  std::vector<std::map<Bidegree, std::size_t>> offsets(parts.size());
  std::map<Bidegree, std::size_t> running;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& [b, d] : parts[i].support()) {
      offsets[i][b] = running[b];
      running[b] += d;
    }

  auto assemble = [&](bool dprime) {
    std::map<Bidegree, Matrix> maps;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto& stored = dprime ? parts[i].storedDPrime() : parts[i].storedDSecond();
      for (const auto& [src, m] : stored) {
        const Bidegree tgt = dprime ? Bidegree{src.p + 1, src.q} : Bidegree{src.p, src.q + 1};
        auto it = maps.find(src);
        if (it == maps.end()) it = maps.emplace(src, Matrix(dims[tgt], dims[src])).first;
        it->second.setBlock(offsets[i].at(tgt), offsets[i].at(src), m);
      }
    }
    for (auto& [b, m] : maps) {
      if (dprime)
        out.setDPrime(b, std::move(m));
      else
        out.setDSecond(b, std::move(m));
    }
  };
  assemble(true);
  assemble(false);
  return out;
}

DoubleComplex scrambleBasis(const DoubleComplex& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<Bidegree, Matrix> change, changeInv;
  for (const auto& [b, d] : c.support()) {
    change[b] = randomInvertible(d, rng);
    changeInv[b] = inverse(change[b]);
  }
  DoubleComplex out;
  for (const auto& [b, d] : c.support()) out.setSpace(b, d);
  for (const auto& [b, m] : c.storedDPrime()) out.setDPrime(b, change.at({b.p + 1, b.q}) * m * changeInv.at(b));
  for (const auto& [b, m] : c.storedDSecond()) out.setDSecond(b, change.at({b.p, b.q + 1}) * m * changeInv.at(b));
  return out;
}

bool GeneratedComplex::containsZigzag() const {
  for (const auto& s : pieces)
    if (std::holds_alternative<Zigzag>(s)) return true;
  return false;
}

GeneratedComplex randomComplex(std::mt19937_64& rng, const GeneratorOptions& options) {
  std::uniform_int_distribution<int> pieceCount(1, options.maxPieces);
  std::uniform_int_distribution<int> coord(-options.bidegreeRange, options.bidegreeRange);
  std::uniform_int_distribution<int> zigLen(1, options.maxZigzagLength);
  std::uniform_int_distribution<int> coin(0, 1);
  std::bernoulli_distribution zig(options.zigzagProbability);

  GeneratedComplex out;
  const int n = pieceCount(rng);
  std::vector<DoubleComplex> parts;
  for (int i = 0; i < n; ++i) {
    Bidegree at{coord(rng), coord(rng)};
    ElementaryShape shape;
    if (zig(rng)) {
      shape = Zigzag{at, zigLen(rng), coin(rng) == 1, coin(rng) == 1};
    } else if (coin(rng) == 1) {
      shape = Square{at};
    } else {
      shape = Dot{at};
    }
    out.pieces.push_back(shape);
    parts.push_back(generateElementary(shape));
  }
  out.complex = directSum(parts);
  if (options.scramble) out.complex = scrambleBasis(out.complex, rng());
  return out;
}

}  // namespace bgc
