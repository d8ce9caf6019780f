#include "bgc/gaussian_rational.hpp"

#include <cctype>
#include <ostream>

#include "bgc/errors.hpp"

namespace bgc {

namespace {

// Parses an unsigned rational "N" or "N/D" from text[pos..], advancing pos.
// Returns false if no digits are present.
bool parseUnsignedRational(std::string_view text, std::size_t& pos, Rational& out) {
  auto digits = [&](std::string& into) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    into.assign(text.substr(start, pos - start));
    return !into.empty();
  };
  std::string num;
  if (!digits(num)) return false;
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (!digits(den)) throw ParseError("missing denominator in scalar literal '" + std::string(text) + "'");
  }
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw ParseError("zero denominator in scalar literal '" + std::string(text) + "'");
  out = Rational(n, d);
  out.canonicalize();
  return true;
}

// One signed term: [sign] rational [i] | [sign] i
struct Term {
  Rational value;
  bool imaginary = false;
};

Term parseTerm(std::string_view text, std::size_t& pos, bool requireSign) {
  Term term;
  int sign = 1;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    sign = text[pos] == '-' ? -1 : 1;
    ++pos;
  } else if (requireSign) {
    throw ParseError("expected '+' or '-' in scalar literal '" + std::string(text) + "'");
  }
  bool haveNumber = parseUnsignedRational(text, pos, term.value);
  if (pos < text.size() && text[pos] == 'i') {
    ++pos;
    term.imaginary = true;
    if (!haveNumber) term.value = 1;
  } else if (!haveNumber) {
    throw ParseError("expected a number in scalar literal '" + std::string(text) + "'");
  }
  if (sign < 0) term.value = -term.value;
  return term;
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty scalar literal");
  std::size_t pos = 0;
  Term first = parseTerm(text, pos, false);
  if (pos == text.size()) {
    return first.imaginary ? GaussianRational(Rational(0), first.value) : GaussianRational(first.value);
  }
  if (first.imaginary) throw ParseError("imaginary part must come last in '" + std::string(text) + "'");
  Term second = parseTerm(text, pos, true);
  if (!second.imaginary || pos != text.size()) {
    throw ParseError("malformed scalar literal '" + std::string(text) + "'");
  }
  return {first.value, second.value};
}

GaussianRational GaussianRational::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw SingularError("division by zero");
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (isReal() && o.isReal()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

void GaussianRational::subMul(const GaussianRational& a, const GaussianRational& b) {
  if (a.isZero() || b.isZero()) return;
  if (&a == this || &b == this) {
    GaussianRational product = a * b;
    *this -= product;
    return;
  }
  if (a.isReal() && b.isReal()) {
    re_ -= a.re_ * b.re_;
    return;
  }
  re_ -= a.re_ * b.re_ - a.im_ * b.im_;
  im_ -= a.re_ * b.im_ + a.im_ * b.re_;
}

void GaussianRational::addMul(const GaussianRational& a, const GaussianRational& b) {
  if (a.isZero() || b.isZero()) return;
  if (&a == this || &b == this) {
    GaussianRational product = a * b;
    *this += product;
    return;
  }
  if (a.isReal() && b.isReal()) {
    re_ += a.re_ * b.re_;
    return;
  }
  re_ += a.re_ * b.re_ - a.im_ * b.im_;
  im_ += a.re_ * b.im_ + a.im_ * b.re_;
}

std::string GaussianRational::toString() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imPart = im_.get_str() + "i";
  if (sgn(re_) == 0) return imPart;
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + imPart;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.toString(); }

}  // namespace bgc
