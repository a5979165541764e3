#include "qspace/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

#include "qspace/error.hpp"

namespace qspace {

// ---------------------------------------------------------------- Gauss

Gauss Gauss::inverse() const {
  mpq_class n = re * re + im * im;
  if (sgn(n) == 0) throw Error(ErrorKind::domain, "division by zero Gaussian rational");
  return Gauss(re / n, -im / n);
}

Gauss& Gauss::operator+=(const Gauss& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Gauss& Gauss::operator-=(const Gauss& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Gauss& Gauss::operator*=(const Gauss& o) {
  mpq_class r = re * o.re - im * o.im;
  mpq_class i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

namespace {

std::string rat_str(const mpq_class& r) { return r.get_str(); }

std::string imag_str(const mpq_class& b) {
  if (b == 1) return "i";
  if (b == -1) return "-i";
  return rat_str(b) + "*i";
}

}  // namespace

std::string Gauss::to_string() const {
  if (is_real()) return rat_str(re);
  if (sgn(re) == 0) return imag_str(im);
  std::string s = "(" + rat_str(re);
  if (sgn(im) < 0) {
    s += " - " + imag_str(-im);
  } else {
    s += " + " + imag_str(im);
  }
  return s + ")";
}

// ---------------------------------------------------------------- QScalar

QScalar::QScalar(long n) {
  if (n != 0) terms_.push_back({0, Gauss(n)});
}

QScalar::QScalar(const Gauss& c, int e2) {
  if (!c.is_zero()) terms_.push_back({e2, c});
}

QScalar QScalar::q_pow(int num, int den) {
  if (den == 1) return QScalar(Gauss(1), 2 * num);
  if (den == 2) return QScalar(Gauss(1), num);
  throw Error(ErrorKind::domain, "q exponent denominator must be 1 or 2");
}

QScalar QScalar::i() { return QScalar(Gauss(0, 1)); }

QScalar QScalar::from_unsorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.e2 < b.e2; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().e2 == t.e2) {
      out.back().c += t.c;
    } else {
      if (!out.empty() && out.back().c.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().c.is_zero()) out.pop_back();
  return QScalar(std::move(out));
}

int QScalar::min_e2() const { return terms_.empty() ? 0 : terms_.front().e2; }
int QScalar::max_e2() const { return terms_.empty() ? 0 : terms_.back().e2; }

Gauss QScalar::coeff(int e2) const {
  for (const auto& t : terms_)
    if (t.e2 == e2) return t.c;
  return Gauss();
}

QScalar QScalar::conj() const {
  QScalar r = *this;
  for (auto& t : r.terms_) t.c = t.c.conj();
  return r;
}

QScalar QScalar::inverse() const {
  if (!is_monomial()) throw Error(ErrorKind::domain, "only monomials are invertible in the Laurent ring: " + to_string());
  return QScalar(terms_[0].c.inverse(), -terms_[0].e2);
}

QScalar QScalar::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  QScalar result(1);
  QScalar base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

QScalar QScalar::scaled(const Gauss& c) const {
  if (c.is_zero()) return QScalar();
  QScalar r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

QScalar QScalar::shifted(int de2) const {
  QScalar r = *this;
  for (auto& t : r.terms_) t.e2 += de2;
  return r;
}

Gauss QScalar::at_one() const {
  Gauss r;
  for (const auto& t : terms_) r += t.c;
  return r;
}

std::complex<double> QScalar::eval(double q) const {
  std::complex<double> sum = 0.0;
  for (const auto& t : terms_) sum += t.c.to_complex() * std::pow(q, 0.5 * t.e2);
  return sum;
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

QScalar& QScalar::operator+=(const QScalar& o) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->e2 < b->e2)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->e2 < a->e2) {
      out.push_back(*b++);
    } else {
      Gauss c = a->c + b->c;
      if (!c.is_zero()) out.push_back({a->e2, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar operator*(const QScalar& a, const QScalar& b) {
  if (a.is_zero() || b.is_zero()) return QScalar();
  if (b.terms_.size() == 1) {
    QScalar r = a.scaled(b.terms_[0].c);
    return r.shifted(b.terms_[0].e2);
  }
  if (a.terms_.size() == 1) {
    QScalar r = b.scaled(a.terms_[0].c);
    return r.shifted(a.terms_[0].e2);
  }
  std::vector<QScalar::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back({x.e2 + y.e2, x.c * y.c});
  return QScalar::from_unsorted(std::move(prod));
}

QScalar& QScalar::operator*=(const QScalar& o) { return *this = *this * o; }

bool operator==(const QScalar& a, const QScalar& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].e2 != b.terms_[k].e2 || a.terms_[k].c != b.terms_[k].c) return false;
  return true;
}

bool operator<(const QScalar& a, const QScalar& b) {
  // Arbitrary but total order, used only to key ordered containers.
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    const auto& x = a.terms_[k];
    const auto& y = b.terms_[k];
    if (x.e2 != y.e2) return x.e2 < y.e2;
    if (x.c.re != y.c.re) return x.c.re < y.c.re;
    if (x.c.im != y.c.im) return x.c.im < y.c.im;
  }
  return false;
}

namespace {

std::string q_power_str(int e2) {
  if (e2 == 2) return "q";
  if (e2 % 2 == 0) {
    int e = e2 / 2;
    return e > 0 ? "q^" + std::to_string(e) : "q^(" + std::to_string(e) + ")";
  }
  return "q^(" + std::to_string(e2) + "/2)";
}

std::string term_str(const QScalar::Term& t) {
  if (t.e2 == 0) return t.c.to_string();
  std::string m = q_power_str(t.e2);
  if (t.c == Gauss(1)) return m;
  if (t.c == Gauss(-1)) return "-" + m;
  return t.c.to_string() + "*" + m;
}

}  // namespace

std::string QScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string t = term_str(*it);
    if (s.empty()) {
      s = t;
    } else if (t[0] == '-') {
      s += " - " + t.substr(1);
    } else {
      s += " + " + t;
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const QScalar& s) { return os << s.to_string(); }

QScalar lambda() { return QScalar::q_pow(1) - QScalar::q_pow(-1); }
QScalar lambda_plus() { return QScalar::q_pow(1) + QScalar::q_pow(-1); }

// ---------------------------------------------------------------- parser

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  QScalar parse_all() {
    skip();
    if (pos_ >= s_.size()) fail("empty scalar");
    QScalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::parse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  QScalar expr() {
    QScalar v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  QScalar term() {
    QScalar v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        QScalar d = unary();
        if (!d.is_monomial()) fail("division by a non-monomial");
        v *= d.inverse();
      } else {
        return v;
      }
    }
  }

  QScalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  // Returns the exponent as (numerator, denominator).
  std::pair<long, long> exponent() {
    if (eat('(')) {
      long sign = 1;
      if (eat('-')) sign = -1;
      else eat('+');
      long num = integer();
      long den = 1;
      if (eat('/')) den = integer();
      if (!eat(')')) fail("expected ')'");
      if (den == 0) fail("zero denominator in exponent");
      return {sign * num, den};
    }
    long sign = 1;
    if (eat('-')) sign = -1;
    return {sign * integer(), 1};
  }

  QScalar power() {
    QScalar base = atom();
    if (!eat('^')) return base;
    auto [num, den] = exponent();
    if (den == 1) {
      if (num < 0 && !base.is_monomial()) fail("negative power of a non-monomial");
      return base.pow(static_cast<int>(num));
    }
    if (!base.is_monomial() || base.terms()[0].c != Gauss(1)) fail("fractional power of a non-q-power");
    long e2 = base.terms()[0].e2 * num;
    if (e2 % den != 0) fail("exponent outside the half-integer lattice");
    return QScalar(Gauss(1), static_cast<int>(e2 / den));
  }

  QScalar atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      QScalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'q') {
      ++pos_;
      return QScalar::q_pow(1);
    }
    if (c == 'i') {
      ++pos_;
      return QScalar::i();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class n(std::string(s_.substr(start, pos_ - start)));
      return QScalar(Gauss(mpq_class(n)));
    }
    fail("unexpected token");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

QScalar QScalar::parse(std::string_view text) { return ScalarParser(text).parse_all(); }

}  // namespace qspace
