#include "qspace/ratfunc.hpp"

#include <utility>
#include <vector>

#include "qspace/error.hpp"

namespace qspace {

namespace {

// Dense polynomial in t = q^{1/2}; index is the power of t.
using Poly = std::vector<Gauss>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

std::pair<int, Poly> to_poly(const QScalar& s) {
  int lo = s.min_e2();
  Poly p(static_cast<std::size_t>(s.max_e2() - lo + 1));
  for (const auto& t : s.terms()) p[static_cast<std::size_t>(t.e2 - lo)] = t.c;
  return {lo, p};
}

QScalar from_poly(const Poly& p, int shift) {
  QScalar s;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (!p[k].is_zero()) s += QScalar(p[k], static_cast<int>(k) + shift);
  return s;
}

void scale(Poly& p, const Gauss& c) {
  for (auto& x : p) x *= c;
}

// Returns (quotient, remainder) of a / b; b must be nonzero and trimmed.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Gauss inv = b.back().inverse();
  Poly quot(a.size() - b.size() + 1);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k].is_zero()) continue;
    Gauss f = a[k] * inv;
    std::size_t off = k - (b.size() - 1);
    quot[off] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
  }
  trim(a);
  trim(quot);
  return {quot, a};
}

Poly monic_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
    if (!b.empty()) scale(b, b.back().inverse());
  }
  if (!a.empty()) scale(a, a.back().inverse());
  return a;
}

}  // namespace

QRational::QRational(const QScalar& n, const QScalar& d) : num_(n), den_(d) { normalize(); }

void QRational::normalize() {
  if (den_.is_zero()) throw Error(ErrorKind::domain, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = QScalar(1);
    return;
  }
  auto [sn, N] = to_poly(num_);
  auto [sd, D] = to_poly(den_);
  if (D.size() > 1 && N.size() > 1) {
    Poly g = monic_gcd(N, D);
    if (g.size() > 1) {
      N = divmod(N, g).first;
      D = divmod(D, g).first;
    }
  }
  Gauss lead_inv = D.back().inverse();
  scale(N, lead_inv);
  scale(D, lead_inv);
  num_ = from_poly(N, sn - sd);
  den_ = from_poly(D, 0);
}

std::optional<QScalar> QRational::to_laurent() const {
  if (!is_laurent()) return std::nullopt;
  return num_;
}

QRational QRational::conj() const {
  // Canonical form is preserved up to the monic rescaling, so renormalize.
  return QRational(num_.conj(), den_.conj());
}

QRational QRational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::domain, "inverse of zero rational function");
  return QRational(den_, num_);
}

std::complex<double> QRational::eval(double q) const { return num_.eval(q) / den_.eval(q); }

Gauss QRational::at_one() const {
  Gauss d = den_.at_one();
  if (d.is_zero()) throw Error(ErrorKind::domain, "rational function has a pole at q = 1");
  return num_.at_one() / d;
}

std::string QRational::to_string() const {
  if (is_laurent()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QRational& QRational::operator+=(const QRational& o) {
  if (is_laurent() && o.is_laurent()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    *this = QRational(num_ + o.num_, den_);
    return *this;
  }
  *this = QRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

QRational& QRational::operator-=(const QRational& o) { return *this += -o; }

QRational& QRational::operator*=(const QRational& o) {
  if (is_laurent() && o.is_laurent()) {
    num_ *= o.num_;
    return *this;
  }
  *this = QRational(num_ * o.num_, den_ * o.den_);
  return *this;
}

QRational& QRational::operator/=(const QRational& o) {
  if (o.is_zero()) throw Error(ErrorKind::domain, "division by zero rational function");
  *this = QRational(num_ * o.den_, den_ * o.num_);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const QRational& r) { return os << r.to_string(); }

}  // namespace qspace
