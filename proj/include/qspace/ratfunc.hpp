#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>

#include "qspace/scalar.hpp"

namespace qspace {

/// Element of the fraction field of the Laurent ring: num / den.
///
/// Canonical form: den is a polynomial in q^{1/2} with nonzero constant term
/// and leading coefficient 1, and gcd(num, den) = 1.
class QRational {
 public:
  QRational() : den_(1) {}
  QRational(long n) : num_(n), den_(1) {}  // NOLINT
  QRational(const QScalar& n) : num_(n), den_(1) {}  // NOLINT
  QRational(const QScalar& n, const QScalar& d);

  const QScalar& num() const { return num_; }
  const QScalar& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_ == QScalar(1); }
  std::optional<QScalar> to_laurent() const;

  QRational conj() const;
  QRational inverse() const;
  std::complex<double> eval(double q) const;
  /// Exact value at q = 1; throws domain when the denominator vanishes there.
  Gauss at_one() const;
  std::string to_string() const;

  QRational operator-() const { return QRational(-num_, den_, true); }
  QRational& operator+=(const QRational& o);
  QRational& operator-=(const QRational& o);
  QRational& operator*=(const QRational& o);
  QRational& operator/=(const QRational& o);
  friend QRational operator+(QRational a, const QRational& b) { return a += b; }
  friend QRational operator-(QRational a, const QRational& b) { return a -= b; }
  friend QRational operator*(QRational a, const QRational& b) { return a *= b; }
  friend QRational operator/(QRational a, const QRational& b) { return a /= b; }
  friend bool operator==(const QRational& a, const QRational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const QRational& a, const QRational& b) { return !(a == b); }

 private:
  QRational(QScalar n, QScalar d, bool /*canonical*/) : num_(std::move(n)), den_(std::move(d)) {}
  void normalize();
  QScalar num_;
  QScalar den_;
};

std::ostream& operator<<(std::ostream& os, const QRational& r);

}  // namespace qspace
