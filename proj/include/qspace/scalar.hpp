#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qspace {

/// Exact Gaussian rational a + b*i.
struct Gauss {
  mpq_class re;
  mpq_class im;

  Gauss() = default;
  Gauss(long n) : re(n), im(0) {}  // NOLINT: implicit by design
  Gauss(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  Gauss conj() const { return Gauss(re, -im); }
  Gauss inverse() const;
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  Gauss operator-() const { return Gauss(-re, -im); }
  Gauss& operator+=(const Gauss& o);
  Gauss& operator-=(const Gauss& o);
  Gauss& operator*=(const Gauss& o);
  friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
  friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
  friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
  friend Gauss operator/(const Gauss& a, const Gauss& b) { return a * b.inverse(); }
  friend bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }

  std::string to_string() const;
};

/// Laurent polynomial in q^{1/2} with Gaussian-rational coefficients.
///
/// Exponents are stored doubled, so q^{3/2} has key 3. Terms are kept sorted
/// by exponent with no zero coefficients, which makes the representation
/// canonical and equality structural.
class QScalar {
 public:
  struct Term {
    int e2;
    Gauss c;
  };

  QScalar() = default;
  QScalar(long n);  // NOLINT: implicit so integer literals work in formulas
  QScalar(const Gauss& c, int e2 = 0);

  /// q^(num/den) with den in {1, 2}.
  static QScalar q_pow(int num, int den = 1);
  static QScalar i();
  static QScalar parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].e2 == 0); }
  int min_e2() const;
  int max_e2() const;
  /// Coefficient of q^(e2/2).
  Gauss coeff(int e2) const;

  QScalar conj() const;
  /// Inverse of a monomial; throws for anything else.
  QScalar inverse() const;
  QScalar pow(int n) const;
  QScalar scaled(const Gauss& c) const;
  QScalar shifted(int de2) const;

  std::complex<double> eval(double q) const;
  /// Exact value at q = 1.
  Gauss at_one() const;
  std::string to_string() const;

  QScalar operator-() const;
  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(const QScalar& a, const QScalar& b);
  friend bool operator==(const QScalar& a, const QScalar& b);
  friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }
  friend bool operator<(const QScalar& a, const QScalar& b);

 private:
  explicit QScalar(std::vector<Term> terms) : terms_(std::move(terms)) {}
  static QScalar from_unsorted(std::vector<Term> terms);
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const QScalar& s);

/// q - q^{-1}
QScalar lambda();
/// q + q^{-1}
QScalar lambda_plus();

}  // namespace qspace
