#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qspace/eigen_scalar.hpp"
#include "qspace/error.hpp"
#include "qspace/ratfunc.hpp"
#include "qspace/scalar.hpp"
#include "random_util.hpp"

using namespace qspace;
using qspace::testing::random_qscalar;

namespace {
constexpr int kIterations = 300;
QScalar q(int n, int d = 1) { return QScalar::q_pow(n, d); }
}  // namespace

TEST(Scalar, LambdaTimesLambdaPlus) { EXPECT_EQ(lambda() * lambda_plus(), q(2) - q(-2)); }

TEST(Scalar, HalfPowersMultiply) { EXPECT_EQ(q(1, 2) * q(1, 2), q(1)); }

TEST(Scalar, EvalExamples) {
  EXPECT_EQ(lambda().eval(1.0), std::complex<double>(0.0, 0.0));
  EXPECT_NEAR(q(2).eval(1.1).real(), 1.21, 1e-15);
  EXPECT_NEAR(q(-1, 2).eval(4.0).real(), 0.5, 1e-15);
}

TEST(Scalar, CanonicalTextForm) {
  QScalar s = QScalar(Gauss(1, -1), 3) + QScalar(Gauss(2), -2);
  EXPECT_EQ(s.to_string(), "(1 - i)*q^(3/2) + 2*q^(-1)");
  EXPECT_EQ(QScalar::parse("(1 - i)*q^(3/2) + 2*q^(-1)"), s);
  EXPECT_EQ(QScalar().to_string(), "0");
  EXPECT_EQ((-q(1)).to_string(), "-q");
  EXPECT_EQ(QScalar::i().scaled(Gauss(mpq_class(-2, 3))).to_string(), "-2/3*i");
}

TEST(Scalar, ParserAcceptsFormulaSyntax) {
  EXPECT_EQ(QScalar::parse("(q^2-1)^2"), (q(2) - 1) * (q(2) - 1));
  EXPECT_EQ(QScalar::parse("q - q^-1"), lambda());
  EXPECT_EQ(QScalar::parse("1/2*q"), q(1).scaled(Gauss(mpq_class(1, 2))));
  EXPECT_EQ(QScalar::parse("(q^(1/2))^3"), q(3, 2));
  EXPECT_EQ(QScalar::parse("2*i*q^(-1/2)"), QScalar(Gauss(0, 2), -1));
}

TEST(Scalar, ParserRejectsMalformed) {
  for (const char* bad : {"", "q^", "(1 + q", "q/(1+q)", "x", "1 +", "(1+q)^(1/2)"})
    EXPECT_THROW(QScalar::parse(bad), Error) << bad;
}

TEST(Scalar, ConjugationFlipsImaginaryUnit) {
  EXPECT_EQ(QScalar::i().conj(), -QScalar::i());
  EXPECT_EQ(q(3, 2).conj(), q(3, 2));
}

TEST(ScalarProperty, RingAxioms) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < kIterations; ++it) {
    QScalar a = random_qscalar(rng), b = random_qscalar(rng), c = random_qscalar(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, QScalar());
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
  }
}

TEST(ScalarProperty, TextRoundTrip) {
  std::mt19937_64 rng(12);
  for (int it = 0; it < kIterations; ++it) {
    QScalar a = random_qscalar(rng, 4);
    EXPECT_EQ(QScalar::parse(a.to_string()), a) << a.to_string();
  }
}

TEST(ScalarProperty, EvalIsMultiplicative) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> qd(0.5, 2.0);
  for (int it = 0; it < kIterations; ++it) {
    QScalar a = random_qscalar(rng), b = random_qscalar(rng);
    double qv = qd(rng);
    std::complex<double> lhs = (a * b).eval(qv);
    std::complex<double> rhs = a.eval(qv) * b.eval(qv);
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST(Rational, ReducesCommonFactors) {
  QRational r(q(2) - 1, q(1) - 1);
  ASSERT_TRUE(r.is_laurent());
  EXPECT_EQ(*r.to_laurent(), q(1) + 1);
  QRational s(q(1), q(3));
  EXPECT_EQ(*s.to_laurent(), q(-2));
}

TEST(Rational, QNumberFactorialAtOne) {
  // [n] = (q^{2n} - 1) / (q^2 - 1); product up to 4 evaluates to 4! at q = 1.
  QRational f(1);
  for (int n = 1; n <= 4; ++n) f *= QRational(q(2 * n) - 1, q(2) - 1);
  EXPECT_TRUE(f.is_laurent());
  EXPECT_NEAR(f.eval(1.0).real(), 24.0, 1e-12);
  QRational inv = f.inverse();
  EXPECT_EQ(inv * f, QRational(1));
  EXPECT_NEAR(inv.eval(1.0).real(), 1.0 / 24.0, 1e-12);
}

TEST(RationalProperty, FieldAxioms) {
  std::mt19937_64 rng(14);
  for (int it = 0; it < 100; ++it) {
    QRational a(random_qscalar(rng), qspace::testing::random_nonzero_qscalar(rng));
    QRational b(random_qscalar(rng), qspace::testing::random_nonzero_qscalar(rng));
    QRational c(random_qscalar(rng), qspace::testing::random_nonzero_qscalar(rng));
    EXPECT_EQ((a + b) * c, a * c + b * c);
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
  }
}

TEST(Linalg, DeterminantAndSolve) {
  RMatrixQ m(2, 2);
  m << QRational(q(1)), QRational(1), QRational(1), QRational(q(-1));
  EXPECT_EQ(determinant(m), QRational(0));
  m(1, 1) = QRational(q(1));
  EXPECT_EQ(determinant(m), QRational(q(2) - 1));
  RMatrixQ b(2, 1);
  b << QRational(q(1) + 1), QRational(q(1) + 1);
  auto x = solve_exact(m, b);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)(0, 0), QRational(1));
  EXPECT_EQ((*x)(1, 0), QRational(1));
}
