#include <gtest/gtest.h>

#include <random>

#include "qspace/error.hpp"
#include "qspace/ncalg.hpp"
#include "random_util.hpp"

using namespace qspace;
using qspace::testing::random_ncpoly;

namespace {

constexpr int kIterations = 60;

QScalar q(int n, int d = 1) { return QScalar::q_pow(n, d); }

// Word from generator symbols of a space, e.g. {"X1", "X2"}.
NCPoly mono(const SpaceSpec& s, std::initializer_list<const char*> symbols, const QScalar& c = 1) {
  Word w;
  for (const char* sym : symbols) {
    int idx = -1;
    for (int k = 0; k < s.dim(); ++k)
      if (s.generators[k] == sym) idx = k;
    if (idx < 0) throw std::runtime_error(std::string("bad symbol ") + sym);
    w.push_back(static_cast<char>(idx));
  }
  return NCPoly(w, c);
}

// Defining relations written as "lhs - rhs", transcribed independently of the presets.
std::vector<NCPoly> defining_relations(const SpaceSpec& s) {
  const QScalar lam = q(1) - q(-1);
  if (s.name == "quantum_plane") return {mono(s, {"X1", "X2"}) - mono(s, {"X2", "X1"}, q(1))};
  if (s.name == "euclid3")
    return {mono(s, {"X3", "X+"}) - mono(s, {"X+", "X3"}, q(2)), mono(s, {"X-", "X3"}) - mono(s, {"X3", "X-"}, q(2)),
            mono(s, {"X-", "X+"}) - mono(s, {"X+", "X-"}) - mono(s, {"X3", "X3"}, lam)};
  if (s.name == "euclid4")
    return {mono(s, {"X1", "X2"}) - mono(s, {"X2", "X1"}, q(1)), mono(s, {"X1", "X3"}) - mono(s, {"X3", "X1"}, q(1)),
            mono(s, {"X3", "X4"}) - mono(s, {"X4", "X3"}, q(1)), mono(s, {"X2", "X4"}) - mono(s, {"X4", "X2"}, q(1)),
            mono(s, {"X2", "X3"}) - mono(s, {"X3", "X2"}),
            mono(s, {"X4", "X1"}) - mono(s, {"X1", "X4"}) - mono(s, {"X2", "X3"}, lam)};
  return {mono(s, {"X+", "X0"}) - mono(s, {"X0", "X+"}), mono(s, {"X3", "X0"}) - mono(s, {"X0", "X3"}),
          mono(s, {"X-", "X0"}) - mono(s, {"X0", "X-"}),
          mono(s, {"X-", "X3"}) - mono(s, {"X3", "X-"}, q(2)) + mono(s, {"X0", "X-"}, q(1) * lam),
          mono(s, {"X3", "X+"}) - mono(s, {"X+", "X3"}, q(2)) + mono(s, {"X0", "X+"}, q(1) * lam),
          mono(s, {"X-", "X+"}) - mono(s, {"X+", "X-"}) - mono(s, {"X3", "X3"}, lam) + mono(s, {"X0", "X3"}, lam)};
}

class EachSpace : public ::testing::TestWithParam<std::string> {
 protected:
  const SpaceSpec& space() const { return space_preset(GetParam()); }
};

}  // namespace

TEST(Ncalg, QuantumPlaneRelationVanishes) {
  const SpaceSpec& s = space_preset("quantum_plane");
  EXPECT_TRUE(normal_order(s, mono(s, {"X1", "X2"}) - mono(s, {"X2", "X1"}, q(1))).is_zero());
}

TEST(Ncalg, QuantumPlaneStarProduct) {
  const SpaceSpec& s = space_preset("quantum_plane");
  // Generator order is (X2, X1).
  CommPoly x1{{{0, 1}, QScalar(1)}}, x2{{{1, 0}, QScalar(1)}};
  CommPoly expected{{{1, 1}, q(1)}};
  EXPECT_EQ(star_product(s, x1, x2), expected);
  CommPoly x2x1{{{1, 1}, QScalar(1)}};
  EXPECT_EQ(star_product(s, x2, x1), x2x1);
}

TEST(Ncalg, MinkowskiConjugateOfXPlus) {
  const SpaceSpec& s = space_preset("minkowski");
  EXPECT_EQ(nc_conjugate(s, mono(s, {"X+"})), mono(s, {"X-"}, -q(-1)));
}

TEST(Ncalg, UnknownSpaceIsAnError) {
  try {
    space_preset("hyperbolic");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unknown_space);
  }
}

TEST(Ncalg, QuantumPlaneHasNoRealBasis) {
  const SpaceSpec& s = space_preset("quantum_plane");
  EXPECT_THROW(to_real_coords(s, mono(s, {"X1"})), Error);
}

TEST(Ncalg, MetricInducedQuantumPlaneConjugationSquaresToMinusOne) {
  SpaceSpec s = space_preset("quantum_plane");
  // Metric-induced map with the other sign: X1 -> q^{-1/2} X2, X2 -> -q^{1/2} X1.
  s.conjugation = {mono(s, {"X1"}, -q(1, 2)), mono(s, {"X2"}, q(-1, 2))};
  NCPoly x1 = mono(s, {"X1"});
  EXPECT_EQ(nc_conjugate(s, nc_conjugate(s, x1)), -x1);
  NCPoly x1x2 = mono(s, {"X2", "X1"});
  EXPECT_EQ(nc_conjugate(s, nc_conjugate(s, x1x2)), x1x2);
}

TEST(Ncalg, LiteralEuclideanRealCoordinatesAreNotRealInMinkowski) {
  const SpaceSpec& s = space_preset("minkowski");
  // i (q^{-1/2} X+ + q^{1/2} X-) with the Minkowski conjugation.
  NCPoly y = mono(s, {"X+"}, QScalar::i() * q(-1, 2)) + mono(s, {"X-"}, QScalar::i() * q(1, 2));
  EXPECT_NE(nc_conjugate(s, y), y);
}

TEST_P(EachSpace, RulesAreNormalAndReproduced) {
  const SpaceSpec& s = space();
  for (const auto& [pair, rhs] : s.relations) {
    for (const auto& [w, c] : rhs.terms()) EXPECT_TRUE(s.rewriter().is_normal(w));
    Word lhs{static_cast<char>(pair.first), static_cast<char>(pair.second)};
    EXPECT_EQ(normal_order(s, NCPoly(lhs)), rhs);
  }
}

TEST_P(EachSpace, DefiningRelationsVanish) {
  const SpaceSpec& s = space();
  for (const NCPoly& r : defining_relations(s)) EXPECT_TRUE(normal_order(s, r).is_zero()) << format_poly(s, r);
}

TEST_P(EachSpace, ConjugationRespectsRelations) {
  const SpaceSpec& s = space();
  for (const NCPoly& r : defining_relations(s)) EXPECT_TRUE(nc_conjugate(s, r).is_zero()) << format_poly(s, r);
}

TEST_P(EachSpace, ConjugationIsInvolutiveAntilinearAntimultiplicative) {
  const SpaceSpec& s = space();
  std::mt19937_64 rng(21);
  for (int it = 0; it < kIterations; ++it) {
    NCPoly a = normal_order(s, random_ncpoly(rng, s.dim(), 3));
    NCPoly b = normal_order(s, random_ncpoly(rng, s.dim(), 3));
    QScalar c = qspace::testing::random_qscalar(rng);
    EXPECT_EQ(nc_conjugate(s, nc_conjugate(s, a)), a);
    EXPECT_EQ(nc_conjugate(s, a.scaled(c) + b), nc_conjugate(s, a).scaled(c.conj()) + nc_conjugate(s, b));
    EXPECT_EQ(nc_conjugate(s, ncmul(s, a, b)), ncmul(s, nc_conjugate(s, b), nc_conjugate(s, a)));
  }
}

TEST_P(EachSpace, MultiplicationIsAssociative) {
  const SpaceSpec& s = space();
  std::mt19937_64 rng(22);
  for (int it = 0; it < kIterations; ++it) {
    NCPoly a = random_ncpoly(rng, s.dim(), 3), b = random_ncpoly(rng, s.dim(), 3), c = random_ncpoly(rng, s.dim(), 3);
    EXPECT_EQ(ncmul(s, ncmul(s, a, b), c), ncmul(s, a, ncmul(s, b, c)));
    EXPECT_EQ(ncmul(s, a, b), normal_order(s, free_mul(a, b)));
  }
}

TEST_P(EachSpace, StarProductMatchesQuantizedProduct) {
  const SpaceSpec& s = space();
  std::mt19937_64 rng(23);
  for (int it = 0; it < kIterations; ++it) {
    NCPoly a = normal_order(s, random_ncpoly(rng, s.dim(), 3));
    NCPoly b = normal_order(s, random_ncpoly(rng, s.dim(), 3));
    EXPECT_EQ(quantize(s, star_product(s, dequantize(s, a), dequantize(s, b))), ncmul(s, a, b));
  }
}

TEST_P(EachSpace, RealCoordinatesAreSelfConjugateAndInvertible) {
  const SpaceSpec& s = space();
  if (!s.has_real_basis) GTEST_SKIP() << "no real basis";
  for (const NCPoly& y : s.real.scaled_in_x) EXPECT_EQ(nc_conjugate(s, y), y) << format_poly(s, y);
  std::mt19937_64 rng(24);
  for (int it = 0; it < kIterations; ++it) {
    NCPoly f = normal_order(s, random_ncpoly(rng, s.dim(), 3));
    NCPoly g = to_real_coords(s, f);
    EXPECT_EQ(from_real_coords(s, g), f);
    EXPECT_EQ(from_real_coords(s, conjugate_real(g)), nc_conjugate(s, f));
  }
}

INSTANTIATE_TEST_SUITE_P(Spaces, EachSpace,
                         ::testing::Values("quantum_plane", "euclid3", "euclid4", "minkowski"));
