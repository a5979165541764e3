#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "qspace/error.hpp"
#include "qspace/grassmann.hpp"
#include "random_util.hpp"

using namespace qspace;

namespace {

const std::vector<std::string> kSpaces = {"quantum_plane", "euclid3", "euclid4", "minkowski"};
constexpr std::array<Variant, 4> kVariants = {Variant::L, Variant::Lbar, Variant::R, Variant::Rbar};

QScalar q(int n, int d = 1) { return QScalar::q_pow(n, d); }

Supernumber basis(const GrassmannSpace& s, std::string_view subset, const QScalar& c = 1) {
  Supernumber f;
  f.set(s.parse_subset(subset), c);
  return f;
}

Supernumber random_super(std::mt19937_64& rng, const GrassmannSpace& s) {
  Supernumber f;
  for (Subset k = 0; k <= s.full(); ++k) f.set(k, qspace::testing::random_qscalar(rng));
  return f;
}

}  // namespace

TEST(Grassmann, QuantumPlaneSpotValue) {
  const auto& s = grassmann_space("quantum_plane");
  EXPECT_EQ(sesquilinear(s, Variant::L, false, basis(s, "1"), basis(s, "1")), q(-1, 2));
}

TEST(Grassmann, Euclid3TopDegreeAgainstUnit) {
  const auto& s = grassmann_space("euclid3");
  EXPECT_EQ(sesquilinear(s, Variant::L, false, basis(s, "+,3,-"), basis(s, "'")), -q(-4));
}

TEST(Grassmann, MinkowskiDiagonalTerm) {
  const auto& s = grassmann_space("minkowski");
  EXPECT_EQ(sesquilinear(s, Variant::L, false, basis(s, "3/0,3"), basis(s, "3/0,3")), q(1) - q(3));
}

TEST(Grassmann, UnitPairsOnlyWithTopDegree) {
  for (const auto& name : kSpaces) {
    const auto& s = grassmann_space(name);
    for (Variant v : kVariants)
      for (bool primed : {false, true})
        EXPECT_TRUE(sesquilinear(s, v, primed, basis(s, "'"), basis(s, "'")).is_zero()) << name;
  }
}

TEST(Grassmann, EveryTermPairsComplementaryDegrees) {
  for (const auto& name : kSpaces) {
    const auto& s = grassmann_space(name);
    for (Variant v : kVariants)
      for (bool primed : {false, true})
        for (const FormTerm& t : s.table(v, primed))
          EXPECT_EQ(std::popcount(t.f) + std::popcount(t.g), s.n())
              << name << " " << to_string(v) << " " << s.subset_name(t.f) << " " << s.subset_name(t.g);
  }
}

TEST(Grassmann, CorrectionsAreRecordedAndNeeded) {
  const auto& m = grassmann_space("minkowski");
  ASSERT_EQ(m.corrections.size(), 2u);
  for (const Correction& c : m.corrections) {
    const int listed = std::popcount(m.parse_subset(c.listed_f)) + std::popcount(m.parse_subset(c.listed_g));
    EXPECT_NE(listed, m.n());
    EXPECT_EQ(std::popcount(c.f) + std::popcount(c.g), m.n());
  }
  for (const char* name : {"quantum_plane", "euclid3", "euclid4"}) EXPECT_TRUE(grassmann_space(name).corrections.empty());
}

TEST(Grassmann, TableCoincidences) {
  for (const char* name : {"quantum_plane", "euclid3", "euclid4"}) {
    const auto& s = grassmann_space(name);
    EXPECT_EQ(s.table_owner(Variant::Rbar), Variant::L);
    EXPECT_EQ(s.table_owner(Variant::R), Variant::Lbar);
  }
  const auto& m = grassmann_space("minkowski");
  for (Variant v : kVariants) EXPECT_EQ(m.table_owner(v), v);
  for (bool primed : {false, true})
    for (Variant a : kVariants)
      for (Variant b : kVariants)
        if (a != b) EXPECT_NE(gram_matrix(m, a, primed), gram_matrix(m, b, primed));
}

TEST(Grassmann, TermCounts) {
  // Terms per table as listed; one primed Minkowski table is a term short.
  const std::map<std::string, std::size_t> expected = {
      {"quantum_plane", 4}, {"euclid3", 8}, {"euclid4", 14}, {"minkowski", 17}};
  for (const auto& name : kSpaces)
    for (Variant v : kVariants)
      for (bool primed : {false, true}) {
        const std::size_t short_by = name == "minkowski" && v == Variant::Lbar && primed ? 1 : 0;
        EXPECT_EQ(grassmann_space(name).table(v, primed).size(), expected.at(name) - short_by);
      }
}

TEST(Grassmann, Sesquilinearity) {
  std::mt19937_64 rng(41);
  for (const auto& name : kSpaces) {
    const auto& s = grassmann_space(name);
    for (int it = 0; it < 20; ++it) {
      Supernumber f = random_super(rng, s), g = random_super(rng, s), h = random_super(rng, s);
      QScalar a = qspace::testing::random_qscalar(rng);
      for (Variant v : kVariants) {
        EXPECT_EQ(sesquilinear(s, v, false, f.scaled(a), g), a.conj() * sesquilinear(s, v, false, f, g));
        EXPECT_EQ(sesquilinear(s, v, false, f, g.scaled(a)), a * sesquilinear(s, v, false, f, g));
        EXPECT_EQ(sesquilinear(s, v, true, f.scaled(a), g), a * sesquilinear(s, v, true, f, g));
        EXPECT_EQ(sesquilinear(s, v, true, f, g.scaled(a)), a.conj() * sesquilinear(s, v, true, f, g));
        EXPECT_EQ(sesquilinear(s, v, false, f + h, g), sesquilinear(s, v, false, f, g) + sesquilinear(s, v, false, h, g));
      }
    }
  }
}

TEST(Grassmann, UnitSeesOnlyTopDegree) {
  std::mt19937_64 rng(42);
  for (const auto& name : kSpaces) {
    const auto& s = grassmann_space(name);
    const Supernumber unit = basis(s, "'");
    for (int it = 0; it < 10; ++it) {
      Supernumber g = random_super(rng, s), shifted = g;
      for (Subset b = 0; b < s.full(); ++b) shifted.set(b, g.at(b) + QScalar(7));
      for (Variant v : kVariants) EXPECT_EQ(sesquilinear(s, v, false, unit, g), sesquilinear(s, v, false, unit, shifted));
    }
  }
}

TEST(Grassmann, CombinedForms) {
  const auto& s = grassmann_space("quantum_plane");
  Supernumber t1 = basis(s, "1");
  EXPECT_EQ(combined_form(s, 1, false, t1, t1), -q(-1, 2));
  std::mt19937_64 rng(43);
  for (const auto& name : kSpaces) {
    const auto& g = grassmann_space(name);
    Supernumber a = random_super(rng, g), b = random_super(rng, g);
    QScalar in = QScalar::i().pow(g.n());
    for (bool primed : {false, true}) {
      QScalar two_c1 = combined_form(g, 1, primed, a, b) * QScalar(2);
      QScalar two_c2 = combined_form(g, 2, primed, a, b) * QScalar(2);
      EXPECT_EQ(two_c1, in * (sesquilinear(g, Variant::L, primed, a, b) + sesquilinear(g, Variant::Rbar, primed, a, b)));
      EXPECT_EQ(two_c2, in * (sesquilinear(g, Variant::Lbar, primed, a, b) + sesquilinear(g, Variant::R, primed, a, b)));
    }
  }
  EXPECT_THROW(combined_form(s, 3, false, t1, t1), Error);
}

TEST(Grassmann, DeltaMonomials) {
  const auto& qp = grassmann_space("quantum_plane");
  EXPECT_EQ(qp.deltas[0].order, (std::vector<int>{1, 0}));
  EXPECT_EQ(qp.deltas[0].coeff, QScalar(1));
  EXPECT_EQ(grassmann_delta(qp, Variant::L), basis(qp, "1,2"));
  const auto& e3 = grassmann_space("euclid3");
  EXPECT_EQ(grassmann_delta(e3, Variant::L), basis(e3, "+,3,-", QScalar::i()));
  EXPECT_EQ(e3.deltas[static_cast<int>(Variant::Lbar)].order, (std::vector<int>{2, 1, 0}));
  const auto& mk = grassmann_space("minkowski");
  EXPECT_EQ(mk.deltas[static_cast<int>(Variant::R)].order, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(mk.deltas[static_cast<int>(Variant::L)].order, (std::vector<int>{3, 2, 1, 0}));
  EXPECT_EQ(mk.deltas[static_cast<int>(Variant::Lbar)].order, (std::vector<int>{0, 2, 1, 3}));
  EXPECT_EQ(mk.deltas[static_cast<int>(Variant::Rbar)].order, (std::vector<int>{3, 1, 2, 0}));
  const auto& e4 = grassmann_space("euclid4");
  EXPECT_EQ(e4.deltas[static_cast<int>(Variant::L)].order, (std::vector<int>{3, 2, 1, 0}));
}

TEST(Grassmann, VolumesAndKappas) {
  EXPECT_EQ(grassmann_vol(grassmann_space("quantum_plane")), QScalar(1));
  EXPECT_EQ(grassmann_vol(grassmann_space("euclid3")), QScalar::i());
  EXPECT_EQ(grassmann_vol(grassmann_space("euclid4")), QScalar(1));
  EXPECT_EQ(grassmann_vol(grassmann_space("minkowski")), QScalar(1));
  const std::map<std::string, QScalar> kappa = {
      {"quantum_plane", q(3)}, {"euclid3", -q(-6)}, {"euclid4", q(-4)}, {"minkowski", q(4)}};
  for (const auto& [name, k] : kappa) {
    const auto& s = grassmann_space(name);
    EXPECT_EQ(s.kappa_of(Variant::Lbar), k);
    EXPECT_EQ(s.kappa_of(Variant::R), k);
    EXPECT_EQ(s.kappa_of(Variant::L) * k, QScalar(1));
    EXPECT_EQ(s.kappa_of(Variant::Rbar) * k, QScalar(1));
  }
}

TEST(Grassmann, GramMatrixStructure) {
  for (const auto& name : kSpaces) {
    const auto& s = grassmann_space(name);
    for (Variant v : kVariants)
      for (bool primed : {false, true}) {
        QMatrix m = gram_matrix(s, v, primed);
        for (Subset a = 0; a <= s.full(); ++a)
          for (Subset b = 0; b <= s.full(); ++b)
            if (std::popcount(a) + std::popcount(b) != s.n()) EXPECT_TRUE(m(a, b).is_zero());
      }
  }
}

TEST(Grassmann, GramDeterminants) {
  for (const char* name : {"quantum_plane", "euclid3"}) {
    const auto& s = grassmann_space(name);
    for (Variant v : kVariants)
      for (bool primed : {false, true}) {
        QRational det = gram_determinant(s, v, primed);
        ASSERT_TRUE(det.is_laurent());
        EXPECT_FALSE(det.is_zero()) << name << " " << to_string(v);
      }
  }
  QRational qp = gram_determinant(grassmann_space("quantum_plane"), Variant::L, false);
  EXPECT_EQ(qp, QRational(q(-1)));
  EXPECT_EQ(qp.at_one(), Gauss(1));
}

TEST(Grassmann, Euclid4TablesLackTheFourthGenerator) {
  // The reference tables have no term with f_4 or f_234, so the Gram matrix is singular.
  const auto& s = grassmann_space("euclid4");
  EXPECT_TRUE(gram_determinant(s, Variant::L, false).is_zero());
}

TEST(Grassmann, ParsingErrors) {
  const auto& s = grassmann_space("euclid3");
  EXPECT_THROW(s.parse_subset("+,x"), Error);
  EXPECT_THROW(s.parse_subset("+,+"), Error);
  EXPECT_THROW(variant_from_string("M"), Error);
  EXPECT_THROW(grassmann_space("nowhere"), Error);
}
