#include <gtest/gtest.h>

#include "qspace/error.hpp"
#include "qspace/expr.hpp"
#include "random_util.hpp"

using namespace qspace;

namespace {

QScalar q(int n, int d = 1) { return QScalar::q_pow(n, d); }

ErrorKind kind_of(const std::string& src, const SpaceSpec& s) {
  try {
    parse_expr(src, s);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for '" << src << "'";
  return ErrorKind::config;
}

}  // namespace

TEST(Expr, QuantumPlaneRelationVanishes) {
  const SpaceSpec& qp = space_preset("quantum_plane");
  EXPECT_TRUE(evaluate(parse_expr("X1*X2 - q*X2*X1", qp), qp).is_zero());
}

TEST(Expr, MinkowskiConjugation) {
  const SpaceSpec& mk = space_preset("minkowski");
  const NCPoly v = evaluate(parse_expr("conj(X+)", mk), mk);
  EXPECT_EQ(v, NCPoly(Word(1, static_cast<char>(mk.label_index("-"))), -q(-1)));
}

TEST(Expr, EmptyInputIsASyntaxError) {
  const SpaceSpec& qp = space_preset("quantum_plane");
  EXPECT_EQ(kind_of("", qp), ErrorKind::parse);
  EXPECT_EQ(kind_of("   ", qp), ErrorKind::parse);
}

TEST(Expr, SyntaxErrorsReportOffsets) {
  const SpaceSpec& qp = space_preset("quantum_plane");
  for (const char* bad : {"X1 + * X2", "conj(X1", "star(X1)", "(X1", "X1)", "X1^2", "X1/2", "X1 + 1/(q+1)",
                          "dL[1]X1", "d[1](X1)", "q^(1/3)"}) {
    EXPECT_EQ(kind_of(bad, qp), ErrorKind::parse) << bad;
  }
  try {
    parse_expr("X1 + * X2", qp);
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("offset 5"), std::string::npos) << e.what();
  }
}

TEST(Expr, UnknownSymbols) {
  const SpaceSpec& e3 = space_preset("euclid3");
  EXPECT_EQ(kind_of("Y1 + X3", e3), ErrorKind::unknown_symbol);
  EXPECT_EQ(kind_of("X1", e3), ErrorKind::unknown_symbol);
  EXPECT_EQ(kind_of("dL[7](X3)", e3), ErrorKind::unknown_symbol);
}

TEST(Expr, LongestSymbolMatch) {
  const SpaceSpec& e3 = space_preset("euclid3");
  const Expr e = parse_expr("X++X-", e3);
  ASSERT_EQ(e.kind, Expr::Kind::sum);
  EXPECT_EQ(e.args[0].name, "X+");
  EXPECT_EQ(e.args[1].name, "X-");
  const Expr f = parse_expr("X3-X+", e3);
  ASSERT_EQ(f.kind, Expr::Kind::sum);
  EXPECT_TRUE(f.negated[1]);
}

TEST(Expr, ScalarFolding) {
  const SpaceSpec& qp = space_preset("quantum_plane");
  const Expr e = parse_expr("(q - q^(-1))*X1", qp);
  ASSERT_EQ(e.kind, Expr::Kind::product);
  ASSERT_EQ(e.args[0].kind, Expr::Kind::scalar);
  EXPECT_EQ(e.args[0].value, q(1) - q(-1));
  EXPECT_EQ(parse_expr("1/2*q^(1/2) + 2*i", qp).value, QScalar(Gauss(mpq_class(1, 2))) * q(1, 2) + QScalar(Gauss(0, 2)));
  EXPECT_EQ(parse_expr("-q", qp).value, -q(1));
}

TEST(Expr, RenderParseRoundTrip) {
  const std::vector<std::pair<std::string, std::string>> corpus = {
      {"quantum_plane", "X1*X2 - q*X2*X1"},
      {"quantum_plane", "-X1 + (1/2)*X2 - (q - q^(-1))*X1*X2"},
      {"quantum_plane", "conj(X1*X2) + star(X1, X2*X1)"},
      {"quantum_plane", "dL[1](X1*X2) - dhR[2](X2*X1)"},
      {"quantum_plane", "X2*(X1 + 2*i)*(X1*X2) + (X1 - X2)"},
      {"quantum_plane", "P1*X2 + theta1*theta2 + dR[1](conj(star(X1, X1)))"},
      {"quantum_plane", "q^(1/2)*X1 + X1*q^(-3/2) + X1*(-q) + X2*(1/3)"},
      {"euclid3", "X+*X3*X- - q^2*(X3 + X-) + dhL[+](X+) - dR[-](X3)"},
      {"euclid4", "conj(X1*X4) - star(X2, X3) + (2 + 3*i)*X2"},
      {"minkowski", "conj(X+) + q^(-1)*X- + X0*X3 - dL[0](X0)"},
  };
  for (const auto& [space, src] : corpus) {
    const SpaceSpec& s = space_preset(space);
    const Expr a = parse_expr(src, s);
    const std::string r = render(a);
    EXPECT_EQ(parse_expr(r, s), a) << src << " -> " << r;
    EXPECT_EQ(render(parse_expr(r, s)), r);
  }
}

TEST(Expr, RandomRoundTrip) {
  std::mt19937_64 rng(3);
  const SpaceSpec& e3 = space_preset("euclid3");
  for (int it = 0; it < 200; ++it) {
    const NCPoly p = qspace::testing::random_ncpoly(rng, 3, 3);
    const std::string src = format_poly(e3, p);
    const Expr e = parse_expr(src, e3);
    EXPECT_EQ(parse_expr(render(e), e3), e) << src;
    // Formatting is a faithful view of the element.
    NCPoly free;
    std::function<NCPoly(const Expr&)> flat = [&](const Expr& x) -> NCPoly {
      switch (x.kind) {
        case Expr::Kind::scalar:
          return NCPoly(x.value);
        case Expr::Kind::symbol:
          return NCPoly(Word(1, static_cast<char>(e3.label_index(x.name.substr(1)))));
        case Expr::Kind::sum: {
          NCPoly acc;
          for (std::size_t k = 0; k < x.args.size(); ++k) {
            if (x.negated[k])
              acc -= flat(x.args[k]);
            else
              acc += flat(x.args[k]);
          }
          return acc;
        }
        case Expr::Kind::product: {
          NCPoly acc(QScalar(1));
          for (const auto& f : x.args) acc = free_mul(acc, flat(f));
          return acc;
        }
        default:
          ADD_FAILURE();
          return {};
      }
    };
    EXPECT_EQ(flat(e), p) << src;
  }
}

TEST(Expr, EvaluationMatchesLibraryOperations) {
  const SpaceSpec& qp = space_preset("quantum_plane");
  const int x1 = qp.label_index("1"), x2 = qp.label_index("2");
  const NCPoly X1(Word(1, static_cast<char>(x1))), X2(Word(1, static_cast<char>(x2)));
  EXPECT_EQ(evaluate(parse_expr("X1*X2", qp), qp), ncmul(qp, X1, X2));
  EXPECT_EQ(evaluate(parse_expr("conj(X1*X2)", qp), qp), nc_conjugate(qp, ncmul(qp, X1, X2)));
  EXPECT_EQ(evaluate(parse_expr("dL[2](X1*X2)", qp), qp),
            derivative_action(qp, DerivKind{Calculus::unhatted, Side::left}, x2, ncmul(qp, X1, X2)));
  EXPECT_EQ(evaluate(parse_expr("dhR[1](X1)", qp), qp),
            derivative_action(qp, DerivKind{Calculus::hatted, Side::right}, x1, X1));
}

TEST(Expr, StarReadsArgumentsCommutatively) {
  const SpaceSpec& qp = space_preset("quantum_plane");
  // x1 * x2 = q x1 x2 as commutative functions.
  const CommPoly v = evaluate_commutative(parse_expr("star(X1, X2)", qp), qp);
  std::vector<int> e(2, 0);
  e[qp.label_index("1")] = 1;
  e[qp.label_index("2")] = 1;
  EXPECT_EQ(v, (CommPoly{{e, q(1)}}));
  // Argument order inside a plain product does not matter for the commutative reading.
  EXPECT_EQ(evaluate_commutative(parse_expr("star(X1*X2, 1)", qp), qp),
            evaluate_commutative(parse_expr("star(X2*X1, 1)", qp), qp));
  EXPECT_EQ(format_comm(qp, v), "q*x2*x1");
}

TEST(Expr, MomentumAndGrassmannSymbolsParseButDoNotEvaluate) {
  const SpaceSpec& e3 = space_preset("euclid3");
  const Expr e = parse_expr("P+*X3 + theta3", e3);
  EXPECT_THROW(evaluate(e, e3), Error);
}
