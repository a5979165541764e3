#include "qspace/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <map>
#include <random>

#include "qspace/error.hpp"
#include "qspace/expr.hpp"
#include "qspace/grassmann.hpp"
#include "qspace/lattice.hpp"
#include "qspace/phasespace.hpp"
#include "qspace/qexp.hpp"

namespace qspace {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::exact_pass:
      return "exact-pass";
    case CheckStatus::numeric_pass:
      return "numeric-pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::finding:
      return "finding";
  }
  return "fail";
}

bool Report::all_pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::fail; });
}

Json Report::to_json() const {
  Json j;
  j["suite"] = suite;
  j["q"] = q;
  j["seed"] = seed;
  j["checks"] = Json::array();
  for (const Check& c : checks) {
    Json e;
    e["id"] = c.id;
    e["paper_ref"] = c.paper_ref;
    e["anchor"] = c.anchor;
    e["status"] = to_string(c.status);
    if (c.tolerance) e["tolerance"] = *c.tolerance;
    if (c.witness) e["witness"] = *c.witness;
    j["checks"].push_back(std::move(e));
  }
  return j;
}

namespace {

using C = std::complex<double>;
using R = QRational;

const std::vector<std::string> kSpaces = {"quantum_plane", "euclid3", "euclid4", "minkowski"};

QScalar q(int n, int d = 1) { return QScalar::q_pow(n, d); }

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

class Collector {
 public:
  void exact(std::string id, std::string ref, std::string anchor, bool ok, std::optional<std::string> witness = {}) {
    out.push_back({std::move(id), std::move(ref), std::move(anchor), ok ? CheckStatus::exact_pass : CheckStatus::fail,
                   std::nullopt, std::move(witness)});
  }
  void numeric(std::string id, std::string ref, std::string anchor, double err, double tol) {
    const bool ok = std::isfinite(err) && err <= tol;
    out.push_back({std::move(id), std::move(ref), std::move(anchor), ok ? CheckStatus::numeric_pass : CheckStatus::fail,
                   tol, sci(err)});
  }
  /// Numeric check that reports a documented convention finding instead of failing.
  void numeric_or_finding(std::string id, std::string ref, std::string anchor, double err, double tol) {
    numeric(std::move(id), std::move(ref), std::move(anchor), err, tol);
    if (out.back().status == CheckStatus::fail) out.back().status = CheckStatus::finding;
  }
  void error(std::string id, std::string ref, std::string anchor, const std::exception& e) {
    out.push_back({std::move(id), std::move(ref), std::move(anchor), CheckStatus::fail, std::nullopt,
                   std::string("error: ") + e.what()});
  }

  std::vector<Check> out;
};

// ---------------------------------------------------------------- random data

QScalar random_qscalar(std::mt19937_64& rng, int max_terms, int max_e2, int max_coeff) {
  std::uniform_int_distribution<int> nterms(0, max_terms), exp(-max_e2, max_e2), coef(-max_coeff, max_coeff),
      den(1, 3);
  QScalar s;
  const int n = nterms(rng);
  for (int k = 0; k < n; ++k) s += QScalar(Gauss(mpq_class(coef(rng), den(rng)), mpq_class(coef(rng), den(rng))), exp(rng));
  return s;
}

QScalar random_nonzero(std::mt19937_64& rng) {
  QScalar s;
  while (s.is_zero()) s = random_qscalar(rng, 3, 6, 5);
  return s;
}

NCPoly random_ncpoly(std::mt19937_64& rng, int generators, int max_len, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms), len(0, max_len), gen(0, generators - 1);
  NCPoly p;
  const int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    Word w;
    const int l = len(rng);
    for (int j = 0; j < l; ++j) w.push_back(static_cast<char>(gen(rng)));
    p.add(w, random_qscalar(rng, 2, 4, 3));
  }
  return p;
}

// ---------------------------------------------------------------- relations

struct Relation {
  std::string lhs, rhs;
};

// Every defining relation, once with each side of the swapped pair isolated.
std::vector<Relation> relations_of(const std::string& space) {
  const std::string lam = "(q - q^(-1))";
  if (space == "quantum_plane") return {{"X1*X2", "q*X2*X1"}, {"X2*X1", "q^(-1)*X1*X2"}};
  if (space == "euclid3")
    return {{"X3*X+", "q^2*X+*X3"},
            {"X+*X3", "q^(-2)*X3*X+"},
            {"X-*X3", "q^2*X3*X-"},
            {"X3*X-", "q^(-2)*X-*X3"},
            {"X-*X+", "X+*X- + " + lam + "*X3*X3"},
            {"X+*X-", "X-*X+ - " + lam + "*X3*X3"}};
  if (space == "euclid4")
    return {{"X1*X2", "q*X2*X1"}, {"X2*X1", "q^(-1)*X1*X2"}, {"X1*X3", "q*X3*X1"},
            {"X3*X1", "q^(-1)*X1*X3"}, {"X3*X4", "q*X4*X3"}, {"X4*X3", "q^(-1)*X3*X4"},
            {"X2*X4", "q*X4*X2"}, {"X4*X2", "q^(-1)*X2*X4"}, {"X2*X3", "X3*X2"},
            {"X3*X2", "X2*X3"}, {"X4*X1", "X1*X4 + " + lam + "*X2*X3"}, {"X1*X4", "X4*X1 - " + lam + "*X2*X3"}};
  return {{"X+*X0", "X0*X+"},
          {"X0*X+", "X+*X0"},
          {"X3*X0", "X0*X3"},
          {"X0*X3", "X3*X0"},
          {"X-*X0", "X0*X-"},
          {"X0*X-", "X-*X0"},
          {"X-*X3", "q^2*X3*X- - q*" + lam + "*X0*X-"},
          {"X3*X-", "q^(-2)*X-*X3 + q^(-1)*" + lam + "*X0*X-"},
          {"X3*X+", "q^2*X+*X3 - q*" + lam + "*X0*X+"},
          {"X+*X3", "q^(-2)*X3*X+ + q^(-1)*" + lam + "*X0*X+"},
          {"X-*X+", "X+*X- + " + lam + "*X3*X3 - " + lam + "*X0*X3"},
          {"X+*X-", "X-*X+ - " + lam + "*X3*X3 + " + lam + "*X0*X3"}};
}

// Value in the free algebra, without any reordering.
NCPoly free_value(const Expr& e, const SpaceSpec& s) {
  switch (e.kind) {
    case Expr::Kind::scalar:
      return NCPoly(e.value);
    case Expr::Kind::symbol: {
      auto it = std::find(s.generators.begin(), s.generators.end(), e.name);
      if (it == s.generators.end()) throw Error(ErrorKind::unknown_symbol, "not a coordinate: " + e.name);
      return generator(s, static_cast<int>(it - s.generators.begin()));
    }
    case Expr::Kind::sum: {
      NCPoly acc;
      for (std::size_t k = 0; k < e.args.size(); ++k) {
        NCPoly t = free_value(e.args[k], s);
        if (e.negated[k])
          acc -= t;
        else
          acc += t;
      }
      return acc;
    }
    case Expr::Kind::product: {
      NCPoly acc(QScalar(1));
      for (const auto& f : e.args) acc = free_mul(acc, free_value(f, s));
      return acc;
    }
    default:
      throw Error(ErrorKind::unsupported, "relation text must be polynomial");
  }
}

NCPoly free_relation(const SpaceSpec& s, const Relation& r) {
  return free_value(parse_expr(r.lhs, s), s) - free_value(parse_expr(r.rhs, s), s);
}

std::string two(int k) { return k < 10 ? "0" + std::to_string(k) : std::to_string(k); }

// ---------------------------------------------------------------- algebra

void algebra_checks(Collector& c, const SuiteOptions& opt) {
  constexpr int kTriples = 1000;
  for (std::size_t si = 0; si < kSpaces.size(); ++si) {
    const std::string& name = kSpaces[si];
    const std::string pre = "algebra." + name + ".";
    const SpaceSpec& s = space_preset(name);
    const auto rels = relations_of(name);
    for (std::size_t k = 0; k < rels.size(); ++k) {
      const std::string anchor = rels[k].lhs + " = " + rels[k].rhs;
      try {
        const NCPoly rest = normal_order(s, free_relation(s, rels[k]));
        c.exact(pre + "relation." + two(static_cast<int>(k)), "defining relation of " + name, anchor, rest.is_zero(),
                rest.is_zero() ? std::nullopt : std::optional(format_poly(s, rest)));
      } catch (const std::exception& e) {
        c.error(pre + "relation." + two(static_cast<int>(k)), "defining relation of " + name, anchor, e);
      }
    }
    std::mt19937_64 rng(opt.seed * 1000003u + 11 + si);
    int bad = -1;
    for (int it = 0; it < kTriples && bad < 0; ++it) {
      const NCPoly a = random_ncpoly(rng, s.dim(), 6, 2), b = random_ncpoly(rng, s.dim(), 6, 2),
                   d = random_ncpoly(rng, s.dim(), 6, 2);
      if (ncmul(s, ncmul(s, a, b), d) != ncmul(s, a, ncmul(s, b, d))) bad = it;
    }
    c.exact(pre + "associativity", "associativity of the normal-ordered product", "(a*b)*c = a*(b*c)", bad < 0,
            bad < 0 ? std::to_string(kTriples) + " triples, factors of degree <= 6"
                    : "triple " + std::to_string(bad) + " differs");
  }
}

// ---------------------------------------------------------------- conjugation

void conjugation_checks(Collector& c, const SuiteOptions& opt) {
  constexpr int kElements = 500;
  for (std::size_t si = 0; si < kSpaces.size(); ++si) {
    const std::string& name = kSpaces[si];
    const std::string pre = "conjugation." + name + ".";
    const SpaceSpec& s = space_preset(name);
    std::mt19937_64 rng(opt.seed * 1000003u + 23 + si);
    int bad = -1;
    for (int it = 0; it < kElements && bad < 0; ++it) {
      const NCPoly a = normal_order(s, random_ncpoly(rng, s.dim(), 4, 3));
      if (nc_conjugate(s, nc_conjugate(s, a)) != a) bad = it;
    }
    c.exact(pre + "involution", "conjugation is an involution", "conj(conj(f)) = f", bad < 0,
            bad < 0 ? std::to_string(kElements) + " elements" : "element " + std::to_string(bad) + " differs");

    const auto rels = relations_of(name);
    for (std::size_t k = 0; k < rels.size(); ++k) {
      const std::string anchor = "conj(" + rels[k].lhs + " - (" + rels[k].rhs + ")) = 0";
      const std::string id = pre + "relation." + two(static_cast<int>(k));
      try {
        const NCPoly img = nc_conjugate(s, free_relation(s, rels[k]));
        c.exact(id, "conjugation preserves the relations of " + name, anchor, img.is_zero(),
                img.is_zero() ? std::nullopt : std::optional(format_poly(s, img)));
      } catch (const std::exception& e) {
        c.error(id, "conjugation preserves the relations of " + name, anchor, e);
      }
    }

    if (!s.has_real_basis) continue;
    for (std::size_t j = 0; j < s.real.names.size(); ++j) {
      const NCPoly y = normal_order(s, s.real.scaled_in_x[j]);
      c.exact(pre + "real." + s.real.names[j], "self-conjugate real coordinate",
              s.real.names[j] + " ~ " + format_poly(s, y), nc_conjugate(s, y) == y);
    }
  }
}

// ---------------------------------------------------------------- phase space

NCPoly word(std::initializer_list<char> letters) { return NCPoly(Word(letters)); }

void phasespace_checks(Collector& c) {
  for (const std::string name : {"quantum_plane", "euclid3"}) {
    const SpaceSpec& s = space_preset(name);
    const RMatrix& r = rmatrix_for(name);
    const std::string pre = "phasespace." + name + ".";
    const RMatrixReport rep = rmatrix_checks(r);
    c.exact(pre + "rmatrix.braid", "braid relation of the R-matrix", "R12 R23 R12 = R23 R12 R23", rep.braid);
    c.exact(pre + "rmatrix.inverse", "R-matrix inverse", "R Rinv = Rinv R = 1", rep.inverse);
    c.exact(pre + "rmatrix.flip_limit", "R-matrix at q = 1", "R(q=1) = flip", rep.flip_limit);
    if (rep.spectral)
      c.exact(pre + "rmatrix.spectral", "R-matrix eigenvalues", "prod (R - e) = 0", *rep.spectral);

    const int d = s.dim();
    std::vector<int> pos(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
      auto it = std::find(r.labels.begin(), r.labels.end(), s.labels[static_cast<std::size_t>(k)]);
      pos[static_cast<std::size_t>(k)] = static_cast<int>(it - r.labels.begin());
    }
    auto at = [&](int k, int l) { return pos[static_cast<std::size_t>(k)] * d + pos[static_cast<std::size_t>(l)]; };

    for (Calculus calc : {Calculus::unhatted, Calculus::hatted}) {
      const bool un = calc == Calculus::unhatted;
      const QMatrix& m = un ? r.r_inv : r.r;
      const QScalar kf = un ? r.k : r.k.inverse();
      const QScalar sign(un ? 1 : r.hatted_metric_sign);
      const std::string cname = to_string(calc);
      const std::string anchor = un ? "P^k X^l - k Rinv^{kl}_{mn} X^m P^n = i g^{kl}"
                                    : "P^k X^l - k^-1 R^{kl}_{mn} X^m P^n = i gbar^{kl}";
      for (PhaseOrder order : {PhaseOrder::xp, PhaseOrder::px}) {
        const PhaseAlgebra& alg = phase_algebra(name, calc, order);
        std::string witness;
        for (int k = 0; k < d && witness.empty(); ++k)
          for (int l = 0; l < d && witness.empty(); ++l) {
            NCPoly diff = alg.normal_form(word({alg.p(k), alg.x(l)}));
            for (int a = 0; a < d; ++a)
              for (int b = 0; b < d; ++b)
                diff -= alg.normal_form(word({alg.x(a), alg.p(b)})).scaled(kf * m(at(k, l), at(a, b)));
            diff -= NCPoly(QScalar::i() * sign * metric_entry(s, k, l));
            if (!diff.is_zero()) witness = "pair (" + s.labels[k] + "," + s.labels[l] + ")";
          }
        c.exact(pre + cname + ".leibniz." + (order == PhaseOrder::xp ? "xp" : "px"),
                "momentum-position commutation, " + cname + " calculus", anchor, witness.empty(),
                witness.empty() ? std::optional<std::string>("all index pairs") : std::optional(witness));
      }

      const PhaseAlgebra& alg = phase_algebra(name, calc, PhaseOrder::xp);
      std::string witness;
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          const NCPoly comm = alg.normal_form(word({alg.p(k), alg.x(l)}) - word({alg.x(l), alg.p(k)}));
          const Gauss expected = (QScalar::i() * sign * metric_entry(s, k, l)).at_one();
          bool ok = true;
          for (const auto& [w, v] : comm.terms())
            if (!w.empty() && !v.at_one().is_zero()) ok = false;
          ok = ok && comm.coeff(Word()).at_one() == expected;
          if (!ok && witness.empty()) witness = "pair (" + s.labels[k] + "," + s.labels[l] + ")";
        }
      c.exact(pre + cname + ".classical_commutator", "canonical commutator at q = 1",
              "[P^k, X^l](q=1) = i g^{kl}(q=1)", witness.empty(),
              witness.empty() ? std::nullopt : std::optional(witness));
    }
  }
}

// ---------------------------------------------------------------- q-exponential

using Exps = std::vector<int>;
using Classical = std::map<std::pair<Exps, Exps>, Gauss>;
using GaussMat = std::vector<std::vector<Gauss>>;

std::optional<GaussMat> invert(GaussMat a) {
  const std::size_t n = a.size();
  GaussMat inv(n, std::vector<Gauss>(n));
  for (std::size_t k = 0; k < n; ++k) inv[k][k] = Gauss(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[col]);
    std::swap(inv[p], inv[col]);
    const Gauss piv = a[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= piv;
      inv[col][j] *= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Gauss f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Coefficients of exp(-i sum M_{kl} x^k p^l) in commuting variables, through x-degree N.
Classical classical_exponential(int n, const GaussMat& m, int max_degree) {
  Classical term{{{Exps(n, 0), Exps(n, 0)}, Gauss(1)}};
  Classical sum = term;
  for (int d = 1; d <= max_degree; ++d) {
    Classical next;
    for (const auto& [key, c] : term)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (m[k][l].is_zero()) continue;
          auto nk = key;
          ++nk.first[k];
          ++nk.second[l];
          next[nk] += c * m[k][l] * Gauss(0, -1) * Gauss(mpq_class(1, d));
        }
    term.clear();
    for (const auto& [k, c] : next)
      if (!c.is_zero()) term[k] = c;
    for (const auto& [k, c] : term) sum[k] += c;
  }
  for (auto it = sum.begin(); it != sum.end();) it = it->second.is_zero() ? sum.erase(it) : std::next(it);
  return sum;
}

void qexp_checks(Collector& c) {
  struct Case {
    std::string space;
    Calculus calc;
    int degree;
  };
  for (const Case& cs : {Case{"quantum_plane", Calculus::unhatted, 8}, Case{"quantum_plane", Calculus::hatted, 8},
                         Case{"euclid3", Calculus::unhatted, 3}}) {
    const SpaceSpec& s = space_preset(cs.space);
    const std::string pre = "qexp." + cs.space + "." + to_string(cs.calc) + ".N" + std::to_string(cs.degree) + ".";
    const BiSeries u = solve_qexp(s, cs.calc, cs.degree);
    std::size_t residual = 0;
    for (int j = 0; j < s.dim(); ++j) residual += qexp_residual(s, u, j).size();
    c.exact(pre + "residual", "momentum eigenfunction equation", "i d^j |> u = u (*) p^j", residual == 0,
            std::to_string(residual) + " nonzero residual terms");

    const int n = s.dim();
    const int sign = cs.calc == Calculus::unhatted ? 1 : rmatrix_for(cs.space).hatted_metric_sign;
    GaussMat g(n, std::vector<Gauss>(n));
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) g[k][l] = (QScalar(sign) * metric_entry(s, k, l)).at_one();
    const auto ginv = invert(g);
    bool ok = ginv.has_value();
    std::string witness = ok ? "" : "singular metric at q = 1";
    if (ok) {
      const Classical expected = classical_exponential(n, *ginv, cs.degree);
      Classical got;
      for (const auto& [key, v] : u.terms) {
        const Gauss x = v.at_one();
        if (x.is_zero()) continue;
        Exps ex(n, 0), ep(n, 0);
        for (char ch : key.first) ++ex[ch];
        for (char ch : key.second) ++ep[ch];
        got[{ex, ep}] += x;
      }
      ok = got == expected;
      witness = std::to_string(expected.size()) + " classical coefficients";
    }
    c.exact(pre + "classical_limit", "q = 1 limit of the q-exponential", "u(q=1) = exp(-i g^{-1}_{kl} x^k p^l)", ok,
            witness);
  }
}

// ---------------------------------------------------------------- Grassmann

Supernumber basis(const GrassmannSpace& s, std::string_view labels) {
  Supernumber f;
  f.set(s.parse_subset(labels), QScalar(1));
  return f;
}

struct DeltaRow {
  Variant v;
  QScalar coeff;
  std::vector<std::string> order;
};

std::vector<DeltaRow> expected_deltas(const std::string& name) {
  using V = Variant;
  if (name == "quantum_plane")
    return {{V::L, 1, {"2", "1"}}, {V::Rbar, 1, {"2", "1"}}, {V::Lbar, 1, {"1", "2"}}, {V::R, 1, {"1", "2"}}};
  if (name == "euclid3")
    return {{V::L, QScalar::i(), {"+", "3", "-"}},
            {V::Rbar, QScalar::i(), {"+", "3", "-"}},
            {V::Lbar, QScalar::i(), {"-", "3", "+"}},
            {V::R, QScalar::i(), {"-", "3", "+"}}};
  if (name == "euclid4")
    return {{V::L, 1, {"4", "3", "2", "1"}},
            {V::Rbar, 1, {"4", "3", "2", "1"}},
            {V::Lbar, 1, {"1", "2", "3", "4"}},
            {V::R, 1, {"1", "2", "3", "4"}}};
  return {{V::L, 1, {"-", "3/0", "3", "+"}},
          {V::R, 1, {"+", "3", "3/0", "-"}},
          {V::Lbar, 1, {"+", "3/0", "3", "-"}},
          {V::Rbar, 1, {"-", "3", "3/0", "+"}}};
}

void grassmann_checks(Collector& c) {
  const std::array<Variant, 4> variants{Variant::L, Variant::Lbar, Variant::R, Variant::Rbar};
  {
    const auto& s = grassmann_space("quantum_plane");
    const QScalar v = sesquilinear(s, Variant::L, false, basis(s, "1"), basis(s, "1"));
    c.exact("grassmann.quantum_plane.spot", "form table value, quantum plane", "<theta1, theta1>_L = q^(-1/2)",
            v == q(-1, 2), v.to_string());
  }
  {
    const auto& s = grassmann_space("euclid3");
    const QScalar v = sesquilinear(s, Variant::L, false, basis(s, "+,3,-"), basis(s, "'"));
    c.exact("grassmann.euclid3.spot", "form table value, three-dimensional Euclidean space",
            "<theta+ theta3 theta-, 1>_L = -q^(-4)", v == -q(-4), v.to_string());
  }
  {
    const auto& s = grassmann_space("minkowski");
    const QScalar v = sesquilinear(s, Variant::L, false, basis(s, "3/0,3"), basis(s, "3/0,3"));
    c.exact("grassmann.minkowski.spot", "form table diagonal value, Minkowski space",
            "<theta3/0 theta3, theta3/0 theta3>_L = q - q^3", v == q(1) - q(3), v.to_string());
  }

  const std::map<std::string, QScalar> vols{
      {"quantum_plane", 1}, {"euclid3", QScalar::i()}, {"euclid4", 1}, {"minkowski", 1}};
  const std::map<std::string, QScalar> kappas{
      {"quantum_plane", q(3)}, {"euclid3", -q(-6)}, {"euclid4", q(-4)}, {"minkowski", q(4)}};

  for (const std::string& name : kSpaces) {
    const auto& s = grassmann_space(name);
    const std::string pre = "grassmann." + name + ".";

    std::size_t total = 0, paired = 0;
    for (Variant v : variants)
      for (bool primed : {false, true})
        for (const FormTerm& t : s.table(v, primed)) {
          ++total;
          if (std::popcount(t.f) + std::popcount(t.g) == s.n()) ++paired;
        }
    c.exact(pre + "pairing", "complementary-degree pairing of the form tables", "|I| + |J| = n for every term",
            paired == total,
            std::to_string(paired) + "/" + std::to_string(total) + " terms, " +
                std::to_string(s.corrections.size()) + " corrected on load");

    bool deltas_ok = true;
    for (const DeltaRow& row : expected_deltas(name)) {
      const DeltaMonomial& d = s.deltas[static_cast<std::size_t>(row.v)];
      std::vector<std::string> got;
      for (int k : d.order) got.push_back(s.labels[static_cast<std::size_t>(k)]);
      deltas_ok = deltas_ok && d.coeff == row.coeff && got == row.order;
    }
    c.exact(pre + "delta", "Grassmann delta monomials", "delta_A as ordered products of generators", deltas_ok);

    const QScalar vol = grassmann_vol(s);
    c.exact(pre + "vol", "Grassmann volume constant", "vol_A = " + vols.at(name).to_string(), vol == vols.at(name),
            vol.to_string());
    const QScalar kap = s.kappa_of(Variant::Lbar);
    const bool kap_ok = kap == kappas.at(name) && s.kappa_of(Variant::R) == kap &&
                        s.kappa_of(Variant::L) == kap.inverse() && s.kappa_of(Variant::Rbar) == kap.inverse();
    c.exact(pre + "kappa", "Grassmann scaling constant",
            "kappa_Lbar = kappa_R = 1/kappa_L = 1/kappa_Rbar = " + kappas.at(name).to_string(), kap_ok,
            kap.to_string());

    if (name != "quantum_plane" && name != "euclid3") continue;
    for (Variant v : variants)
      for (bool primed : {false, true}) {
        const QRational det = gram_determinant(s, v, primed);
        const auto laurent = det.to_laurent();
        c.exact(pre + "gram." + to_string(v) + (primed ? ".primed" : ""), "Gram determinant of the form",
                "det G is a nonzero Laurent polynomial", laurent && !laurent->is_zero(), det.to_string());
      }
  }
}

// ---------------------------------------------------------------- lattice

LatticeFunction<R> random_exact(std::mt19937_64& rng, const LatticeSpec& spec) {
  LatticeFunction<R> f(spec);
  for (const auto& p : quasipoints(spec)) f.set(p, R(random_qscalar(rng, 2, 4, 3)));
  return f;
}

C random_c(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  return {u(rng), u(rng)};
}

double rel_err(C a, C b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

void lattice_integration_checks(Collector& c, const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed * 1000003u + 41);

  // Scaling covariance on interior-supported functions, exact.
  for (int a : {1, 2, 4, -2}) {
    std::map<QScalar, QScalar> table;
    const QScalar c0 = q(1, 2);
    for (int k = -2; k <= 2; ++k) {
      table[c0 * q(a * k)] = random_nonzero(rng);
      table[-(c0 * q(a * k))] = random_nonzero(rng);
    }
    auto f = [&](const R& x) {
      auto it = table.find(*x.to_laurent());
      return it == table.end() ? R() : R(it->second);
    };
    auto g = [&](const R& x) { return f(x * R(q(a))); };
    bool ok = true;
    for (HalfLine h : {HalfLine::pos, HalfLine::neg, HalfLine::full})
      for (NegativeHalfLine conv : {NegativeHalfLine::riemann, NegativeHalfLine::verbatim})
        ok = ok && jackson_1d<R>(g, a, c0, opt.q, h, -6, 6, conv) ==
                       R(q(-a)) * jackson_1d<R>(f, a, c0, opt.q, h, -6, 6, conv);
    c.exact("lattice.jackson.scaling.a" + std::string(a < 0 ? "m" : "") + std::to_string(std::abs(a)),
            "scaling covariance of the Jackson integral", "int f(q^a x) d_q x = q^-a int f(x) d_q x", ok);
  }

  // Riemann limit.
  {
    const double qv = 1.001;
    auto f = [](const C& x) { return x.real() <= 1 + 1e-12 ? x * x : C(); };
    const C v = jackson_1d<C>(f, 1, QScalar(1), qv, HalfLine::pos, -60000, 10);
    c.numeric("lattice.jackson.riemann_limit", "q -> 1 limit of the Jackson integral",
              "int_0^1 x^2 d_q x -> 1/3 at q = 1.001", std::abs(v - C(1.0 / 3.0)), 5 * (qv - 1));
  }

  for (const std::string& name : kSpaces) {
    const std::string pre = "lattice." + name + ".";
    const LatticeSpec small = lattice_spec(name, opt.q, -1, 1);
    const auto pts = quasipoints(small);
    const auto f = random_exact(rng, small);

    bool delta_ok = true;
    for (int it = 0; it < 4; ++it) {
      const Quasipoint& at = pts[std::uniform_int_distribution<std::size_t>(0, pts.size() - 1)(rng)];
      const auto d = lattice_delta<R>(small, at);
      delta_ok = delta_ok && integrate(d) == R(1) && integrate(f * d) == f.at(at);
    }
    c.exact(pre + "delta.reproducing", "reproducing property of the lattice delta", "int f delta_y = f(y)", delta_ok);

    bool proj_ok = projector_E(small, window_max(small)).apply(f) == f;
    std::uniform_int_distribution<int> sd(-1, 1);
    for (int it = 0; it < 5; ++it) {
      std::vector<Bound> t;
      for (int j = 0; j < small.n(); ++j) t.push_back({sd(rng), sd(rng)});
      const Projector E = projector_E(small, t);
      const auto ef = E.apply(f);
      proj_ok = proj_ok && E.apply(ef) == ef;
    }
    c.exact(pre + "projector", "spectral projectors", "E E = E, E(window max) = 1", proj_ok);

    const R ca(random_nonzero(rng)), cb(random_nonzero(rng));
    auto F = [ca](const std::vector<R>& x) { return x[0] * x[0] + ca; };
    auto G = [cb](const std::vector<R>& x) { return x.back() * cb - x[0]; };
    auto FG = [&](const std::vector<R>& x) { return F(x) * G(x); };
    auto one = [](const std::vector<R>&) { return R(1); };
    const bool spec_ok = spectral_apply<R>(one, f) == f &&
                         spectral_apply<R>(F, spectral_apply<R>(G, f)) == spectral_apply<R>(FG, f);
    c.exact(pre + "spectral", "spectral decomposition of multiplication operators", "F(X) G(X) = (FG)(X), 1(X) = 1",
            spec_ok);

    // Separable integrand against a product of one-dimensional Jackson sums.
    LatticeSpec s = lattice_spec(name, opt.q, -opt.window - 1, opt.window);
    for (std::size_t j = 0; j < s.alpha.size(); ++j) s.alpha[j] = j % 2 ? q(1, 2) : QScalar(1);
    const int n = s.n();
    std::vector<std::array<C, 3>> poly(static_cast<std::size_t>(n));
    for (auto& cf : poly)
      for (auto& x : cf) x = random_c(rng);
    auto fj = [&](int j, const C& x) { return poly[j][0] + poly[j][1] * x + poly[j][2] * x * x; };
    auto Fs = [&](const std::vector<C>& x) {
      C r(1);
      for (int j = 0; j < n; ++j) r *= fj(j, x[j]);
      return r;
    };
    const C lhs = integrate(sample<C>(s, Fs));
    C rhs(1);
    const std::vector<int> a = jackson_steps(s);
    for (int j = 0; j < n; ++j) {
      const int lo = a[j] > 0 ? s.v_min[j] : -s.v_max[j];
      const int hi = a[j] > 0 ? s.v_max[j] : -s.v_min[j];
      rhs *= jackson_1d<C>([&](const C& x) { return fj(j, x); }, a[j], s.alpha[j], s.q, HalfLine::full, lo, hi);
    }
    // The four-dimensional Euclidean prefactor is stated for a q^4 step on a q^2 grid.
    if (name == "euclid4") rhs *= std::pow(s.q * s.q + 1, 4);
    c.numeric(pre + "separable", "factorization of the lattice integral",
              "int prod_j f_j(x^j) = prod_j int f_j(x^j) d_q x^j", rel_err(lhs, rhs), 1e-12);
  }
}

// Volume elements as stated, with the signed coordinate factors.
QScalar stated_weight(const std::string& name, const std::vector<QScalar>& alpha, const Quasipoint& p) {
  QScalar pre;
  std::vector<int> a;
  if (name == "quantum_plane") {
    pre = (q(2) - 1) * (q(2) - 1);
    a = {2, 2};
  } else if (name == "euclid3") {
    pre = (q(4) - 1) * (q(4) - 1) * (q(2) - 1);
    a = {4, 2, 4};
  } else if (name == "euclid4") {
    pre = (q(4) - 1).pow(4);
    a = {2, 2, 2, 2};
  } else {
    pre = (QScalar(1) - q(-2)).pow(4);
    a = {2, 2, 2, 2};
  }
  for (std::size_t j = 0; j < a.size(); ++j) pre *= QScalar(p.s[j]) * alpha[j] * q(a[j] * p.v[j]);
  return pre;
}

void lattice_weight_checks(Collector& c, const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed * 1000003u + 43);
  std::uniform_int_distribution<int> vd(-opt.window, opt.window);
  for (const std::string& name : kSpaces) {
    LatticeSpec s = lattice_spec(name, opt.q, -opt.window, opt.window);
    for (std::size_t j = 0; j < s.alpha.size(); ++j) s.alpha[j] = j % 2 ? q(1, 2) : QScalar(Gauss(mpq_class(3, 2)));
    int points = 0;
    std::string bad;
    for (const auto& sec : s.sectors)
      for (int it = 0; it < 2; ++it) {
        Quasipoint p{sec, {}};
        for (int j = 0; j < s.n(); ++j) p.v.push_back(vd(rng));
        const QScalar expected = stated_weight(name, s.alpha, p);
        QScalar sign(1);
        for (int x : sec) sign *= QScalar(x);
        LatticeSpec verb = s;
        verb.negative = NegativeHalfLine::verbatim;
        ++points;
        if (weight_symbolic(verb, p) != expected || weight_symbolic(s, p) != sign * expected) {
          if (bad.empty()) bad = "mismatch at v = " + std::to_string(p.v[0]) + ",...";
        }
      }
    c.exact("lattice." + name + ".weights", "quasipoint volume elements of the lattice integral",
            "w(s, v) = prefactor * prod_j s_j alpha_j q^(a_j v_j)", bad.empty(),
            bad.empty() ? std::to_string(points) + " quasipoints, verbatim and sign-free conventions" : bad);
  }
}

CommPoly random_psi(std::mt19937_64& rng, int n) {
  CommPoly psi;
  std::uniform_int_distribution<int> e(0, 1), cd(-3, 3);
  for (int t = 0; t < 3; ++t) {
    std::vector<int> exps(static_cast<std::size_t>(n));
    for (auto& x : exps) x = e(rng);
    QScalar v(Gauss(cd(rng), cd(rng)));
    if (v.is_zero()) v = QScalar(1);
    psi[exps] += v;
  }
  return psi;
}

void lattice_expectation_checks(Collector& c, const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed * 1000003u + 47);
  for (const std::string name : {"quantum_plane", "euclid3", "euclid4"}) {
    const SpaceSpec& sp = space_preset(name);
    const std::string pre = "lattice." + name + ".";
    const LatticeSpec s = lattice_spec(name, opt.q, -opt.window, opt.window - 1);
    double worst = 0;
    int used = 0;
    for (int it = 0; it < 20 && used < 3; ++it) {
      try {
        worst = std::max(worst, std::abs(integrate(density<C>(s, random_psi(rng, sp.dim()), true)) - C(1)));
        ++used;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::domain) throw;  // vanishing norm: draw again
      }
    }
    if (used < 3) worst = std::numeric_limits<double>::infinity();
    c.numeric(pre + "density.normalized", "normalization of the probability density", "int conj(psi) (*) psi = 1",
              worst, 1e-12);

    const LatticeSpec sym = lattice_spec(name, opt.q, -1, 1);
    const CommPoly one = {{std::vector<int>(static_cast<std::size_t>(sp.dim()), 0), QScalar(1)}};
    bool odd_ok = true;
    for (int k = 0; k < sp.dim(); ++k) odd_ok = odd_ok && expectation<R>(sym, position_observable(sp, k), one).is_zero();
    c.exact(pre + "expectation.symmetric", "position expectation on a symmetric window",
            "<(X^k + conj X^k)/2> = 0 for psi = 1", odd_ok);
  }

  // Realness for self-conjugate wave functions in the real coordinates.
  const SpaceSpec& e3 = space_preset("euclid3");
  const LatticeSpec s = lattice_spec("euclid3", opt.q, -opt.window, opt.window);
  std::uniform_int_distribution<int> cd(-3, 3), ld(0, 2);
  double worst = 0;
  for (int it = 0; it < 3; ++it) {
    NCPoly y;
    for (int t = 0; t < 3; ++t) {
      Word w;
      const int len = ld(rng);
      for (int j = 0; j < len; ++j) w.push_back(static_cast<char>(ld(rng)));
      int v = cd(rng);
      y.add(w, QScalar(v == 0 ? 1 : v));
    }
    const NCPoly real_sym = y + conjugate_real(y);  // self-conjugate in the real coordinates
    const CommPoly psi = dequantize(e3, from_real_coords(e3, real_sym));
    if (psi.empty()) continue;
    for (int k = 0; k < e3.dim(); ++k)
      worst = std::max(worst, std::abs(expectation<C>(s, position_observable(e3, k), psi, true).imag()));
  }
  c.numeric_or_finding("lattice.euclid3.expectation.real", "realness of expectation values",
                       "Im <(X^k + conj X^k)/2> = 0 for self-conjugate psi", worst, 1e-10);
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"algebra", "conjugation", "phasespace", "qexp", "grassmann", "lattice", "all"};
}

std::vector<std::string> group_names() {
  return {"algebra",   "conjugation",         "phasespace",      "qexp",
          "grassmann", "lattice.integration", "lattice.weights", "lattice.expectation"};
}

std::vector<Check> run_group(std::string_view group, const SuiteOptions& opt) {
  Collector c;
  if (group == "algebra")
    algebra_checks(c, opt);
  else if (group == "conjugation")
    conjugation_checks(c, opt);
  else if (group == "phasespace")
    phasespace_checks(c);
  else if (group == "qexp")
    qexp_checks(c);
  else if (group == "grassmann")
    grassmann_checks(c);
  else if (group == "lattice.integration")
    lattice_integration_checks(c, opt);
  else if (group == "lattice.weights")
    lattice_weight_checks(c, opt);
  else if (group == "lattice.expectation")
    lattice_expectation_checks(c, opt);
  else
    throw Error(ErrorKind::unknown_symbol, "unknown check group '" + std::string(group) + "'");
  return std::move(c.out);
}

Report run_suite(std::string_view name, const SuiteOptions& opt) {
  const auto suites = suite_names();
  if (std::find(suites.begin(), suites.end(), name) == suites.end())
    throw Error(ErrorKind::unknown_symbol, "unknown suite '" + std::string(name) + "'");
  if (opt.q <= 1 || !std::isfinite(opt.q)) throw Error(ErrorKind::domain, "q must be a finite value above 1");
  if (opt.window < 1) throw Error(ErrorKind::domain, "window must be at least 1");
  Report r;
  r.suite = std::string(name);
  r.q = opt.q;
  r.seed = opt.seed;
  for (const std::string& g : group_names()) {
    const bool take = name == "all" || g == name || (name == "lattice" && g.rfind("lattice.", 0) == 0);
    if (!take) continue;
    auto part = run_group(g, opt);
    r.checks.insert(r.checks.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::sort(r.checks.begin(), r.checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  return r;
}

}  // namespace qspace
