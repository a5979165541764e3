#include <string>

#include "qspace/error.hpp"
#include "qspace/ncalg.hpp"

namespace qspace {

namespace {

QScalar q(int num, int den = 1) { return QScalar::q_pow(num, den); }
const QScalar kI = QScalar::i();

Word w(std::initializer_list<int> letters) {
  Word r;
  for (int l : letters) r.push_back(static_cast<char>(l));
  return r;
}

NCPoly lin(std::initializer_list<std::pair<int, QScalar>> parts) {
  NCPoly p;
  for (const auto& [g, c] : parts) p.add(w({g}), c);
  return p;
}

// q^{1/2} + q^{-1/2}
QScalar half_lambda_plus() { return q(1, 2) + q(-1, 2); }

SpaceSpec make_quantum_plane() {
  SpaceSpec s;
  s.name = "quantum_plane";
  s.generators = {"X2", "X1"};
  s.labels = {"2", "1"};
  const int x2 = 0, x1 = 1;
  s.relations[{x1, x2}] = NCPoly(w({x2, x1}), q(1));
  s.metric = {{{x1, x2}, q(-1, 2)}, {{x2, x1}, -q(1, 2)}};
  s.metric_inverse = {{{x1, x2}, -q(-1, 2)}, {{x2, x1}, q(1, 2)}};
  // Involutive variant of the metric-induced map.
  s.conjugation.resize(2);
  s.conjugation[x1] = lin({{x2, q(-1, 2)}});
  s.conjugation[x2] = lin({{x1, q(1, 2)}});
  s.kappa = q(3);
  s.lattice_labels = {"1", "2"};
  s.lattice_steps = {2, 2};
  s.lattice_prefactor = (q(2) - 1).pow(2);
  s.finalize();
  return s;
}

SpaceSpec make_euclid3() {
  SpaceSpec s;
  s.name = "euclid3";
  s.generators = {"X+", "X3", "X-"};
  s.labels = {"+", "3", "-"};
  const int p = 0, t = 1, m = 2;
  s.relations[{t, p}] = NCPoly(w({p, t}), q(2));
  s.relations[{m, t}] = NCPoly(w({t, m}), q(2));
  s.relations[{m, p}] = NCPoly(w({p, m})) + NCPoly(w({t, t}), lambda());
  s.metric = {{{p, m}, -q(1)}, {{t, t}, 1}, {{m, p}, -q(-1)}};
  s.metric_inverse = {{{p, m}, -q(1)}, {{t, t}, 1}, {{m, p}, -q(-1)}};
  s.conjugation = {lin({{m, -q(1)}}), lin({{t, 1}}), lin({{p, -q(-1)}})};
  s.kappa = q(6);
  s.lattice_labels = {"+", "3", "-"};
  s.lattice_steps = {4, 2, 4};
  s.lattice_prefactor = (q(4) - 1).pow(2) * (q(2) - 1);

  s.has_real_basis = true;
  s.real.names = {"Y1", "Y2", "Y3"};
  s.real.scaled_in_x = {lin({{p, kI * q(-1, 2)}, {m, kI * q(1, 2)}}), lin({{p, q(-1, 2)}, {m, -q(1, 2)}}),
                        lin({{t, 1}})};
  const Gauss half(mpq_class(1, 2));
  // X+ = q^{1/2}/2 (Y2 - i Y1), X- = q^{-1/2}/2 (-i Y1 - Y2) in scaled reals.
  s.real.x_in_scaled = {lin({{0, (-kI * q(1, 2)).scaled(half)}, {1, q(1, 2).scaled(half)}}), lin({{2, 1}}),
                        lin({{0, (-kI * q(-1, 2)).scaled(half)}, {1, -q(-1, 2).scaled(half)}})};
  s.real.scale = {half_lambda_plus(), half_lambda_plus(), 1};
  s.finalize();
  return s;
}

SpaceSpec make_euclid4() {
  SpaceSpec s;
  s.name = "euclid4";
  s.generators = {"X1", "X2", "X3", "X4"};
  s.labels = {"1", "2", "3", "4"};
  s.relations[{1, 0}] = NCPoly(w({0, 1}), q(-1));
  s.relations[{2, 0}] = NCPoly(w({0, 2}), q(-1));
  s.relations[{3, 2}] = NCPoly(w({2, 3}), q(-1));
  s.relations[{3, 1}] = NCPoly(w({1, 3}), q(-1));
  s.relations[{2, 1}] = NCPoly(w({1, 2}));
  s.relations[{3, 0}] = NCPoly(w({0, 3})) + NCPoly(w({1, 2}), lambda());
  s.metric = {{{0, 3}, q(-1)}, {{1, 2}, 1}, {{2, 1}, 1}, {{3, 0}, q(1)}};
  s.metric_inverse = {{{0, 3}, q(-1)}, {{1, 2}, 1}, {{2, 1}, 1}, {{3, 0}, q(1)}};
  s.conjugation = {lin({{3, q(-1)}}), lin({{2, 1}}), lin({{1, 1}}), lin({{0, q(1)}})};
  s.kappa = q(4);
  s.lattice_labels = {"1", "2", "3", "4"};
  s.lattice_steps = {2, 2, 2, 2};
  s.lattice_prefactor = (q(4) - 1).pow(4);

  s.has_real_basis = true;
  s.real.names = {"Y1", "Y2", "Y3", "Y4"};
  const Gauss half(mpq_class(1, 2));
  s.real.scaled_in_x = {lin({{0, q(1, 2)}, {3, q(-1, 2)}}), lin({{1, QScalar(half)}, {2, QScalar(half)}}),
                        lin({{1, kI.scaled(half)}, {2, -kI.scaled(half)}}),
                        lin({{0, kI * q(1, 2)}, {3, -kI * q(-1, 2)}})};
  s.real.x_in_scaled = {lin({{0, q(-1, 2).scaled(half)}, {3, (-kI * q(-1, 2)).scaled(half)}}),
                        lin({{1, 1}, {2, -kI}}), lin({{1, 1}, {2, kI}}),
                        lin({{0, q(1, 2).scaled(half)}, {3, (kI * q(1, 2)).scaled(half)}})};
  s.real.scale = {half_lambda_plus(), 1, 1, half_lambda_plus()};
  s.finalize();
  return s;
}

SpaceSpec make_minkowski() {
  SpaceSpec s;
  s.name = "minkowski";
  s.generators = {"X0", "X+", "X3", "X-"};
  s.labels = {"0", "+", "3", "-"};
  const int z = 0, p = 1, t = 2, m = 3;
  s.relations[{p, z}] = NCPoly(w({z, p}));
  s.relations[{t, z}] = NCPoly(w({z, t}));
  s.relations[{m, z}] = NCPoly(w({z, m}));
  s.relations[{m, t}] = NCPoly(w({t, m}), q(2)) - NCPoly(w({z, m}), q(1) * lambda());
  s.relations[{t, p}] = NCPoly(w({p, t}), q(2)) - NCPoly(w({z, p}), q(1) * lambda());
  s.relations[{m, p}] = NCPoly(w({p, m})) + NCPoly(w({t, t}), lambda()) - NCPoly(w({z, t}), lambda());
  s.metric = {{{z, z}, -1}, {{t, t}, 1}, {{p, m}, -q(1)}, {{m, p}, -q(-1)}};
  s.metric_inverse = {{{z, z}, -1}, {{t, t}, 1}, {{p, m}, -q(1)}, {{m, p}, -q(-1)}};
  s.conjugation = {lin({{z, 1}}), lin({{m, -q(-1)}}), lin({{t, 1}}), lin({{p, -q(1)}})};
  s.kappa = q(-4);
  s.lattice_labels = {"r2", "+", "3/0", "-"};
  s.lattice_steps = {2, 2, 2, 2};
  s.lattice_prefactor = (QScalar(1) - q(-2)).pow(4);

  s.has_real_basis = true;
  s.real.names = {"Y0", "Y1", "Y2", "Y3"};
  const Gauss half(mpq_class(1, 2));
  s.real.scaled_in_x = {lin({{z, 1}}), lin({{p, kI * q(1, 2)}, {m, kI * q(-1, 2)}}),
                        lin({{p, q(1, 2)}, {m, -q(-1, 2)}}), lin({{t, 1}})};
  // X+ = q^{-1/2}/2 (Y2 - i Y1), X- = q^{1/2}/2 (-i Y1 - Y2) in scaled reals.
  s.real.x_in_scaled = {lin({{0, 1}}), lin({{1, (-kI * q(-1, 2)).scaled(half)}, {2, q(-1, 2).scaled(half)}}),
                        lin({{3, 1}}), lin({{1, (-kI * q(1, 2)).scaled(half)}, {2, -q(1, 2).scaled(half)}})};
  s.real.scale = {1, half_lambda_plus(), half_lambda_plus(), 1};
  s.finalize();
  return s;
}

}  // namespace

std::vector<std::string> space_names() { return {"quantum_plane", "euclid3", "euclid4", "minkowski"}; }

const SpaceSpec& space_preset(std::string_view name) {
  static const SpaceSpec qp = make_quantum_plane();
  static const SpaceSpec e3 = make_euclid3();
  static const SpaceSpec e4 = make_euclid4();
  static const SpaceSpec mk = make_minkowski();
  if (name == "quantum_plane") return qp;
  if (name == "euclid3") return e3;
  if (name == "euclid4") return e4;
  if (name == "minkowski") return mk;
  throw Error(ErrorKind::unknown_space, "unknown space '" + std::string(name) + "'");
}

}  // namespace qspace
