#include "qspace/phasespace.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <tuple>

#include "qspace/config.hpp"
#include "qspace/error.hpp"

namespace qspace {

namespace {

QMatrix identity(int d) { return QMatrix::Identity(d, d); }

QMatrix mul(const QMatrix& a, const QMatrix& b) {
  QMatrix c = QMatrix::Constant(a.rows(), b.cols(), QScalar());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

QMatrix kron(const QMatrix& a, const QMatrix& b) {
  QMatrix c = QMatrix::Constant(a.rows() * b.rows(), a.cols() * b.cols(), QScalar());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) c.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = b * a(i, j);
  return c;
}

bool is_zero(const QMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

}  // namespace

RMatrixReport rmatrix_checks(const RMatrix& r) {
  const int d = r.n();
  const int d2 = d * d;
  if (r.r.rows() != d2 || r.r.cols() != d2 || r.r_inv.rows() != d2 || r.r_inv.cols() != d2)
    throw Error(ErrorKind::domain, "R-matrix dimension does not match its label count");
  RMatrixReport rep;
  const QMatrix id = identity(d);
  const QMatrix r12 = kron(r.r, id), r23 = kron(id, r.r);
  rep.braid = mul(mul(r12, r23), r12) == mul(mul(r23, r12), r23);
  rep.inverse = mul(r.r, r.r_inv) == identity(d2) && mul(r.r_inv, r.r) == identity(d2);
  rep.flip_limit = true;
  for (int row = 0; row < d2; ++row)
    for (int col = 0; col < d2; ++col) {
      const bool flip = col == (row % d) * d + row / d;
      if (r.r(row, col).at_one() != Gauss(flip ? 1 : 0)) rep.flip_limit = false;
    }
  if (!r.eigenvalues.empty()) {
    QMatrix prod = identity(d2);
    for (const QScalar& e : r.eigenvalues) prod = mul(prod, QMatrix(r.r - identity(d2) * e));
    rep.spectral = is_zero(prod);
  }
  return rep;
}

namespace {

std::mutex& registry_mutex() {
  static std::mutex mu;
  return mu;
}

const RMatrix* find_rmatrix(std::string_view space) {
  static std::map<std::string, std::unique_ptr<RMatrix>, std::less<>> cache;
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = cache.find(space);
  if (it == cache.end()) {
    std::unique_ptr<RMatrix> loaded;
    const auto path = config_dir() / "rmatrix" / (std::string(space) + ".json");
    if (std::filesystem::exists(path)) loaded = std::make_unique<RMatrix>(rmatrix_from_json(load_json_file(path)));
    it = cache.emplace(std::string(space), std::move(loaded)).first;
  }
  return it->second.get();
}

}  // namespace

bool has_rmatrix(std::string_view space) { return find_rmatrix(space) != nullptr; }

const RMatrix& rmatrix_for(std::string_view space) {
  const RMatrix* r = find_rmatrix(space);
  if (!r) throw Error(ErrorKind::unsupported, "no R-matrix data for space '" + std::string(space) + "'");
  return *r;
}

std::string to_string(Calculus c) { return c == Calculus::unhatted ? "unhatted" : "hatted"; }

Calculus calculus_from_string(std::string_view s) {
  if (s == "unhatted" || s == "d") return Calculus::unhatted;
  if (s == "hatted" || s == "dh") return Calculus::hatted;
  throw Error(ErrorKind::parse, "unknown calculus '" + std::string(s) + "'");
}

// ---------------------------------------------------------------- PhaseAlgebra

PhaseAlgebra::PhaseAlgebra(const SpaceSpec& space, const RMatrix& r, Calculus calculus, PhaseOrder order)
    : space_(&space), calculus_(calculus), order_(order) {
  const int d = space.dim();
  if (r.n() != d) throw Error(ErrorKind::config, "R-matrix dimension does not match space '" + space.name + "'");
  std::vector<int> pos(d);
  for (int g = 0; g < d; ++g) {
    pos[g] = -1;
    for (int k = 0; k < d; ++k)
      if (r.labels[k] == space.labels[g]) pos[g] = k;
    if (pos[g] < 0) throw Error(ErrorKind::config, "R-matrix lacks label '" + space.labels[g] + "'");
  }
  if (!r.k.is_monomial()) throw Error(ErrorKind::config, "constant k must be a monomial");

  // Coefficient matrix of the rule and of its inverse, in generator positions.
  const QMatrix& fwd = calculus == Calculus::unhatted ? r.r_inv : r.r;
  const QMatrix& bwd = calculus == Calculus::unhatted ? r.r : r.r_inv;
  const QScalar kf = calculus == Calculus::unhatted ? r.k : r.k.inverse();
  const QScalar metric_sign(calculus == Calculus::unhatted ? 1 : r.hatted_metric_sign);
  auto at = [&](int a, int b) { return pos[a] * d + pos[b]; };
  cross_ = QMatrix::Constant(d * d, d * d, QScalar());
  QMatrix cross_inv = cross_;
  inhom_ = QMatrix::Constant(d, d, QScalar());
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) {
      inhom_(k, l) = QScalar::i() * metric_sign * metric_entry(space, k, l);
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
          cross_(k * d + l, m * d + n) = kf * fwd(at(k, l), at(m, n));
          cross_inv(k * d + l, m * d + n) = kf.inverse() * bwd(at(k, l), at(m, n));
        }
    }

  for (const auto& g : space.generators) symbols_.push_back(g);
  for (const auto& l : space.labels) symbols_.push_back("P" + l);

  std::vector<int> rank(2 * d);
  for (int g = 0; g < d; ++g) {
    rank[g] = order == PhaseOrder::xp ? g : d + g;
    rank[d + g] = order == PhaseOrder::xp ? d + g : g;
  }
  RewriteSystem::Rules rules;
  for (const auto& [pair, rhs] : space.relations) {
    rules[pair] = rhs;
    NCPoly shifted;
    for (const auto& [w, c] : rhs.terms()) {
      Word sw = w;
      for (char& ch : sw) ch = static_cast<char>(ch + d);
      shifted.add(sw, c);
    }
    rules[{pair.first + d, pair.second + d}] = shifted;
  }
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      NCPoly rhs;
      if (order == PhaseOrder::xp) {
        // P^a X^b -> C X P + i g
        for (int m = 0; m < d; ++m)
          for (int n = 0; n < d; ++n) rhs.add(Word{x(m), p(n)}, cross_(a * d + b, m * d + n));
        rhs.add(Word(), inhom_(a, b));
        rules[{d + a, b}] = rhs;
      } else {
        // X^a P^b -> C^{-1} (P X - i g)
        QScalar constant;
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l) {
            const QScalar& c = cross_inv(a * d + b, k * d + l);
            if (c.is_zero()) continue;
            rhs.add(Word{p(k), x(l)}, c);
            constant -= c * inhom_(k, l);
          }
        rhs.add(Word(), constant);
        rules[{a, d + b}] = rhs;
      }
    }
  rewriter_ = std::make_unique<RewriteSystem>(2 * d, std::move(rank), std::move(rules));
}

bool PhaseAlgebra::has_momentum(const Word& w) const {
  for (char c : w)
    if (c >= n()) return true;
  return false;
}

QScalar PhaseAlgebra::cross(int k, int l, int m, int n) const {
  const int d = this->n();
  return cross_(k * d + l, m * d + n);
}

QScalar PhaseAlgebra::inhomogeneous(int k, int l) const { return inhom_(k, l); }

NCPoly PhaseAlgebra::normal_form(const NCPoly& mixed) const { return rewriter_->normal_form(mixed); }

NCPoly PhaseAlgebra::multiply(const NCPoly& a, const NCPoly& b) const { return rewriter_->multiply(a, b); }

NCPoly PhaseAlgebra::embed(const NCPoly& f, bool momentum) const {
  if (!momentum) return f;
  NCPoly r;
  for (const auto& [w, c] : f.terms()) {
    Word sw = w;
    for (char& ch : sw) ch = static_cast<char>(ch + n());
    r.add(sw, c);
  }
  return r;
}

const PhaseAlgebra& phase_algebra(std::string_view space, Calculus calculus, PhaseOrder order) {
  using Key = std::tuple<std::string, Calculus, PhaseOrder>;
  static std::map<Key, std::unique_ptr<PhaseAlgebra>> cache;
  const SpaceSpec& spec = space_preset(space);
  const RMatrix& r = rmatrix_for(space);
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[Key(std::string(space), calculus, order)];
  if (!slot) slot = std::make_unique<PhaseAlgebra>(spec, r, calculus, order);
  return *slot;
}

NCPoly momentum_free_part(const PhaseAlgebra& alg, const NCPoly& mixed) {
  NCPoly r;
  for (const auto& [w, c] : mixed.terms())
    if (!alg.has_momentum(w)) r.add(w, c);
  return r;
}

NCPoly derivative_action(const SpaceSpec& space, DerivKind kind, int index, const NCPoly& f) {
  if (index < 0 || index >= space.dim()) throw Error(ErrorKind::unknown_symbol, "derivative index out of range");
  if (kind.side == Side::left) {
    const PhaseAlgebra& alg = phase_algebra(space.name, kind.calculus, PhaseOrder::xp);
    NCPoly pf = alg.multiply(NCPoly(Word{alg.p(index)}), f);
    return momentum_free_part(alg, pf).scaled(-QScalar::i());
  }
  const PhaseAlgebra& alg = phase_algebra(space.name, kind.calculus, PhaseOrder::px);
  NCPoly fp = alg.multiply(f, NCPoly(Word{alg.p(index)}));
  return momentum_free_part(alg, fp).scaled(QScalar::i());
}

}  // namespace qspace
