#include "qspace/qexp.hpp"

#include <sstream>

#include "qspace/eigen_scalar.hpp"
#include "qspace/error.hpp"

namespace qspace {

QRational BiSeries::coeff(const Word& x, const Word& p) const {
  auto it = terms.find({x, p});
  return it == terms.end() ? QRational() : it->second;
}

namespace {

// Coordinate part of i d^j acting on a normal x-word, from the given side.
NCPoly momentum_image(const SpaceSpec& s, DerivKind kind, int j, const Word& x) {
  return derivative_action(s, kind, j, NCPoly(x)).scaled(QScalar::i());
}

// p^b p^j (left equation) or p^j p^b (right equation), normal ordered in the momentum copy.
NCPoly momentum_product(const SpaceSpec& s, Side side, const Word& b, int j) {
  const NCPoly pj = generator(s, j);
  return side == Side::left ? ncmul(s, NCPoly(b), pj) : ncmul(s, pj, NCPoly(b));
}

BiSeries solve(const SpaceSpec& s, DerivKind kind, int max_degree) {
  if (max_degree < 0) throw Error(ErrorKind::domain, "series degree must be non-negative");
  const int n = s.dim();
  BiSeries u;
  u.space = s.name;
  u.kind = kind;
  u.max_degree = max_degree;
  u.terms[{Word(), Word()}] = QRational(1);

  for (int d = 1; d <= max_degree; ++d) {
    const auto cur = normal_monomials(n, d);
    const auto prev = normal_monomials(n, d - 1);
    std::map<Word, int, WordLess> cur_index, prev_index;
    for (std::size_t k = 0; k < cur.size(); ++k) cur_index[cur[k]] = static_cast<int>(k);
    for (std::size_t k = 0; k < prev.size(); ++k) prev_index[prev[k]] = static_cast<int>(k);

    const Eigen::Index rows = static_cast<Eigen::Index>(n * prev.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(cur.size());
    RMatrixQ a = RMatrixQ::Constant(rows, cols, QRational());
    RMatrixQ rhs = RMatrixQ::Constant(rows, cols, QRational());
    for (int j = 0; j < n; ++j) {
      const Eigen::Index base = static_cast<Eigen::Index>(j * prev.size());
      for (std::size_t col = 0; col < cur.size(); ++col) {
        const NCPoly image = momentum_image(s, kind, j, cur[col]);
        for (const auto& [w, c] : image.terms())
          a(base + prev_index.at(w), static_cast<Eigen::Index>(col)) += QRational(c);
      }
      for (const auto& [key, c] : u.terms) {
        if (static_cast<int>(key.first.size()) != d - 1) continue;
        const NCPoly product = momentum_product(s, kind.side, key.second, j);
        for (const auto& [w, m] : product.terms())
          rhs(base + prev_index.at(key.first), cur_index.at(w)) += c * QRational(m);
      }
    }
    std::optional<RMatrixQ> sol;
    try {
      sol = solve_exact(a, rhs);
    } catch (const Error&) {
      sol.reset();
    }
    if (!sol)
      throw Error(ErrorKind::singular, "eigenfunction system has no unique solution at degree " + std::to_string(d) +
                                           " for space '" + s.name + "' (" + to_string(kind.calculus) + ")");
    for (std::size_t r = 0; r < cur.size(); ++r)
      for (std::size_t c = 0; c < cur.size(); ++c)
        if (!(*sol)(r, c).is_zero()) u.terms[{cur[r], cur[c]}] = (*sol)(r, c);
  }
  return u;
}

}  // namespace

BiSeries solve_qexp(const SpaceSpec& space, Calculus calculus, int max_degree) {
  return solve(space, {calculus, Side::left}, max_degree);
}

BiSeries solve_qexp_dual(const SpaceSpec& space, Calculus calculus, int max_degree) {
  return solve(space, {calculus, Side::right}, max_degree);
}

BiSeries::Map qexp_residual(const SpaceSpec& space, const BiSeries& u, int j) {
  BiSeries::Map res;
  auto add = [&](const Word& x, const Word& p, const QRational& c) {
    if (static_cast<int>(x.size()) >= u.max_degree || c.is_zero()) return;
    auto [it, inserted] = res.try_emplace({x, p}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) res.erase(it);
    }
  };
  for (const auto& [key, c] : u.terms) {
    const NCPoly image = momentum_image(space, u.kind, j, key.first);
    for (const auto& [x, v] : image.terms()) add(x, key.second, c * QRational(v));
    const NCPoly product = momentum_product(space, u.kind.side, key.second, j);
    for (const auto& [p, v] : product.terms())
      add(key.first, p, -(c * QRational(v)));
  }
  return res;
}

std::string dump_series(const SpaceSpec& space, const BiSeries& u) {
  std::vector<std::string> psyms;
  for (const auto& l : space.labels) psyms.push_back("P" + l);
  std::ostringstream os;
  for (const auto& [key, c] : u.terms)
    os << "(" << format_word(space.generators, key.first) << " | " << format_word(psyms, key.second)
       << ") : " << c.to_string() << "\n";
  return os.str();
}

}  // namespace qspace
