#pragma once

#include <map>
#include <string>
#include <utility>

#include "qspace/ncalg.hpp"
#include "qspace/phasespace.hpp"
#include "qspace/ratfunc.hpp"

namespace qspace {

struct BiWordLess {
  bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
    WordLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

/// Truncated series sum c(a, b) x^a p^b over normal x- and p-words of equal degree.
struct BiSeries {
  using Map = std::map<std::pair<Word, Word>, QRational, BiWordLess>;

  std::string space;
  DerivKind kind;
  int max_degree = 0;
  Map terms;

  QRational coeff(const Word& x, const Word& p) const;
};

/// Solves i d^j |> u = u (*) p^j degree by degree (left action).
BiSeries solve_qexp(const SpaceSpec& space, Calculus calculus, int max_degree);
/// Solves u <| (i d^j) = p^j (*) u degree by degree (right action).
BiSeries solve_qexp_dual(const SpaceSpec& space, Calculus calculus, int max_degree);

/// Nonzero residual terms of the defining equation for index j, through x-degree max_degree - 1.
BiSeries::Map qexp_residual(const SpaceSpec& space, const BiSeries& u, int j);

/// One line per term: `(x-word | p-word) : coefficient`.
std::string dump_series(const SpaceSpec& space, const BiSeries& u);

}  // namespace qspace
