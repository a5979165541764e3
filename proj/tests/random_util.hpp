#pragma once

#include <random>

#include "qspace/ncalg.hpp"
#include "qspace/scalar.hpp"

namespace qspace {

inline void PrintTo(const QScalar& s, std::ostream* os) { *os << s.to_string(); }
inline void PrintTo(const Gauss& g, std::ostream* os) { *os << g.to_string(); }
inline void PrintTo(const NCPoly& p, std::ostream* os) {
  std::vector<std::string> symbols;
  for (int k = 0; k < 16; ++k) symbols.push_back("g" + std::to_string(k));
  *os << format_poly(symbols, p);
}

}  // namespace qspace

namespace qspace::testing {

inline QScalar random_qscalar(std::mt19937_64& rng, int max_terms = 3, int max_e2 = 6, int max_coeff = 5) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(-max_e2, max_e2);
  std::uniform_int_distribution<int> coef(-max_coeff, max_coeff);
  std::uniform_int_distribution<int> den(1, 3);
  QScalar s;
  int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    Gauss c(mpq_class(coef(rng), den(rng)), mpq_class(coef(rng), den(rng)));
    s += QScalar(c, exp(rng));
  }
  return s;
}

inline QScalar random_nonzero_qscalar(std::mt19937_64& rng) {
  QScalar s;
  while (s.is_zero()) s = random_qscalar(rng);
  return s;
}

/// Random element: a few words of length up to max_len with random coefficients.
inline NCPoly random_ncpoly(std::mt19937_64& rng, int generators, int max_len, int max_terms = 3) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, generators - 1);
  NCPoly p;
  int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    Word w;
    int l = len(rng);
    for (int j = 0; j < l; ++j) w.push_back(static_cast<char>(gen(rng)));
    p.add(w, random_qscalar(rng, 2, 4, 3));
  }
  return p;
}

}  // namespace qspace::testing
