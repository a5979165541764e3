#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qspace/scalar.hpp"

namespace qspace {

/// A word in the generators; each char holds a generator index.
using Word = std::string;

/// Degree first, then lexicographic.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

/// Linear combination of words with QScalar coefficients. No implied ordering.
class NCPoly {
 public:
  using Map = std::map<Word, QScalar, WordLess>;

  NCPoly() = default;
  NCPoly(const QScalar& c);  // NOLINT: constants promote
  NCPoly(const Word& w, const QScalar& c = QScalar(1));

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  QScalar coeff(const Word& w) const;
  std::size_t max_degree() const;

  void add(const Word& w, const QScalar& c);
  NCPoly scaled(const QScalar& c) const;

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const QScalar& c, const NCPoly& p) { return p.scaled(c); }
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

 private:
  Map terms_;
};

/// Concatenation product, without any reordering.
NCPoly free_mul(const NCPoly& a, const NCPoly& b);

/// Quadratic-rule rewriting to a PBW normal form with memoized insertion.
///
/// A word is normal when the ranks of its letters are non-decreasing. Each
/// rule maps an inverted adjacent pair (a, b), rank(a) > rank(b), to a
/// polynomial. The system is immutable after construction; the memo is
/// internal and guarded.
class RewriteSystem {
 public:
  using Rules = std::map<std::pair<int, int>, NCPoly>;

  RewriteSystem(int generators, std::vector<int> rank, Rules rules);

  int generators() const { return generators_; }
  const std::vector<int>& rank() const { return rank_; }
  const Rules& rules() const { return rules_; }
  bool is_normal(const Word& w) const;

  NCPoly normal_form(const NCPoly& p) const;
  /// Normal form of a * b.
  NCPoly multiply(const NCPoly& a, const NCPoly& b) const;

 private:
  void insert_into(NCPoly& acc, const Word& normal, const QScalar& c, char x) const;
  const NCPoly& insert(const Word& normal, char x) const;

  int generators_;
  std::vector<int> rank_;
  Rules rules_;
  mutable std::mutex mu_;
  mutable std::unordered_map<Word, NCPoly> memo_;
};

/// Linear real-coordinate basis. The stored generators are positive real
/// multiples of the self-conjugate coordinates: real_j = scaled_j / scale_j.
struct RealBasis {
  std::vector<std::string> names;
  std::vector<NCPoly> scaled_in_x;  // each scaled real generator, linear in X
  std::vector<NCPoly> x_in_scaled;  // each X generator, linear in the scaled reals
  std::vector<QScalar> scale;
};

/// Immutable description of a quantum space.
struct SpaceSpec {
  std::string name;
  std::vector<std::string> generators;  // symbols in normal order, e.g. "X+"
  std::vector<std::string> labels;      // index labels, e.g. "+"
  RewriteSystem::Rules relations;
  std::map<std::pair<int, int>, QScalar> metric;          // upper indices
  std::map<std::pair<int, int>, QScalar> metric_inverse;  // lower indices
  std::vector<NCPoly> conjugation;                         // image of each generator
  QScalar kappa;
  std::vector<std::string> lattice_labels;
  std::vector<int> lattice_steps;
  QScalar lattice_prefactor;
  bool has_real_basis = false;
  RealBasis real;

  int dim() const { return static_cast<int>(generators.size()); }
  int label_index(std::string_view label) const;
  const RewriteSystem& rewriter() const;
  /// Builds the rewrite system; call after changing relations.
  void finalize();

  friend bool operator==(const SpaceSpec& a, const SpaceSpec& b);

 private:
  std::shared_ptr<const RewriteSystem> rewriter_;
};

QScalar metric_entry(const SpaceSpec& s, int k, int l);
QScalar metric_inverse_entry(const SpaceSpec& s, int k, int l);

std::vector<std::string> space_names();
/// Built-in presets: quantum_plane, euclid3, euclid4, minkowski.
const SpaceSpec& space_preset(std::string_view name);

NCPoly generator(const SpaceSpec& s, int index);
NCPoly normal_order(const SpaceSpec& s, const NCPoly& f);
NCPoly ncmul(const SpaceSpec& s, const NCPoly& a, const NCPoly& b);
NCPoly nc_conjugate(const SpaceSpec& s, const NCPoly& f);

/// Real-coordinate polynomials are free (unordered) polynomials in the scaled reals.
NCPoly to_real_coords(const SpaceSpec& s, const NCPoly& f);
NCPoly from_real_coords(const SpaceSpec& s, const NCPoly& g);
/// Conjugation of a free polynomial in self-conjugate letters.
NCPoly conjugate_real(const NCPoly& g);

/// Commutative polynomial keyed by exponent vectors in generator order.
using CommPoly = std::map<std::vector<int>, QScalar>;

NCPoly quantize(const SpaceSpec& s, const CommPoly& f);
CommPoly dequantize(const SpaceSpec& s, const NCPoly& normal);
CommPoly star_product(const SpaceSpec& s, const CommPoly& f, const CommPoly& g);

/// Normal monomials of a given degree, in canonical order.
std::vector<Word> normal_monomials(int generators, int degree);

std::string format_word(const std::vector<std::string>& symbols, const Word& w);
std::string format_poly(const std::vector<std::string>& symbols, const NCPoly& p);
std::string format_poly(const SpaceSpec& s, const NCPoly& p);

}  // namespace qspace
