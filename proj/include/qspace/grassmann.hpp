#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qspace/eigen_scalar.hpp"
#include "qspace/scalar.hpp"

namespace qspace {

enum class Variant { L, Lbar, R, Rbar };

std::string to_string(Variant v);
Variant variant_from_string(std::string_view s);

/// Basis subsets are bitmasks over the label positions.
using Subset = unsigned;

/// Coefficient vector over the 2^n basis subsets.
struct Supernumber {
  std::map<Subset, QScalar> coeffs;

  QScalar at(Subset s) const;
  void set(Subset s, const QScalar& c);
  Supernumber scaled(const QScalar& c) const;
  friend Supernumber operator+(const Supernumber& a, const Supernumber& b);
  friend bool operator==(const Supernumber& a, const Supernumber& b) { return a.coeffs == b.coeffs; }
};

struct FormTerm {
  Subset f;
  Subset g;
  QScalar coeff;
};

/// A table entry whose listed subscripts were replaced on load.
struct Correction {
  Variant variant;
  bool primed;
  std::string listed_f;
  std::string listed_g;
  Subset f;
  Subset g;
};

/// Delta function as an ordered product of basis elements with a constant.
struct DeltaMonomial {
  QScalar coeff;
  std::vector<int> order;  // label positions, left to right
  Subset subset() const;
};

class GrassmannSpace {
 public:
  std::string name;
  std::vector<std::string> labels;
  QScalar kappa;  // value of kappa_Lbar = kappa_R
  QScalar vol;
  QScalar leibniz_k;
  std::array<DeltaMonomial, 4> deltas;
  std::vector<Correction> corrections;

  int n() const { return static_cast<int>(labels.size()); }
  Subset full() const { return (Subset(1) << n()) - 1; }
  const std::vector<FormTerm>& table(Variant v, bool primed) const;
  /// Variant whose stored table serves `v` (itself unless aliased).
  Variant table_owner(Variant v) const;
  QScalar kappa_of(Variant v) const;

  /// Parses a comma-separated label list, or ' for the empty subset.
  Subset parse_subset(std::string_view text) const;
  std::string subset_name(Subset s) const;

  static GrassmannSpace load(const std::filesystem::path& path);

 private:
  std::array<std::array<std::vector<FormTerm>, 2>, 4> tables_;
  std::array<Variant, 4> owner_{Variant::L, Variant::Lbar, Variant::R, Variant::Rbar};
};

/// Shipped data for quantum_plane, euclid3, euclid4 or minkowski.
const GrassmannSpace& grassmann_space(std::string_view name);

/// Plain: sum c conj(f_I) g_J. Primed: sum c f_I conj(g_J).
QScalar sesquilinear(const GrassmannSpace& s, Variant v, bool primed, const Supernumber& f, const Supernumber& g);
/// which = 1: i^n/2 (L + Rbar); which = 2: i^n/2 (Lbar + R).
QScalar combined_form(const GrassmannSpace& s, int which, bool primed, const Supernumber& f, const Supernumber& g);

Supernumber grassmann_delta(const GrassmannSpace& s, Variant v);
QScalar grassmann_vol(const GrassmannSpace& s);

/// Entry (I, J) is the form evaluated on the basis elements I and J.
QMatrix gram_matrix(const GrassmannSpace& s, Variant v, bool primed);
QRational gram_determinant(const GrassmannSpace& s, Variant v, bool primed);

}  // namespace qspace
