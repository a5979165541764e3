#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qspace/eigen_scalar.hpp"
#include "qspace/ncalg.hpp"

namespace qspace {

/// Vector representation of the braiding R-matrix and its inverse.
///
/// Row (k,l) sits at index k*d + l and column (m,n) at m*d + n, where d is the
/// dimension and k, l, m, n are positions in `labels`. Row (k,l) holds the
/// coefficients of X^m P^n in the rewrite of P^k X^l.
struct RMatrix {
  std::string space;
  std::vector<std::string> labels;
  QMatrix r;
  QMatrix r_inv;
  QScalar k;
  int hatted_metric_sign = 1;
  std::vector<QScalar> eigenvalues;

  int n() const { return static_cast<int>(labels.size()); }
};

struct RMatrixReport {
  bool braid = false;
  bool inverse = false;
  bool flip_limit = false;
  /// Product of (R - e) over the listed eigenvalues vanishes; empty when none are listed.
  std::optional<bool> spectral = std::nullopt;
  bool all_pass() const { return braid && inverse && flip_limit && spectral.value_or(true); }
};

RMatrixReport rmatrix_checks(const RMatrix& r);

/// Shipped R-matrix for a space, from the config directory. Throws unsupported when absent.
const RMatrix& rmatrix_for(std::string_view space);
bool has_rmatrix(std::string_view space);

enum class Calculus { unhatted, hatted };
enum class Side { left, right };

struct DerivKind {
  Calculus calculus = Calculus::unhatted;
  Side side = Side::left;
};

std::string to_string(Calculus c);
Calculus calculus_from_string(std::string_view s);

/// Normal form of the momentum-position products.
enum class PhaseOrder { xp, px };

/// Position-momentum algebra for one calculus.
///
/// Letters 0..n-1 are the coordinates X in generator order and n..2n-1 the
/// momenta P in the same order. Normal words are (X-word)(P-word) in XP order
/// and (P-word)(X-word) in PX order.
class PhaseAlgebra {
 public:
  PhaseAlgebra(const SpaceSpec& space, const RMatrix& r, Calculus calculus, PhaseOrder order);

  const SpaceSpec& space() const { return *space_; }
  Calculus calculus() const { return calculus_; }
  PhaseOrder order() const { return order_; }
  int n() const { return space_->dim(); }
  char x(int index) const { return static_cast<char>(index); }
  char p(int index) const { return static_cast<char>(n() + index); }
  bool has_momentum(const Word& w) const;
  const std::vector<std::string>& symbols() const { return symbols_; }

  /// Coefficient of X^m P^n in the rewrite of P^k X^l (generator indices).
  QScalar cross(int k, int l, int m, int n) const;
  /// Constant term in the rewrite of P^k X^l.
  QScalar inhomogeneous(int k, int l) const;

  NCPoly normal_form(const NCPoly& mixed) const;
  NCPoly multiply(const NCPoly& a, const NCPoly& b) const;
  /// Embeds a coordinate polynomial (or a momentum polynomial if `momentum`).
  NCPoly embed(const NCPoly& f, bool momentum = false) const;

 private:
  const SpaceSpec* space_;
  Calculus calculus_;
  PhaseOrder order_;
  std::vector<std::string> symbols_;
  Mat<QScalar> cross_;  // indexed by generator positions
  Mat<QScalar> inhom_;
  std::unique_ptr<RewriteSystem> rewriter_;
};

/// Cached algebra for a preset space with a shipped R-matrix.
const PhaseAlgebra& phase_algebra(std::string_view space, Calculus calculus, PhaseOrder order);

/// Momentum-free part of a mixed polynomial.
NCPoly momentum_free_part(const PhaseAlgebra& alg, const NCPoly& mixed);

/// Left: -i times the momentum-free part of P^k f. Right: i times that of f P^k.
NCPoly derivative_action(const SpaceSpec& space, DerivKind kind, int index, const NCPoly& f);

}  // namespace qspace
