#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qspace/config.hpp"
#include "qspace/grassmann.hpp"
#include "qspace/ncalg.hpp"
#include "qspace/phasespace.hpp"
#include "qspace/ratfunc.hpp"

namespace qspace {

/// Sign attached to the negative half-line of a Jackson sum.
///
/// `riemann` weighs both half-lines with positive volume elements, so the
/// q -> 1 limit is the Riemann integral. `verbatim` keeps the signed volume
/// element (s * alpha * q^{a v}) of the lattice formulas.
enum class NegativeHalfLine { riemann, verbatim };

std::string to_string(NegativeHalfLine n);
NegativeHalfLine negative_half_line_from_string(std::string_view s);

struct LatticeSpec {
  std::string space;
  double q = 1.5;  // numeric deformation parameter, used in float mode
  std::vector<int> steps;        // grid exponent a_j: c_j = s_j alpha_j q^{a_j v_j}
  QScalar prefactor;
  std::vector<QScalar> alpha;    // positive real scales
  std::vector<int> v_min, v_max;
  std::vector<std::vector<int>> sectors;  // sign vectors included
  NegativeHalfLine negative = NegativeHalfLine::riemann;

  int n() const { return static_cast<int>(steps.size()); }
};

/// Preset data for a space, unit scales, all sign sectors and window [v_min, v_max] per coordinate.
LatticeSpec lattice_spec(std::string_view space, double q, int v_min, int v_max);
/// Signed step of the one-dimensional Jackson factor per coordinate; negative for a q^{-1} base.
std::vector<int> jackson_steps(const LatticeSpec& spec);

Json lattice_spec_to_json(const LatticeSpec& s);
LatticeSpec lattice_spec_from_json(const Json& j);

struct Quasipoint {
  std::vector<int> s;
  std::vector<int> v;
  friend bool operator<(const Quasipoint& a, const Quasipoint& b) {
    return a.s != b.s ? a.s < b.s : a.v < b.v;
  }
  friend bool operator==(const Quasipoint& a, const Quasipoint& b) { return a.s == b.s && a.v == b.v; }
};

bool in_window(const LatticeSpec& spec, const Quasipoint& p);
/// Every quasipoint of the window, in canonical order.
std::vector<Quasipoint> quasipoints(const LatticeSpec& spec);

QScalar coordinate_symbolic(const LatticeSpec& spec, const Quasipoint& p, int j);
/// Volume element of the integral at a quasipoint, before evaluation.
QScalar weight_symbolic(const LatticeSpec& spec, const Quasipoint& p);

/// Field-specific lifting of exact scalars: numeric evaluation at spec.q, or exact embedding.
template <class S>
S lift(const QScalar& x, double q);
template <>
inline std::complex<double> lift(const QScalar& x, double q) { return x.eval(q); }
template <>
inline QRational lift(const QScalar& x, double) { return QRational(x); }

inline std::complex<double> conj_value(const std::complex<double>& z) { return std::conj(z); }
inline QRational conj_value(const QRational& z) { return z.conj(); }
inline bool is_zero_value(const std::complex<double>& z) { return z == std::complex<double>(); }
inline bool is_zero_value(const QRational& z) { return z.is_zero(); }

template <class S>
S coordinate(const LatticeSpec& spec, const Quasipoint& p, int j) {
  return lift<S>(coordinate_symbolic(spec, p, j), spec.q);
}

template <class S>
S weight(const LatticeSpec& spec, const Quasipoint& p) {
  return lift<S>(weight_symbolic(spec, p), spec.q);
}

/// Samples on the quasipoints of a window. Missing samples are zero.
template <class S>
class LatticeFunction {
 public:
  using Map = std::map<Quasipoint, S>;

  explicit LatticeFunction(LatticeSpec spec) : spec_(std::move(spec)) {}

  const LatticeSpec& spec() const { return spec_; }
  const Map& samples() const { return samples_; }
  S at(const Quasipoint& p) const;
  void set(const Quasipoint& p, const S& value);

  LatticeFunction& operator+=(const LatticeFunction& o);
  LatticeFunction scaled(const S& c) const;
  /// Pointwise product.
  LatticeFunction operator*(const LatticeFunction& o) const;
  friend LatticeFunction operator+(LatticeFunction a, const LatticeFunction& b) { return a += b; }
  bool operator==(const LatticeFunction& o) const;

 private:
  LatticeSpec spec_;
  Map samples_;
};

/// Samples F(c_1, ..., c_n) at every quasipoint of the window.
template <class S>
LatticeFunction<S> sample(const LatticeSpec& spec, const std::function<S(const std::vector<S>&)>& F);

/// Weighted sum over the support, in canonical quasipoint order. With threads > 1,
/// contiguous chunks are summed separately and the partial sums added in order.
template <class S>
S integrate(const LatticeFunction<S>& f, int threads = 1);

enum class HalfLine { pos, neg, full };

/// Truncated Jackson sum over k in [k_min, k_max] with base q^a (a may be negative) and offset c.
template <class S>
S jackson_1d(const std::function<S(const S&)>& f, int a, const QScalar& c, double q, HalfLine half, int k_min,
             int k_max, NegativeHalfLine negative = NegativeHalfLine::riemann);

/// Kronecker spike with value 1/weight(at).
template <class S>
LatticeFunction<S> lattice_delta(const LatticeSpec& spec, const Quasipoint& at);

/// Per-coordinate bound: sign 0 is the origin, otherwise the quasipoint coordinate (sign, v).
struct Bound {
  int sign = 1;
  int v = 0;
};

/// Multiplication by the indicator of quasipoints lying at or below the threshold in every coordinate.
class Projector {
 public:
  Projector(LatticeSpec spec, std::vector<Bound> threshold);
  bool contains(const Quasipoint& p) const;
  template <class S>
  LatticeFunction<S> apply(const LatticeFunction<S>& f) const;
  const std::vector<Bound>& threshold() const { return threshold_; }

 private:
  LatticeSpec spec_;
  std::vector<Bound> threshold_;
};

Projector projector_E(const LatticeSpec& spec, const std::vector<Bound>& threshold);
/// Upper end of the window in every coordinate.
std::vector<Bound> window_max(const LatticeSpec& spec);

/// Indicator of the positive branch of coordinate j.
template <class S>
LatticeFunction<S> heaviside(const LatticeSpec& spec, int j);

/// Pointwise multiplication by F at the quasipoint coordinates.
template <class S>
LatticeFunction<S> spectral_apply(const std::function<S(const std::vector<S>&)>& F, const LatticeFunction<S>& f);

/// x -> f(factor * x) as a function on the lattice with scales alpha / factor.
template <class S>
LatticeFunction<S> rescaled(const LatticeFunction<S>& f, const QScalar& factor);

/// Lattice coordinate j -> generator index; throws unsupported when a lattice coordinate is not a generator.
std::vector<int> lattice_generators(const LatticeSpec& spec);

template <class S>
S evaluate(const LatticeSpec& spec, const CommPoly& f, const Quasipoint& p);

/// Conjugate of a coefficient function, through the quantum-space conjugation.
CommPoly conjugate_function(const SpaceSpec& space, const CommPoly& f);

/// conj(psi) * psi (star product) sampled on the lattice; `normalize` divides by its integral.
template <class S>
LatticeFunction<S> density(const LatticeSpec& spec, const CommPoly& psi, bool normalize = false);

/// Operator acting on coefficient functions.
using Observable = std::function<CommPoly(const CommPoly&)>;
/// (X^k + conj X^k) / 2 acting by left star multiplication.
Observable position_observable(const SpaceSpec& space, int k);
/// (P^k + conj P^k) / 2 with P^k = i d^k (unhatted, left) and conjugation of the momenta by the coordinate table.
Observable momentum_observable(const SpaceSpec& space, int k);

/// Integral of conj(psi) * (A psi); `normalize` divides by the integral of the density.
template <class S>
S expectation(const LatticeSpec& spec, const Observable& op, const CommPoly& psi, bool normalize = false);

/// Variant integral; every variant uses the same lattice data.
template <class S>
S variant_integral(const LatticeFunction<S>& f, Variant v);
/// i/2 (L + Rbar) for which = 1, i/2 (Lbar + R) for which = 2.
template <class S>
S combined_integral(const LatticeFunction<S>& f, int which);

void write_csv(std::ostream& os, const LatticeFunction<std::complex<double>>& f);
LatticeFunction<std::complex<double>> read_csv(std::istream& is, const LatticeSpec& spec);

}  // namespace qspace
