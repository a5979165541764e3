#include "qspace/lattice.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "qspace/error.hpp"

namespace qspace {

std::string to_string(NegativeHalfLine n) { return n == NegativeHalfLine::riemann ? "riemann" : "verbatim"; }

NegativeHalfLine negative_half_line_from_string(std::string_view s) {
  if (s == "riemann") return NegativeHalfLine::riemann;
  if (s == "verbatim") return NegativeHalfLine::verbatim;
  throw Error(ErrorKind::parse, "unknown negative half-line convention '" + std::string(s) + "'");
}

namespace {

std::vector<std::vector<int>> all_sectors(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) s[j] = (mask >> (n - 1 - j)) & 1u ? 1 : -1;
    out.push_back(std::move(s));
  }
  return out;
}

void check_shape(const LatticeSpec& s) {
  const auto n = static_cast<std::size_t>(s.n());
  if (s.alpha.size() != n || s.v_min.size() != n || s.v_max.size() != n)
    throw Error(ErrorKind::config, "lattice spec fields disagree in dimension");
  for (std::size_t j = 0; j < n; ++j) {
    if (s.steps[j] <= 0) throw Error(ErrorKind::config, "lattice steps must be positive");
    if (s.v_min[j] > s.v_max[j]) throw Error(ErrorKind::config, "empty lattice window");
  }
  for (const auto& sec : s.sectors) {
    if (sec.size() != n) throw Error(ErrorKind::config, "sign sector has wrong dimension");
    for (int x : sec)
      if (x != 1 && x != -1) throw Error(ErrorKind::config, "sign sector entries must be +1 or -1");
  }
  if (s.q <= 1) throw Error(ErrorKind::domain, "lattice formulas need q > 1");
}

}  // namespace

LatticeSpec lattice_spec(std::string_view space, double q, int v_min, int v_max) {
  const SpaceSpec& sp = space_preset(space);
  LatticeSpec s;
  s.space = sp.name;
  s.q = q;
  s.steps = sp.lattice_steps;
  s.prefactor = sp.lattice_prefactor;
  const auto n = sp.lattice_steps.size();
  s.alpha.assign(n, QScalar(1));
  s.v_min.assign(n, v_min);
  s.v_max.assign(n, v_max);
  s.sectors = all_sectors(static_cast<int>(n));
  check_shape(s);
  return s;
}

std::vector<int> jackson_steps(const LatticeSpec& spec) {
  std::vector<int> out = spec.steps;
  if (spec.space == "minkowski")
    for (int& a : out) a = -a;
  return out;
}

Json lattice_spec_to_json(const LatticeSpec& s) {
  Json j;
  j["space"] = s.space;
  j["q"] = s.q;
  j["steps"] = s.steps;
  j["prefactor"] = s.prefactor.to_string();
  Json alpha = Json::array();
  for (const auto& a : s.alpha) alpha.push_back(a.to_string());
  j["alpha"] = alpha;
  j["v_min"] = s.v_min;
  j["v_max"] = s.v_max;
  j["sectors"] = s.sectors;
  j["negative_half_line"] = to_string(s.negative);
  return j;
}

LatticeSpec lattice_spec_from_json(const Json& j) {
  try {
    const SpaceSpec& sp = space_preset(j.at("space").get<std::string>());
    const auto n = sp.lattice_steps.size();
    LatticeSpec s;
    s.space = sp.name;
    s.q = j.at("q").get<double>();
    s.steps = sp.lattice_steps;
    s.prefactor = sp.lattice_prefactor;
    if (j.contains("steps") && j["steps"].get<std::vector<int>>() != s.steps)
      throw Error(ErrorKind::config, "lattice steps differ from the space data");
    if (j.contains("prefactor") && QScalar::parse(j["prefactor"].get<std::string>()) != s.prefactor)
      throw Error(ErrorKind::config, "lattice prefactor differs from the space data");
    auto per_coord = [&](const char* key, int fallback) {
      if (!j.contains(key)) return std::vector<int>(n, fallback);
      if (j[key].is_number_integer()) return std::vector<int>(n, j[key].get<int>());
      return j[key].get<std::vector<int>>();
    };
    s.v_min = per_coord("v_min", -4);
    s.v_max = per_coord("v_max", 4);
    s.alpha.assign(n, QScalar(1));
    if (j.contains("alpha")) {
      s.alpha.clear();
      for (const auto& a : j["alpha"]) s.alpha.push_back(QScalar::parse(a.get<std::string>()));
    }
    if (!j.contains("sectors") || j["sectors"] == "all")
      s.sectors = all_sectors(static_cast<int>(n));
    else
      s.sectors = j["sectors"].get<std::vector<std::vector<int>>>();
    if (j.contains("negative_half_line"))
      s.negative = negative_half_line_from_string(j["negative_half_line"].get<std::string>());
    check_shape(s);
    return s;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::config, std::string("malformed lattice spec: ") + e.what());
  }
}

bool in_window(const LatticeSpec& spec, const Quasipoint& p) {
  const auto n = static_cast<std::size_t>(spec.n());
  if (p.s.size() != n || p.v.size() != n) return false;
  for (std::size_t j = 0; j < n; ++j)
    if (p.v[j] < spec.v_min[j] || p.v[j] > spec.v_max[j]) return false;
  for (const auto& sec : spec.sectors)
    if (sec == p.s) return true;
  return false;
}

std::vector<Quasipoint> quasipoints(const LatticeSpec& spec) {
  const int n = spec.n();
  std::vector<std::vector<int>> sectors = spec.sectors;
  std::sort(sectors.begin(), sectors.end());
  sectors.erase(std::unique(sectors.begin(), sectors.end()), sectors.end());
  std::vector<Quasipoint> out;
  for (const auto& s : sectors) {
    std::vector<int> v = spec.v_min;
    while (true) {
      out.push_back({s, v});
      int j = n - 1;
      while (j >= 0 && v[j] == spec.v_max[j]) {
        v[j] = spec.v_min[j];
        --j;
      }
      if (j < 0) break;
      ++v[j];
    }
  }
  return out;
}

QScalar coordinate_symbolic(const LatticeSpec& spec, const Quasipoint& p, int j) {
  return QScalar(p.s.at(j)) * spec.alpha.at(j) * QScalar::q_pow(spec.steps.at(j) * p.v.at(j));
}

QScalar weight_symbolic(const LatticeSpec& spec, const Quasipoint& p) {
  QScalar w = spec.prefactor;
  for (int j = 0; j < spec.n(); ++j) {
    const int sign = spec.negative == NegativeHalfLine::verbatim ? p.s.at(j) : 1;
    w *= QScalar(sign) * spec.alpha[j] * QScalar::q_pow(spec.steps[j] * p.v.at(j));
  }
  return w;
}

namespace {

// Lifted grid values alpha_j q^{a_j v} over the window, and the lifted prefactor.
template <class S>
class Grid {
 public:
  explicit Grid(const LatticeSpec& spec) : spec_(spec), pre_(lift<S>(spec.prefactor, spec.q)) {
    for (int j = 0; j < spec.n(); ++j) {
      std::vector<S> row;
      for (int v = spec.v_min[j]; v <= spec.v_max[j]; ++v)
        row.push_back(lift<S>(spec.alpha[j] * QScalar::q_pow(spec.steps[j] * v), spec.q));
      values_.push_back(std::move(row));
    }
  }

  S magnitude(const Quasipoint& p, int j) const { return values_[j][p.v[j] - spec_.v_min[j]]; }
  S coordinate(const Quasipoint& p, int j) const { return p.s[j] > 0 ? magnitude(p, j) : -magnitude(p, j); }
  std::vector<S> coordinates(const Quasipoint& p) const {
    std::vector<S> c;
    for (int j = 0; j < spec_.n(); ++j) c.push_back(coordinate(p, j));
    return c;
  }
  S weight(const Quasipoint& p) const {
    S w = pre_;
    for (int j = 0; j < spec_.n(); ++j)
      w = w * (spec_.negative == NegativeHalfLine::verbatim ? coordinate(p, j) : magnitude(p, j));
    return w;
  }

 private:
  const LatticeSpec& spec_;
  S pre_;
  std::vector<std::vector<S>> values_;
};

}  // namespace

// ---------------------------------------------------------------- LatticeFunction

template <class S>
S LatticeFunction<S>::at(const Quasipoint& p) const {
  auto it = samples_.find(p);
  return it == samples_.end() ? S() : it->second;
}

template <class S>
void LatticeFunction<S>::set(const Quasipoint& p, const S& value) {
  if (!in_window(spec_, p)) throw Error(ErrorKind::domain, "quasipoint outside the lattice window");
  if (is_zero_value(value))
    samples_.erase(p);
  else
    samples_[p] = value;
}

template <class S>
LatticeFunction<S>& LatticeFunction<S>::operator+=(const LatticeFunction& o) {
  for (const auto& [p, x] : o.samples_) set(p, at(p) + x);
  return *this;
}

template <class S>
LatticeFunction<S> LatticeFunction<S>::scaled(const S& c) const {
  LatticeFunction r(spec_);
  for (const auto& [p, x] : samples_) r.set(p, x * c);
  return r;
}

template <class S>
LatticeFunction<S> LatticeFunction<S>::operator*(const LatticeFunction& o) const {
  LatticeFunction r(spec_);
  for (const auto& [p, x] : samples_) {
    auto it = o.samples_.find(p);
    if (it != o.samples_.end()) r.set(p, x * it->second);
  }
  return r;
}

template <class S>
bool LatticeFunction<S>::operator==(const LatticeFunction& o) const {
  return samples_ == o.samples_;
}

template <class S>
LatticeFunction<S> sample(const LatticeSpec& spec, const std::function<S(const std::vector<S>&)>& F) {
  LatticeFunction<S> f(spec);
  const Grid<S> grid(spec);
  for (const Quasipoint& p : quasipoints(spec)) f.set(p, F(grid.coordinates(p)));
  return f;
}

template <class S>
S integrate(const LatticeFunction<S>& f, int threads) {
  std::vector<std::pair<Quasipoint, S>> entries(f.samples().begin(), f.samples().end());
  const Grid<S> grid(f.spec());
  auto partial = [&](std::size_t lo, std::size_t hi) {
    S acc{};
    for (std::size_t k = lo; k < hi; ++k) acc += grid.weight(entries[k].first) * entries[k].second;
    return acc;
  };
  if (threads <= 1 || entries.size() < 2) return partial(0, entries.size());
  const std::size_t chunks = std::min<std::size_t>(static_cast<std::size_t>(threads), entries.size());
  std::vector<std::future<S>> parts;
  for (std::size_t c = 0; c < chunks; ++c)
    parts.push_back(std::async(std::launch::async, partial, entries.size() * c / chunks,
                               entries.size() * (c + 1) / chunks));
  S acc{};
  for (auto& p : parts) acc += p.get();
  return acc;
}

template <class S>
S jackson_1d(const std::function<S(const S&)>& f, int a, const QScalar& c, double q, HalfLine half, int k_min,
             int k_max, NegativeHalfLine negative) {
  if (q <= 1) throw Error(ErrorKind::domain, "Jackson sums need q > 1");
  if (a == 0) throw Error(ErrorKind::domain, "Jackson step must be nonzero");
  const QScalar pre = a > 0 ? QScalar::q_pow(a) - QScalar(1) : QScalar(1) - QScalar::q_pow(a);
  S pos{}, neg{};
  for (int k = k_min; k <= k_max; ++k) {
    const S x = lift<S>(c * QScalar::q_pow(a * k), q);
    if (half != HalfLine::neg) pos += x * f(x);
    if (half != HalfLine::pos) neg += x * f(-x);
  }
  if (negative == NegativeHalfLine::verbatim) neg = -neg;
  return lift<S>(pre, q) * (pos + neg);
}

template <class S>
LatticeFunction<S> lattice_delta(const LatticeSpec& spec, const Quasipoint& at) {
  if (!in_window(spec, at)) throw Error(ErrorKind::domain, "delta point outside the lattice window");
  LatticeFunction<S> f(spec);
  f.set(at, S(1) / weight<S>(spec, at));
  return f;
}

// ---------------------------------------------------------------- projectors

namespace {

std::pair<int, int> order_key(int sign, int v) {
  if (sign > 0) return {2, v};
  if (sign < 0) return {0, -v};
  return {1, 0};
}

}  // namespace

Projector::Projector(LatticeSpec spec, std::vector<Bound> threshold)
    : spec_(std::move(spec)), threshold_(std::move(threshold)) {
  if (static_cast<int>(threshold_.size()) != spec_.n())
    throw Error(ErrorKind::domain, "threshold dimension does not match the lattice");
}

bool Projector::contains(const Quasipoint& p) const {
  for (int j = 0; j < spec_.n(); ++j)
    if (order_key(p.s[j], p.v[j]) > order_key(threshold_[j].sign, threshold_[j].v)) return false;
  return true;
}

template <class S>
LatticeFunction<S> Projector::apply(const LatticeFunction<S>& f) const {
  LatticeFunction<S> r(f.spec());
  for (const auto& [p, x] : f.samples())
    if (contains(p)) r.set(p, x);
  return r;
}

Projector projector_E(const LatticeSpec& spec, const std::vector<Bound>& threshold) {
  return Projector(spec, threshold);
}

std::vector<Bound> window_max(const LatticeSpec& spec) {
  std::vector<Bound> b;
  for (int j = 0; j < spec.n(); ++j) b.push_back({1, spec.v_max[j]});
  return b;
}

template <class S>
LatticeFunction<S> heaviside(const LatticeSpec& spec, int j) {
  LatticeFunction<S> f(spec);
  for (const Quasipoint& p : quasipoints(spec))
    if (p.s.at(j) > 0) f.set(p, S(1));
  return f;
}

template <class S>
LatticeFunction<S> spectral_apply(const std::function<S(const std::vector<S>&)>& F, const LatticeFunction<S>& f) {
  const LatticeSpec& spec = f.spec();
  LatticeFunction<S> r(spec);
  const Grid<S> grid(spec);
  for (const auto& [p, x] : f.samples()) r.set(p, F(grid.coordinates(p)) * x);
  return r;
}

template <class S>
LatticeFunction<S> rescaled(const LatticeFunction<S>& f, const QScalar& factor) {
  if (!factor.is_monomial() || !factor.terms()[0].c.is_real() || sgn(factor.terms()[0].c.re) <= 0)
    throw Error(ErrorKind::domain, "rescaling factor must be a positive monomial");
  LatticeSpec spec = f.spec();
  for (auto& a : spec.alpha) a *= factor.inverse();
  LatticeFunction<S> r(spec);
  for (const auto& [p, x] : f.samples()) r.set(p, x);
  return r;
}

// ---------------------------------------------------------------- wave functions

std::vector<int> lattice_generators(const LatticeSpec& spec) {
  const SpaceSpec& sp = space_preset(spec.space);
  std::vector<int> out;
  for (const auto& label : sp.lattice_labels) {
    const int g = sp.label_index(label);
    if (g < 0)
      throw Error(ErrorKind::unsupported,
                  "lattice coordinate '" + label + "' of space '" + sp.name + "' is not a generator");
    out.push_back(g);
  }
  return out;
}

namespace {

template <class S>
struct LiftedPoly {
  std::vector<int> gens;
  std::vector<std::pair<std::vector<int>, S>> terms;

  LiftedPoly(const LatticeSpec& spec, const CommPoly& f) : gens(lattice_generators(spec)) {
    for (const auto& [e, c] : f) terms.emplace_back(e, lift<S>(c, spec.q));
  }

  S operator()(const std::vector<S>& coords) const {
    std::vector<S> x(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) x[gens[j]] = coords[j];
    S acc{};
    for (const auto& [e, c] : terms) {
      S term = c;
      for (std::size_t g = 0; g < e.size(); ++g)
        for (int k = 0; k < e[g]; ++k) term = term * x[g];
      acc += term;
    }
    return acc;
  }
};

}  // namespace

template <class S>
S evaluate(const LatticeSpec& spec, const CommPoly& f, const Quasipoint& p) {
  std::vector<S> c;
  for (int j = 0; j < spec.n(); ++j) c.push_back(coordinate<S>(spec, p, j));
  return LiftedPoly<S>(spec, f)(c);
}

CommPoly conjugate_function(const SpaceSpec& space, const CommPoly& f) {
  return dequantize(space, nc_conjugate(space, quantize(space, f)));
}

namespace {

template <class S>
LatticeFunction<S> sample_poly(const LatticeSpec& spec, const CommPoly& f) {
  const LiftedPoly<S> poly(spec, f);
  return sample<S>(spec, [&](const std::vector<S>& c) { return poly(c); });
}

QScalar half() { return QScalar(Gauss(mpq_class(1, 2))); }

}  // namespace

namespace {

// Float norms at rounding level relative to the absolute mass count as zero.
bool norm_vanishes(const LatticeFunction<QRational>&, const QRational& norm) { return norm.is_zero(); }

bool norm_vanishes(const LatticeFunction<std::complex<double>>& rho, const std::complex<double>& norm) {
  double mass = 0;
  for (const auto& [p, x] : rho.samples()) mass += std::abs(weight<std::complex<double>>(rho.spec(), p) * x);
  return std::abs(norm) <= 1e-12 * mass;
}

}  // namespace

template <class S>
LatticeFunction<S> density(const LatticeSpec& spec, const CommPoly& psi, bool normalize) {
  const SpaceSpec& space = space_preset(spec.space);
  LatticeFunction<S> rho = sample_poly<S>(spec, star_product(space, conjugate_function(space, psi), psi));
  if (!normalize) return rho;
  const S norm = integrate(rho);
  if (norm_vanishes(rho, norm)) throw Error(ErrorKind::domain, "zero norm on the chosen window");
  return rho.scaled(S(1) / norm);
}

Observable position_observable(const SpaceSpec& space, int k) {
  const NCPoly x = generator(space, k);
  const NCPoly a = (x + nc_conjugate(space, x)).scaled(half());
  const SpaceSpec* sp = &space;
  return [sp, a](const CommPoly& psi) { return dequantize(*sp, ncmul(*sp, a, quantize(*sp, psi))); };
}

Observable momentum_observable(const SpaceSpec& space, int k) {
  if (k < 0 || k >= space.dim()) throw Error(ErrorKind::unknown_symbol, "momentum index out of range");
  std::vector<std::pair<int, QScalar>> parts = {{k, half()}};
  for (const auto& [w, c] : space.conjugation.at(static_cast<std::size_t>(k)).terms()) {
    if (w.size() != 1) throw Error(ErrorKind::unsupported, "momentum conjugation needs a linear table");
    parts.emplace_back(w[0], c * half());
  }
  const SpaceSpec* sp = &space;
  return [sp, parts](const CommPoly& psi) {
    const NCPoly f = quantize(*sp, psi);
    NCPoly acc;
    for (const auto& [m, c] : parts)
      acc += derivative_action(*sp, DerivKind{Calculus::unhatted, Side::left}, m, f).scaled(c * QScalar::i());
    return dequantize(*sp, normal_order(*sp, acc));
  };
}

template <class S>
S expectation(const LatticeSpec& spec, const Observable& op, const CommPoly& psi, bool normalize) {
  const SpaceSpec& space = space_preset(spec.space);
  const CommPoly integrand = star_product(space, conjugate_function(space, psi), op(psi));
  S value = integrate(sample_poly<S>(spec, integrand));
  if (!normalize) return value;
  const S norm = integrate(density<S>(spec, psi, false));
  if (is_zero_value(norm)) throw Error(ErrorKind::domain, "zero norm on the chosen window");
  return value / norm;
}

template <class S>
S variant_integral(const LatticeFunction<S>& f, Variant) {
  return integrate(f);
}

template <class S>
S combined_integral(const LatticeFunction<S>& f, int which) {
  Variant a, b;
  if (which == 1) {
    a = Variant::L;
    b = Variant::Rbar;
  } else if (which == 2) {
    a = Variant::Lbar;
    b = Variant::R;
  } else {
    throw Error(ErrorKind::domain, "combined integral index must be 1 or 2");
  }
  return lift<S>(QScalar::i() * half(), f.spec().q) * (variant_integral(f, a) + variant_integral(f, b));
}

// ---------------------------------------------------------------- CSV

void write_csv(std::ostream& os, const LatticeFunction<std::complex<double>>& f) {
  const int n = f.spec().n();
  for (int j = 1; j <= n; ++j) os << "s" << j << ",";
  for (int j = 1; j <= n; ++j) os << "v" << j << ",";
  os << "re,im\n";
  os << std::setprecision(17);
  for (const auto& [p, x] : f.samples()) {
    for (int s : p.s) os << s << ",";
    for (int v : p.v) os << v << ",";
    os << x.real() << "," << x.imag() << "\n";
  }
}

LatticeFunction<std::complex<double>> read_csv(std::istream& is, const LatticeSpec& spec) {
  const int n = spec.n();
  LatticeFunction<std::complex<double>> f(spec);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == 's' || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (static_cast<int>(cells.size()) != 2 * n + 2)
      throw Error(ErrorKind::parse, "line " + std::to_string(lineno) + ": expected " + std::to_string(2 * n + 2) +
                                        " columns");
    try {
      Quasipoint p;
      for (int j = 0; j < n; ++j) p.s.push_back(std::stoi(cells[j]));
      for (int j = 0; j < n; ++j) p.v.push_back(std::stoi(cells[n + j]));
      const std::complex<double> x(std::stod(cells[2 * n]), std::stod(cells[2 * n + 1]));
      if (!in_window(spec, p)) throw Error(ErrorKind::domain, "line " + std::to_string(lineno) + ": outside window");
      f.set(p, f.at(p) + x);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::parse, "line " + std::to_string(lineno) + ": malformed number");
    }
  }
  return f;
}

// ---------------------------------------------------------------- instantiations

#define QSPACE_LATTICE_INSTANTIATE(S)                                                                          \
  template class LatticeFunction<S>;                                                                           \
  template LatticeFunction<S> sample(const LatticeSpec&, const std::function<S(const std::vector<S>&)>&);      \
  template S integrate(const LatticeFunction<S>&, int);                                                        \
  template S jackson_1d(const std::function<S(const S&)>&, int, const QScalar&, double, HalfLine, int, int,    \
                        NegativeHalfLine);                                                                     \
  template LatticeFunction<S> lattice_delta(const LatticeSpec&, const Quasipoint&);                            \
  template LatticeFunction<S> Projector::apply(const LatticeFunction<S>&) const;                               \
  template LatticeFunction<S> heaviside(const LatticeSpec&, int);                                              \
  template LatticeFunction<S> spectral_apply(const std::function<S(const std::vector<S>&)>&,                   \
                                             const LatticeFunction<S>&);                                       \
  template LatticeFunction<S> rescaled(const LatticeFunction<S>&, const QScalar&);                             \
  template S evaluate(const LatticeSpec&, const CommPoly&, const Quasipoint&);                                 \
  template LatticeFunction<S> density(const LatticeSpec&, const CommPoly&, bool);                              \
  template S expectation(const LatticeSpec&, const Observable&, const CommPoly&, bool);                        \
  template S variant_integral(const LatticeFunction<S>&, Variant);                                             \
  template S combined_integral(const LatticeFunction<S>&, int);

QSPACE_LATTICE_INSTANTIATE(std::complex<double>)
QSPACE_LATTICE_INSTANTIATE(QRational)

}  // namespace qspace
