#include "qspace/ncalg.hpp"

#include <algorithm>

#include "qspace/error.hpp"

namespace qspace {

// ---------------------------------------------------------------- NCPoly

NCPoly::NCPoly(const QScalar& c) {
  if (!c.is_zero()) terms_.emplace(Word(), c);
}

NCPoly::NCPoly(const Word& w, const QScalar& c) {
  if (!c.is_zero()) terms_.emplace(w, c);
}

QScalar NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QScalar() : it->second;
}

std::size_t NCPoly::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

void NCPoly::add(const Word& w, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NCPoly NCPoly::scaled(const QScalar& c) const {
  NCPoly r;
  if (c.is_zero()) return r;
  for (const auto& [w, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, x * c);
  return r;
}

NCPoly NCPoly::operator-() const { return scaled(QScalar(-1)); }

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NCPoly free_mul(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) r.add(wa + wb, ca * cb);
  return r;
}

// ---------------------------------------------------------------- RewriteSystem

RewriteSystem::RewriteSystem(int generators, std::vector<int> rank, Rules rules)
    : generators_(generators), rank_(std::move(rank)), rules_(std::move(rules)) {
  if (static_cast<int>(rank_.size()) != generators_) throw Error(ErrorKind::config, "rank vector size mismatch");
  for (int a = 0; a < generators_; ++a)
    for (int b = 0; b < generators_; ++b)
      if (rank_[a] > rank_[b] && !rules_.count({a, b}))
        throw Error(ErrorKind::config, "missing rewrite rule for generator pair (" + std::to_string(a) + "," +
                                           std::to_string(b) + ")");
}

bool RewriteSystem::is_normal(const Word& w) const {
  for (std::size_t k = 1; k < w.size(); ++k)
    if (rank_[w[k - 1]] > rank_[w[k]]) return false;
  return true;
}

const NCPoly& RewriteSystem::insert(const Word& normal, char x) const {
  Word key = normal;
  key.push_back(x);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  NCPoly result;
  if (normal.empty() || rank_[normal.back()] <= rank_[x]) {
    result = NCPoly(key);
  } else {
    char y = normal.back();
    Word prefix = normal.substr(0, normal.size() - 1);
    const NCPoly& rule = rules_.at({y, x});
    for (const auto& [w, c] : rule.terms()) {
      NCPoly cur(prefix, c);
      for (char letter : w) {
        NCPoly next;
        for (const auto& [m, d] : cur.terms()) insert_into(next, m, d, letter);
        cur = std::move(next);
      }
      result += cur;
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.try_emplace(std::move(key), std::move(result)).first->second;
}

void RewriteSystem::insert_into(NCPoly& acc, const Word& normal, const QScalar& c, char x) const {
  for (const auto& [w, d] : insert(normal, x).terms()) acc.add(w, c * d);
}

NCPoly RewriteSystem::normal_form(const NCPoly& p) const {
  NCPoly acc;
  for (const auto& [w, c] : p.terms()) {
    if (is_normal(w)) {
      acc.add(w, c);
      continue;
    }
    NCPoly cur(Word(), c);
    for (char letter : w) {
      NCPoly next;
      for (const auto& [m, d] : cur.terms()) insert_into(next, m, d, letter);
      cur = std::move(next);
    }
    acc += cur;
  }
  return acc;
}

NCPoly RewriteSystem::multiply(const NCPoly& a, const NCPoly& b) const {
  NCPoly na = normal_form(a);
  NCPoly acc;
  for (const auto& [wb, cb] : b.terms()) {
    NCPoly cur = na.scaled(cb);
    for (char letter : wb) {
      NCPoly next;
      for (const auto& [m, d] : cur.terms()) insert_into(next, m, d, letter);
      cur = std::move(next);
    }
    acc += cur;
  }
  return acc;
}

// ---------------------------------------------------------------- SpaceSpec

int SpaceSpec::label_index(std::string_view label) const {
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == label) return static_cast<int>(k);
  return -1;
}

const RewriteSystem& SpaceSpec::rewriter() const {
  if (!rewriter_) throw Error(ErrorKind::config, "space '" + name + "' was not finalized");
  return *rewriter_;
}

void SpaceSpec::finalize() {
  std::vector<int> rank(generators.size());
  for (std::size_t k = 0; k < rank.size(); ++k) rank[k] = static_cast<int>(k);
  rewriter_ = std::make_shared<const RewriteSystem>(dim(), std::move(rank), relations);
}

bool operator==(const SpaceSpec& a, const SpaceSpec& b) {
  auto real_eq = [](const RealBasis& x, const RealBasis& y) {
    return x.names == y.names && x.scaled_in_x == y.scaled_in_x && x.x_in_scaled == y.x_in_scaled &&
           x.scale == y.scale;
  };
  return a.name == b.name && a.generators == b.generators && a.labels == b.labels && a.relations == b.relations &&
         a.metric == b.metric && a.metric_inverse == b.metric_inverse && a.conjugation == b.conjugation &&
         a.kappa == b.kappa && a.lattice_labels == b.lattice_labels && a.lattice_steps == b.lattice_steps &&
         a.lattice_prefactor == b.lattice_prefactor && a.has_real_basis == b.has_real_basis &&
         (!a.has_real_basis || real_eq(a.real, b.real));
}

QScalar metric_entry(const SpaceSpec& s, int k, int l) {
  auto it = s.metric.find({k, l});
  return it == s.metric.end() ? QScalar() : it->second;
}

QScalar metric_inverse_entry(const SpaceSpec& s, int k, int l) {
  auto it = s.metric_inverse.find({k, l});
  return it == s.metric_inverse.end() ? QScalar() : it->second;
}

// ---------------------------------------------------------------- algebra operations

NCPoly generator(const SpaceSpec& s, int index) {
  if (index < 0 || index >= s.dim()) throw Error(ErrorKind::unknown_symbol, "generator index out of range");
  return NCPoly(Word(1, static_cast<char>(index)));
}

NCPoly normal_order(const SpaceSpec& s, const NCPoly& f) { return s.rewriter().normal_form(f); }

NCPoly ncmul(const SpaceSpec& s, const NCPoly& a, const NCPoly& b) { return s.rewriter().multiply(a, b); }

NCPoly nc_conjugate(const SpaceSpec& s, const NCPoly& f) {
  const RewriteSystem& rw = s.rewriter();
  NCPoly acc;
  for (const auto& [w, c] : f.terms()) {
    NCPoly cur(c.conj());
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = rw.multiply(cur, s.conjugation.at(static_cast<std::size_t>(*it)));
    acc += cur;
  }
  return acc;
}

namespace {

void require_real_basis(const SpaceSpec& s) {
  if (!s.has_real_basis) throw Error(ErrorKind::unsupported, "space '" + s.name + "' has no real-coordinate basis");
}

}  // namespace

NCPoly to_real_coords(const SpaceSpec& s, const NCPoly& f) {
  require_real_basis(s);
  NCPoly acc;
  const NCPoly normal = normal_order(s, f);
  for (const auto& [w, c] : normal.terms()) {
    NCPoly cur(c);
    for (char letter : w) cur = free_mul(cur, s.real.x_in_scaled.at(static_cast<std::size_t>(letter)));
    acc += cur;
  }
  return acc;
}

NCPoly from_real_coords(const SpaceSpec& s, const NCPoly& g) {
  require_real_basis(s);
  const RewriteSystem& rw = s.rewriter();
  NCPoly acc;
  for (const auto& [w, c] : g.terms()) {
    NCPoly cur(c);
    for (char letter : w) cur = rw.multiply(cur, s.real.scaled_in_x.at(static_cast<std::size_t>(letter)));
    acc += cur;
  }
  return acc;
}

NCPoly conjugate_real(const NCPoly& g) {
  NCPoly r;
  for (const auto& [w, c] : g.terms()) r.add(Word(w.rbegin(), w.rend()), c.conj());
  return r;
}

NCPoly quantize(const SpaceSpec& s, const CommPoly& f) {
  NCPoly r;
  for (const auto& [e, c] : f) {
    if (static_cast<int>(e.size()) != s.dim()) throw Error(ErrorKind::domain, "exponent vector size mismatch");
    Word w;
    for (int k = 0; k < s.dim(); ++k) {
      if (e[k] < 0) throw Error(ErrorKind::domain, "negative exponent");
      w.append(static_cast<std::size_t>(e[k]), static_cast<char>(k));
    }
    r.add(w, c);
  }
  return r;
}

CommPoly dequantize(const SpaceSpec& s, const NCPoly& normal) {
  CommPoly r;
  for (const auto& [w, c] : normal.terms()) {
    if (!s.rewriter().is_normal(w)) throw Error(ErrorKind::domain, "dequantize needs a normal-ordered polynomial");
    std::vector<int> e(static_cast<std::size_t>(s.dim()), 0);
    for (char letter : w) ++e[static_cast<std::size_t>(letter)];
    r.emplace(std::move(e), c);
  }
  return r;
}

CommPoly star_product(const SpaceSpec& s, const CommPoly& f, const CommPoly& g) {
  return dequantize(s, ncmul(s, quantize(s, f), quantize(s, g)));
}

std::vector<Word> normal_monomials(int generators, int degree) {
  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self, int start, int left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int g = start; g < generators; ++g) {
      cur.push_back(static_cast<char>(g));
      self(self, g, left - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, degree);
  return out;
}

// ---------------------------------------------------------------- formatting

std::string format_word(const std::vector<std::string>& symbols, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (char letter : w) {
    if (!s.empty()) s += "*";
    s += symbols.at(static_cast<std::size_t>(letter));
  }
  return s;
}

std::string format_poly(const std::vector<std::string>& symbols, const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : p.terms()) {
    std::string t;
    if (w.empty()) {
      t = c.is_monomial() ? c.to_string() : "(" + c.to_string() + ")";
    } else if (c == QScalar(1)) {
      t = format_word(symbols, w);
    } else if (c == QScalar(-1)) {
      t = "-" + format_word(symbols, w);
    } else if (c.is_monomial()) {
      t = c.to_string() + "*" + format_word(symbols, w);
    } else {
      t = "(" + c.to_string() + ")*" + format_word(symbols, w);
    }
    if (out.empty()) {
      out = t;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

std::string format_poly(const SpaceSpec& s, const NCPoly& p) { return format_poly(s.generators, p); }

}  // namespace qspace
