#include "qspace/expr.hpp"

#include <cctype>

#include "qspace/error.hpp"

namespace qspace {

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::scalar:
      return a.value == b.value;
    case Expr::Kind::symbol:
      return a.name == b.name;
    case Expr::Kind::deriv:
      if (a.name != b.name || a.deriv.calculus != b.deriv.calculus || a.deriv.side != b.deriv.side) return false;
      break;
    default:
      break;
  }
  return a.args == b.args && a.negated == b.negated;
}

std::vector<std::string> expr_symbols(const SpaceSpec& space) {
  std::vector<std::string> out = space.generators;
  for (const auto& l : space.labels) out.push_back("P" + l);
  for (const auto& l : space.labels) out.push_back("theta" + l);
  return out;
}

namespace {

Expr scalar(QScalar v) {
  Expr e;
  e.kind = Expr::Kind::scalar;
  e.value = std::move(v);
  return e;
}

bool is_scalar(const Expr& e) { return e.kind == Expr::Kind::scalar; }

class ExprParser {
 public:
  ExprParser(std::string_view s, const SpaceSpec& space) : s_(s), space_(space), symbols_(expr_symbols(space)) {}

  Expr parse_all() {
    skip();
    if (pos_ >= s_.size()) fail("empty expression");
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::parse, msg + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool eat_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  Expr expr() {
    std::vector<Expr> terms{term()};
    std::vector<bool> neg{false};
    for (;;) {
      if (eat('+')) {
        neg.push_back(false);
      } else if (eat('-')) {
        neg.push_back(true);
      } else {
        break;
      }
      terms.push_back(term());
    }
    if (terms.size() == 1) return std::move(terms[0]);
    bool all_scalar = true;
    for (const auto& t : terms) all_scalar = all_scalar && is_scalar(t);
    if (all_scalar) {
      QScalar v;
      for (std::size_t k = 0; k < terms.size(); ++k) v += neg[k] ? -terms[k].value : terms[k].value;
      return scalar(v);
    }
    Expr e;
    e.kind = Expr::Kind::sum;
    e.args = std::move(terms);
    e.negated = std::move(neg);
    return e;
  }

  Expr term() {
    std::vector<Expr> factors{factor()};
    for (;;) {
      if (eat('*')) {
        factors.push_back(factor());
      } else if (eat('/')) {
        const std::size_t at = pos_;
        Expr d = factor();
        if (!is_scalar(d) || d.value.is_zero() || !d.value.is_monomial()) {
          pos_ = at;
          fail("division by a non-invertible factor");
        }
        if (!is_scalar(factors.back())) fail("division must follow a scalar factor");
        factors.back().value *= d.value.inverse();
      } else {
        break;
      }
    }
    if (factors.size() == 1) return std::move(factors[0]);
    bool all_scalar = true;
    for (const auto& f : factors) all_scalar = all_scalar && is_scalar(f);
    if (all_scalar) {
      QScalar v(1);
      for (const auto& f : factors) v *= f.value;
      return scalar(v);
    }
    Expr e;
    e.kind = Expr::Kind::product;
    e.args = std::move(factors);
    return e;
  }

  Expr factor() {
    if (eat('-')) {
      Expr inner = factor();
      if (is_scalar(inner)) return scalar(-inner.value);
      Expr e;
      e.kind = Expr::Kind::product;
      e.args = {scalar(QScalar(-1)), std::move(inner)};
      return e;
    }
    Expr base = atom();
    if (!eat('^')) return base;
    if (!is_scalar(base)) fail("only scalars take powers");
    return scalar(power(base.value));
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  QScalar power(const QScalar& base) {
    long num = 0, den = 1;
    if (eat('(')) {
      long sign = eat('-') ? -1 : 1;
      num = sign * integer();
      if (eat('/')) den = integer();
      expect(')');
    } else {
      long sign = eat('-') ? -1 : 1;
      num = sign * integer();
    }
    if (den == 0) fail("zero denominator in exponent");
    if (den == 1) {
      if (num < 0 && !base.is_monomial()) fail("negative power of a non-monomial");
      return base.pow(static_cast<int>(num));
    }
    if (!base.is_monomial() || base.terms()[0].c != Gauss(1)) fail("fractional power of a non-q-power");
    const long e2 = base.terms()[0].e2 * num;
    if (e2 % den != 0) fail("exponent outside the half-integer lattice");
    return QScalar(Gauss(1), static_cast<int>(e2 / den));
  }

  // Longest space symbol starting at the cursor.
  std::string match_symbol() {
    std::string best;
    for (const auto& sym : symbols_)
      if (sym.size() > best.size() && s_.substr(pos_, sym.size()) == sym) best = sym;
    return best;
  }

  Expr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return scalar(QScalar(Gauss(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))))));
    }
    if (std::string sym = match_symbol(); !sym.empty()) {
      pos_ += sym.size();
      Expr e;
      e.kind = Expr::Kind::symbol;
      e.name = sym;
      return e;
    }
    if (eat_word("conj(")) {
      Expr e;
      e.kind = Expr::Kind::conj;
      e.args.push_back(expr());
      expect(')');
      return e;
    }
    if (eat_word("star(")) {
      Expr e;
      e.kind = Expr::Kind::star;
      e.args.push_back(expr());
      expect(',');
      e.args.push_back(expr());
      expect(')');
      return e;
    }
    if (c == 'd') return derivative();
    if (c == 'q' && !ident_follows(1)) {
      ++pos_;
      return scalar(QScalar::q_pow(1));
    }
    if (c == 'i' && !ident_follows(1)) {
      ++pos_;
      return scalar(QScalar::i());
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '/')) ++end;
      throw Error(ErrorKind::unknown_symbol, "unknown symbol '" + std::string(s_.substr(pos_, end - pos_)) +
                                                 "' in space '" + space_.name + "' at offset " +
                                                 std::to_string(pos_));
    }
    fail("unexpected character");
  }

  bool ident_follows(std::size_t off) const {
    return pos_ + off < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_ + off]));
  }

  Expr derivative() {
    const std::size_t start = pos_;
    ++pos_;  // 'd'
    Expr e;
    e.kind = Expr::Kind::deriv;
    if (pos_ < s_.size() && s_[pos_] == 'h') {
      e.deriv.calculus = Calculus::hatted;
      ++pos_;
    }
    if (pos_ < s_.size() && (s_[pos_] == 'L' || s_[pos_] == 'R')) {
      e.deriv.side = s_[pos_] == 'L' ? Side::left : Side::right;
      ++pos_;
    } else {
      pos_ = start;
      fail("derivative needs a side L or R");
    }
    if (pos_ >= s_.size() || s_[pos_] != '[') fail("expected '[' after derivative kind");
    ++pos_;
    const std::size_t close = s_.find(']', pos_);
    if (close == std::string_view::npos) fail("expected ']'");
    e.name = std::string(s_.substr(pos_, close - pos_));
    if (space_.label_index(e.name) < 0)
      throw Error(ErrorKind::unknown_symbol, "unknown index label '" + e.name + "' in space '" + space_.name + "'");
    pos_ = close + 1;
    expect('(');
    e.args.push_back(expr());
    expect(')');
    return e;
  }

  std::string_view s_;
  const SpaceSpec& space_;
  std::vector<std::string> symbols_;
  std::size_t pos_ = 0;
};

std::string render_scalar(const QScalar& v, bool first) {
  std::string s = v.to_string();
  const bool plain = s.find_first_of(" /+*") == std::string::npos && (first || s[0] != '-');
  return plain ? s : "(" + s + ")";
}

std::string render_in(const Expr& e, bool first);

std::string render_factor(const Expr& e, bool first) {
  if (e.kind == Expr::Kind::sum || e.kind == Expr::Kind::product) return "(" + render(e) + ")";
  return render_in(e, first);
}

std::string render_in(const Expr& e, bool first) {
  switch (e.kind) {
    case Expr::Kind::scalar:
      return render_scalar(e.value, first);
    case Expr::Kind::symbol:
      return e.name;
    case Expr::Kind::sum: {
      std::string s;
      for (std::size_t k = 0; k < e.args.size(); ++k) {
        const Expr& t = e.args[k];
        std::string r = t.kind == Expr::Kind::sum ? "(" + render(t) + ")" : render_in(t, k == 0);
        if (k == 0)
          s = r;
        else
          s += (e.negated[k] ? " - " : " + ") + r;
      }
      return s;
    }
    case Expr::Kind::product: {
      std::string s;
      for (std::size_t k = 0; k < e.args.size(); ++k) {
        if (k) s += "*";
        s += render_factor(e.args[k], k == 0 && first);
      }
      return s;
    }
    case Expr::Kind::conj:
      return "conj(" + render(e.args[0]) + ")";
    case Expr::Kind::star:
      return "star(" + render(e.args[0]) + ", " + render(e.args[1]) + ")";
    case Expr::Kind::deriv:
      return std::string("d") + (e.deriv.calculus == Calculus::hatted ? "h" : "") +
             (e.deriv.side == Side::left ? "L" : "R") + "[" + e.name + "](" + render(e.args[0]) + ")";
  }
  return {};
}

int generator_of(const SpaceSpec& space, const std::string& sym) {
  for (int g = 0; g < space.dim(); ++g)
    if (space.generators[g] == sym) return g;
  throw Error(ErrorKind::unsupported, "symbol '" + sym + "' cannot be evaluated in the coordinate algebra");
}

CommPoly comm_add(CommPoly a, const CommPoly& b, bool negate) {
  for (const auto& [e, c] : b) {
    QScalar& slot = a[e];
    slot += negate ? -c : c;
    if (slot.is_zero()) a.erase(e);
  }
  return a;
}

CommPoly comm_mul(const CommPoly& a, const CommPoly& b) {
  CommPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      QScalar& slot = r[e];
      slot += ca * cb;
      if (slot.is_zero()) r.erase(e);
    }
  return r;
}

}  // namespace

Expr parse_expr(std::string_view src, const SpaceSpec& space) { return ExprParser(src, space).parse_all(); }

std::string render(const Expr& e) { return render_in(e, true); }

NCPoly evaluate(const Expr& e, const SpaceSpec& space) {
  switch (e.kind) {
    case Expr::Kind::scalar:
      return NCPoly(e.value);
    case Expr::Kind::symbol:
      return generator(space, generator_of(space, e.name));
    case Expr::Kind::sum: {
      NCPoly acc;
      for (std::size_t k = 0; k < e.args.size(); ++k) {
        NCPoly t = evaluate(e.args[k], space);
        if (e.negated[k])
          acc -= t;
        else
          acc += t;
      }
      return acc;
    }
    case Expr::Kind::product: {
      NCPoly acc(QScalar(1));
      for (const auto& f : e.args) acc = ncmul(space, acc, evaluate(f, space));
      return acc;
    }
    case Expr::Kind::conj:
      return nc_conjugate(space, evaluate(e.args[0], space));
    case Expr::Kind::star:
      return quantize(space, star_product(space, evaluate_commutative(e.args[0], space),
                                          evaluate_commutative(e.args[1], space)));
    case Expr::Kind::deriv:
      return derivative_action(space, e.deriv, space.label_index(e.name), evaluate(e.args[0], space));
  }
  return {};
}

CommPoly evaluate_commutative(const Expr& e, const SpaceSpec& space) {
  const std::vector<int> zero(static_cast<std::size_t>(space.dim()), 0);
  switch (e.kind) {
    case Expr::Kind::scalar:
      return e.value.is_zero() ? CommPoly{} : CommPoly{{zero, e.value}};
    case Expr::Kind::symbol: {
      std::vector<int> x = zero;
      ++x[static_cast<std::size_t>(generator_of(space, e.name))];
      return {{x, QScalar(1)}};
    }
    case Expr::Kind::sum: {
      CommPoly acc;
      for (std::size_t k = 0; k < e.args.size(); ++k)
        acc = comm_add(std::move(acc), evaluate_commutative(e.args[k], space), e.negated[k]);
      return acc;
    }
    case Expr::Kind::product: {
      CommPoly acc{{zero, QScalar(1)}};
      for (const auto& f : e.args) acc = comm_mul(acc, evaluate_commutative(f, space));
      return acc;
    }
    case Expr::Kind::star:
      return star_product(space, evaluate_commutative(e.args[0], space), evaluate_commutative(e.args[1], space));
    default:
      return dequantize(space, evaluate(e, space));
  }
}

std::string format_comm(const SpaceSpec& space, const CommPoly& f) {
  std::vector<std::string> lower;
  for (const auto& g : space.generators) {
    std::string s = g;
    if (!s.empty()) s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
    lower.push_back(s);
  }
  return format_poly(lower, quantize(space, f));
}

}  // namespace qspace
