#include "qspace/grassmann.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "qspace/config.hpp"
#include "qspace/error.hpp"

namespace qspace {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::L: return "L";
    case Variant::Lbar: return "Lbar";
    case Variant::R: return "R";
    case Variant::Rbar: return "Rbar";
  }
  return "?";
}

Variant variant_from_string(std::string_view s) {
  if (s == "L") return Variant::L;
  if (s == "Lbar") return Variant::Lbar;
  if (s == "R") return Variant::R;
  if (s == "Rbar") return Variant::Rbar;
  throw Error(ErrorKind::parse, "unknown variant '" + std::string(s) + "' (expected L, Lbar, R, Rbar)");
}

// ---------------------------------------------------------------- Supernumber

QScalar Supernumber::at(Subset s) const {
  auto it = coeffs.find(s);
  return it == coeffs.end() ? QScalar() : it->second;
}

void Supernumber::set(Subset s, const QScalar& c) {
  if (c.is_zero())
    coeffs.erase(s);
  else
    coeffs[s] = c;
}

Supernumber Supernumber::scaled(const QScalar& c) const {
  Supernumber r;
  for (const auto& [s, x] : coeffs) r.set(s, x * c);
  return r;
}

Supernumber operator+(const Supernumber& a, const Supernumber& b) {
  Supernumber r = a;
  for (const auto& [s, x] : b.coeffs) r.set(s, r.at(s) + x);
  return r;
}

Subset DeltaMonomial::subset() const {
  Subset s = 0;
  for (int k : order) s |= Subset(1) << k;
  return s;
}

// ---------------------------------------------------------------- GrassmannSpace

namespace {

int idx(Variant v) { return static_cast<int>(v); }

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<int> parse_order(const GrassmannSpace& s, std::string_view text) {
  std::vector<int> out;
  if (text == "'") return out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    int pos = -1;
    for (int k = 0; k < s.n(); ++k)
      if (s.labels[k] == item) pos = k;
    if (pos < 0) throw Error(ErrorKind::config, "unknown Grassmann label '" + item + "' in " + s.name);
    out.push_back(pos);
  }
  return out;
}

}  // namespace

const std::vector<FormTerm>& GrassmannSpace::table(Variant v, bool primed) const {
  return tables_[idx(owner_[idx(v)])][primed ? 1 : 0];
}

Variant GrassmannSpace::table_owner(Variant v) const { return owner_[idx(v)]; }

QScalar GrassmannSpace::kappa_of(Variant v) const {
  return v == Variant::Lbar || v == Variant::R ? kappa : kappa.inverse();
}

Subset GrassmannSpace::parse_subset(std::string_view text) const {
  Subset s = 0;
  for (int k : parse_order(*this, text)) {
    if (s & (Subset(1) << k)) throw Error(ErrorKind::config, "repeated label in subset '" + std::string(text) + "'");
    s |= Subset(1) << k;
  }
  return s;
}

std::string GrassmannSpace::subset_name(Subset s) const {
  if (s == 0) return "'";
  std::string out;
  for (int k = 0; k < n(); ++k)
    if (s & (Subset(1) << k)) out += (out.empty() ? "" : ",") + labels[k];
  return out;
}

GrassmannSpace GrassmannSpace::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::config, "cannot open " + path.string());
  GrassmannSpace s;
  std::array<bool, 4> has_delta{};
  std::optional<std::pair<std::string, std::string>> pending;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    auto fail = [&](const std::string& msg) {
      throw Error(ErrorKind::config, path.string() + ":" + std::to_string(line_no) + ": " + msg);
    };
    auto rest = [&]() {
      std::string r;
      std::getline(ls, r);
      return trim(r);
    };
    try {
      if (key == "space") {
        ls >> s.name;
      } else if (key == "labels") {
        std::string l;
        while (ls >> l) s.labels.push_back(l);
      } else if (key == "kappa") {
        s.kappa = QScalar::parse(rest());
      } else if (key == "vol") {
        s.vol = QScalar::parse(rest());
      } else if (key == "leibniz_k") {
        s.leibniz_k = QScalar::parse(rest());
      } else if (key == "delta") {
        std::string v, c, word;
        ls >> v >> c >> word;
        DeltaMonomial d{QScalar::parse(c), parse_order(s, word)};
        if (static_cast<int>(d.order.size()) != s.n() || d.subset() != s.full()) fail("delta must use every label once");
        s.deltas[idx(variant_from_string(v))] = d;
        has_delta[idx(variant_from_string(v))] = true;
      } else if (key == "alias") {
        std::string v, target;
        ls >> v >> target;
        s.owner_[idx(variant_from_string(v))] = variant_from_string(target);
      } else if (key == "correct" || key == "term") {
        std::string v, form, f, g;
        ls >> v >> form >> f >> g;
        if (form != "plain" && form != "primed") fail("form must be plain or primed");
        const Variant var = variant_from_string(v);
        const bool primed = form == "primed";
        if (key == "correct") {
          pending = std::make_pair(f, g);
          continue;
        }
        FormTerm t{s.parse_subset(f), s.parse_subset(g), QScalar::parse(rest())};
        if (pending) {
          s.corrections.push_back({var, primed, pending->first, pending->second, t.f, t.g});
          pending.reset();
        }
        s.tables_[idx(var)][primed ? 1 : 0].push_back(t);
      } else {
        fail("unknown record '" + key + "'");
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::config) throw;
      fail(e.what());
    }
  }
  if (s.labels.empty()) throw Error(ErrorKind::config, path.string() + ": no labels");
  for (int v = 0; v < 4; ++v)
    if (!has_delta[v]) throw Error(ErrorKind::config, path.string() + ": missing delta for " + to_string(Variant(v)));
  return s;
}

const GrassmannSpace& grassmann_space(std::string_view name) {
  static std::map<std::string, GrassmannSpace, std::less<>> cache;
  static std::mutex mu;
  space_preset(name);  // validates the name
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(std::string(name), GrassmannSpace::load(config_dir() / "grassmann" / (std::string(name) + ".txt")))
             .first;
  return it->second;
}

QScalar sesquilinear(const GrassmannSpace& s, Variant v, bool primed, const Supernumber& f, const Supernumber& g) {
  QScalar acc;
  for (const FormTerm& t : s.table(v, primed)) {
    const QScalar fi = f.at(t.f), gj = g.at(t.g);
    if (fi.is_zero() || gj.is_zero()) continue;
    acc += primed ? t.coeff * fi * gj.conj() : t.coeff * fi.conj() * gj;
  }
  return acc;
}

QScalar combined_form(const GrassmannSpace& s, int which, bool primed, const Supernumber& f, const Supernumber& g) {
  if (which != 1 && which != 2) throw Error(ErrorKind::domain, "combined form index must be 1 or 2");
  const Variant a = which == 1 ? Variant::L : Variant::Lbar;
  const Variant b = which == 1 ? Variant::Rbar : Variant::R;
  const QScalar prefactor = QScalar::i().pow(s.n()).scaled(Gauss(mpq_class(1, 2)));
  return prefactor * (sesquilinear(s, a, primed, f, g) + sesquilinear(s, b, primed, f, g));
}

Supernumber grassmann_delta(const GrassmannSpace& s, Variant v) {
  const DeltaMonomial& d = s.deltas[idx(v)];
  Supernumber r;
  r.set(d.subset(), d.coeff);
  return r;
}

QScalar grassmann_vol(const GrassmannSpace& s) { return s.vol; }

QMatrix gram_matrix(const GrassmannSpace& s, Variant v, bool primed) {
  const Eigen::Index dim = Eigen::Index(1) << s.n();
  QMatrix m = QMatrix::Constant(dim, dim, QScalar());
  for (const FormTerm& t : s.table(v, primed)) m(t.f, t.g) += t.coeff;
  return m;
}

QRational gram_determinant(const GrassmannSpace& s, Variant v, bool primed) {
  return determinant(gram_matrix(s, v, primed).cast<QRational>());
}

}  // namespace qspace
