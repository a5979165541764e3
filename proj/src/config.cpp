#include "qspace/config.hpp"

#include <cstdlib>
#include <fstream>

#include "qspace/error.hpp"

namespace qspace {

namespace {

int symbol_index(const std::vector<std::string>& symbols, const std::string& sym) {
  for (std::size_t k = 0; k < symbols.size(); ++k)
    if (symbols[k] == sym) return static_cast<int>(k);
  throw Error(ErrorKind::config, "unknown symbol '" + sym + "' in config");
}

Json word_to_json(const std::vector<std::string>& symbols, const Word& w) {
  Json a = Json::array();
  for (char c : w) a.push_back(symbols.at(static_cast<std::size_t>(c)));
  return a;
}

Word word_from_json(const std::vector<std::string>& symbols, const Json& j) {
  Word w;
  for (const auto& s : j) w.push_back(static_cast<char>(symbol_index(symbols, s.get<std::string>())));
  return w;
}

Json poly_to_json(const std::vector<std::string>& symbols, const NCPoly& p) {
  Json a = Json::array();
  for (const auto& [w, c] : p.terms()) a.push_back({{"word", word_to_json(symbols, w)}, {"coeff", c.to_string()}});
  return a;
}

NCPoly poly_from_json(const std::vector<std::string>& symbols, const Json& j) {
  NCPoly p;
  for (const auto& t : j) p.add(word_from_json(symbols, t.at("word")), QScalar::parse(t.at("coeff").get<std::string>()));
  return p;
}

Json metric_to_json(const std::vector<std::string>& symbols, const std::map<std::pair<int, int>, QScalar>& m) {
  Json a = Json::array();
  for (const auto& [ij, v] : m)
    a.push_back({{"row", symbols.at(ij.first)}, {"col", symbols.at(ij.second)}, {"value", v.to_string()}});
  return a;
}

std::map<std::pair<int, int>, QScalar> metric_from_json(const std::vector<std::string>& symbols, const Json& j) {
  std::map<std::pair<int, int>, QScalar> m;
  for (const auto& e : j) {
    QScalar v = QScalar::parse(e.at("value").get<std::string>());
    if (!v.is_zero())
      m[{symbol_index(symbols, e.at("row")), symbol_index(symbols, e.at("col"))}] = v;
  }
  return m;
}

std::vector<std::string> strings(const Json& j) { return j.get<std::vector<std::string>>(); }

Json scalars_to_json(const std::vector<QScalar>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s.to_string());
  return a;
}

std::vector<QScalar> scalars_from_json(const Json& j) {
  std::vector<QScalar> v;
  for (const auto& s : j) v.push_back(QScalar::parse(s.get<std::string>()));
  return v;
}

Json rtable_to_json(const std::vector<std::string>& labels, const QMatrix& m) {
  const int d = static_cast<int>(labels.size());
  Json a = Json::array();
  for (int row = 0; row < d * d; ++row)
    for (int col = 0; col < d * d; ++col) {
      if (m(row, col).is_zero()) continue;
      a.push_back({{"row", {labels[row / d], labels[row % d]}},
                   {"col", {labels[col / d], labels[col % d]}},
                   {"value", m(row, col).to_string()}});
    }
  return a;
}

QMatrix rtable_from_json(const std::vector<std::string>& labels, const Json& j) {
  const int d = static_cast<int>(labels.size());
  QMatrix m = QMatrix::Constant(d * d, d * d, QScalar());
  auto pos = [&](const Json& pair) {
    if (!pair.is_array() || pair.size() != 2) throw Error(ErrorKind::config, "R-matrix index must be a label pair");
    return symbol_index(labels, pair[0]) * d + symbol_index(labels, pair[1]);
  };
  for (const auto& e : j) m(pos(e.at("row")), pos(e.at("col"))) += QScalar::parse(e.at("value").get<std::string>());
  return m;
}

}  // namespace

std::filesystem::path config_dir() {
  if (const char* env = std::getenv("QSPACE_CONFIG_DIR"); env && *env) return env;
  return QSPACE_DATA_DIR;
}

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::config, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::config, path.string() + ": " + e.what());
  }
}

Json space_to_json(const SpaceSpec& s) {
  const auto& g = s.generators;
  Json rel = Json::array();
  for (const auto& [pair, rhs] : s.relations)
    rel.push_back({{"lhs", {g.at(pair.first), g.at(pair.second)}}, {"rhs", poly_to_json(g, rhs)}});
  Json conj = Json::array();
  for (std::size_t k = 0; k < s.conjugation.size(); ++k)
    conj.push_back({{"generator", g[k]}, {"image", poly_to_json(g, s.conjugation[k])}});
  Json j = {{"name", s.name},
            {"generators", g},
            {"labels", s.labels},
            {"relations", rel},
            {"metric", metric_to_json(g, s.metric)},
            {"metric_inverse", metric_to_json(g, s.metric_inverse)},
            {"conjugation", conj},
            {"kappa", s.kappa.to_string()},
            {"lattice", {{"labels", s.lattice_labels}, {"steps", s.lattice_steps},
                         {"prefactor", s.lattice_prefactor.to_string()}}}};
  if (s.has_real_basis) {
    Json scaled = Json::array(), back = Json::array();
    for (const auto& p : s.real.scaled_in_x) scaled.push_back(poly_to_json(g, p));
    for (const auto& p : s.real.x_in_scaled) back.push_back(poly_to_json(s.real.names, p));
    j["real_basis"] = {{"names", s.real.names}, {"scaled_in_x", scaled}, {"x_in_scaled", back},
                       {"scale", scalars_to_json(s.real.scale)}};
  }
  return j;
}

SpaceSpec space_from_json(const Json& j) {
  try {
    SpaceSpec s;
    s.name = j.at("name").get<std::string>();
    s.generators = strings(j.at("generators"));
    s.labels = strings(j.at("labels"));
    if (s.labels.size() != s.generators.size()) throw Error(ErrorKind::config, "labels and generators differ in size");
    const auto& g = s.generators;
    for (const auto& r : j.at("relations")) {
      const auto lhs = strings(r.at("lhs"));
      if (lhs.size() != 2) throw Error(ErrorKind::config, "relation left-hand side must have two letters");
      s.relations[{symbol_index(g, lhs[0]), symbol_index(g, lhs[1])}] = poly_from_json(g, r.at("rhs"));
    }
    s.metric = metric_from_json(g, j.at("metric"));
    s.metric_inverse = metric_from_json(g, j.at("metric_inverse"));
    s.conjugation.assign(g.size(), NCPoly());
    for (const auto& c : j.at("conjugation"))
      s.conjugation.at(symbol_index(g, c.at("generator"))) = poly_from_json(g, c.at("image"));
    s.kappa = QScalar::parse(j.at("kappa").get<std::string>());
    const Json& lat = j.at("lattice");
    s.lattice_labels = strings(lat.at("labels"));
    s.lattice_steps = lat.at("steps").get<std::vector<int>>();
    s.lattice_prefactor = QScalar::parse(lat.at("prefactor").get<std::string>());
    if (j.contains("real_basis")) {
      const Json& rb = j.at("real_basis");
      s.has_real_basis = true;
      s.real.names = strings(rb.at("names"));
      for (const auto& p : rb.at("scaled_in_x")) s.real.scaled_in_x.push_back(poly_from_json(g, p));
      for (const auto& p : rb.at("x_in_scaled")) s.real.x_in_scaled.push_back(poly_from_json(s.real.names, p));
      s.real.scale = scalars_from_json(rb.at("scale"));
    }
    s.finalize();
    return s;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::config, std::string("space config: ") + e.what());
  }
}

Json rmatrix_to_json(const RMatrix& r) {
  return {{"space", r.space},
          {"labels", r.labels},
          {"k", r.k.to_string()},
          {"hatted_metric_sign", r.hatted_metric_sign},
          {"eigenvalues", scalars_to_json(r.eigenvalues)},
          {"R", rtable_to_json(r.labels, r.r)},
          {"Rinv", rtable_to_json(r.labels, r.r_inv)}};
}

RMatrix rmatrix_from_json(const Json& j) {
  try {
    RMatrix r;
    r.space = j.at("space").get<std::string>();
    r.labels = strings(j.at("labels"));
    r.k = QScalar::parse(j.at("k").get<std::string>());
    r.hatted_metric_sign = j.value("hatted_metric_sign", 1);
    if (r.hatted_metric_sign != 1 && r.hatted_metric_sign != -1)
      throw Error(ErrorKind::config, "hatted_metric_sign must be 1 or -1");
    if (j.contains("eigenvalues")) r.eigenvalues = scalars_from_json(j.at("eigenvalues"));
    r.r = rtable_from_json(r.labels, j.at("R"));
    r.r_inv = rtable_from_json(r.labels, j.at("Rinv"));
    return r;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::config, std::string("R-matrix config: ") + e.what());
  }
}

}  // namespace qspace
