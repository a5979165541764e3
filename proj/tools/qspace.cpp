#include <CLI11.hpp>

#include <complex>
#include <fstream>
#include <iostream>

#include "qspace/config.hpp"
#include "qspace/error.hpp"
#include "qspace/expr.hpp"
#include "qspace/grassmann.hpp"
#include "qspace/lattice.hpp"
#include "qspace/qexp.hpp"
#include "qspace/verify.hpp"

using namespace qspace;

namespace {

int cmd_normal_order(const std::string& space, const std::string& expr) {
  const SpaceSpec& s = space_preset(space);
  std::cout << format_poly(s, evaluate(parse_expr(expr, s), s)) << "\n";
  return 0;
}

int cmd_star(const std::string& space, const std::string& f, const std::string& g) {
  const SpaceSpec& s = space_preset(space);
  const CommPoly a = evaluate_commutative(parse_expr(f, s), s);
  const CommPoly b = evaluate_commutative(parse_expr(g, s), s);
  std::cout << format_comm(s, star_product(s, a, b)) << "\n";
  return 0;
}

int cmd_qexp(const std::string& space, int degree, const std::string& calculus, const std::string& side) {
  const SpaceSpec& s = space_preset(space);
  const Calculus c = calculus_from_string(calculus);
  if (side != "left" && side != "right") throw Error(ErrorKind::parse, "side must be left or right");
  const BiSeries u = side == "left" ? solve_qexp(s, c, degree) : solve_qexp_dual(s, c, degree);
  std::cout << dump_series(s, u);
  return 0;
}

int cmd_grassmann_form(const std::string& space, const std::string& variant, bool primed) {
  const GrassmannSpace& s = grassmann_space(space);
  const Variant v = variant_from_string(variant);
  std::cout << "# " << space << " " << to_string(v) << (primed ? " primed" : "") << "\n";
  for (const FormTerm& t : s.table(v, primed)) {
    const std::string f = "f_" + s.subset_name(t.f), g = "g_" + s.subset_name(t.g);
    std::cout << t.coeff.to_string() << " : " << (primed ? f + " conj(" + g + ")" : "conj(" + f + ") " + g) << "\n";
  }
  return 0;
}

int cmd_integrate(const std::string& spec_path, const std::string& input, int threads) {
  const LatticeSpec spec = lattice_spec_from_json(load_json_file(spec_path));
  std::ifstream in(input);
  if (!in) throw Error(ErrorKind::config, "cannot open '" + input + "'");
  const auto f = read_csv(in, spec);
  const std::complex<double> v = integrate(f, threads);
  Json out;
  out["space"] = spec.space;
  out["q"] = spec.q;
  out["re"] = v.real();
  out["im"] = v.imag();
  out["window"] = {{"v_min", spec.v_min}, {"v_max", spec.v_max}};
  out["negative_half_line"] = to_string(spec.negative);
  out["samples"] = f.samples().size();
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt, const std::string& json_out) {
  const Report r = run_suite(suite, opt);
  for (const Check& c : r.checks)
    std::cerr << to_string(c.status) << "  " << c.id << (c.witness ? "  [" + *c.witness + "]" : "") << "\n";
  const std::string text = r.to_json().dump(2) + "\n";
  if (json_out == "-") {
    std::cout << text;
  } else if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out) throw Error(ErrorKind::config, "cannot write '" + json_out + "'");
    out << text;
  }
  return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-deformed quantum space toolkit"};
  app.require_subcommand(1);

  std::string space, expr, f, g, calculus = "unhatted", side = "left", variant, spec_path, input, suite = "all",
                                   json_out;
  int degree = 4, threads = 1;
  bool primed = false;
  SuiteOptions opt;

  auto* no = app.add_subcommand("normal-order", "Normal-ordered form of an expression");
  no->add_option("--space", space)->required();
  no->add_option("expr", expr)->required();

  auto* st = app.add_subcommand("star", "Star product of two coefficient functions");
  st->add_option("--space", space)->required();
  st->add_option("f", f)->required();
  st->add_option("g", g)->required();

  auto* qe = app.add_subcommand("qexp", "Truncated q-exponential series");
  qe->add_option("--space", space)->required();
  qe->add_option("--degree", degree)->required()->check(CLI::NonNegativeNumber);
  qe->add_option("--calculus", calculus)->check(CLI::IsMember({"unhatted", "hatted"}));
  qe->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));

  auto* gr = app.add_subcommand("grassmann", "Grassmann sector");
  gr->require_subcommand(1);
  auto* form = gr->add_subcommand("form", "Coefficient table of a sesquilinear form");
  form->add_option("--space", space)->required();
  form->add_option("--variant", variant)->required()->check(CLI::IsMember({"L", "Lbar", "R", "Rbar"}));
  form->add_flag("--primed", primed);

  auto* in = app.add_subcommand("integrate", "Lattice integral of sampled data");
  in->add_option("--spec", spec_path)->required();
  in->add_option("--input", input)->required();
  in->add_option("--threads", threads)->check(CLI::PositiveNumber);

  auto* ve = app.add_subcommand("verify", "Run a verification suite");
  ve->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  ve->add_option("--q", opt.q);
  ve->add_option("--seed", opt.seed);
  ve->add_option("--window", opt.window)->check(CLI::PositiveNumber);
  ve->add_option("--json", json_out, "report path, or - for stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*no) return cmd_normal_order(space, expr);
    if (*st) return cmd_star(space, f, g);
    if (*qe) return cmd_qexp(space, degree, calculus, side);
    if (*form) return cmd_grassmann_form(space, variant, primed);
    if (*in) return cmd_integrate(spec_path, input, threads);
    if (*ve) return cmd_verify(suite, opt, json_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
