// One line per acceptance criterion: status, check counts and wall time.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "qspace/verify.hpp"

using namespace qspace;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> groups;
  std::vector<std::string> required;  // ids that must be present
  double time_limit;                  // seconds; 0 for none
  bool findings_allowed;
};

}  // namespace

int main() {
  const SuiteOptions opt{1.3, 20240601, 2};
  const std::vector<Criterion> criteria = {
      {1, "algebra: relations both orientations, 1000 associativity triples", {"algebra"},
       {"algebra.quantum_plane.relation.01", "algebra.euclid3.relation.05", "algebra.euclid4.relation.11",
        "algebra.minkowski.relation.11", "algebra.quantum_plane.associativity", "algebra.euclid3.associativity",
        "algebra.euclid4.associativity", "algebra.minkowski.associativity"},
       60, false},
      {2, "conjugation: involution, relation compatibility, real coordinates", {"conjugation"},
       {"conjugation.quantum_plane.involution", "conjugation.euclid3.involution", "conjugation.euclid4.involution",
        "conjugation.minkowski.involution", "conjugation.minkowski.relation.11", "conjugation.euclid3.real.Y3",
        "conjugation.euclid4.real.Y4", "conjugation.minkowski.real.Y3"},
       0, false},
      {3, "grassmann: spot values, pairing, Gram determinants, deltas, vol, kappa", {"grassmann"},
       {"grassmann.quantum_plane.spot", "grassmann.euclid3.spot", "grassmann.minkowski.spot",
        "grassmann.minkowski.pairing", "grassmann.euclid3.gram.Rbar.primed", "grassmann.quantum_plane.gram.L",
        "grassmann.euclid4.delta", "grassmann.minkowski.vol", "grassmann.euclid3.kappa"},
       10, false},
      {4, "lattice: scaling, delta, projectors, spectral map, factorization, Riemann limit", {"lattice.integration"},
       {"lattice.jackson.scaling.a1", "lattice.jackson.scaling.am2", "lattice.jackson.riemann_limit",
        "lattice.minkowski.delta.reproducing", "lattice.euclid4.projector", "lattice.euclid3.spectral",
        "lattice.quantum_plane.separable", "lattice.euclid4.separable"},
       30, false},
      {5, "quasipoint weights equal the stated volume elements", {"lattice.weights"},
       {"lattice.quantum_plane.weights", "lattice.euclid3.weights", "lattice.euclid4.weights",
        "lattice.minkowski.weights"},
       0, false},
      {6, "phase space: commutation lines, R-matrix, q = 1 commutator", {"phasespace"},
       {"phasespace.quantum_plane.unhatted.leibniz.xp", "phasespace.quantum_plane.hatted.leibniz.px",
        "phasespace.euclid3.unhatted.leibniz.px", "phasespace.euclid3.hatted.leibniz.xp",
        "phasespace.euclid3.rmatrix.braid", "phasespace.quantum_plane.rmatrix.inverse",
        "phasespace.euclid3.rmatrix.flip_limit", "phasespace.quantum_plane.hatted.classical_commutator"},
       30, false},
      {7, "q-exponential: residual and classical limit", {"qexp"},
       {"qexp.quantum_plane.unhatted.N8.residual", "qexp.quantum_plane.unhatted.N8.classical_limit"}, 60, false},
      {8, "expectation values: normalization, symmetric window, realness", {"lattice.expectation"},
       {"lattice.quantum_plane.density.normalized", "lattice.euclid3.density.normalized",
        "lattice.euclid3.expectation.symmetric", "lattice.euclid3.expectation.real"},
       0, true},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Check> checks;
    std::string error;
    try {
      for (const std::string& g : c.groups) {
        auto part = run_group(g, opt);
        checks.insert(checks.end(), part.begin(), part.end());
      }
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    int fails = 0, findings = 0;
    std::set<std::string> ids;
    std::vector<std::string> notes;
    for (const Check& ch : checks) {
      ids.insert(ch.id);
      if (ch.status == CheckStatus::fail) {
        ++fails;
        notes.push_back("fail " + ch.id + (ch.witness ? " [" + *ch.witness + "]" : ""));
      } else if (ch.status == CheckStatus::finding) {
        ++findings;
        notes.push_back("finding " + ch.id + (ch.witness ? " [" + *ch.witness + "]" : ""));
      }
    }
    for (const std::string& id : c.required)
      if (!ids.count(id)) notes.push_back("missing " + id);
    const bool missing = std::any_of(c.required.begin(), c.required.end(), [&](const auto& id) { return !ids.count(id); });
    const bool slow = c.time_limit > 0 && secs > c.time_limit;
    if (slow) notes.push_back("over time limit");
    if (!error.empty()) notes.push_back("error: " + error);
    const bool ok = error.empty() && fails == 0 && !missing && !slow && (findings == 0 || c.findings_allowed);
    if (!ok) ++failed;

    std::printf("[%s] criterion %d: %s | %zu checks, %d findings | %.2f s%s\n", ok ? "PASS" : "FAIL", c.number,
                c.title.c_str(), checks.size(), findings, secs,
                c.time_limit > 0 ? (" (limit " + std::to_string(static_cast<int>(c.time_limit)) + " s)").c_str() : "");
    for (const std::string& n : notes) std::printf("    %s\n", n.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
