#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pyrofuse/graph.hpp"
#include "pyrofuse/stabilizer.hpp"

namespace pyrofuse {

/// One Bell-measurement fusion between two labelled qubits.
struct FusionStep {
  int plain = 0;
  int hadamard_side = 0;
  FusionOutcome outcome = FusionSuccess{};
};

/// A fusion experiment with forced outcomes.  Resource graphs are placed
/// side by side and their vertices labelled consecutively from 0; steps and
/// expectations refer to those labels.  The expectation is a graph on the
/// surviving labels, compared up to local Cliffords component by component.
struct Scenario {
  std::string name;
  std::string description;
  std::vector<GraphState> resources;
  std::vector<FusionStep> steps;
  std::vector<int> expected_survivors;  // ascending
  std::vector<std::pair<int, int>> expected_edges;

  std::size_t total_qubits() const;
};

struct Verdict {
  std::string name;
  std::string kind;  // "scenario" or "certification"
  bool pass = false;
  std::string diagnostic;
  std::size_t qubits = 0;
  std::vector<int> survivors;
  std::vector<std::pair<int, int>> final_edges;  // graph-form edges, by label
};

/// Executes the fusion sequence, reduces the result to graph form and
/// compares against the expectation.  Never throws for a failing
/// expectation; malformed scenarios yield a failing verdict with the reason.
Verdict run_scenario(const Scenario& s);

/// Graph-form result of the fusion sequence, with qubit labels.
struct ScenarioOutcome {
  StabilizerState state;
  GraphForm form;
};
ScenarioOutcome execute(const Scenario& s);

/// The basic fusion steps: triangle fusion in every branch,
/// chain failure, the bowtie and the five-tetrahedron assembly.
std::vector<Scenario> fusion_scenarios();

/// The checks that tie the lattice failure model to the stabilizer algebra:
///   (i)   four chain fusions around a tetrahedron put the chain centres in K4
///         (also checked for every fusion order);
///   (ii)  one failed chain fusion deletes that centre (all four positions);
///   (iii) a failed triangle fusion leaves the centres as two disjoint edges,
///         paired by source triangle;
///   (iv)  the five-tetrahedron assembly with two failed chain fusions.
std::vector<Verdict> certify_lattice_rules();

struct FusionReport {
  std::vector<Verdict> entries;
  std::size_t passed() const;
  bool all_pass() const { return passed() == entries.size(); }
};

FusionReport verify_fusion();

std::string format_table(const FusionReport& report);
std::string to_json(const FusionReport& report);

/// Graph obtained by deleting `a` and `b` and toggling every edge of
/// N(a) x N(b): the success rule for a fusion of two graph states.
GraphState fusion_success_rule(const GraphState& g, std::size_t a, std::size_t b);

}  // namespace pyrofuse
