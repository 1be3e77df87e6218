#include "pyrofuse/fusion_rules.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>
#include <set>

#include "json.hpp"

namespace pyrofuse {
namespace {

using Edges = std::vector<std::pair<int, int>>;

FusionOutcome success(BellBranch b = BellBranch::phi_plus) { return FusionSuccess{b}; }
FusionOutcome failure(Sign za = Sign::plus, Sign xb = Sign::plus) { return FusionFailure{za, xb}; }

void add_clique(Edges& e, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) e.emplace_back(vs[i], vs[j]);
}

std::vector<int> survivors_of(const Scenario& s) {
  std::set<int> gone;
  for (const auto& st : s.steps) {
    gone.insert(st.plain);
    gone.insert(st.hadamard_side);
  }
  std::vector<int> out;
  for (int q = 0; q < static_cast<int>(s.total_qubits()); ++q)
    if (!gone.count(q)) out.push_back(q);
  return out;
}

// Triangles {0,1,2} and {3,4,5}; 2 is fused (plain) with 5 (Hadamard side).
Scenario triangle_fusion(const std::string& name, FusionOutcome outcome) {
  Scenario s;
  s.name = name;
  s.resources = {GraphState::complete(3), GraphState::complete(3)};
  s.steps = {{2, 5, outcome}};
  s.expected_survivors = {0, 1, 3, 4};
  if (std::holds_alternative<FusionSuccess>(outcome)) {
    s.description = "two triangles fused into a tetrahedron";
    add_clique(s.expected_edges, {0, 1, 3, 4});
  } else {
    s.description = "failed triangle fusion leaves two entangled pairs";
    s.expected_edges = {{0, 1}, {3, 4}};
  }
  return s;
}

// Tetrahedron built from two triangles, corners {0,1,3,4}; chain k is
// (end 6+3k, centre 7+3k, leaf 8+3k) and its end is fused to corner k.
struct ChainedTetrahedron {
  static constexpr std::array<int, 4> corners{0, 1, 3, 4};
  static int end(int k) { return 6 + 3 * k; }
  static int centre(int k) { return 7 + 3 * k; }
  static int leaf(int k) { return 8 + 3 * k; }

  static Scenario make(const std::string& name, FusionOutcome triangle_outcome,
                       const std::array<int, 4>& order, const std::array<FusionOutcome, 4>& chain) {
    Scenario s;
    s.name = name;
    s.resources = {GraphState::complete(3), GraphState::complete(3)};
    for (int k = 0; k < 4; ++k) s.resources.push_back(GraphState::path(3));
    s.steps.push_back({2, 5, triangle_outcome});
    for (int k : order) s.steps.push_back({corners[k], end(k), chain[k]});
    s.expected_survivors = survivors_of(s);
    return s;
  }
};

// Central tetrahedron 0..3, chain k = (4+3k, 5+3k, 6+3k), outer tetrahedron
// k = 16+4k .. 19+4k whose corner 16+4k is fused to the chain's far end.
struct FiveTetrahedra {
  static int chain_end(int k) { return 4 + 3 * k; }
  static int centre(int k) { return 5 + 3 * k; }
  static int far_end(int k) { return 6 + 3 * k; }
  static int outer(int k, int c) { return 16 + 4 * k + c; }

  static Scenario make(const std::string& name, const std::array<FusionOutcome, 4>& inner) {
    Scenario s;
    s.name = name;
    s.resources.push_back(GraphState::complete(4));
    for (int k = 0; k < 4; ++k) s.resources.push_back(GraphState::path(3));
    for (int k = 0; k < 4; ++k) s.resources.push_back(GraphState::complete(4));
    for (int k = 0; k < 4; ++k) s.steps.push_back({k, chain_end(k), inner[k]});
    for (int k = 0; k < 4; ++k) s.steps.push_back({outer(k, 0), far_end(k), success()});
    s.expected_survivors = survivors_of(s);
    std::vector<int> live;
    for (int k = 0; k < 4; ++k) {
      const bool ok = std::holds_alternative<FusionSuccess>(inner[k]);
      if (ok) {
        live.push_back(centre(k));
        add_clique(s.expected_edges, {centre(k), outer(k, 1), outer(k, 2), outer(k, 3)});
      } else {
        add_clique(s.expected_edges, {outer(k, 1), outer(k, 2), outer(k, 3)});
      }
    }
    add_clique(s.expected_edges, live);
    return s;
  }
};

std::string edges_str(const Edges& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i].first) + "-" + std::to_string(e[i].second);
  }
  return s + "}";
}

}  // namespace

std::size_t Scenario::total_qubits() const {
  std::size_t n = 0;
  for (const auto& g : resources) n += g.size();
  return n;
}

GraphState fusion_success_rule(const GraphState& g, std::size_t a, std::size_t b) {
  GraphState h = g;
  for (std::size_t u : g.neighbors(a))
    for (std::size_t v : g.neighbors(b))
      if (u != v && u != b && v != a) h.toggle_edge(u, v);
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (v != a && v != b) keep.push_back(v);
  return h.induced(keep);
}

ScenarioOutcome execute(const Scenario& s) {
  if (s.resources.empty()) throw std::invalid_argument("scenario has no resources");
  GraphState all = s.resources.front();
  for (std::size_t i = 1; i < s.resources.size(); ++i)
    all = GraphState::disjoint_union(all, s.resources[i]);
  StabilizerState state = StabilizerState::from_graph(all);
  state.set_validation(true);
  for (const auto& st : s.steps) {
    const std::size_t a = state.index_of(st.plain);
    const std::size_t b = state.index_of(st.hadamard_side);
    fuse(state, a, b, st.outcome);
    const std::array<std::size_t, 2> pair{a, b};
    state.remove_qubits(pair);
    // The outcome is heralded, so the local Cliffords it leaves behind are
    // undone before the next fusion and every step acts on a graph state.
    LocalCliffordLayer undo = to_graph_form(state).layer;
    for (auto& op : undo.ops) op = op.inverse();
    state.apply_layer(undo);
  }
  GraphForm form = to_graph_form(state);
  return {std::move(state), std::move(form)};
}

Verdict run_scenario(const Scenario& s) {
  Verdict v;
  v.name = s.name;
  v.kind = "scenario";
  v.qubits = s.total_qubits();
  try {
    auto out = execute(s);
    v.survivors = out.state.labels();
    for (auto [a, b] : out.form.graph.edges()) v.final_edges.emplace_back(v.survivors[a], v.survivors[b]);
    if (v.survivors != s.expected_survivors) {
      v.diagnostic = "unexpected surviving qubits";
      return v;
    }
    GraphState expected(v.survivors.size());
    for (auto [a, b] : s.expected_edges) expected.set_edge(out.state.index_of(a), out.state.index_of(b), true);
    if (out.form.graph.components() != expected.components()) {
      v.diagnostic = "entanglement pattern differs: got " + edges_str(v.final_edges) +
                     ", expected " + edges_str(s.expected_edges);
      return v;
    }
    if (!lc_equivalent_by_components(out.form.graph, expected)) {
      v.diagnostic = "not LC-equivalent: got " + edges_str(v.final_edges) + ", expected " +
                     edges_str(s.expected_edges);
      return v;
    }
    v.pass = true;
    v.diagnostic = "ok";
  } catch (const std::exception& e) {
    v.diagnostic = std::string("error: ") + e.what();
  }
  return v;
}

std::vector<Scenario> fusion_scenarios() {
  std::vector<Scenario> out;
  for (BellBranch b : {BellBranch::phi_plus, BellBranch::phi_minus, BellBranch::psi_plus,
                       BellBranch::psi_minus})
    out.push_back(triangle_fusion("triangle_success_" + to_string(b), success(b)));
  out.push_back(triangle_fusion("triangle_failure_++", failure(Sign::plus, Sign::plus)));
  out.push_back(triangle_fusion("triangle_failure_--", failure(Sign::minus, Sign::minus)));

  {
    // Chain 0-1-2 with end 0 on the Hadamard side; triangle 3,4,5.
    Scenario s;
    s.name = "chain_failure_disentangles";
    s.description = "failed fusion on a chain end leaves the chain in a product state";
    s.resources = {GraphState::path(3), GraphState::complete(3)};
    s.steps = {{3, 0, failure()}};
    s.expected_survivors = {1, 2, 4, 5};
    s.expected_edges = {{4, 5}};
    out.push_back(s);
  }
  {
    // Tetrahedra 0..3 and 7..10 joined through chain 4-5-6.
    Scenario s;
    s.name = "bowtie";
    s.description = "chain-mediated fusion of two tetrahedra sharing the chain centre";
    s.resources = {GraphState::complete(4), GraphState::path(3), GraphState::complete(4)};
    s.steps = {{3, 4, success()}, {7, 6, success()}};
    s.expected_survivors = {0, 1, 2, 5, 8, 9, 10};
    add_clique(s.expected_edges, {0, 1, 2, 5});
    add_clique(s.expected_edges, {5, 8, 9, 10});
    out.push_back(s);

    s.name = "bowtie_second_fusion_fails";
    s.description = "one failed chain fusion isolates the chain centre";
    s.steps = {{3, 4, success()}, {7, 6, failure()}};
    s.expected_edges.clear();
    add_clique(s.expected_edges, {0, 1, 2});
    add_clique(s.expected_edges, {8, 9, 10});
    out.push_back(s);
  }
  {
    // Star 1-{0,2,3} fused at its centre with vertex 6 of triangle 4,5,6
    // carrying a pendant 7: the neighbourhoods become completely connected.
    Scenario s;
    s.name = "neighbourhood_bipartite_rule";
    s.description = "success joins every neighbour of one measured qubit to every neighbour of the other";
    s.resources = {GraphState(4, {{0, 1}, {1, 2}, {1, 3}}),
                   GraphState(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}})};
    s.steps = {{1, 6, success()}};
    s.expected_survivors = {0, 2, 3, 4, 5, 7};
    s.expected_edges = {{4, 5}};
    for (int u : {0, 2, 3})
      for (int w : {4, 5, 7}) s.expected_edges.emplace_back(u, w);
    out.push_back(s);
  }
  {
    std::array<FusionOutcome, 4> all_ok{success(), success(), success(), success()};
    Scenario s = FiveTetrahedra::make("five_tetrahedra_success", all_ok);
    s.description = "chains fuse a central tetrahedron to four neighbours";
    out.push_back(s);
  }
  return out;
}

std::vector<Verdict> certify_lattice_rules() {
  std::vector<Verdict> out;
  auto certify = [&](Verdict v) {
    v.kind = "certification";
    out.push_back(std::move(v));
  };
  using CT = ChainedTetrahedron;
  const std::array<FusionOutcome, 4> all_ok{success(), success(), success(), success()};

  // (i) centres form K4, for every order of the chain fusions.
  {
    Scenario base = CT::make("chain_fusions_form_k4", success(), {0, 1, 2, 3}, all_ok);
    std::vector<int> centres;
    for (int k = 0; k < 4; ++k) {
      centres.push_back(CT::centre(k));
      base.expected_edges.emplace_back(CT::centre(k), CT::leaf(k));
    }
    add_clique(base.expected_edges, centres);
    Verdict v = run_scenario(base);
    if (v.pass) {
      std::array<int, 4> order{0, 1, 2, 3};
      int checked = 0;
      while (std::next_permutation(order.begin(), order.end())) {
        Scenario s = CT::make(base.name, success(), order, all_ok);
        s.expected_edges = base.expected_edges;
        Verdict w = run_scenario(s);
        if (!w.pass) {
          v.pass = false;
          v.diagnostic = "fusion order " + std::to_string(order[0]) + std::to_string(order[1]) +
                         std::to_string(order[2]) + std::to_string(order[3]) + ": " + w.diagnostic;
          break;
        }
        ++checked;
      }
      if (v.pass) v.diagnostic = "ok (" + std::to_string(checked + 1) + " fusion orders)";
    }
    certify(v);
  }

  // (ii) a failed chain fusion removes exactly that centre.
  for (int dead = 0; dead < 4; ++dead) {
    auto chain = all_ok;
    chain[dead] = failure();
    Scenario s = CT::make("chain_failure_deletes_centre_" + std::to_string(dead), success(),
                          {0, 1, 2, 3}, chain);
    std::vector<int> centres;
    for (int k = 0; k < 4; ++k) {
      if (k == dead) continue;
      centres.push_back(CT::centre(k));
      s.expected_edges.emplace_back(CT::centre(k), CT::leaf(k));
    }
    add_clique(s.expected_edges, centres);
    certify(run_scenario(s));
  }

  // (iii) failed triangle fusion: corners {0,1} came from one triangle and
  // {3,4} from the other, so centres pair up as (c0,c1) and (c2,c3).
  {
    Scenario s = CT::make("failed_triangle_gives_matching", failure(), {0, 1, 2, 3}, all_ok);
    for (int k = 0; k < 4; ++k) s.expected_edges.emplace_back(CT::centre(k), CT::leaf(k));
    s.expected_edges.emplace_back(CT::centre(0), CT::centre(1));
    s.expected_edges.emplace_back(CT::centre(2), CT::centre(3));
    certify(run_scenario(s));
  }

  // (iv) five tetrahedra with the chain fusions at the top (chain 0) and the
  // top-left (chain 1) failing on the central tetrahedron.
  {
    Scenario s = FiveTetrahedra::make("five_tetrahedra_two_failures",
                                      {failure(), failure(), success(), success()});
    certify(run_scenario(s));
  }
  return out;
}

std::size_t FusionReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const Verdict& v) { return v.pass; }));
}

FusionReport verify_fusion() {
  FusionReport r;
  for (const auto& s : fusion_scenarios()) r.entries.push_back(run_scenario(s));
  for (auto& v : certify_lattice_rules()) r.entries.push_back(std::move(v));
  return r;
}

std::string format_table(const FusionReport& report) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-34s %-14s %6s %9s  %s\n", "check", "kind", "qubits",
                "survivors", "verdict");
  out += line;
  for (const auto& v : report.entries) {
    std::snprintf(line, sizeof line, "%-34s %-14s %6zu %9zu  %s\n", v.name.c_str(),
                  v.kind.c_str(), v.qubits, v.survivors.size(),
                  v.pass ? "PASS" : ("FAIL: " + v.diagnostic).c_str());
    out += line;
  }
  std::snprintf(line, sizeof line, "%zu/%zu passed\n", report.passed(), report.entries.size());
  out += line;
  return out;
}

std::string to_json(const FusionReport& report) {
  nlohmann::ordered_json j;
  j["schema"] = "pyrofuse.fusion-report/1";
  j["passed"] = report.passed();
  j["total"] = report.entries.size();
  j["all_pass"] = report.all_pass();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& v : report.entries) {
    nlohmann::ordered_json e;
    e["name"] = v.name;
    e["kind"] = v.kind;
    e["pass"] = v.pass;
    e["qubits"] = v.qubits;
    e["surviving_qubits"] = v.survivors.size();
    e["survivors"] = v.survivors;
    auto& edges = e["final_edges"] = nlohmann::ordered_json::array();
    for (auto [a, b] : v.final_edges) edges.push_back({a, b});
    e["diagnostic"] = v.diagnostic;
    arr.push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

}  // namespace pyrofuse
