#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pyrofuse/clifford.hpp"
#include "pyrofuse/graph.hpp"
#include "pyrofuse/pauli.hpp"

namespace pyrofuse {

/// Raised when a forced measurement sign contradicts a deterministic
/// outcome, or when removing qubits that are still entangled.
class StabilizerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class BellBranch { phi_plus, phi_minus, psi_plus, psi_minus };

struct FusionSuccess {
  BellBranch branch = BellBranch::phi_plus;
};

// za: outcome of Z on the plain qubit; xb: outcome of Z on the Hadamard-side
// qubit after its Hadamard (X on the qubit as it was before fusion).
struct FusionFailure {
  Sign za = Sign::plus;
  Sign xb = Sign::plus;
};

using FusionOutcome = std::variant<FusionSuccess, FusionFailure>;

std::string to_string(BellBranch b);
std::string to_string(const FusionOutcome& o);

/// Signs of the two-qubit projections (XX, ZZ) selected by a Bell branch.
std::pair<Sign, Sign> bell_signs(BellBranch b);

/// Two commuting Paulis supported on the measured pair, with the outcome
/// signs that now stabilize it.
struct FusionResidual {
  PauliOperator first;
  PauliOperator second;
};

struct MeasurementResult {
  Sign outcome = Sign::plus;
  bool deterministic = false;
};

/// Pure n-qubit stabilizer state held as n commuting, independent generator
/// rows.  Qubits are addressed by position 0..n-1; each position carries a
/// stable external label that survives remove_qubits.
class StabilizerState {
 public:
  explicit StabilizerState(std::size_t n);  // |0...0>
  StabilizerState(std::vector<PauliOperator> generators, std::vector<int> labels);

  static StabilizerState from_graph(const GraphState& g);
  static StabilizerState from_graph(const GraphState& g, std::vector<int> labels);
  // Tensor product; labels are concatenated.
  static StabilizerState tensor(const StabilizerState& a, const StabilizerState& b);

  std::size_t size() const { return gens_.size(); }
  const std::vector<PauliOperator>& generators() const { return gens_; }
  const std::vector<int>& labels() const { return labels_; }
  std::size_t index_of(int label) const;

  // Checks commutation and full binary rank after every mutation.  On by
  // default in debug builds.
  void set_validation(bool on) { validate_ = on; }
  bool validation() const { return validate_; }
  void check_invariants() const;

  void apply_gate(std::size_t q, Gate g);
  void apply_clifford(std::size_t q, const SingleQubitClifford& c);
  void apply_layer(const LocalCliffordLayer& layer);
  void apply_cz(std::size_t a, std::size_t b);

  // Sign s such that s*P (P taken unsigned) is in the group; empty when P
  // anticommutes with some generator.
  std::optional<Sign> expectation(const PauliOperator& p) const;

  MeasurementResult measure(const PauliOperator& p, std::optional<Sign> forced,
                            std::mt19937_64* rng = nullptr);

  // Requires a generating set in which the listed qubits only appear in
  // generators supported entirely on the listed set.
  void remove_qubits(std::span<const std::size_t> qubits);

  bool same_state(const StabilizerState& other) const;

  // Generators brought to reduced row-echelon form (X block first).
  StabilizerState canonical() const;

  std::string str() const;

 private:
  void after_mutation() const {
    if (validate_) check_invariants();
  }
  void check_qubit(std::size_t q) const;

  std::vector<PauliOperator> gens_;
  std::vector<int> labels_;
#ifdef NDEBUG
  bool validate_ = false;
#else
  bool validate_ = true;
#endif
};

/// Number of independent rows of the 2n-column check matrix.
std::size_t binary_rank(const std::vector<PauliOperator>& rows);

/// Bell-measurement fusion of plain qubit `a` with Hadamard-side qubit `b`.
/// A Hadamard is applied to b first.  Success measures X_aX_b and Z_aZ_b
/// with the branch's signs; failure measures Z_a and Z_b.  The state is left
/// unchanged if a forced sign is impossible.  The measured pair ends up
/// disentangled from the rest; it is not removed.
FusionResidual fuse(StabilizerState& state, std::size_t a, std::size_t b,
                    const FusionOutcome& outcome);

/// Randomly sampled fusion: success with probability p_success (uniform
/// branch), otherwise failure; every measured sign is drawn uniformly when
/// not deterministic.
FusionOutcome fuse_random(StabilizerState& state, std::size_t a, std::size_t b,
                          double p_success, std::mt19937_64& rng);

/// Graph state plus local Clifford layer that reproduces the input exactly:
/// applying `layer` to from_graph(graph) gives back the same state.
struct GraphForm {
  GraphState graph;
  LocalCliffordLayer layer;
};
GraphForm to_graph_form(const StabilizerState& state);

}  // namespace pyrofuse
