#include "pyrofuse/stabilizer.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pyrofuse {
namespace {

struct Column {
  bool x;
  std::size_t q;
};

bool bit(const PauliOperator& p, Column c) { return c.x ? p.x().get(c.q) : p.z().get(c.q); }

// Gauss-Jordan elimination over the listed columns, restricted to rows
// [first, end).  Row products keep their signs, so every row stays a group
// element.  Returns one past the last pivot row; fills `pivots` if given.
std::size_t eliminate(std::vector<PauliOperator>& rows, const std::vector<Column>& cols,
                      std::size_t first = 0, std::vector<Column>* pivots = nullptr) {
  std::size_t r = first;
  for (const Column& c : cols) {
    if (r == rows.size()) break;
    std::size_t pivot = r;
    while (pivot < rows.size() && !bit(rows[pivot], c)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = first; i < rows.size(); ++i)
      if (i != r && bit(rows[i], c)) rows[i].multiply_by(rows[r]);
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

std::vector<Column> x_then_z(std::size_t n) {
  std::vector<Column> cols;
  for (std::size_t q = 0; q < n; ++q) cols.push_back({true, q});
  for (std::size_t q = 0; q < n; ++q) cols.push_back({false, q});
  return cols;
}

void conjugate_column(std::vector<PauliOperator>& rows, std::size_t q,
                      const SingleQubitClifford& c) {
  if (c.is_identity()) return;
  for (auto& row : rows) {
    const char letter = row.at(q);
    if (letter == 'I') continue;
    const auto img = c.image_of(letter);
    row.set(q, img.pauli);
    row.set_sign(row.sign() * img.sign);
  }
}

PauliOperator restrict_to(const PauliOperator& p, const std::vector<std::size_t>& keep) {
  PauliOperator out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) out.set(i, p.at(keep[i]));
  out.set_sign(p.sign());
  return out;
}

}  // namespace

std::string to_string(BellBranch b) {
  switch (b) {
    case BellBranch::phi_plus: return "phi+";
    case BellBranch::phi_minus: return "phi-";
    case BellBranch::psi_plus: return "psi+";
    case BellBranch::psi_minus: return "psi-";
  }
  return "?";
}

std::string to_string(const FusionOutcome& o) {
  if (const auto* s = std::get_if<FusionSuccess>(&o)) return "success(" + to_string(s->branch) + ")";
  const auto& f = std::get<FusionFailure>(o);
  return std::string("failure(") + sign_char(f.za) + "," + sign_char(f.xb) + ")";
}

std::pair<Sign, Sign> bell_signs(BellBranch b) {
  switch (b) {
    case BellBranch::phi_plus: return {Sign::plus, Sign::plus};
    case BellBranch::phi_minus: return {Sign::minus, Sign::plus};
    case BellBranch::psi_plus: return {Sign::plus, Sign::minus};
    case BellBranch::psi_minus: return {Sign::minus, Sign::minus};
  }
  return {Sign::plus, Sign::plus};
}

std::size_t binary_rank(const std::vector<PauliOperator>& rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  std::vector<BitVector> m;
  for (const auto& p : rows) {
    BitVector v(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
      v.set(q, p.x().get(q));
      v.set(n + q, p.z().get(q));
    }
    m.push_back(std::move(v));
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < 2 * n && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && !m[pivot].get(c)) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != r && m[i].get(c)) m[i] ^= m[r];
    ++r;
  }
  return r;
}

StabilizerState::StabilizerState(std::size_t n) : labels_(n) {
  if (n == 0) throw std::invalid_argument("a state needs at least one qubit");
  for (std::size_t q = 0; q < n; ++q) gens_.push_back(PauliOperator::single(n, q, 'Z'));
  std::iota(labels_.begin(), labels_.end(), 0);
}

StabilizerState::StabilizerState(std::vector<PauliOperator> generators, std::vector<int> labels)
    : gens_(std::move(generators)), labels_(std::move(labels)) {
  if (gens_.empty()) throw std::invalid_argument("a state needs at least one qubit");
  if (labels_.size() != gens_.size()) throw std::invalid_argument("one label per qubit required");
  for (const auto& g : gens_)
    if (g.size() != gens_.size()) throw std::invalid_argument("generator length must equal n");
  check_invariants();
}

StabilizerState StabilizerState::from_graph(const GraphState& g) {
  std::vector<int> labels(g.size());
  std::iota(labels.begin(), labels.end(), 0);
  return from_graph(g, std::move(labels));
}

StabilizerState StabilizerState::from_graph(const GraphState& g, std::vector<int> labels) {
  const std::size_t n = g.size();
  std::vector<PauliOperator> gens;
  for (std::size_t v = 0; v < n; ++v) {
    PauliOperator k(n);
    k.x().set(v, true);
    for (std::size_t w : g.neighbors(v)) k.z().set(w, true);
    gens.push_back(std::move(k));
  }
  return StabilizerState(std::move(gens), std::move(labels));
}

StabilizerState StabilizerState::tensor(const StabilizerState& a, const StabilizerState& b) {
  const std::size_t na = a.size(), n = a.size() + b.size();
  std::vector<PauliOperator> gens;
  for (const auto& g : a.gens_) {
    PauliOperator p(n);
    for (std::size_t q = 0; q < na; ++q) p.set(q, g.at(q));
    p.set_sign(g.sign());
    gens.push_back(std::move(p));
  }
  for (const auto& g : b.gens_) {
    PauliOperator p(n);
    for (std::size_t q = 0; q < b.size(); ++q) p.set(na + q, g.at(q));
    p.set_sign(g.sign());
    gens.push_back(std::move(p));
  }
  std::vector<int> labels = a.labels_;
  labels.insert(labels.end(), b.labels_.begin(), b.labels_.end());
  StabilizerState s(std::move(gens), std::move(labels));
  s.validate_ = a.validate_ || b.validate_;
  return s;
}

std::size_t StabilizerState::index_of(int label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::out_of_range("no qubit labelled " + std::to_string(label));
  return static_cast<std::size_t>(it - labels_.begin());
}

void StabilizerState::check_qubit(std::size_t q) const {
  if (q >= size()) throw std::out_of_range("qubit index " + std::to_string(q) + " out of range");
}

void StabilizerState::check_invariants() const {
  const std::size_t n = size();
  for (const auto& g : gens_)
    if (g.size() != n) throw std::logic_error("generator length differs from qubit count");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!gens_[i].commutes_with(gens_[j]))
        throw std::logic_error("generators " + std::to_string(i) + " and " + std::to_string(j) +
                               " anticommute");
  if (binary_rank(gens_) != n) throw std::logic_error("generators are not independent");
}

void StabilizerState::apply_gate(std::size_t q, Gate g) {
  apply_clifford(q, SingleQubitClifford::from_gate(g));
}

void StabilizerState::apply_clifford(std::size_t q, const SingleQubitClifford& c) {
  check_qubit(q);
  conjugate_column(gens_, q, c);
  after_mutation();
}

void StabilizerState::apply_layer(const LocalCliffordLayer& layer) {
  if (layer.size() != size()) throw std::invalid_argument("layer size differs from qubit count");
  for (std::size_t q = 0; q < size(); ++q) conjugate_column(gens_, q, layer.ops[q]);
  after_mutation();
}

void StabilizerState::apply_cz(std::size_t a, std::size_t b) {
  check_qubit(a);
  check_qubit(b);
  if (a == b) throw std::invalid_argument("controlled-Z needs two distinct qubits");
  for (auto& g : gens_) {
    const bool xa = g.x().get(a), xb = g.x().get(b);
    const bool za = g.z().get(a), zb = g.z().get(b);
    if (xa && xb && (za != zb)) g.set_sign(negate(g.sign()));
    g.z().set(a, za ^ xb);
    g.z().set(b, zb ^ xa);
  }
  after_mutation();
}

std::optional<Sign> StabilizerState::expectation(const PauliOperator& p) const {
  if (p.size() != size()) throw std::invalid_argument("Pauli length differs from qubit count");
  for (const auto& g : gens_)
    if (!g.commutes_with(p)) return std::nullopt;
  std::vector<PauliOperator> rows = gens_;
  std::vector<Column> pivots;
  eliminate(rows, x_then_z(size()), 0, &pivots);
  PauliOperator residual = p;
  residual.set_sign(Sign::plus);
  PauliOperator acc(size());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (!bit(residual, pivots[k])) continue;
    residual.x() ^= rows[k].x();
    residual.z() ^= rows[k].z();
    acc.multiply_by(rows[k]);
  }
  if (!residual.is_identity())
    throw std::logic_error("commuting Pauli outside a maximal stabilizer group");
  return acc.sign();
}

MeasurementResult StabilizerState::measure(const PauliOperator& p, std::optional<Sign> forced,
                                           std::mt19937_64* rng) {
  if (p.size() != size()) throw std::invalid_argument("Pauli length differs from qubit count");
  if (p.is_identity()) throw std::invalid_argument("cannot measure the identity");
  std::vector<std::size_t> anti;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (!gens_[i].commutes_with(p)) anti.push_back(i);

  if (anti.empty()) {
    const Sign outcome = p.sign() * *expectation(p);
    if (forced && *forced != outcome)
      throw StabilizerError("forced outcome " + std::string(1, sign_char(*forced)) + " for " +
                            p.str() + " contradicts deterministic value");
    return {outcome, true};
  }

  Sign outcome;
  if (forced) {
    outcome = *forced;
  } else {
    if (!rng) throw std::logic_error("random measurement needs a forced sign or a generator");
    outcome = ((*rng)() & 1u) ? Sign::minus : Sign::plus;
  }
  const std::size_t k = anti.front();
  for (std::size_t i = 1; i < anti.size(); ++i) gens_[anti[i]].multiply_by(gens_[k]);
  gens_[k] = p;
  gens_[k].set_sign(p.sign() * outcome);
  after_mutation();
  return {outcome, false};
}

void StabilizerState::remove_qubits(std::span<const std::size_t> qubits) {
  std::set<std::size_t> drop;
  for (std::size_t q : qubits) {
    check_qubit(q);
    if (!drop.insert(q).second) throw std::invalid_argument("duplicate qubit in removal list");
  }
  if (drop.size() >= size()) throw std::invalid_argument("cannot remove every qubit");
  std::vector<std::size_t> keep;
  for (std::size_t q = 0; q < size(); ++q)
    if (!drop.count(q)) keep.push_back(q);

  std::vector<Column> cols;
  for (std::size_t q : drop) {
    cols.push_back({true, q});
    cols.push_back({false, q});
  }
  std::vector<PauliOperator> rows = gens_;
  const std::size_t r = eliminate(rows, cols);
  if (r != drop.size())
    throw StabilizerError("qubits to remove are still entangled with the rest of the state");

  std::vector<PauliOperator> kept;
  std::vector<int> labels;
  for (std::size_t i = r; i < rows.size(); ++i) kept.push_back(restrict_to(rows[i], keep));
  for (std::size_t q : keep) labels.push_back(labels_[q]);
  gens_ = std::move(kept);
  labels_ = std::move(labels);
  after_mutation();
}

bool StabilizerState::same_state(const StabilizerState& other) const {
  if (other.size() != size()) return false;
  for (const auto& g : other.gens_) {
    const auto s = expectation(g);
    if (!s || *s != g.sign()) return false;
  }
  return true;
}

StabilizerState StabilizerState::canonical() const {
  StabilizerState s = *this;
  eliminate(s.gens_, x_then_z(size()));
  return s;
}

std::string StabilizerState::str() const {
  std::string s;
  for (const auto& g : gens_) s += g.str() + "\n";
  return s;
}

FusionResidual fuse(StabilizerState& state, std::size_t a, std::size_t b,
                    const FusionOutcome& outcome) {
  const std::size_t n = state.size();
  if (a >= n || b >= n) throw std::out_of_range("fusion qubit out of range");
  if (a == b) throw std::invalid_argument("fusion needs two distinct qubits");

  StabilizerState work = state;
  work.apply_gate(b, Gate::H);
  FusionResidual res;
  if (const auto* s = std::get_if<FusionSuccess>(&outcome)) {
    const auto [sxx, szz] = bell_signs(s->branch);
    res.first = PauliOperator(n);
    res.first.set(a, 'X');
    res.first.set(b, 'X');
    res.second = PauliOperator(n);
    res.second.set(a, 'Z');
    res.second.set(b, 'Z');
    work.measure(res.first, sxx);
    work.measure(res.second, szz);
    res.first.set_sign(sxx);
    res.second.set_sign(szz);
  } else {
    const auto& f = std::get<FusionFailure>(outcome);
    res.first = PauliOperator::single(n, a, 'Z');
    res.second = PauliOperator::single(n, b, 'Z');
    work.measure(res.first, f.za);
    work.measure(res.second, f.xb);
    res.first.set_sign(f.za);
    res.second.set_sign(f.xb);
  }
  state = std::move(work);
  return res;
}

FusionOutcome fuse_random(StabilizerState& state, std::size_t a, std::size_t b,
                          double p_success, std::mt19937_64& rng) {
  const std::size_t n = state.size();
  if (a >= n || b >= n) throw std::out_of_range("fusion qubit out of range");
  if (a == b) throw std::invalid_argument("fusion needs two distinct qubits");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const bool success = unit(rng) < p_success;
  state.apply_gate(b, Gate::H);
  if (success) {
    PauliOperator xx(n), zz(n);
    xx.set(a, 'X');
    xx.set(b, 'X');
    zz.set(a, 'Z');
    zz.set(b, 'Z');
    const Sign sxx = state.measure(xx, std::nullopt, &rng).outcome;
    const Sign szz = state.measure(zz, std::nullopt, &rng).outcome;
    for (BellBranch br : {BellBranch::phi_plus, BellBranch::phi_minus, BellBranch::psi_plus,
                          BellBranch::psi_minus})
      if (bell_signs(br) == std::pair{sxx, szz}) return FusionSuccess{br};
  }
  const Sign za = state.measure(PauliOperator::single(n, a, 'Z'), std::nullopt, &rng).outcome;
  const Sign xb = state.measure(PauliOperator::single(n, b, 'Z'), std::nullopt, &rng).outcome;
  return FusionFailure{za, xb};
}

GraphForm to_graph_form(const StabilizerState& state) {
  const std::size_t n = state.size();
  std::vector<PauliOperator> rows = state.generators();
  std::vector<SingleQubitClifford> applied(n);
  auto apply = [&](std::size_t q, Gate g) {
    const auto c = SingleQubitClifford::from_gate(g);
    conjugate_column(rows, q, c);
    applied[q] = applied[q].then(c);
  };

  std::vector<Column> xcols, zcols;
  for (std::size_t q = 0; q < n; ++q) {
    xcols.push_back({true, q});
    zcols.push_back({false, q});
  }
  // Rows past the X rank are pure Z; Hadamards on their Z pivots make the
  // X block invertible.
  const std::size_t rank = eliminate(rows, xcols);
  std::vector<Column> zpivots;
  eliminate(rows, zcols, rank, &zpivots);
  for (const Column& c : zpivots) apply(c.q, Gate::H);

  if (eliminate(rows, xcols) != n) throw std::logic_error("X block still singular");
  for (std::size_t q = 0; q < n; ++q)
    if (rows[q].z().get(q)) apply(q, Gate::Sdg);
  for (std::size_t q = 0; q < n; ++q)
    if (rows[q].sign() == Sign::minus) apply(q, Gate::Z);

  GraphForm form{GraphState(n), LocalCliffordLayer(n)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (rows[a].z().get(b) != rows[b].z().get(a))
        throw std::logic_error("graph form Z block is not symmetric");
      if (rows[a].z().get(b)) form.graph.set_edge(a, b, true);
    }
  for (std::size_t q = 0; q < n; ++q) form.layer.ops[q] = applied[q].inverse();

  StabilizerState check = StabilizerState::from_graph(form.graph, state.labels());
  check.apply_layer(form.layer);
  if (!check.same_state(state)) throw std::logic_error("graph form round trip failed");
  return form;
}

}  // namespace pyrofuse
