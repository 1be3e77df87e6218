#pragma once

// Dense state-vector reference used to cross-check the tableau code on a
// handful of qubits.  Qubit q is bit q of the basis index.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "pyrofuse/graph.hpp"
#include "pyrofuse/pauli.hpp"
#include "pyrofuse/stabilizer.hpp"

namespace sv {

using cplx = std::complex<double>;
using Vec = std::vector<cplx>;

inline Vec zeros(std::size_t n) {
  Vec v(std::size_t{1} << n, 0.0);
  v[0] = 1.0;
  return v;
}

inline void hadamard(Vec& v, std::size_t q) {
  const std::size_t m = std::size_t{1} << q;
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!(i & m)) {
      const cplx a = v[i], b = v[i | m];
      v[i] = r * (a + b);
      v[i | m] = r * (a - b);
    }
}

inline void phase(Vec& v, std::size_t q, cplx w) {
  const std::size_t m = std::size_t{1} << q;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i & m) v[i] *= w;
}

inline void cz(Vec& v, std::size_t a, std::size_t b) {
  const std::size_t m = (std::size_t{1} << a) | (std::size_t{1} << b);
  for (std::size_t i = 0; i < v.size(); ++i)
    if ((i & m) == m) v[i] = -v[i];
}

inline Vec graph_state(const pyrofuse::GraphState& g) {
  Vec v = zeros(g.size());
  for (std::size_t q = 0; q < g.size(); ++q) hadamard(v, q);
  for (auto [a, b] : g.edges()) cz(v, a, b);
  return v;
}

// P|v> for a signed Hermitian Pauli (Y = iXZ).
inline Vec apply_pauli(const pyrofuse::PauliOperator& p, const Vec& v) {
  Vec out(v.size());
  const std::size_t n = p.size();
  std::size_t xm = 0;
  for (std::size_t q = 0; q < n; ++q)
    if (p.x().get(q)) xm |= std::size_t{1} << q;
  const double s = p.sign() == pyrofuse::Sign::plus ? 1.0 : -1.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    // Z part acts first on |i>, then X flips, with an i per Y.
    cplx c = s * v[i];
    for (std::size_t q = 0; q < n; ++q) {
      const bool bit = (i >> q) & 1u;
      if (p.z().get(q) && bit) c = -c;
      if (p.x().get(q) && p.z().get(q)) c *= cplx(0, 1);
    }
    out[i ^ xm] += c;
  }
  return out;
}

inline double norm(const Vec& v) {
  double s = 0;
  for (auto c : v) s += std::norm(c);
  return std::sqrt(s);
}

// (1 + s P)/2 |v>, renormalised; returns the squared norm before scaling.
inline double project(Vec& v, const pyrofuse::PauliOperator& p, pyrofuse::Sign s) {
  const Vec pv = apply_pauli(p, v);
  const double k = s == pyrofuse::Sign::plus ? 1.0 : -1.0;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 0.5 * (v[i] + k * pv[i]);
  const double nn = norm(v);
  if (nn > 1e-12)
    for (auto& c : v) c /= nn;
  return nn * nn;
}

inline bool stabilized_by(const Vec& v, const pyrofuse::PauliOperator& p, double eps = 1e-9) {
  const Vec pv = apply_pauli(p, v);
  double d = 0;
  for (std::size_t i = 0; i < v.size(); ++i) d += std::norm(pv[i] - v[i]);
  return std::sqrt(d) < eps;
}

inline bool represents(const pyrofuse::StabilizerState& st, const Vec& v) {
  if (norm(v) < 1e-9) return false;
  for (const auto& g : st.generators())
    if (!stabilized_by(v, g)) return false;
  return true;
}

}  // namespace sv
