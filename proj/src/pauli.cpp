#include "pyrofuse/pauli.hpp"

#include <stdexcept>

namespace pyrofuse {

PauliOperator PauliOperator::parse(std::string_view text) {
  Sign s = Sign::plus;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    s = text.front() == '-' ? Sign::minus : Sign::plus;
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("empty Pauli string");
  PauliOperator p(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) p.set(q, text[q]);
  p.sign_ = s;
  return p;
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t q, char pauli) {
  if (q >= n) throw std::out_of_range("qubit index out of range");
  PauliOperator p(n);
  p.set(q, pauli);
  return p;
}

char PauliOperator::at(std::size_t q) const {
  const bool xb = x_.get(q), zb = z_.get(q);
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

void PauliOperator::set(std::size_t q, char pauli) {
  switch (pauli) {
    case 'I': x_.set(q, false); z_.set(q, false); break;
    case 'X': x_.set(q, true); z_.set(q, false); break;
    case 'Z': x_.set(q, false); z_.set(q, true); break;
    case 'Y': x_.set(q, true); z_.set(q, true); break;
    default: throw std::invalid_argument(std::string("bad Pauli letter: ") + pauli);
  }
}

bool PauliOperator::commutes_with(const PauliOperator& o) const {
  std::size_t parity = 0;
  const auto& ax = x_.words();
  const auto& az = z_.words();
  const auto& bx = o.x_.words();
  const auto& bz = o.z_.words();
  for (std::size_t k = 0; k < ax.size(); ++k)
    parity += std::popcount((ax[k] & bz[k]) ^ (az[k] & bx[k]));
  return parity % 2 == 0;
}

int PauliOperator::product_phase(const PauliOperator& o) const {
  // Per qubit, XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i.
  long plus = 0, minus = 0;
  const auto& x1 = x_.words();
  const auto& z1 = z_.words();
  const auto& x2 = o.x_.words();
  const auto& z2 = o.z_.words();
  for (std::size_t k = 0; k < x1.size(); ++k) {
    const std::uint64_t y1 = x1[k] & z1[k];
    const std::uint64_t xo = x1[k] & ~z1[k];
    const std::uint64_t zo = ~x1[k] & z1[k];
    const std::uint64_t y2 = x2[k] & z2[k];
    const std::uint64_t xo2 = x2[k] & ~z2[k];
    const std::uint64_t zo2 = ~x2[k] & z2[k];
    plus += std::popcount((y1 & zo2) | (xo & y2) | (zo & xo2));
    minus += std::popcount((y1 & xo2) | (xo & zo2) | (zo & y2));
  }
  return static_cast<int>(((plus - minus) % 4 + 4) % 4);
}

void PauliOperator::multiply_by(const PauliOperator& o) {
  int phase = product_phase(o);
  if (sign_ == Sign::minus) phase += 2;
  if (o.sign_ == Sign::minus) phase += 2;
  phase %= 4;
  if (phase % 2 != 0)
    throw std::logic_error("product of anticommuting Paulis is not Hermitian");
  sign_ = phase == 0 ? Sign::plus : Sign::minus;
  x_ ^= o.x_;
  z_ ^= o.z_;
}

std::string PauliOperator::str() const {
  std::string s(1, sign_char(sign_));
  for (std::size_t q = 0; q < size(); ++q) s += at(q);
  return s;
}

}  // namespace pyrofuse
