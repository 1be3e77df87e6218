#include "pyrofuse/clifford.hpp"

#include <stdexcept>

namespace pyrofuse {
namespace {

constexpr std::array<std::array<char, 2>, 6> kPairs = {{
    {'X', 'Z'}, {'X', 'Y'}, {'Y', 'Z'}, {'Y', 'X'}, {'Z', 'X'}, {'Z', 'Y'},
}};

// +1 when (a, b) is cyclic in X -> Y -> Z, so that a*b = i*third.
int cyclic(char a, char b) {
  if ((a == 'X' && b == 'Y') || (a == 'Y' && b == 'Z') || (a == 'Z' && b == 'X')) return 1;
  return -1;
}

char third(char a, char b) {
  for (char c : {'X', 'Y', 'Z'})
    if (c != a && c != b) return c;
  return 'I';
}

int index_from_images(SingleQubitClifford::Image xi, SingleQubitClifford::Image zi) {
  for (int pair = 0; pair < 6; ++pair) {
    if (kPairs[pair][0] == xi.pauli && kPairs[pair][1] == zi.pauli)
      return 4 * pair + (xi.sign == Sign::minus ? 2 : 0) + (zi.sign == Sign::minus ? 1 : 0);
  }
  throw std::logic_error("images do not define a Clifford");
}

}  // namespace

SingleQubitClifford SingleQubitClifford::from_index(int index) {
  if (index < 0 || index >= 24) throw std::out_of_range("Clifford index must be in [0, 24)");
  return SingleQubitClifford(index);
}

SingleQubitClifford SingleQubitClifford::from_gate(Gate g) {
  switch (g) {
    case Gate::H: return SingleQubitClifford(16);
    case Gate::S: return SingleQubitClifford(8);
    case Gate::Sdg: return SingleQubitClifford(10);
    case Gate::X: return SingleQubitClifford(1);
    case Gate::Y: return SingleQubitClifford(3);
    case Gate::Z: return SingleQubitClifford(2);
  }
  throw std::invalid_argument("unknown gate");
}

SingleQubitClifford::Image SingleQubitClifford::image_of(char pauli) const {
  const auto& pr = kPairs[index_ / 4];
  const Sign sx = (index_ & 2) ? Sign::minus : Sign::plus;
  const Sign sz = (index_ & 1) ? Sign::minus : Sign::plus;
  switch (pauli) {
    case 'I': return {Sign::plus, 'I'};
    case 'X': return {sx, pr[0]};
    case 'Z': return {sz, pr[1]};
    case 'Y': {
      // Y = iXZ maps to i (sx Px)(sz Pz) = -cyclic(Px,Pz) sx sz P3.
      Sign s = sx * sz;
      if (cyclic(pr[0], pr[1]) > 0) s = negate(s);
      return {s, third(pr[0], pr[1])};
    }
    default: throw std::invalid_argument("bad Pauli letter");
  }
}

SingleQubitClifford SingleQubitClifford::then(const SingleQubitClifford& b) const {
  auto compose = [&](char p) {
    const Image first = image_of(p);
    Image second = b.image_of(first.pauli);
    second.sign = second.sign * first.sign;
    return second;
  };
  return SingleQubitClifford(index_from_images(compose('X'), compose('Z')));
}

SingleQubitClifford SingleQubitClifford::inverse() const {
  for (int k = 0; k < 24; ++k) {
    SingleQubitClifford c(k);
    if (then(c).is_identity()) return c;
  }
  throw std::logic_error("Clifford without inverse");
}

std::string SingleQubitClifford::name() const {
  const Image xi = image_of('X');
  const Image zi = image_of('Z');
  std::string s = "X->";
  s += sign_char(xi.sign);
  s += xi.pauli;
  s += ",Z->";
  s += sign_char(zi.sign);
  s += zi.pauli;
  return s;
}

bool LocalCliffordLayer::is_identity() const {
  for (const auto& c : ops)
    if (!c.is_identity()) return false;
  return true;
}

}  // namespace pyrofuse
