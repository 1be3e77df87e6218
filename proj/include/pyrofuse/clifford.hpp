#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pyrofuse/pauli.hpp"

namespace pyrofuse {

enum class Gate { H, S, Sdg, X, Y, Z };

/// Single-qubit Clifford modulo global phase, stored by its conjugation
/// action U X U^dag and U Z U^dag.
///
/// Canonical enumeration of the 24 elements:
///   index = 4 * pair + 2 * [image of X is negative] + [image of Z is negative]
/// where pair indexes the ordered (image of X, image of Z) letters
///   0:(X,Z) 1:(X,Y) 2:(Y,Z) 3:(Y,X) 4:(Z,X) 5:(Z,Y).
/// Index 0 is the identity, H is 16 and S is 8.
class SingleQubitClifford {
 public:
  struct Image {
    Sign sign = Sign::plus;
    char pauli = 'I';
  };

  SingleQubitClifford() = default;
  static SingleQubitClifford from_index(int index);
  static SingleQubitClifford from_gate(Gate g);
  static SingleQubitClifford identity() { return {}; }

  int index() const { return index_; }
  bool is_identity() const { return index_ == 0; }
  bool is_pauli() const { return index_ < 4; }

  Image image_of(char pauli) const;

  // (a.then(b)) applies a first, then b.
  SingleQubitClifford then(const SingleQubitClifford& b) const;
  SingleQubitClifford inverse() const;

  std::string name() const;

  friend bool operator==(const SingleQubitClifford&, const SingleQubitClifford&) = default;

 private:
  explicit SingleQubitClifford(int index) : index_(index) {}
  int index_ = 0;
};

/// One Clifford label per qubit.
struct LocalCliffordLayer {
  std::vector<SingleQubitClifford> ops;

  LocalCliffordLayer() = default;
  explicit LocalCliffordLayer(std::size_t n) : ops(n) {}
  std::size_t size() const { return ops.size(); }
  bool is_identity() const;
};

}  // namespace pyrofuse
