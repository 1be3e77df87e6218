#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pyrofuse {

enum class Sign : std::int8_t { plus = 1, minus = -1 };

inline Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::plus : Sign::minus;
}
inline Sign negate(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

// Fixed-length packed bit vector.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  BitVector& operator^=(const BitVector& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Hermitian Pauli product sign * P_0 (x) ... (x) P_{n-1}.  Qubit j carries
// I, X, Z or Y for (x_j, z_j) = (0,0), (1,0), (0,1), (1,1).  Y is the
// Hermitian Y = iXZ, so every representable operator has a real sign.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t n) : x_(n), z_(n) {}

  // "+XZI", "-YIZ", "ZZ" (leading sign optional); character j is qubit j.
  static PauliOperator parse(std::string_view text);
  static PauliOperator single(std::size_t n, std::size_t q, char pauli);

  std::size_t size() const { return x_.size(); }

  const BitVector& x() const { return x_; }
  const BitVector& z() const { return z_; }
  BitVector& x() { return x_; }
  BitVector& z() { return z_; }
  Sign sign() const { return sign_; }
  void set_sign(Sign s) { sign_ = s; }

  char at(std::size_t q) const;
  void set(std::size_t q, char pauli);

  bool is_identity() const { return !x_.any() && !z_.any(); }
  bool commutes_with(const PauliOperator& o) const;

  // Phase exponent (mod 4, power of i) of the unsigned product this * o.
  int product_phase(const PauliOperator& o) const;

  // this <- this * o.  Both operands must commute so the product stays
  // Hermitian with a real sign.
  void multiply_by(const PauliOperator& o);

  // Same Pauli string ignoring the sign.
  bool same_support(const PauliOperator& o) const { return x_ == o.x_ && z_ == o.z_; }

  std::string str() const;

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

 private:
  BitVector x_;
  BitVector z_;
  Sign sign_ = Sign::plus;
};

}  // namespace pyrofuse
