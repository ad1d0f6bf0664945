#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace hallq {

using Elem = std::uint8_t;

// Finite field F_q with q = p^k <= 256. Elements are encoded as the integer
// sum c_i p^i of their coefficient vector in the polynomial basis.
class Field {
 public:
  static std::shared_ptr<const Field> make(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int degree() const { return k_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem primitive() const { return primitive_; }

  // Coefficient vector of a over F_p, lowest degree first.
  std::vector<int> coords(Elem a) const;

 private:
  Field() = default;
  int q_ = 0, p_ = 0, k_ = 0;
  std::vector<int> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_;
  Elem primitive_ = 1;
};

using FieldPtr = std::shared_ptr<const Field>;

// Returns (p, k) with q = p^k, or (0, 0) when q is not a prime power.
std::pair<int, int> prime_power(int q);

}  // namespace hallq
