#ifndef TMW_GF_HPP
#define TMW_GF_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace tmw {

// The finite field F_q, q = p^e <= 16. Elements are integers in [0, q)
// encoding sum c_i p^i, the coordinate vector in the fixed polynomial basis.
// For e > 1 the basis is given by a fixed irreducible modulus per (p, e),
// listed in gf.cpp; the choice is part of the serialization format.
class GF {
public:
  GF(int p, int e);

  // Cached context for a field of size q; pointers are canonical per q.
  static const GF& of_order(int q);

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }

  uint8_t add(uint8_t a, uint8_t b) const { return add_[idx(a, b)]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_[idx(a, neg_[b])]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[idx(a, b)]; }
  uint8_t inv(uint8_t a) const;
  uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }
  uint8_t pow(uint8_t a, uint64_t n) const;
  // x -> x^{p^j}
  uint8_t frob(uint8_t a, unsigned j = 1) const;

  // Modulus polynomial as coefficient list over F_p, low to high (empty for e = 1).
  const std::vector<int>& modulus() const { return modulus_; }
  std::string describe() const;

private:
  size_t idx(uint8_t a, uint8_t b) const { return size_t(a) * q_ + b; }

  int p_, e_, q_;
  std::vector<int> modulus_;
  std::vector<uint8_t> add_, mul_, neg_;
};

}  // namespace tmw

#endif  // TMW_GF_HPP
