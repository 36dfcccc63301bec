#ifndef TMW_POLY_HPP
#define TMW_POLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tmw/gf.hpp"
#include "tmw/mag.hpp"

namespace tmw {

// Dense polynomial in A = F_q[T]. Coefficient vector low-to-high, highest
// entry nonzero (empty vector = zero polynomial).
class Poly {
public:
  explicit Poly(const GF& gf) : gf_(&gf) {}
  Poly(const GF& gf, std::vector<uint8_t> coeffs) : gf_(&gf), c_(std::move(coeffs)) { trim(); }

  static Poly zero(const GF& gf) { return Poly(gf); }
  static Poly constant(const GF& gf, uint8_t v);
  static Poly one(const GF& gf) { return constant(gf, 1); }
  static Poly variable(const GF& gf) { return monomial(gf, 1, 1); }  // T
  static Poly monomial(const GF& gf, int degree, uint8_t v);

  const GF& gf() const { return *gf_; }
  int q() const { return gf_->q(); }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  // degree of the zero polynomial is -1 by convention
  int degree() const { return int(c_.size()) - 1; }
  uint8_t coeff(int i) const { return (i < 0 || i >= int(c_.size())) ? 0 : c_[i]; }
  uint8_t leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<uint8_t>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(uint8_t s) const;
  Poly pow(uint64_t n) const;

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  bool operator<(const Poly& o) const;  // degree then lexicographic; for container keys

  // Euclidean division: *this = quot * g + rem, deg rem < deg g.
  std::pair<Poly, Poly> divmod(const Poly& g) const;
  Poly make_monic() const;

  // |a|_{1/T} = q^{deg a}, |0| = 0.
  Mag abs() const { return is_zero() ? Mag::zero() : Mag::qpow(degree()); }

  // Coefficientwise p^j-th power with exponent dilation: a(T)^{p^j}. Since
  // every coefficient lies in F_q this is exact and cheap.
  Poly char_power(unsigned pj) const;
  // a(T)^q
  Poly frobenius_q(unsigned j = 1) const;
  // T -> S^2 base change (exponent doubling); coefficients fixed.
  Poly substitute_square() const;
  // Inverse of substitute_square over F_p, p = 2: exists iff only even
  // exponents appear. Returns the square root of the polynomial when all
  // coefficients are p-th powers placed at multiples of p.
  std::optional<Poly> char_root() const;

  uint8_t eval(uint8_t x) const;

  // "q=2;[0,1,0,1]" list form (coefficients encoded as F_p-coordinate integers)
  std::string list_str() const;
  // human form, e.g. "T^3+T"; var names the indeterminate
  std::string str(const std::string& var = "T") const;
  static Poly parse(const GF& gf, const std::string& text, const std::string& var = "T");

private:
  void trim();

  const GF* gf_;
  std::vector<uint8_t> c_;
};

// gcd monic; both zero rejected.
Poly poly_gcd(const Poly& a, const Poly& b);
// (gcd, lcm), both monic; gcd * lcm = a * b up to a unit.
std::pair<Poly, Poly> poly_gcd_lcm(const Poly& a, const Poly& b);

}  // namespace tmw

#endif  // TMW_POLY_HPP
