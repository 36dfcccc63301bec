#ifndef TMW_FRAC_HPP
#define TMW_FRAC_HPP

#include <string>

#include "tmw/poly.hpp"

namespace tmw {

// Element of k = F_q(T) in canonical form: gcd(num, den) = 1, den monic.
// Equality is structural equality of the canonical form.
class Frac {
public:
  explicit Frac(const GF& gf) : num_(Poly::zero(gf)), den_(Poly::one(gf)) {}
  Frac(Poly num, Poly den);
  /* implicit */ Frac(const Poly& p) : num_(p), den_(Poly::one(p.gf())) {}

  static Frac zero(const GF& gf) { return Frac(gf); }
  static Frac one(const GF& gf) { return Frac(Poly::one(gf)); }
  static Frac constant(const GF& gf, uint8_t v) { return Frac(Poly::constant(gf, v)); }

  const GF& gf() const { return num_.gf(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integral() const { return den_.is_one(); }

  Frac operator+(const Frac& o) const { return Frac(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
  Frac operator-(const Frac& o) const { return Frac(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
  Frac operator-() const;
  Frac operator*(const Frac& o) const { return Frac(num_ * o.num_, den_ * o.den_); }
  Frac operator/(const Frac& o) const;
  Frac inverse() const;
  Frac pow(long n) const;

  bool operator==(const Frac& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Frac& o) const { return !(*this == o); }
  bool operator<(const Frac& o) const {
    return den_ < o.den_ || (den_ == o.den_ && num_ < o.num_);
  }

  // x -> x^{q^j}
  Frac frobenius_q(unsigned j = 1) const {
    return Frac(num_.frobenius_q(j), den_.frobenius_q(j));
  }

  // |num|/|den| in the 1/T-adic absolute value.
  Mag abs() const {
    return is_zero() ? Mag::zero() : Mag::qpow(num_.degree() - den_.degree());
  }
  // absolute height H(num/den) = q^{max(deg num, deg den)}, H(0) = 1.
  Mag height() const {
    if (is_zero()) return Mag::one();
    return Mag::qpow(std::max(num_.degree(), den_.degree()));
  }

  // generic-field hooks used by the templated containers
  Frac zero_like() const { return Frac(gf()); }
  Frac one_like() const { return one(gf()); }
  Mag mag() const { return abs(); }

  std::string str(const std::string& var = "T") const;
  static Frac parse(const GF& gf, const std::string& text, const std::string& var = "T");

private:
  Poly num_, den_;
};

}  // namespace tmw

#endif  // TMW_FRAC_HPP
