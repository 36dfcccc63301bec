#ifndef TMW_LAURENT_HPP
#define TMW_LAURENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "tmw/frac.hpp"
#include "tmw/mag.hpp"
#include "tmw/poly.hpp"

namespace tmw {

// Element of k_inf = F_q((1/T)) with tracked absolute precision. Writing
// u = 1/T, the element is sum c_k u^{lead+k} and is known modulo O(u^prec).
// Exact elements (finite expansions with no error term) carry prec = kExact.
// Arithmetic never reports digits at or beyond the absolute precision.
class Laurent {
public:
  static constexpr int kExact = 1 << 28;
  static constexpr int kDefaultRel = 64;

  explicit Laurent(const GF& gf) : gf_(&gf), prec_(kExact) {}
  Laurent(const GF& gf, int lead, std::vector<uint8_t> digits, int prec = kExact)
      : gf_(&gf), lead_(lead), c_(std::move(digits)), prec_(prec) {
    normalize();
  }

  static Laurent zero(const GF& gf) { return Laurent(gf); }
  static Laurent one(const GF& gf) { return monomial(gf, 0, 1); }
  static Laurent monomial(const GF& gf, int exp_u, uint8_t v);
  // T^k = u^{-k}
  static Laurent t_power(const GF& gf, int k) { return monomial(gf, -k, 1); }
  static Laurent from_poly(const Poly& p);
  static Laurent from_frac(const Frac& f, int rel_digits = kDefaultRel);
  // an explicit O(u^N) zero
  static Laurent zero_at(const GF& gf, int prec) {
    return Laurent(gf, 0, {}, prec);
  }

  const GF& gf() const { return *gf_; }
  int q() const { return gf_->q(); }

  bool is_exact() const { return prec_ == kExact; }
  int precision() const { return prec_; }
  // no nonzero digit stored; either exact zero or zero at current precision
  bool is_zero() const { return c_.empty(); }
  bool is_exact_zero() const { return c_.empty() && is_exact(); }
  bool nonzero_at_precision() const { return !c_.empty(); }

  // valuation v_{1/T} of the first stored nonzero digit
  std::optional<int> val() const {
    if (c_.empty()) return std::nullopt;
    return lead_;
  }
  uint8_t coeff(int exp_u) const {
    if (exp_u < lead_ || exp_u >= lead_ + int(c_.size())) return 0;
    return c_[exp_u - lead_];
  }
  uint8_t leading_digit() const { return c_.empty() ? 0 : c_[0]; }

  // |x|_{1/T} = q^{-val}; throws when x is indistinguishable from zero at
  // the current precision (exact zeros give magnitude 0).
  Mag abs() const;
  // upper bound on |x| that is always defined: q^{-val} or q^{-prec}
  Mag abs_bound() const;

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator/(const Laurent& o) const;
  Laurent scaled(uint8_t s) const;
  Laurent inv(int rel_digits = kDefaultRel) const;
  Laurent pow(long n) const;
  // multiply by u^k
  Laurent shifted(int k) const;
  // x -> x^{p^j}: digits to the p^j-th power, exponents dilated by p^j
  Laurent char_power(unsigned pj) const;
  // x -> x^{q^j}; exact digit dilation, precision improves to q^j * prec
  Laurent frobenius_q(unsigned j = 1) const { return char_power(j * unsigned(gf().e())); }
  Laurent truncated(int new_prec) const;

  bool operator==(const Laurent& o) const {
    return lead_ == o.lead_ && c_ == o.c_ && prec_ == o.prec_;
  }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // generic-field hooks
  Laurent zero_like() const { return zero(*gf_); }
  Laurent one_like() const { return one(*gf_); }
  Mag mag() const { return abs(); }

  // "v=<lead>;prec=<N>;coeffs=[...]"; prec prints as "inf" for exact values
  std::string str() const;
  static Laurent parse(const GF& gf, const std::string& text);
  // human-readable expansion in powers of T
  std::string pretty(int max_terms = 8) const;

private:
  void normalize();
  static int clamp_prec(long long p) {
    return p >= kExact ? kExact : int(p);
  }
  // effective valuation for precision propagation: lead of first nonzero
  // digit, or prec when none is stored (kExact for exact zero)
  long long eff_val() const {
    if (!c_.empty()) return lead_;
    return prec_;
  }

  const GF* gf_;
  int lead_ = 0;
  std::vector<uint8_t> c_;
  int prec_;
};

// true when (a - b) has no nonzero digit at the common precision
bool equal_at_precision(const Laurent& a, const Laurent& b);
// number of certified agreeing digits beyond max(val): precision of a-b minus its...
// reported as the absolute exponent below which a and b agree
int agreement_exponent(const Laurent& a, const Laurent& b);

}  // namespace tmw

#endif  // TMW_LAURENT_HPP
