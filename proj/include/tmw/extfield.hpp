#ifndef TMW_EXTFIELD_HPP
#define TMW_EXTFIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "tmw/laurent.hpp"
#include "tmw/matrix.hpp"

namespace tmw {

// Finite extension L = k_inf[x]/(m(x)) presented by a monic modulus whose
// generator alpha satisfies |alpha| = 1 (certified on construction).
// Elements are coordinate vectors over k_inf in the power basis.
struct ExtField {
  const GF* gf;
  int n;
  std::vector<Laurent> modulus;                 // c_0..c_n, monic (c_n = 1)
  std::vector<std::vector<Laurent>> alpha_pow;  // alpha^j coordinates, j <= 2n-2
  // norm-equivalence constant: gamma F_alpha(z) <= |z| <= F_alpha(z),
  // certified by the primitive-zero depth of the norm form
  Mag gamma;
  int gamma_depth = 0;
  bool gamma_certified = false;
};
using ExtFieldPtr = std::shared_ptr<const ExtField>;

// Builds the extension; requires the unit-generator normalization (all
// modulus coefficients integral, constant coefficient a unit). gamma_budget
// caps the exhaustive depth search for the norm-equivalence constant.
ExtFieldPtr make_extension(const GF& gf, std::vector<Laurent> modulus, int gamma_budget = 8);

// Replaces the generator by beta = T^{-k} alpha (+1 when needed) so that
// |beta| = 1, returning the new modulus. Rejects moduli whose Newton polygon
// has more than one slope (not irreducible at this precision).
std::vector<Laurent> renormalize_unit_generator(const GF& gf, std::vector<Laurent> modulus);

class ExtElem {
public:
  ExtElem(ExtFieldPtr F, std::vector<Laurent> coords);
  static ExtElem zero(const ExtFieldPtr& F);
  static ExtElem one(const ExtFieldPtr& F);
  static ExtElem from_base(const ExtFieldPtr& F, const Laurent& x);
  static ExtElem generator(const ExtFieldPtr& F);  // alpha

  const ExtFieldPtr& field() const { return F_; }
  const std::vector<Laurent>& coords() const { return w_; }
  bool is_zero() const;
  bool is_exact_zero() const;

  ExtElem operator+(const ExtElem& o) const;
  ExtElem operator-(const ExtElem& o) const;
  ExtElem operator-() const;
  ExtElem operator*(const ExtElem& o) const;
  ExtElem operator/(const ExtElem& o) const;
  ExtElem inverse() const;
  ExtElem pow_int(long n) const;
  // x -> x^{q^j}
  ExtElem frobenius_q(unsigned j) const;

  bool operator==(const ExtElem& o) const { return w_ == o.w_; }
  bool operator!=(const ExtElem& o) const { return !(*this == o); }

  // |z| via the multiplication-matrix norm: |z| = |det M_z|^{1/n}
  Mag abs() const;
  // F_alpha(z) = max of the coordinate magnitudes
  Mag f_alpha() const;

  // generic-field hooks
  ExtElem zero_like() const { return zero(F_); }
  ExtElem one_like() const { return one(F_); }
  Mag mag() const { return abs(); }

  std::string str() const;

private:
  ExtFieldPtr F_;
  std::vector<Laurent> w_;
};

// max-norm over a vector of extension elements seen through the adapted
// basis: the largest |w_{i,j}| over all n*m base-field coordinates
Mag f_alpha_norm(const std::vector<ExtElem>& z);

// multiplication-by-z matrix over k_inf in the power basis
Mat<Laurent> multiplication_matrix(const ExtElem& z);

}  // namespace tmw

#endif  // TMW_EXTFIELD_HPP
