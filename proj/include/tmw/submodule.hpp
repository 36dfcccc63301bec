#ifndef TMW_SUBMODULE_HPP
#define TMW_SUBMODULE_HPP

#include <optional>
#include <string>
#include <vector>

#include "tmw/tmodule.hpp"

namespace tmw {

// Algebraic subgroup pattern of G_a^m: either a product of 0 and G_a factors
// (a set of coordinates constrained to zero) or a general linear subspace
// given by a basis over k.
struct SubgroupPattern {
  int m = 0;
  std::vector<int> zero_coords;               // coordinate case (sorted indices)
  std::vector<std::vector<Frac>> basis;        // linear-subspace case (used if nonempty)

  static SubgroupPattern coordinates(int m, std::vector<int> zeros);
  static SubgroupPattern subspace(std::vector<std::vector<Frac>> basis_vectors);
  int dim() const;
  std::string str() const;
};

// dPhi(T)^j = (T I + N)^j via the binomial expansion with char-p binomial
// coefficients; equals differential(phi_action(T^j)) (two computation paths)
Mat<Frac> dphi_power(const TModule& M, int j);

struct StabilizationVerdict {
  bool stabilized = false;
  std::string witness;  // offending coordinate expression on failure
};

// Does Phi(a) map the subgroup into itself? Coordinate patterns are checked
// symbolically on the twisted coefficients; linear subspaces by membership of
// the images of the Frobenius-twisted basis vectors.
StabilizationVerdict is_stabilized(const TModule& M, const Poly& a, const SubgroupPattern& S);

// Appendix-style family scan on C^{(x)m}: for each beta with p^beta | m, the
// pattern {X_{s p^beta + 1} = 0} is checked against Phi(T^{p^beta}) and
// Phi(T^{p^{beta-1}}).
struct FamilyScanRow {
  int beta = 0;
  SubgroupPattern pattern;
  bool stabilized_by_p_beta = false;
  bool stabilized_by_p_beta_minus_1 = false;
  std::string witness;
};
std::vector<FamilyScanRow> coordinate_family_scan(int m, int q);

// binom(j, i) = binom(m, i) mod p for i = 1..m-1; when it holds,
// cross-validates on the scanned coordinate patterns of C^{(x)m} that
// stabilization by T^j implies stabilization by T^m
struct CongruenceVerdict {
  bool congruence_holds = false;
  bool cross_validated = true;  // vacuously true when the congruence fails
  std::vector<std::string> notes;
};
CongruenceVerdict binomial_congruence_check(int j, int m, int p, int q);

// empirical search for the least j such that all scanned coordinate patterns
// stabilized by some Phi(a), a not in F_q, are stabilized by Phi(T^j);
// an observation over the scanned family only, never a minimality proof
struct MinimalJReport {
  std::optional<int> j;
  int jmax = 0;
  std::vector<std::string> notes;
};
MinimalJReport scan_minimal_j(const TModule& M, int jmax);

}  // namespace tmw

#endif  // TMW_SUBMODULE_HPP
