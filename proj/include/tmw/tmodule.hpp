#ifndef TMW_TMODULE_HPP
#define TMW_TMODULE_HPP

#include <optional>
#include <string>
#include <vector>

#include "tmw/frac.hpp"
#include "tmw/laurent.hpp"
#include "tmw/twisted.hpp"

namespace tmw {

// A T-module G_a^m with the A-action generated by Phi(T), a twisted
// polynomial with m x m matrix coefficients over k. The differential must be
// T I + N with N nilpotent and the leading coefficient nonzero.
struct TModule {
  int m;
  int q;
  TwistedPoly<Frac> phi_T;
  int rank_d;      // lattice rank; user-declared metadata
  int nilpotency;  // n(A): least n with N^n = 0
  std::string name;

  const GF& gf() const { return GF::of_order(q); }
};

// validates the shape of Phi(T) and fills nilpotency
TModule make_tmodule(int q, TwistedPoly<Frac> phi_T, int rank_d, std::string name = "");

// Carlitz module C(T) = T + tau
TModule carlitz_module(int q);
// tensor power C^{(x)m}: dPhi(T) = T I + superdiagonal N, tau-coefficient
// has a single 1 in the lower-left corner
TModule carlitz_tensor(int m, int q);
// product of dimension-1 modules (block-diagonal action)
TModule drinfeld_product(const std::vector<TwistedPoly<Frac>>& factors, int q);

// Phi(a(T)) by Horner composition; a ring homomorphism in a
TwistedPoly<Frac> phi_action(const TModule& M, const Poly& a);

// Lie-side torsion representatives: all d-tuples alpha/beta in canonical form
// with beta | a and deg(numerator of c/a) < deg a; exactly q^{d deg a} tuples.
struct LieTorsionSet {
  Poly a;
  int d;
  std::vector<std::vector<Frac>> tuples;
};
LieTorsionSet lie_torsion(const GF& gf, const Poly& a, int d);

// Module-side torsion: all solutions of Phi(a)(x) = 0 with coordinates in
// k_inf, found by Newton-polygon/Hensel solving. Coordinates are eliminated
// either by solving a one-variable additive polynomial or by substituting a
// coordinate that occurs only linearly and untwisted; modules without such a
// triangular structure are rejected.
struct ModuleTorsion {
  std::vector<std::vector<Laurent>> points;
  std::vector<Rat> ramified;  // root valuations skipped (outside the scope field)
  bool complete = true;
};
// scope_gf widens the coordinate field to the unramified extension with the
// given residue field (module q must then be prime); nullptr means k_inf.
ModuleTorsion module_torsion(const TModule& M, const Poly& a, int prec,
                             const GF* scope_gf = nullptr);

// Frobenius-twist identity of the counterexample gallery: over F_2[S] with
// T = S^2, the half-twist module T + (S+T) tau + tau^2 satisfies
// tau o Phi_half(T) = Phi_C(T^2) o tau, coefficientwise.
struct GalleryVerdict {
  bool holds = false;
  std::string detail;
};
GalleryVerdict check_frobenius_twist_identity();

// rank of the intersection lattice span(periods) with the subspace spanned
// by subspace_basis, both inside k_inf^n; linear algebra at precision
int lattice_intersection_rank(const std::vector<std::vector<Laurent>>& periods,
                              const std::vector<std::vector<Laurent>>& subspace_basis);

}  // namespace tmw

#endif  // TMW_TMODULE_HPP
