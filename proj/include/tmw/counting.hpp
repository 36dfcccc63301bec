#ifndef TMW_COUNTING_HPP
#define TMW_COUNTING_HPP

#include <functional>
#include <optional>
#include <vector>

#include "tmw/frac.hpp"
#include "tmw/polydisc.hpp"
#include "tmw/rat.hpp"
#include "tmw/tmodule.hpp"
#include "tmw/trunc_series.hpp"

namespace tmw {

// absolute height of a k-rational point: max over coordinates of
// H(alpha/beta) = q^{max(deg alpha, deg beta)}, H(0) = 1
Mag point_height(const std::vector<Frac>& z);
// coordinatewise inversion; every coordinate must be nonzero
std::vector<Frac> invert_point(const std::vector<Frac>& z);

// L_a(beta) = #{mu in N^a : |mu| = beta}; D_a(b) = #{mu : |mu| <= b}
BigInt count_exact_degree(int a, int beta);
BigInt count_upto_degree(int a, int b);

// Combinatorial exponents of the determinant bound. V_paper follows the
// displayed formula sum_{beta<=d} L_h(beta) beta; V_alt sums only to b; the
// covering threshold uses V_threshold = max(V_paper, sum_{mu in Delta_d(delta)} |mu|),
// the exponent that clears denominators in the vanishing argument.
struct CombinatorialExponents {
  int h = 0, d = 0, delta = 0;
  BigInt D, b, B, V_paper, V_alt, V_threshold;
  Rat eps, eps_alt, eps_threshold;
};
CombinatorialExponents exponents(int h, int d, int delta);

// affine hypersurface of degree <= delta in d variables over k
struct Hypersurface {
  int d = 0, delta = 0;
  std::vector<std::pair<Expo, Frac>> coeffs;

  Frac eval(const std::vector<Frac>& P) const;
  bool vanishes_at(const std::vector<Frac>& P) const { return eval(P).is_zero(); }
  bool is_nonzero() const;
};

// interpolation through the minor construction: one hypersurface of degree
// <= delta through all given points, when the monomial-evaluation matrix is
// rank-deficient; nullopt when the points impose independent conditions
std::optional<Hypersurface> interpolate_hypersurface(const std::vector<std::vector<Frac>>& pts,
                                                     int d, int delta);

// the D x D monomial-composite determinant det(P_j^mu) over the exponents
// Delta_d(delta); points are images of the parametrization
Frac monomial_determinant(const std::vector<std::vector<Frac>>& pts, int d, int delta);

struct DetBoundReport {
  Mag det_abs, c, bound;
  BigInt B;
  bool holds = false;
  bool det_is_zero = false;
};
// Lemma-style determinant bound: |det(Phi_mu(z_j))| <= c r^B, with c the max
// Gauss norm of all hyperderivative series of the composites through order
// b+1. Throws when the series truncation cannot represent the composites.
DetBoundReport determinant_bound(const std::vector<TruncSeries<Frac>>& Phi,
                                 const std::vector<std::vector<Frac>>& domain_pts, int delta,
                                 int r_exp);

// Gauss-norm constant c of the composites (exact, certified on the closed
// unit polydisc)
Mag composite_gauss_constant(const std::vector<TruncSeries<Frac>>& Phi, int delta, int b_plus_1);

struct CoverCell {
  Polydisc disc;
  std::vector<std::vector<Frac>> points;  // image points collected in the cell
  std::optional<Hypersurface> hyp;
};
struct CoverReport {
  CombinatorialExponents ex;
  Mag c;
  int r_exp = 0;      // radius q^{-r_exp}
  BigInt cover_size;  // exactly r^{-h}
  std::vector<CoverCell> cells;  // cells that received points
  long long points_total = 0;
  Mag bound_harness;  // q^h c^{h/B} |a|^eps, the exact checked bound
  double bound_paper = 0;  // (c/2)^{h/B} |a|^eps, reported for reference
};

// Covers B_1^h by the r^{-h} polydiscs whose radius satisfies the vanishing
// threshold c r^B |a|^V < 1 (largest power of q), enumerates the rational
// points of height <= |a| hit by the parametrization, and interpolates one
// hypersurface of degree <= delta per occupied cell, verified exactly.
CoverReport cover_and_interpolate(const std::vector<TruncSeries<Frac>>& Phi, const Poly& a,
                                  int delta);

// rational points of the closed unit polydisc B_1^1(k) with height <= q^cap,
// in canonical form
std::vector<Frac> unit_fractions_up_to_height(const GF& gf, int cap);
// all k-rational points with height <= q^cap (no unit-disc restriction)
std::vector<Frac> fractions_up_to_height(const GF& gf, int cap);

// membership predicate on k-rational points
using PointTest = std::function<bool(const std::vector<Frac>&)>;

// one declared semi-algebraic component: a variety cut by polynomials,
// optionally intersected with a polydisc (given by max |coordinate|)
struct SemiAlgebraicPart {
  std::vector<Hypersurface> equations;
  std::optional<Mag> radius;  // membership also requires |z_i| <= radius
  bool contains(const std::vector<Frac>& z) const;
};

// W as a membership test: truncated series equations evaluated exactly and
// tested to vanish at the given precision, minus declared algebraic parts
struct Region {
  int d = 1;
  std::vector<TruncSeries<Frac>> equations;  // empty = whole space
  int eval_prec = 48;
  std::vector<SemiAlgebraicPart> algebraic_part;

  bool contains(const std::vector<Frac>& z) const;       // in W
  bool in_algebraic_part(const std::vector<Frac>& z) const;
};

// membership of the inverted region: z in W2^{-1} iff z^{-1} in W2
PointTest invert_region(PointTest membership);

struct CountReport {
  Poly a;
  long long N_bracket = 0;  // |(W \ W^alg)(k, [a])|
  long long N_height = 0;   // |(W \ W^alg)(k, a)|
  BigInt cover_size;
  long long hypersurfaces = 0;
  long long max_points_per_hyp = 0;
  Mag bound_harness;
  double bound_paper = 0;
  Rat eps;
  bool bound_holds = false;
};

// exact counts by full enumeration (the oracle side of the harness); the
// guard rejects q^{d deg a} or height-enumeration sizes beyond 10^7
CountReport brute_force_count(const Region& W, const Poly& a);

// the union constant of the subadditivity step
inline double union_constant(double c_A, double c_B) { return c_A + c_B; }

}  // namespace tmw

#endif  // TMW_COUNTING_HPP
