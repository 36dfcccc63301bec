#ifndef TMW_NEWTON_HPP
#define TMW_NEWTON_HPP

#include <vector>

#include "tmw/laurent.hpp"

namespace tmw {

// Dense univariate polynomial over k_inf, coefficient i of x^i.
using LPoly = std::vector<Laurent>;

Laurent lpoly_eval(const LPoly& f, const Laurent& x);
LPoly lpoly_derivative(const LPoly& f);

struct NewtonEdge {
  Rat root_valuation;  // v_{1/T} of the roots on this segment
  int i_lo = 0, i_hi = 0;
  int length() const { return i_hi - i_lo; }  // number of roots on the segment
};

// Lower convex hull of (i, v(c_i)); coefficients indistinguishable from zero
// at precision are skipped.
std::vector<NewtonEdge> newton_polygon(const LPoly& f);

struct RootSearch {
  std::vector<Laurent> roots;      // roots found in k_inf, each to the requested precision
  std::vector<Rat> ramified;       // root valuations lying in ramified extensions
  int zero_multiplicity = 0;       // multiplicity of the root x = 0
  bool complete = true;            // false when recursion depth was exhausted
};

// All roots of f in k_inf with integer-slope Newton segments; non-integral
// slopes are reported, not solved.
RootSearch all_roots(const LPoly& f, int prec);

// Lift one root from the segment whose roots have the given valuation.
// Requires a simple nonzero residual root on that segment.
Laurent hensel_root(const LPoly& f, int root_valuation, int prec);

}  // namespace tmw

#endif  // TMW_NEWTON_HPP
