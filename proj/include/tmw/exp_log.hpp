#ifndef TMW_EXP_LOG_HPP
#define TMW_EXP_LOG_HPP

#include <vector>

#include "tmw/tmodule.hpp"

namespace tmw {

// F_q-linear series sum_i B_i z^{(q^i)} with m x m matrix coefficients over
// k; z^{(q^i)} is the coordinatewise q^i-th power.
struct TwistedSeries {
  int q = 2;
  int m = 1;
  std::vector<Mat<Frac>> B;  // index i is the z^{(q^i)} coefficient

  int order() const { return int(B.size()) - 1; }
};

// Exponential coefficients solved from the functional equation
// e(dPhi(T) z) = Phi(T)(e(z)): B_0 = I and for each i >= 1 the Sylvester-type
// relation B_i (T^{q^i} I + N^{(q^i)}) - (T I + N) B_i = sum_{j>=1} a_j B_{i-j}^{(q^j)},
// solved by inverting the scalar part and iterating the nilpotent correction.
TwistedSeries exp_coefficients(const TModule& M, int order);

// Compositional inverse of the exponential through the stored order.
TwistedSeries log_coefficients(const TModule& M, int order);
TwistedSeries series_compositional_inverse(const TwistedSeries& s);

// (f o g) truncated at the stored order: sum_s (sum_{i+j=s} F_i G_j^{(q^i)}) z^{(q^s)}
TwistedSeries series_compose(const TwistedSeries& f, const TwistedSeries& g);

// checks the functional equation as an exact identity of truncated series
// through the given order
bool functional_equation_holds(const TModule& M, const TwistedSeries& e, int order);

// log_q of the max-entry magnitude of B_i, for tail estimates
Rat coefficient_norm_exponent(const Mat<Frac>& B);

// Evaluation with a certified tail: requires a verified window of coefficient
// norm bounds so that the dropped tail is provably below the returned
// precision. Throws "tail not certifiable at this truncation" otherwise.
std::vector<Laurent> exp_eval(const TModule& M, const TwistedSeries& e,
                              const std::vector<Laurent>& z, int prec);

// The Carlitz period for q = 2, normalized as xi = T log_C(T); verified by
// e(xi) = 0 and e(xi/T) = T at the working precision.
Laurent carlitz_period(int q, int prec);

}  // namespace tmw

#endif  // TMW_EXP_LOG_HPP
