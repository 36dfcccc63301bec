#ifndef TMW_RESTRICTION_HPP
#define TMW_RESTRICTION_HPP

#include <utility>
#include <vector>

#include "tmw/extfield.hpp"
#include "tmw/trunc_series.hpp"

namespace tmw {

// The adapted basis alpha^{j-1} e_i of L^m over k_inf, ordered by
// (i,j) < (i,j+1) < (i+1,j). Returned as the ordered list of (i, j) pairs
// (1-based, matching the basis vector alpha^{j-1} e_i).
std::vector<std::pair<int, int>> adapted_basis_order(int n, int m);

// psi: L^m -> k_inf^{nm}, reading off coordinates in the adapted basis order
std::vector<Laurent> adapted_coordinates(const std::vector<ExtElem>& z);
std::vector<ExtElem> from_adapted_coordinates(const ExtFieldPtr& F,
                                              const std::vector<Laurent>& w, int m);

// Restriction of scalars: for f truncated over L in m variables, produce the
// n component series h_1..h_n over k_inf in n*m variables w_{i,j} with
// f(psi^{-1}(w)) = sum_j alpha^{j-1} h_j(w), an identity of truncations.
// Requires the certified |alpha| = 1 normalization. The coefficient bound
// |c_eta| <= max_mu |a_mu| is asserted during construction.
std::vector<TruncSeries<Laurent>> restriction_of_scalars(const TruncSeries<ExtElem>& f,
                                                         const ExtFieldPtr& F);

// recombine sum_j alpha^{j-1} h_j as a series over L in the n*m variables
TruncSeries<ExtElem> recombine_restriction(const std::vector<TruncSeries<Laurent>>& h,
                                           const ExtFieldPtr& F);

// Decomposition of z in L^m over the basis (omega_1..omega_d, completion by
// adapted basis vectors): z = sum w_i omega_i + sum w_i u_i. Returns the nm
// coordinates (periods first) and the chosen completion indices.
struct LatticeDecomposition {
  std::vector<Laurent> w;
  std::vector<int> completion;  // indices into the adapted basis order
};
LatticeDecomposition lattice_decompose(const std::vector<ExtElem>& z,
                                       const std::vector<std::vector<ExtElem>>& periods);

}  // namespace tmw

#endif  // TMW_RESTRICTION_HPP
