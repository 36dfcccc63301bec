#ifndef TMW_POLYDISC_HPP
#define TMW_POLYDISC_HPP

#include <string>
#include <vector>

#include "tmw/laurent.hpp"

namespace tmw {

// Closed polydisc in k_inf^h: membership is max-norm distance to the center
// at most the radius, a power of q. In the ultrametric, two polydiscs of
// equal radius are disjoint or identical.
struct Polydisc {
  std::vector<Laurent> center;
  int radius_exp;  // radius = q^{-radius_exp}

  int dim() const { return int(center.size()); }
  Mag radius() const { return Mag::qpow(-radius_exp); }

  bool contains(const std::vector<Laurent>& z) const {
    if (z.size() != center.size()) return false;
    for (size_t i = 0; i < z.size(); ++i) {
      Laurent d = z[i] - center[i];
      if (d.nonzero_at_precision() && *d.val() < radius_exp) return false;
    }
    return true;
  }

  std::string str() const {
    std::string s = "disc(r=q^-" + std::to_string(radius_exp) + "; center=[";
    for (size_t i = 0; i < center.size(); ++i) {
      if (i) s += ", ";
      s += center[i].pretty();
    }
    return s + "])";
  }
};

// The r^{-h} polydiscs of radius r = q^{-s} covering the closed unit polydisc
// B_1^h(k_inf): centers run over all tuples of polynomials in 1/T of degree
// < s. The cover is a partition.
std::vector<Polydisc> unit_polydisc_cover(const GF& gf, int h, int s);

}  // namespace tmw

#endif  // TMW_POLYDISC_HPP
