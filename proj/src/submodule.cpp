#include "tmw/submodule.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tmw/binom.hpp"

namespace tmw {

SubgroupPattern SubgroupPattern::coordinates(int m, std::vector<int> zeros) {
  SubgroupPattern s;
  s.m = m;
  std::sort(zeros.begin(), zeros.end());
  for (int z : zeros)
    if (z < 0 || z >= m) throw std::invalid_argument("SubgroupPattern: coordinate out of range");
  s.zero_coords = std::move(zeros);
  return s;
}

SubgroupPattern SubgroupPattern::subspace(std::vector<std::vector<Frac>> basis_vectors) {
  if (basis_vectors.empty()) throw std::invalid_argument("SubgroupPattern: empty basis");
  SubgroupPattern s;
  s.m = int(basis_vectors[0].size());
  s.basis = std::move(basis_vectors);
  return s;
}

int SubgroupPattern::dim() const {
  if (!basis.empty()) return int(basis.size());
  return m - int(zero_coords.size());
}

std::string SubgroupPattern::str() const {
  if (!basis.empty()) return "subspace(dim " + std::to_string(basis.size()) + ")";
  std::string out;
  for (int i = 0; i < m; ++i) {
    if (i) out += " x ";
    bool zero = std::find(zero_coords.begin(), zero_coords.end(), i) != zero_coords.end();
    out += zero ? "0" : "Ga";
  }
  return out;
}

Mat<Frac> dphi_power(const TModule& M, int j) {
  const GF& gf = M.gf();
  Frac T = Frac(Poly::variable(gf));
  Mat<Frac> I = Mat<Frac>::identity(M.m, T);
  Mat<Frac> N = M.phi_T.differential() - I.scaled(T);
  // (T I + N)^j = sum_i C(j, i) T^{j-i} N^i, C(j, i) taken mod p
  Mat<Frac> acc = Mat<Frac>::zeros(M.m, M.m, T);
  Mat<Frac> Npow = I;
  for (int i = 0; i <= std::min(j, M.m - 1); ++i) {
    uint8_t b = binom_mod_p(uint64_t(j), uint64_t(i), gf.p());
    if (b != 0) {
      Frac scal = Frac::constant(gf, b) * Frac(Poly::monomial(gf, j - i, 1));
      acc = acc + Npow.scaled(scal);
    }
    Npow = Npow * N;
  }
  return acc;
}

namespace {

// human-readable additive form of one coordinate of Phi(a) restricted to the
// free coordinates of a pattern: entries (s, j, coefficient)
std::string coordinate_expression(const TwistedPoly<Frac>& phi, int row,
                                  const std::vector<int>& free_coords) {
  std::ostringstream os;
  bool first = true;
  for (int s = 0; s <= phi.deg(); ++s)
    for (int j : free_coords) {
      const Frac& c = phi.coeff_ref(s)(row, j);
      if (c.is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      if (!c.is_one()) os << "(" << c.str() << ")*";
      os << "X" << j + 1;
      if (s == 1) os << "^q";
      if (s > 1) os << "^(q^" << s << ")";
    }
  if (first) os << "0";
  return os.str();
}

}  // namespace

StabilizationVerdict is_stabilized(const TModule& M, const Poly& a, const SubgroupPattern& S) {
  if (S.m != M.m) throw std::invalid_argument("is_stabilized: dimension mismatch");
  TwistedPoly<Frac> phi = phi_action(M, a);
  StabilizationVerdict v;

  if (S.basis.empty()) {
    // coordinate pattern: the image coordinate i (constrained to 0) must have
    // no dependence on any free coordinate j at any twist
    std::vector<int> free_coords;
    for (int j = 0; j < M.m; ++j)
      if (std::find(S.zero_coords.begin(), S.zero_coords.end(), j) == S.zero_coords.end())
        free_coords.push_back(j);
    for (int i : S.zero_coords)
      for (int s = 0; s <= phi.deg(); ++s)
        for (int j : free_coords)
          if (!phi.coeff_ref(s)(i, j).is_zero()) {
            v.stabilized = false;
            v.witness = "coordinate " + std::to_string(i + 1) + " of Phi(" + a.str() +
                        ")(pattern) = " + coordinate_expression(phi, i, free_coords) + " != 0";
            return v;
          }
    v.stabilized = true;
    return v;
  }

  // linear subspace: for every twist s and basis vector b, the image
  // M_s b^{(q^s)} must lie in the span of the basis
  const GF& gf = M.gf();
  int dim = int(S.basis.size());
  for (int s = 0; s <= phi.deg(); ++s) {
    if (phi.coeff_ref(s).is_zero()) continue;
    for (int t = 0; t < dim; ++t) {
      std::vector<Frac> btw(size_t(M.m), Frac::zero(gf));
      for (int i = 0; i < M.m; ++i) btw[size_t(i)] = S.basis[size_t(t)][size_t(i)].frobenius_q(unsigned(s));
      std::vector<Frac> img = phi.coeff_ref(s).apply(btw);
      // rank test: does img extend the span?
      Mat<Frac> Mb(dim + 1, M.m, Frac::zero(gf));
      for (int r = 0; r < dim; ++r)
        for (int cc = 0; cc < M.m; ++cc) Mb(r, cc) = S.basis[size_t(r)][size_t(cc)];
      for (int cc = 0; cc < M.m; ++cc) Mb(dim, cc) = img[size_t(cc)];
      if (Mb.rank() > dim) {
        v.stabilized = false;
        std::ostringstream os;
        os << "twist tau^" << s << " image of basis vector " << t + 1 << " leaves the subspace";
        v.witness = os.str();
        return v;
      }
    }
  }
  v.stabilized = true;
  return v;
}

std::vector<FamilyScanRow> coordinate_family_scan(int m, int q) {
  const GF& gf = GF::of_order(q);
  int p = gf.p();
  if (m % p != 0)
    throw std::invalid_argument("coordinate_family_scan: requires p | m for the p^beta families");
  TModule M = carlitz_tensor(m, q);
  std::vector<FamilyScanRow> rows;
  for (int pb = p, beta = 1; m % pb == 0; pb *= p, ++beta) {
    std::vector<int> zeros;
    for (int s = 0; s * pb < m; ++s) zeros.push_back(s * pb);
    FamilyScanRow row;
    row.beta = beta;
    row.pattern = SubgroupPattern::coordinates(m, zeros);
    Poly t_pb = Poly::monomial(gf, pb, 1);
    auto v1 = is_stabilized(M, t_pb, row.pattern);
    row.stabilized_by_p_beta = v1.stabilized;
    if (beta >= 1) {
      Poly t_prev = Poly::monomial(gf, pb / p, 1);
      auto v0 = is_stabilized(M, t_prev, row.pattern);
      row.stabilized_by_p_beta_minus_1 = v0.stabilized;
      if (!v0.stabilized) row.witness = v0.witness;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CongruenceVerdict binomial_congruence_check(int j, int m, int p, int q) {
  if (j <= m) throw std::invalid_argument("binomial_congruence_check: requires j > m");
  CongruenceVerdict v;
  v.congruence_holds = true;
  for (int i = 1; i < m; ++i)
    if (binom_mod_p(uint64_t(j), uint64_t(i), p) != binom_mod_p(uint64_t(m), uint64_t(i), p))
      v.congruence_holds = false;
  if (!v.congruence_holds) return v;
  // sufficiency cross-check on sampled coordinate patterns of C^{(x)m}:
  // a pattern stabilized by T^j must be stabilized by T^m
  const GF& gf = GF::of_order(q);
  TModule M = carlitz_tensor(m, q);
  Poly tj = Poly::monomial(gf, j, 1), tm = Poly::monomial(gf, m, 1);
  for (int mask = 1; mask < (1 << m) - 1; ++mask) {
    std::vector<int> zeros;
    for (int i = 0; i < m; ++i)
      if (mask & (1 << i)) zeros.push_back(i);
    SubgroupPattern S = SubgroupPattern::coordinates(m, zeros);
    bool sj = is_stabilized(M, tj, S).stabilized;
    bool sm = is_stabilized(M, tm, S).stabilized;
    if (sj && !sm) {
      v.cross_validated = false;
      v.notes.push_back("pattern " + S.str() + " is sub-T^" + std::to_string(j) +
                        " but not sub-T^" + std::to_string(m));
    }
  }
  return v;
}

MinimalJReport scan_minimal_j(const TModule& M, int jmax) {
  const GF& gf = M.gf();
  MinimalJReport rep;
  rep.jmax = jmax;
  // candidate subgroups: all proper nonempty coordinate patterns stabilized
  // by some Phi(a) with deg a in [1, jmax]
  std::vector<SubgroupPattern> candidates;
  for (int mask = 1; mask < (1 << M.m) - 1; ++mask) {
    std::vector<int> zeros;
    for (int i = 0; i < M.m; ++i)
      if (mask & (1 << i)) zeros.push_back(i);
    SubgroupPattern S = SubgroupPattern::coordinates(M.m, zeros);
    bool ever = false;
    for (int dj = 1; dj <= jmax && !ever; ++dj)
      ever = is_stabilized(M, Poly::monomial(gf, dj, 1), S).stabilized;
    if (ever) candidates.push_back(S);
  }
  if (candidates.empty()) {
    rep.notes.push_back("no proper coordinate pattern is stabilized up to T^" +
                        std::to_string(jmax) + "; the scan is consistent with j = 1");
    rep.j = 1;
    return rep;
  }
  for (int j = 1; j <= jmax; ++j) {
    bool all = true;
    for (const auto& S : candidates)
      all &= is_stabilized(M, Poly::monomial(gf, j, 1), S).stabilized;
    if (all) {
      rep.j = j;
      rep.notes.push_back("all scanned candidate patterns are stabilized by T^" +
                          std::to_string(j) + " (empirical; not a minimality proof)");
      return rep;
    }
  }
  rep.notes.push_back("no single T^j stabilizes all scanned candidates up to jmax");
  return rep;
}

}  // namespace tmw
