#include "tmw/counting.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "tmw/binom.hpp"

namespace tmw {

Mag point_height(const std::vector<Frac>& z) {
  Mag h = Mag::one();
  for (const Frac& c : z) h = Mag::max(h, c.height());
  return h;
}

std::vector<Frac> invert_point(const std::vector<Frac>& z) {
  std::vector<Frac> out;
  for (const Frac& c : z) out.push_back(c.inverse());
  return out;
}

BigInt count_exact_degree(int a, int beta) {
  // compositions of beta into a parts: C(beta + a - 1, a - 1)
  if (beta == 0) return 1;
  return binomial_exact(unsigned(beta + a - 1), unsigned(a - 1));
}

BigInt count_upto_degree(int a, int b) {
  // C(b + a, a)
  return binomial_exact(unsigned(b + a), unsigned(a));
}

CombinatorialExponents exponents(int h, int d, int delta) {
  if (h >= d) throw std::invalid_argument("exponents: requires h < d");
  if (delta < 1) throw std::invalid_argument("exponents: delta >= 1 required");
  CombinatorialExponents ex;
  ex.h = h;
  ex.d = d;
  ex.delta = delta;
  ex.D = count_upto_degree(d, delta);
  // b: the largest value with D_h(b) <= D (so D_h(b) <= D < D_h(b+1))
  BigInt b = 0;
  while (count_upto_degree(h, int(b) + 1) <= ex.D) ++b;
  ex.b = b;
  // B = sum_{beta<=b} L_h(beta) beta + (D - sum_{beta<=b} L_h(beta)) (b+1)
  BigInt sumL = 0, sumLb = 0;
  for (int beta = 0; beta <= int(b); ++beta) {
    BigInt L = count_exact_degree(h, beta);
    sumL += L;
    sumLb += L * beta;
  }
  ex.B = sumLb + (ex.D - sumL) * (b + 1);
  // V_paper sums to d, V_alt to b
  BigInt vp = 0, va = 0, vthr = 0;
  for (int beta = 0; beta <= d; ++beta) vp += count_exact_degree(h, beta) * beta;
  for (int beta = 0; beta <= int(b); ++beta) va += count_exact_degree(h, beta) * beta;
  // denominator-clearing exponent: sum over Delta_d(delta) of |mu|
  for (int beta = 0; beta <= delta; ++beta) vthr += count_exact_degree(d, beta) * beta;
  ex.V_paper = vp;
  ex.V_alt = va;
  ex.V_threshold = vthr > vp ? vthr : vp;
  ex.eps = Rat(h * vp, ex.B);
  ex.eps_alt = Rat(h * va, ex.B);
  ex.eps_threshold = Rat(h) * Rat(ex.V_threshold, ex.B);
  return ex;
}

Frac Hypersurface::eval(const std::vector<Frac>& P) const {
  if (int(P.size()) != d) throw std::invalid_argument("Hypersurface: point dimension");
  const GF& gf = P.at(0).gf();
  Frac acc = Frac::zero(gf);
  for (auto& [e, c] : coeffs) {
    Frac term = c;
    for (int i = 0; i < d; ++i)
      for (int t = 0; t < int(e[size_t(i)]); ++t) term = term * P[size_t(i)];
    acc = acc + term;
  }
  return acc;
}

bool Hypersurface::is_nonzero() const {
  for (auto& [e, c] : coeffs)
    if (!c.is_zero()) return true;
  return false;
}

Frac monomial_determinant(const std::vector<std::vector<Frac>>& pts, int d, int delta) {
  auto expos = all_exponents(d, delta);
  size_t D = expos.size();
  if (pts.size() != D)
    throw std::invalid_argument("monomial_determinant: need exactly D_d(delta) points");
  const GF& gf = pts[0][0].gf();
  Mat<Frac> M(static_cast<int>(D), static_cast<int>(D), Frac::zero(gf));
  for (size_t r = 0; r < D; ++r)
    for (size_t j = 0; j < D; ++j) {
      Frac term = Frac::one(gf);
      for (int i = 0; i < d; ++i)
        for (int t = 0; t < int(expos[r][size_t(i)]); ++t) term = term * pts[j][size_t(i)];
      M(int(r), int(j)) = term;
    }
  return M.det();
}

std::optional<Hypersurface> interpolate_hypersurface(const std::vector<std::vector<Frac>>& pts,
                                                     int d, int delta) {
  if (pts.empty()) return std::nullopt;
  const GF& gf = pts[0][0].gf();
  auto expos = all_exponents(d, delta);
  size_t D = expos.size();
  // monomial-evaluation rows, one per point
  auto row_of = [&](const std::vector<Frac>& P) {
    std::vector<Frac> row;
    row.reserve(D);
    for (const Expo& e : expos) {
      Frac term = Frac::one(gf);
      for (int i = 0; i < d; ++i)
        for (int t = 0; t < int(e[size_t(i)]); ++t) term = term * P[size_t(i)];
      row.push_back(term);
    }
    return row;
  };
  // greedy independent rows
  std::vector<std::vector<Frac>> rows;
  std::vector<size_t> row_pts;
  for (size_t p = 0; p < pts.size(); ++p) {
    auto cand = rows;
    cand.push_back(row_of(pts[p]));
    Mat<Frac> M(int(cand.size()), int(D), Frac::zero(gf));
    for (size_t i = 0; i < cand.size(); ++i)
      for (size_t j = 0; j < D; ++j) M(int(i), int(j)) = cand[i][j];
    if (M.rank() == int(cand.size())) {
      rows = std::move(cand);
      row_pts.push_back(p);
    }
  }
  size_t l = rows.size();
  if (l >= D) return std::nullopt;  // points impose independent conditions
  // pivot columns of the row space
  std::vector<size_t> pivots;
  {
    Mat<Frac> M(int(l), int(D), Frac::zero(gf));
    for (size_t i = 0; i < l; ++i)
      for (size_t j = 0; j < D; ++j) M(int(i), int(j)) = rows[i][j];
    // row echelon with column tracking
    size_t rk = 0;
    for (size_t col = 0; col < D && rk < l; ++col) {
      int piv = -1;
      for (size_t i = rk; i < l; ++i)
        if (!M(int(i), int(col)).is_zero()) {
          piv = int(i);
          break;
        }
      if (piv < 0) continue;
      M.swap_rows(piv, int(rk));
      Frac inv = Frac::one(gf) / M(int(rk), int(col));
      for (size_t i = rk + 1; i < l; ++i) {
        if (M(int(i), int(col)).is_zero()) continue;
        Frac f = M(int(i), int(col)) * inv;
        for (size_t j = col; j < D; ++j)
          M(int(i), int(j)) = M(int(i), int(j)) - f * M(int(rk), int(j));
      }
      pivots.push_back(col);
      ++rk;
    }
  }
  // mu* = first non-pivot column
  size_t mu_star = D;
  for (size_t j = 0; j < D; ++j)
    if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) {
      mu_star = j;
      break;
    }
  if (mu_star == D) return std::nullopt;
  std::vector<size_t> cols = pivots;
  cols.push_back(mu_star);
  // f(X) = det of the (l+1)x(l+1) matrix whose last row is the monomial row
  // of X; expand along that row into cofactors
  Hypersurface hyp;
  hyp.d = d;
  hyp.delta = delta;
  for (size_t t = 0; t < cols.size(); ++t) {
    // minor with column cols[t] removed
    Mat<Frac> Mi(static_cast<int>(l), static_cast<int>(l), Frac::zero(gf));
    int cc = 0;
    for (size_t j = 0; j < cols.size(); ++j) {
      if (j == t) continue;
      for (size_t i = 0; i < l; ++i) Mi(int(i), cc) = rows[i][cols[j]];
      ++cc;
    }
    Frac cof = l == 0 ? Frac::one(gf) : Mi.det();
    // sign (-1)^{l + t} from the cofactor expansion of the bottom row
    if ((l + t) % 2 == 1) cof = -cof;
    if (!cof.is_zero()) hyp.coeffs.push_back({expos[cols[t]], cof});
  }
  if (!hyp.is_nonzero()) return std::nullopt;
  // construction guarantees exact vanishing; verify anyway
  for (const auto& P : pts)
    if (!hyp.vanishes_at(P))
      throw std::runtime_error("interpolate_hypersurface: vanishing verification failed");
  return hyp;
}

Mag composite_gauss_constant(const std::vector<TruncSeries<Frac>>& Phi, int delta,
                             int b_plus_1) {
  if (Phi.empty()) throw std::invalid_argument("composite_gauss_constant: no maps");
  int h = Phi[0].nvars(), d = int(Phi.size());
  const GF& gf = Phi[0].like().gf();
  int cap = Phi[0].maxdeg();
  // composites must be exactly representable within the truncation
  int max_term = 0;
  for (const auto& f : Phi)
    for (auto& [e, v] : f.terms()) max_term = std::max(max_term, expo_total(e));
  if (max_term * delta > cap)
    throw std::invalid_argument(
        "insufficient truncation to evaluate the monomial composites at this delta");
  Mag c = Mag::zero();
  // cached powers of the maps
  auto pows = std::vector<std::vector<TruncSeries<Frac>>>(size_t(d));
  for (int i = 0; i < d; ++i)
    pows[size_t(i)].push_back(TruncSeries<Frac>::constant(h, cap, Frac::one(gf)));
  for (const Expo& mu : all_exponents(d, delta)) {
    TruncSeries<Frac> comp = TruncSeries<Frac>::constant(h, cap, Frac::one(gf));
    for (int i = 0; i < d; ++i) {
      while (int(pows[size_t(i)].size()) <= mu[size_t(i)])
        pows[size_t(i)].push_back(pows[size_t(i)].back() * Phi[size_t(i)]);
      if (mu[size_t(i)] > 0) comp = comp * pows[size_t(i)][mu[size_t(i)]];
    }
    // Gauss norms of all hyperderivative series through order b+1: the
    // mu'-th hyperderivative of sum a_nu z^nu has coefficients C(nu, mu') a_nu
    for (const Expo& mup : all_exponents(h, b_plus_1)) {
      for (auto& [nu, a] : comp.terms()) {
        bool ge = true;
        for (int i = 0; i < h; ++i) ge &= nu[size_t(i)] >= mup[size_t(i)];
        if (!ge) continue;
        uint8_t bin = 1;
        for (int i = 0; i < h && bin; ++i)
          bin = uint8_t((bin * binom_mod_p(nu[size_t(i)], mup[size_t(i)], gf.p())) % gf.p());
        if (bin == 0) continue;
        c = Mag::max(c, a.abs());
      }
    }
  }
  return c;
}

DetBoundReport determinant_bound(const std::vector<TruncSeries<Frac>>& Phi,
                                 const std::vector<std::vector<Frac>>& domain_pts, int delta,
                                 int r_exp) {
  int h = Phi[0].nvars(), d = int(Phi.size());
  CombinatorialExponents ex = exponents(h, d, delta);
  DetBoundReport rep;
  rep.B = ex.B;
  rep.c = composite_gauss_constant(Phi, delta, int(ex.b) + 1);
  // image points and the D x D determinant
  std::vector<std::vector<Frac>> img;
  for (const auto& z : domain_pts) {
    std::vector<Frac> P;
    for (const auto& f : Phi) P.push_back(f.eval(z));
    img.push_back(std::move(P));
  }
  Frac det = monomial_determinant(img, d, delta);
  rep.det_is_zero = det.is_zero();
  rep.det_abs = det.abs();
  rep.bound = rep.c * Mag::qpow(Rat(-(long long)r_exp) * Rat(ex.B));
  rep.holds = rep.det_abs <= rep.bound;
  return rep;
}

std::vector<Frac> unit_fractions_up_to_height(const GF& gf, int cap) {
  std::vector<Frac> out;
  std::set<std::vector<uint8_t>> seen;
  // beta monic of degree db, alpha of degree <= db (so |alpha/beta| <= 1)
  std::vector<Poly> denoms;
  for (int db = 0; db <= cap; ++db) {
    std::vector<uint8_t> digits(size_t(db) + 1, 0);
    digits[size_t(db)] = 1;
    while (true) {
      denoms.push_back(Poly(gf, digits));
      int k = 0;
      while (k < db) {
        if (++digits[size_t(k)] < gf.q()) break;
        digits[size_t(k)] = 0;
        ++k;
      }
      if (k >= db) break;
    }
  }
  for (const Poly& den : denoms) {
    int db = den.degree();
    std::vector<uint8_t> nd(size_t(db) + 1, 0);
    while (true) {
      Poly num(gf, nd);
      Frac f(num, den);
      // canonical key
      std::vector<uint8_t> key = f.num().coeffs();
      key.push_back(255);
      for (uint8_t x : f.den().coeffs()) key.push_back(x);
      if (point_height({f}) <= Mag::qpow(cap) && seen.insert(key).second) out.push_back(f);
      int k = 0;
      while (k <= db) {
        if (++nd[size_t(k)] < gf.q()) break;
        nd[size_t(k)] = 0;
        ++k;
      }
      if (k > db) break;
    }
  }
  return out;
}

std::vector<Frac> fractions_up_to_height(const GF& gf, int cap) {
  std::vector<Frac> out = unit_fractions_up_to_height(gf, cap);
  std::set<std::vector<uint8_t>> seen;
  for (const Frac& f : out) {
    std::vector<uint8_t> key = f.num().coeffs();
    key.push_back(255);
    for (uint8_t x : f.den().coeffs()) key.push_back(x);
    seen.insert(key);
  }
  // add the exterior points: numerator degree above denominator degree
  std::vector<Frac> unit = out;
  for (const Frac& f : unit) {
    if (f.is_zero()) continue;
    Frac inv = f.inverse();
    std::vector<uint8_t> key = inv.num().coeffs();
    key.push_back(255);
    for (uint8_t x : inv.den().coeffs()) key.push_back(x);
    if (seen.insert(key).second) out.push_back(inv);
  }
  return out;
}

CoverReport cover_and_interpolate(const std::vector<TruncSeries<Frac>>& Phi, const Poly& a,
                                  int delta) {
  if (Phi.empty()) throw std::invalid_argument("cover_and_interpolate: no maps");
  if (a.is_zero()) throw std::invalid_argument("cover_and_interpolate: a must satisfy |a| >= 1");
  const GF& gf = a.gf();
  int h = Phi[0].nvars(), d = int(Phi.size());
  CoverReport rep;
  rep.ex = exponents(h, d, delta);
  rep.c = composite_gauss_constant(Phi, delta, int(rep.ex.b) + 1);
  // radius: the largest q^{-s} with c r^B |a|^{V} < 1 (exact in exponents)
  long long e_c = rep.c.is_zero()
                      ? 0
                      : (boost::multiprecision::numerator(rep.c.exponent()) /
                         boost::multiprecision::denominator(rep.c.exponent()))
                            .convert_to<long long>();
  long long e_a = a.degree();
  BigInt E = BigInt(e_c) + rep.ex.V_threshold * e_a;
  BigInt s = E >= 0 ? E / rep.ex.B + 1 : BigInt(0);
  rep.r_exp = s.convert_to<int>();
  BigInt cs = 1;
  for (int t = 0; t < h * rep.r_exp; ++t) cs *= gf.q();
  rep.cover_size = cs;
  // the harness bound q^h c^{h/B} |a|^{eps_threshold}: cover_size <= bound
  // by the choice of s (the same V enters the radius rule and the bound)
  rep.bound_harness =
      Mag::qpow(Rat(h) + Rat(h) * Rat(BigInt(e_c) + rep.ex.V_threshold * e_a, rep.ex.B));
  {
    double cval = rep.c.to_double(gf.q());
    double hb = double(rep.ex.h) / double(rep.ex.B.convert_to<long long>());
    rep.bound_paper = std::pow(cval / 2.0, hb) *
                      std::pow(double(gf.q()), double(e_a) * hb *
                                                   double(rep.ex.V_paper.convert_to<long long>()) /
                                                   double(rep.ex.h));
  }

  // rational points of B_1^h of height <= |a| whose images are rational of
  // height <= |a|, grouped into covering cells by their leading digits
  std::vector<Frac> coords = unit_fractions_up_to_height(gf, a.degree());
  std::vector<size_t> idx(size_t(h), 0);
  std::map<std::vector<uint8_t>, CoverCell> cells;
  double total = std::pow(double(coords.size()), h);
  if (total > 2e6) throw std::invalid_argument("cover_and_interpolate: enumeration too large");
  int s_digits = rep.r_exp;
  while (true) {
    std::vector<Frac> w;
    for (int i = 0; i < h; ++i) w.push_back(coords[idx[size_t(i)]]);
    std::vector<Frac> P;
    for (const auto& f : Phi) P.push_back(f.eval(w));
    if (point_height(P) <= Mag::qpow(a.degree())) {
      // cell key: the first s digits of each coordinate
      std::vector<uint8_t> key;
      std::vector<Laurent> center;
      for (int i = 0; i < h; ++i) {
        Laurent li = Laurent::from_frac(w[size_t(i)], s_digits + 4);
        std::vector<uint8_t> digs(size_t(s_digits), 0);
        for (int t = 0; t < s_digits; ++t) digs[size_t(t)] = li.coeff(t);
        for (uint8_t x : digs) key.push_back(x);
        center.push_back(Laurent(gf, 0, digs));
      }
      auto it = cells.find(key);
      if (it == cells.end()) {
        CoverCell cell;
        cell.disc = Polydisc{center, s_digits};
        it = cells.emplace(key, std::move(cell)).first;
      }
      bool dup = false;
      for (const auto& old : it->second.points) dup |= old == P;
      if (!dup) it->second.points.push_back(P);
    }
    int k = 0;
    while (k < h) {
      if (++idx[size_t(k)] < coords.size()) break;
      idx[size_t(k)] = 0;
      ++k;
    }
    if (k == h) break;
  }
  for (auto& [key, cell] : cells) {
    rep.points_total += (long long)cell.points.size();
    cell.hyp = interpolate_hypersurface(cell.points, d, delta);
    if (!cell.hyp)
      throw std::runtime_error(
          "cover_and_interpolate: no interpolating hypersurface in a threshold cell");
    rep.cells.push_back(std::move(cell));
  }
  return rep;
}

bool SemiAlgebraicPart::contains(const std::vector<Frac>& z) const {
  for (const Hypersurface& hyp : equations)
    if (!hyp.vanishes_at(z)) return false;
  if (radius) {
    for (const Frac& c : z)
      if (!(c.abs() <= *radius)) return false;
  }
  return true;
}

bool Region::contains(const std::vector<Frac>& z) const {
  if (int(z.size()) != d) return false;
  Mag tol = Mag::qpow(-eval_prec);
  for (const auto& f : equations) {
    Frac v = f.eval(z);
    if (!v.is_zero() && !(v.abs() <= tol)) return false;
  }
  return true;
}

bool Region::in_algebraic_part(const std::vector<Frac>& z) const {
  for (const auto& part : algebraic_part)
    if (part.contains(z)) return true;
  return false;
}

PointTest invert_region(PointTest membership) {
  return [membership](const std::vector<Frac>& z) {
    for (const Frac& c : z)
      if (c.is_zero()) return false;
    return membership(invert_point(z));
  };
}

CountReport brute_force_count(const Region& W, const Poly& a) {
  const GF& gf = a.gf();
  CountReport rep{a, 0, 0, BigInt(0), 0, 0, Mag::zero(), 0, Rat(0), false};
  double bracket_total = std::pow(double(gf.q()), double(W.d) * a.degree());
  if (bracket_total > 1e7)
    throw std::invalid_argument("brute_force_count: enumeration guard exceeded (q^{d deg a} > 10^7)");
  LieTorsionSet lie = lie_torsion(gf, a, W.d);
  for (const auto& t : lie.tuples)
    if (W.contains(t) && !W.in_algebraic_part(t)) ++rep.N_bracket;

  std::vector<Frac> coords = fractions_up_to_height(gf, a.degree());
  double height_total = std::pow(double(coords.size()), W.d);
  if (height_total > 1e7)
    throw std::invalid_argument("brute_force_count: height enumeration guard exceeded (> 10^7)");
  std::vector<size_t> idx(size_t(W.d), 0);
  while (true) {
    std::vector<Frac> z;
    for (int i = 0; i < W.d; ++i) z.push_back(coords[idx[size_t(i)]]);
    if (point_height(z) <= Mag::qpow(a.degree()) && W.contains(z) && !W.in_algebraic_part(z))
      ++rep.N_height;
    int k = 0;
    while (k < W.d) {
      if (++idx[size_t(k)] < coords.size()) break;
      idx[size_t(k)] = 0;
      ++k;
    }
    if (k == W.d) break;
  }
  return rep;
}

}  // namespace tmw
