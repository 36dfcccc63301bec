#include "tmw/exp_log.hpp"

#include <stdexcept>

namespace tmw {

namespace {

Mat<Frac> frob_mat(const Mat<Frac>& m, unsigned j) { return m.frobenius_q(j); }

}  // namespace

TwistedSeries exp_coefficients(const TModule& M, int order) {
  const GF& gf = M.gf();
  Frac T = Frac(Poly::variable(gf));
  Frac like = Frac::zero(gf);
  TwistedSeries s;
  s.q = M.q;
  s.m = M.m;
  Mat<Frac> I = Mat<Frac>::identity(M.m, like);
  Mat<Frac> N = M.phi_T.differential() - I.scaled(T);
  s.B.push_back(I);
  int dtilde = M.phi_T.deg();
  for (int i = 1; i <= order; ++i) {
    // right-hand side from the lower coefficients
    Mat<Frac> R = Mat<Frac>::zeros(M.m, M.m, like);
    for (int j = 1; j <= std::min(i, dtilde); ++j)
      R = R + M.phi_T.coeff(j) * frob_mat(s.B[size_t(i - j)], unsigned(j));
    // solve c B + B N' - N B = R with c = T^{q^i} - T, iterating the
    // nilpotent correction
    Frac c = T.frobenius_q(unsigned(i)) - T;
    Frac cinv = c.inverse();
    Mat<Frac> Nq = N.frobenius_q(unsigned(i));
    Mat<Frac> B = Mat<Frac>::zeros(M.m, M.m, like);
    for (int it = 0; it <= 2 * M.m + 2; ++it) {
      Mat<Frac> Bn = (R - B * Nq + N * B).scaled(cinv);
      if (Bn == B) break;
      B = Bn;
    }
    Mat<Frac> resid = B.scaled(c) + B * Nq - N * B - R;
    if (!resid.is_zero()) throw std::runtime_error("exp_coefficients: solver did not converge");
    s.B.push_back(std::move(B));
  }
  return s;
}

TwistedSeries series_compositional_inverse(const TwistedSeries& f) {
  Frac like = f.B.at(0)(0, 0).zero_like();
  TwistedSeries g;
  g.q = f.q;
  g.m = f.m;
  Mat<Frac> I = Mat<Frac>::identity(f.m, like);
  if (f.B[0] != I) throw std::invalid_argument("series inverse: constant coefficient must be I");
  g.B.push_back(I);
  for (int s = 1; s <= f.order(); ++s) {
    // sum_{i+j=s} A_i B_j^{(q^i)} = 0 gives A_s = -(sum_{i<s} A_i B_{s-i}^{(q^i)})
    Mat<Frac> acc = Mat<Frac>::zeros(f.m, f.m, like);
    for (int i = 0; i < s; ++i)
      acc = acc + g.B[size_t(i)] * frob_mat(f.B[size_t(s - i)], unsigned(i));
    g.B.push_back(Mat<Frac>::zeros(f.m, f.m, like) - acc);
  }
  return g;
}

TwistedSeries log_coefficients(const TModule& M, int order) {
  return series_compositional_inverse(exp_coefficients(M, order));
}

TwistedSeries series_compose(const TwistedSeries& f, const TwistedSeries& g) {
  if (f.q != g.q || f.m != g.m) throw std::invalid_argument("series_compose: shape mismatch");
  Frac like = f.B.at(0)(0, 0).zero_like();
  TwistedSeries h;
  h.q = f.q;
  h.m = f.m;
  int order = std::min(f.order(), g.order());
  for (int s = 0; s <= order; ++s) {
    Mat<Frac> acc = Mat<Frac>::zeros(f.m, f.m, like);
    for (int i = 0; i <= s; ++i)
      acc = acc + f.B[size_t(i)] * frob_mat(g.B[size_t(s - i)], unsigned(i));
    h.B.push_back(std::move(acc));
  }
  return h;
}

bool functional_equation_holds(const TModule& M, const TwistedSeries& e, int order) {
  // coefficient of z^{(q^s)} in e(dPhi(T) z) is B_s (dPhi(T))^{(q^s)};
  // in Phi(T)(e(z)) it is sum_{j <= min(s, deg)} a_j B_{s-j}^{(q^j)}
  Mat<Frac> d = M.phi_T.differential();
  for (int s = 0; s <= order && s <= e.order(); ++s) {
    Mat<Frac> lhs = e.B[size_t(s)] * d.frobenius_q(unsigned(s));
    Mat<Frac> rhs = Mat<Frac>::zeros(M.m, M.m, d(0, 0).zero_like());
    for (int j = 0; j <= std::min(s, M.phi_T.deg()); ++j)
      rhs = rhs + M.phi_T.coeff(j) * frob_mat(e.B[size_t(s - j)], unsigned(j));
    if (lhs != rhs) return false;
  }
  return true;
}

Rat coefficient_norm_exponent(const Mat<Frac>& B) {
  Mag m = Mag::zero();
  for (int i = 0; i < B.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j) m = Mag::max(m, B(i, j).abs());
  if (m.is_zero()) return Rat(-(1 << 28));
  return m.exponent();
}

std::vector<Laurent> exp_eval(const TModule& M, const TwistedSeries& e,
                              const std::vector<Laurent>& z, int prec) {
  const GF& gf = M.gf();
  if (int(z.size()) != M.m) throw std::invalid_argument("exp_eval: dimension mismatch");
  // u = log_q ||z||
  bool all_zero = true;
  Rat u = 0;
  for (const Laurent& zi : z)
    if (zi.nonzero_at_precision()) {
      Rat vi = -(*zi.val());
      if (all_zero || vi > u) u = vi;
      all_zero = false;
    }
  if (all_zero) return std::vector<Laurent>(size_t(M.m), Laurent::zero_at(gf, prec));

  // certified tail: the top d~ computed coefficients must satisfy
  // ||B_i|| <= q^{-kappa q^i} with kappa > u, and q^{order+1} must dominate
  // the coefficient scales of Phi(T); then by the recursion norm bound every
  // dropped term has valuation at least (kappa - u) q^{order+1}
  long long kappa;
  {
    BigInt fnum = boost::multiprecision::numerator(u);
    BigInt fden = boost::multiprecision::denominator(u);
    BigInt fdiv = fnum / fden;
    if (fnum < 0 && fdiv * fden != fnum) fdiv -= 1;
    kappa = std::max<long long>(1, fdiv.convert_to<long long>() + 1);
  }
  int dtilde = std::max(1, M.phi_T.deg());
  Rat astar = 0;
  for (int j = 1; j <= M.phi_T.deg(); ++j)
    astar = std::max(astar, coefficient_norm_exponent(M.phi_T.coeff(j)));
  Frac T = Frac(Poly::variable(gf));
  Rat nu =
      coefficient_norm_exponent(M.phi_T.differential() - Mat<Frac>::identity(M.m, T).scaled(T));
  int iw = e.order();
  bool window_ok = iw - dtilde + 1 >= 1;
  if (window_ok) {
    BigInt qi = 1;
    for (int t = 0; t < iw - dtilde + 1; ++t) qi *= M.q;
    for (int i = iw - dtilde + 1; i <= iw; ++i, qi *= M.q)
      if (coefficient_norm_exponent(e.B[size_t(i)]) > -Rat(kappa) * Rat(qi)) window_ok = false;
  }
  BigInt qnext = 1;
  for (int t = 0; t <= iw; ++t) qnext *= M.q;
  if (Rat(qnext) < std::max(astar, Rat(nu + 1))) window_ok = false;
  if (!window_ok) throw std::runtime_error("exp_eval: tail not certifiable at this truncation");
  Rat tail_v = (Rat(kappa) - u) * Rat(qnext);
  long long tail_prec =
      tail_v > Rat(1 << 27)
          ? (1 << 27)
          : (boost::multiprecision::numerator(tail_v) / boost::multiprecision::denominator(tail_v))
                .convert_to<long long>();
  int out_prec = int(std::min<long long>(prec, tail_prec));

  int wp = prec + 32;
  std::vector<Laurent> acc(size_t(M.m), Laurent::zero(gf));
  for (int i = 0; i <= e.order(); ++i) {
    std::vector<Laurent> zq(size_t(M.m), Laurent::zero(gf));
    for (int t = 0; t < M.m; ++t) zq[size_t(t)] = z[size_t(t)].frobenius_q(unsigned(i));
    for (int r = 0; r < M.m; ++r)
      for (int cc = 0; cc < M.m; ++cc) {
        const Frac& c = e.B[size_t(i)](r, cc);
        if (c.is_zero()) continue;
        acc[size_t(r)] = acc[size_t(r)] + Laurent::from_frac(c, wp) * zq[size_t(cc)];
      }
  }
  for (auto& x : acc) x = x.truncated(out_prec);
  return acc;
}

Laurent carlitz_period(int q, int prec) {
  if (q != 2)
    throw std::invalid_argument(
        "carlitz_period: only q = 2 supported (the period generator lies in k_inf)");
  const GF& gf = GF::of_order(2);
  TModule C = carlitz_module(2);
  // the log terms at T have magnitude q^{2 - 2^i}; order sized so the last
  // kept term is already below the target
  int order = 4;
  while ((1LL << order) - 2 < prec + 8 && order < 20) ++order;
  TwistedSeries log_s = log_coefficients(C, order);
  // convergence of log at T is checked, not assumed: term exponents must
  // strictly decrease and end below the target
  long long prev = 1LL << 40;
  for (int i = 1; i <= order; ++i) {
    Rat bi = coefficient_norm_exponent(log_s.B[size_t(i)]);
    Rat term = bi + Rat(BigInt(1) << i);
    long long ti = (boost::multiprecision::numerator(term) /
                    boost::multiprecision::denominator(term))
                       .convert_to<long long>();
    if (ti >= prev)
      throw std::runtime_error("carlitz_period: log does not converge at T (radius violated)");
    prev = ti;
  }
  if (prev > -(long long)(prec + 1))
    throw std::runtime_error("carlitz_period: truncation too short for the requested precision");

  int wp = prec + (1 << std::min(order, 10)) + 8;
  Laurent logT = Laurent::zero(gf);
  for (int i = 0; i <= order; ++i) {
    const Frac& Ai = log_s.B[size_t(i)](0, 0);
    if (Ai.is_zero()) continue;
    logT = logT + Laurent::from_frac(Ai, wp) * Laurent::t_power(gf, 1 << i);
  }
  Laurent xi = (Laurent::t_power(gf, 1) * logT).truncated(prec);

  // verification: e(xi) = 0 and e(xi/T) = T at precision
  TwistedSeries e = exp_coefficients(C, order);
  std::vector<Laurent> exi = exp_eval(C, e, {xi}, prec - 4);
  if (exi[0].nonzero_at_precision())
    throw std::runtime_error("carlitz_period: e(xi) != 0 at precision");
  std::vector<Laurent> exiT = exp_eval(C, e, {xi * Laurent::t_power(gf, -1)}, prec - 4);
  if ((exiT[0] - Laurent::t_power(gf, 1)).nonzero_at_precision())
    throw std::runtime_error("carlitz_period: e(xi/T) != T at precision");
  return xi;
}

}  // namespace tmw
