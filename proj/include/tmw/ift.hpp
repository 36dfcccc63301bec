#ifndef TMW_IFT_HPP
#define TMW_IFT_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "tmw/matrix.hpp"
#include "tmw/rat.hpp"
#include "tmw/trunc_series.hpp"

namespace tmw {

// One-variable implicit/inverse function solver. Given F in n variables with
// F(0) = 0 and a_n = dF/dz_n(0) != 0, produces
//   inverse_h:  h(u_1..u_n) with F(u*, h(u)) = u_n through the truncation,
//   implicit_h: h(u*, 0), the implicit function with F(z*, implicit_h) = 0.
// Coefficients are obtained by incremental composition: at each total degree
// the defect of the partial solution is scaled by -1/a_n and appended.
template <class F>
struct ImplicitSolution {
  TruncSeries<F> inverse_h;
  TruncSeries<F> implicit_h;
};

template <class F>
ImplicitSolution<F> implicit_series(const TruncSeries<F>& f) {
  int n = f.nvars(), D = f.maxdeg();
  const F zero = f.like();
  Expo origin(size_t(n), 0);
  if (!f.coeff(origin).is_zero())
    throw std::invalid_argument("IFT hypothesis violated: F(0) != 0");
  Expo en(size_t(n), 0);
  en[size_t(n - 1)] = 1;
  F an = f.coeff(en);
  if (an.is_zero()) throw std::invalid_argument("IFT hypothesis violated: dF/dz_n(0) = 0");
  F an_inv = an.one_like() / an;

  TruncSeries<F> h(n, D, zero);
  // substitution arguments: identity on the first n-1 variables
  std::vector<TruncSeries<F>> args;
  for (int i = 0; i < n - 1; ++i) args.push_back(TruncSeries<F>::variable(n, D, i, zero));
  args.push_back(h);
  TruncSeries<F> un = TruncSeries<F>::variable(n, D, n - 1, zero);
  for (int t = 1; t <= D; ++t) {
    args[size_t(n - 1)] = h;
    TruncSeries<F> defect = f.substitute(args) - un;
    for (auto& [e, v] : defect.terms()) {
      int d = expo_total(e);
      if (d < t && !v.is_zero())
        throw std::logic_error("implicit_series: defect below the current degree");
      if (d == t) h.add_to(e, zero - v * an_inv);
    }
  }
  // restrict to u_n = 0 and drop the last variable
  TruncSeries<F> ih(n - 1, D, zero);
  for (auto& [e, v] : h.terms()) {
    if (e[size_t(n - 1)] != 0) continue;
    Expo r(e.begin(), e.end() - 1);
    ih.set(r, v);
  }
  return ImplicitSolution<F>{std::move(h), std::move(ih)};
}

// Majorant analysis over exact rationals: the bounding series has linear
// coefficients A_i = |a_i| and A_mu = M / r^{|mu|} for |mu| >= 2, where
// M = max_{|mu| >= 1} |a_mu| r^{|mu|}. Solving the same implicit system for
// the bounding series dominates the solution coefficientwise and yields a
// positive certified radius from the discriminant argument.
struct RadiusCertificate {
  int n = 0, degree = 0;
  int r_exp = 0;                 // reference radius q^{r_exp}
  Rat M = 0;                     // max |a_mu| r^{|mu|}
  Rat discriminant_at_zero = 0;  // A_n^2
  std::optional<int> certified_radius_exp;  // radius q^{-j}
  bool majorant_dominates = false;
  bool all_nonnegative = false;
  std::vector<std::pair<Expo, Rat>> majorant_coeffs;  // B_mu of the inverse
};

template <class F>
RadiusCertificate majorant_certificate(const TruncSeries<F>& f, int r_exp, int q,
                                       bool input_is_polynomial = true) {
  int n = f.nvars(), D = f.maxdeg();
  RadiusCertificate cert;
  cert.n = n;
  cert.degree = D;
  cert.r_exp = r_exp;

  // |a_mu| r^{|mu|} as exact rationals
  auto qpow = [&](long e) {
    Rat r = 1;
    for (long t = 0; t < (e < 0 ? -e : e); ++t) r *= q;
    return e < 0 ? Rat(1 / r) : r;
  };
  Rat M = 0;
  Rat top_band = 0;
  for (auto& [e, v] : f.terms()) {
    int d = expo_total(e);
    if (d < 1) continue;
    Mag mv = v.mag();
    if (mv.is_zero()) continue;
    if (boost::multiprecision::denominator(mv.exponent()) != 1)
      throw std::invalid_argument("majorant_certificate: fractional magnitude exponent");
    Rat val = qpow(boost::multiprecision::numerator(mv.exponent()).convert_to<long>() +
                   long(r_exp) * d);
    if (val > M) M = val;
    if (d == D && val > top_band) top_band = val;
  }
  if (M == 0) throw std::invalid_argument("majorant_certificate: F has no nonconstant terms");
  if (!input_is_polynomial && top_band == M)
    throw std::invalid_argument("no convergence certificate at r: coefficient decay not observed");
  cert.M = M;

  // majorant series over Q: -sum A_i X_i + A_n X_n - sum_{|mu|>=2} A_mu X^mu
  RatF rzero;
  TruncSeries<RatF> fbar(n, D, rzero);
  std::vector<Rat> A(size_t(n), Rat(0));
  for (int i = 0; i < n; ++i) {
    Expo e(size_t(n), 0);
    e[size_t(i)] = 1;
    F ai = f.coeff(e);
    if (!ai.is_zero()) {
      Mag mv = ai.mag();
      A[size_t(i)] = qpow(boost::multiprecision::numerator(mv.exponent()).convert_to<long>());
    }
    fbar.set(e, RatF(i == n - 1 ? A[size_t(i)] : Rat(-A[size_t(i)])));
  }
  if (A[size_t(n - 1)] == 0)
    throw std::invalid_argument("IFT hypothesis violated: |a_n| = 0");
  for (const Expo& e : all_exponents(n, D)) {
    int d = expo_total(e);
    if (d < 2) continue;
    fbar.set(e, RatF(Rat(-M * qpow(-long(r_exp) * d))));
  }
  ImplicitSolution<RatF> bar = implicit_series(fbar);

  // dominance |b_mu| <= B_mu, and nonnegativity of the majorant solution
  ImplicitSolution<F> sol = implicit_series(f);
  cert.majorant_dominates = true;
  cert.all_nonnegative = true;
  for (auto& [e, v] : bar.inverse_h.terms()) {
    if (v.value() < 0) cert.all_nonnegative = false;
    cert.majorant_coeffs.push_back({e, v.value()});
  }
  for (auto& [e, v] : sol.inverse_h.terms()) {
    Mag mv = v.mag();
    Rat bv = 0;
    for (auto& [eb, vb] : bar.inverse_h.terms())
      if (eb == e) bv = vb.value();
    Rat av = mv.is_zero()
                 ? Rat(0)
                 : qpow(boost::multiprecision::numerator(mv.exponent()).convert_to<long>());
    if (av > bv) cert.majorant_dominates = false;
  }

  // discriminant at 0 and a certified radius: the order-1 approximation of
  // the quadratic in X_n has discriminant A_n^2 > 0 at 0; a radius rho < r
  // with the explicit lower bound positive certifies convergence
  Rat An = A[size_t(n - 1)];
  cert.discriminant_at_zero = An * An;
  Rat S = 1;
  for (int i = 0; i + 1 < n; ++i) S += A[size_t(i)];
  Rat r = qpow(r_exp);
  for (int j = std::max(0, -r_exp) + 1; j < 300; ++j) {
    Rat rho = qpow(-j);
    Rat ratio = rho / r;
    Rat bound = An * An - Rat(2) / r * (S * rho + M * Rat(n - 1) * ratio / (1 - ratio)) -
                Rat(4) * (An / r + M / (r * r)) * S * rho;
    if (bound > 0) {
      cert.certified_radius_exp = -j;
      break;
    }
  }
  return cert;
}

// Multivariate implicit system of Corollary-1 type: m series in n+m vars,
// vanishing at 0, whose right m x m Jacobian block is invertible after a
// column permutation. The system is precomposed with the inverse of that
// block (Gauss reduction), then solved one variable at a time and
// back-substituted. Returns h_1..h_m in the n free variables.
template <class F>
std::vector<TruncSeries<F>> implicit_system(const std::vector<TruncSeries<F>>& fs_in) {
  if (fs_in.empty()) throw std::invalid_argument("implicit_system: empty system");
  int m = int(fs_in.size());
  int nv = fs_in[0].nvars(), D = fs_in[0].maxdeg();
  int n = nv - m;
  if (n < 0) throw std::invalid_argument("implicit_system: more equations than variables");
  const F zero = fs_in[0].like();

  // Jacobian right block at 0, with a column permutation making it invertible
  Mat<F> B = Mat<F>::zeros(m, m, zero);
  auto colperm = std::vector<int>(size_t(m));
  for (int j = 0; j < m; ++j) colperm[size_t(j)] = j;
  {
    Mat<F> full = Mat<F>::zeros(m, m, zero);
    for (int i = 0; i < m; ++i) {
      auto g = fs_in[size_t(i)].gradient_at_zero();
      for (int j = 0; j < m; ++j) full(i, j) = g[size_t(n + j)];
    }
    // greedy column pivoting
    Mat<F> work = full;
    std::vector<bool> used(size_t(m), false);
    std::vector<int> order;
    for (int row = 0; row < m; ++row) {
      int found = -1;
      for (int j = 0; j < m && found < 0; ++j) {
        if (used[size_t(j)]) continue;
        // candidate: does column j keep the leading minor invertible?
        std::vector<int> cand = order;
        cand.push_back(j);
        Mat<F> sub = Mat<F>::zeros(row + 1, row + 1, zero);
        for (int r = 0; r <= row; ++r)
          for (int c = 0; c <= row; ++c) sub(r, c) = full(r, cand[size_t(c)]);
        if (!sub.det().is_zero()) found = j;
      }
      if (found < 0) throw std::domain_error("not a regular point: Jacobian rank < m");
      used[size_t(found)] = true;
      order.push_back(found);
    }
    colperm = order;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) B(i, j) = full(i, colperm[size_t(j)]);
  }

  // permute the solved variables and precompose with B^{-1}
  std::vector<TruncSeries<F>> fs;
  {
    std::vector<TruncSeries<F>> args;
    auto inv = std::vector<int>(size_t(m));
    for (int j = 0; j < m; ++j) inv[size_t(colperm[size_t(j)])] = j;
    for (int i = 0; i < n; ++i) args.push_back(TruncSeries<F>::variable(nv, D, i, zero));
    for (int j = 0; j < m; ++j)
      args.push_back(TruncSeries<F>::variable(nv, D, n + inv[size_t(j)], zero));
    std::vector<TruncSeries<F>> permuted;
    for (int i = 0; i < m; ++i) permuted.push_back(fs_in[size_t(i)].substitute(args));
    Mat<F> Binv = B.inverse();
    for (int i = 0; i < m; ++i) {
      TruncSeries<F> g(nv, D, zero);
      for (int j = 0; j < m; ++j)
        if (!Binv(i, j).is_zero()) g = g + permuted[size_t(j)].scaled(Binv(i, j));
      fs.push_back(std::move(g));
    }
  }

  // solve the last equation for the last variable, substitute upward
  std::vector<TruncSeries<F>> solved(size_t(m), TruncSeries<F>(nv, D, zero));
  for (int i = m - 1; i >= 0; --i) {
    int var = n + i;
    // move var to the last position for the one-variable solver
    std::vector<int> perm;
    for (int v = 0; v < nv; ++v)
      if (v != var) perm.push_back(v);
    perm.push_back(var);
    std::vector<TruncSeries<F>> to(perm.size(), TruncSeries<F>(nv, D, zero));
    for (size_t p = 0; p < perm.size(); ++p)
      to[size_t(perm[p])] = TruncSeries<F>::variable(nv, D, int(p), zero);
    TruncSeries<F> reordered = fs[size_t(i)].substitute(to);
    ImplicitSolution<F> one = implicit_series(reordered);
    // implicit_h is in the nv-1 remaining variables, ordered by perm
    // re-embed into nv variables (var occurs nowhere in it)
    TruncSeries<F> h(nv, D, zero);
    for (auto& [e, v] : one.implicit_h.terms()) {
      Expo full(size_t(nv), 0);
      for (size_t p = 0; p + 1 < perm.size(); ++p) full[size_t(perm[p])] = e[p];
      h.set(full, v);
    }
    solved[size_t(i)] = h;
    // substitute into the remaining equations
    std::vector<TruncSeries<F>> args;
    for (int v = 0; v < nv; ++v)
      args.push_back(v == var ? h : TruncSeries<F>::variable(nv, D, v, zero));
    for (int i2 = 0; i2 < i; ++i2) fs[size_t(i2)] = fs[size_t(i2)].substitute(args);
  }
  // back-substitute so each h_i depends on the free variables only
  for (int i = 0; i < m; ++i) {
    std::vector<TruncSeries<F>> args;
    for (int v = 0; v < nv; ++v) {
      if (v < n)
        args.push_back(TruncSeries<F>::variable(nv, D, v, zero));
      else
        args.push_back(solved[size_t(v - n)]);
    }
    // repeated substitution resolves the triangular dependencies
    for (int rounds = 0; rounds < m; ++rounds) solved[size_t(i)] = solved[size_t(i)].substitute(args);
  }
  // undo the column permutation and restrict to the free variables
  std::vector<TruncSeries<F>> out(size_t(m), TruncSeries<F>(n, D, zero));
  for (int j = 0; j < m; ++j) {
    TruncSeries<F> restricted(n, D, zero);
    for (auto& [e, v] : solved[size_t(j)].terms()) {
      Expo r(e.begin(), e.begin() + n);
      bool pure = true;
      for (int t = n; t < nv; ++t) pure &= e[size_t(t)] == 0;
      if (!pure) throw std::logic_error("implicit_system: unresolved solved-variable dependency");
      restricted.set(r, v);
    }
    out[size_t(colperm[size_t(j)])] = restricted;
  }
  return out;
}

// exact Jacobian rank at a point (hyperderivative order-1 block)
template <class F>
int jacobian_rank(const std::vector<TruncSeries<F>>& fs, const std::vector<F>& z0, int p,
                  bool* ambiguous = nullptr) {
  if (fs.empty()) return 0;
  int nv = fs[0].nvars();
  Mat<F> J = Mat<F>::zeros(int(fs.size()), nv, fs[0].like());
  for (size_t i = 0; i < fs.size(); ++i) {
    auto shifted = fs[i].shifted_to(z0, p);
    auto g = shifted.gradient_at_zero();
    for (int j = 0; j < nv; ++j) J(int(i), j) = g[size_t(j)];
  }
  return J.rank(ambiguous);
}

}  // namespace tmw

#endif  // TMW_IFT_HPP
