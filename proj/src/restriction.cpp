#include "tmw/restriction.hpp"

#include <stdexcept>

namespace tmw {

std::vector<std::pair<int, int>> adapted_basis_order(int n, int m) {
  std::vector<std::pair<int, int>> order;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) order.push_back({i, j});
  return order;
}

std::vector<Laurent> adapted_coordinates(const std::vector<ExtElem>& z) {
  std::vector<Laurent> w;
  for (const ExtElem& zi : z)
    for (const Laurent& c : zi.coords()) w.push_back(c);
  return w;
}

std::vector<ExtElem> from_adapted_coordinates(const ExtFieldPtr& F,
                                              const std::vector<Laurent>& w, int m) {
  if (int(w.size()) != F->n * m)
    throw std::invalid_argument("from_adapted_coordinates: length mismatch");
  std::vector<ExtElem> z;
  for (int i = 0; i < m; ++i) {
    std::vector<Laurent> coords(w.begin() + size_t(i) * F->n, w.begin() + size_t(i + 1) * F->n);
    z.push_back(ExtElem(F, std::move(coords)));
  }
  return z;
}

std::vector<TruncSeries<Laurent>> restriction_of_scalars(const TruncSeries<ExtElem>& f,
                                                         const ExtFieldPtr& F) {
  if (!F->gamma_certified)
    throw std::invalid_argument("restriction_of_scalars: extension lacks the |alpha| = 1 "
                                "certificate (renormalize and rebuild)");
  int m = f.nvars(), n = F->n, D = f.maxdeg();
  const GF& gf = *F->gf;
  // substitute z_i = sum_j alpha^{j-1} w_{i,j}
  ExtElem like = ExtElem::zero(F);
  std::vector<TruncSeries<ExtElem>> subs;
  for (int i = 0; i < m; ++i) {
    TruncSeries<ExtElem> zi(n * m, D, like);
    for (int j = 0; j < n; ++j) {
      Expo e(size_t(n * m), 0);
      e[size_t(i * n + j)] = 1;
      ExtElem apow = ExtElem::one(F);
      for (int t = 0; t < j; ++t) apow = apow * ExtElem::generator(F);
      zi.set(e, apow);
    }
    subs.push_back(std::move(zi));
  }
  TruncSeries<ExtElem> g = f.substitute(subs);

  // coefficient bound |c_eta| <= max |a_mu| (with |alpha| = 1); coefficients
  // whose magnitude is undetermined at precision are skipped
  Mag amax = Mag::zero();
  for (auto& [e, v] : f.terms()) {
    try {
      amax = Mag::max(amax, v.abs());
    } catch (const std::domain_error&) {
    }
  }
  for (auto& [e, v] : g.terms()) {
    try {
      if (!(v.abs() <= amax))
        throw std::runtime_error("restriction_of_scalars: coefficient bound violated");
    } catch (const std::domain_error&) {
    }
  }

  // split each coefficient into its base-field coordinates
  std::vector<TruncSeries<Laurent>> h(
      size_t(n), TruncSeries<Laurent>(n * m, D, Laurent::zero(gf)));
  for (auto& [e, v] : g.terms())
    for (int j = 0; j < n; ++j) h[size_t(j)].add_to(e, v.coords()[size_t(j)]);
  return h;
}

TruncSeries<ExtElem> recombine_restriction(const std::vector<TruncSeries<Laurent>>& h,
                                           const ExtFieldPtr& F) {
  if (h.empty()) throw std::invalid_argument("recombine_restriction: empty input");
  int nm = h[0].nvars(), D = h[0].maxdeg();
  ExtElem like = ExtElem::zero(F);
  TruncSeries<ExtElem> g(nm, D, like);
  ExtElem apow = ExtElem::one(F);
  for (size_t j = 0; j < h.size(); ++j) {
    for (auto& [e, v] : h[j].terms()) g.add_to(e, apow * ExtElem::from_base(F, v));
    if (j + 1 < h.size()) apow = apow * ExtElem::generator(F);
  }
  return g;
}

LatticeDecomposition lattice_decompose(const std::vector<ExtElem>& z,
                                       const std::vector<std::vector<ExtElem>>& periods) {
  if (periods.empty()) throw std::invalid_argument("lattice_decompose: no periods");
  const ExtFieldPtr& F = z.at(0).field();
  const GF& gf = *F->gf;
  int m = int(z.size());
  int nm = F->n * m;
  int d = int(periods.size());
  if (d > nm) throw std::invalid_argument("lattice_decompose: too many periods");

  // columns: psi(omega_1..omega_d), then greedily chosen canonical vectors
  std::vector<std::vector<Laurent>> cols;
  for (const auto& omega : periods) {
    if (int(omega.size()) != m) throw std::invalid_argument("lattice_decompose: period dimension");
    cols.push_back(adapted_coordinates(omega));
  }
  // row-reduce a working copy to locate pivot rows of the period block
  Mat<Laurent> P(nm, d, Laurent::zero(gf));
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < nm; ++i) P(i, j) = cols[size_t(j)][size_t(i)];
  if (P.rank() < d)
    throw std::domain_error("lattice_decompose: periods dependent at this precision");

  LatticeDecomposition out;
  // complete with canonical basis vectors, keeping the matrix invertible
  Mat<Laurent> Mfull(nm, nm, Laurent::zero(gf));
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < nm; ++i) Mfull(i, j) = cols[size_t(j)][size_t(i)];
  int have = d;
  for (int cand = 0; cand < nm && have < nm; ++cand) {
    Mat<Laurent> probe(nm, have + 1, Laurent::zero(gf));
    for (int j = 0; j < have; ++j)
      for (int i = 0; i < nm; ++i) probe(i, j) = Mfull(i, j);
    probe(cand, have) = Laurent::one(gf);
    if (probe.rank() == have + 1) {
      Mfull(cand, have) = Laurent::one(gf);
      out.completion.push_back(cand);
      ++have;
    }
  }
  if (have < nm) throw std::domain_error("lattice_decompose: could not complete a basis");

  std::vector<Laurent> rhs = adapted_coordinates(z);
  out.w = Mfull.inverse().apply(rhs);
  return out;
}

}  // namespace tmw
