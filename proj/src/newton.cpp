#include "tmw/newton.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "tmw/binom.hpp"

namespace tmw {

Laurent lpoly_eval(const LPoly& f, const Laurent& x) {
  if (f.empty()) throw std::invalid_argument("lpoly_eval: empty polynomial");
  Laurent acc = Laurent::zero(f[0].gf());
  for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

LPoly lpoly_derivative(const LPoly& f) {
  const GF& gf = f.at(0).gf();
  LPoly d;
  for (size_t i = 1; i < f.size(); ++i)
    d.push_back(f[i].scaled(uint8_t(i % gf.p())));
  if (d.empty()) d.push_back(Laurent::zero(gf));
  return d;
}

std::vector<NewtonEdge> newton_polygon(const LPoly& f) {
  // hull points (i, v_i), i ascending
  std::vector<std::pair<int, int>> pts;
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i].nonzero_at_precision()) pts.push_back({int(i), *f[i].val()});
  std::vector<std::pair<int, int>> hull;
  for (auto& p : pts) {
    while (hull.size() >= 2) {
      auto& a = hull[hull.size() - 2];
      auto& b = hull[hull.size() - 1];
      // keep the hull lower-convex: slope(a,b) < slope(a,p)
      long long lhs = (long long)(b.second - a.second) * (p.first - a.first);
      long long rhs = (long long)(p.second - a.second) * (b.first - a.first);
      if (lhs >= rhs)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  std::vector<NewtonEdge> edges;
  for (size_t k = 0; k + 1 < hull.size(); ++k) {
    NewtonEdge e;
    e.i_lo = hull[k].first;
    e.i_hi = hull[k + 1].first;
    // slope s = dv/di; roots on the edge have valuation -s
    e.root_valuation = -Rat(hull[k + 1].second - hull[k].second, e.i_hi - e.i_lo);
    edges.push_back(e);
  }
  return edges;
}

namespace {

struct Workspace {
  const GF* gf;
  int prec;
  std::vector<Rat> ramified;
  int zero_mult = 0;
  bool complete = true;
};

// residue polynomial of the normalized edge poly over F_q
std::vector<uint8_t> residue_poly(const LPoly& n) {
  std::vector<uint8_t> r(n.size(), 0);
  for (size_t i = 0; i < n.size(); ++i) r[i] = n[i].coeff(0);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

uint8_t eval_fq(const std::vector<uint8_t>& r, uint8_t x, const GF& gf) {
  uint8_t acc = 0;
  for (size_t i = r.size(); i-- > 0;) acc = gf.add(gf.mul(acc, x), r[i]);
  return acc;
}

int root_multiplicity(std::vector<uint8_t> r, uint8_t u, const GF& gf) {
  int mult = 0;
  while (!r.empty() && eval_fq(r, u, gf) == 0) {
    // synthetic division by (y - u)
    std::vector<uint8_t> qt(r.size() - 1, 0);
    uint8_t carry = 0;
    for (size_t i = r.size(); i-- > 1;) {
      carry = gf.add(r[i], gf.mul(carry, u));
      qt[i - 1] = carry;
    }
    r = qt;
    ++mult;
    if (r.empty()) break;
  }
  return mult;
}

// shift: H(w) = G(u0 + w), binomial expansion with char-p binomials
LPoly shift_poly(const LPoly& g, uint8_t u0, const GF& gf) {
  LPoly h(g.size(), Laurent::zero(gf));
  for (size_t i = 0; i < g.size(); ++i) {
    if (g[i].is_exact_zero()) continue;
    uint8_t upow = 1;
    for (size_t j = i + 1; j-- > 0;) {
      // coefficient of w^j receives C(i, j) u0^{i-j} g_i
      uint8_t b = binom_mod_p(i, j, gf.p());
      if (b != 0 && upow != 0) h[j] = h[j] + g[i].scaled(gf.mul(b % gf.p(), upow));
      upow = gf.mul(upow, u0);
    }
  }
  return h;
}

Laurent newton_lift(const LPoly& g, uint8_t u0, int prec, const GF& gf) {
  LPoly gp = lpoly_derivative(g);
  Laurent y = Laurent::monomial(gf, 0, u0);
  int steps = 0;
  while (true) {
    Laurent fy = lpoly_eval(g, y);
    // exact roots (finite expansions) are kept exact; they matter downstream
    // when branching decisions hinge on exact-zero detection
    if (fy.is_exact_zero() && y.is_exact()) return y;
    if (fy.truncated(prec).is_zero()) break;
    Laurent dy = lpoly_eval(gp, y);
    y = (y - fy * dy.inv(prec + 8)).truncated(prec + 8);
    if (++steps > 2 * prec + 16)
      throw std::runtime_error("newton_lift: no convergence (segment not Hensel-liftable)");
  }
  return y.truncated(prec);
}

// roots of g with valuation strictly above min_val (no bound when absent)
void roots_rec(LPoly g, const std::optional<Rat>& min_val, int depth, Workspace& ws,
               std::vector<Laurent>& out) {
  if (depth > 64) {
    ws.complete = false;
    return;
  }
  // exact-zero constant coefficients are factors of the variable
  size_t strip = 0;
  while (strip < g.size() && g[strip].is_exact_zero()) ++strip;
  if (strip == g.size()) return;
  if (strip > 0) {
    out.push_back(Laurent::zero(*ws.gf));
    if (depth == 0) ws.zero_mult = int(strip);
    g.erase(g.begin(), g.begin() + strip);
  }
  if (g[0].is_zero() && !g[0].is_exact_zero()) {
    // constant term vanishes at precision only; a root near zero cannot be
    // separated from an exact zero root here
    ws.complete = false;
  }
  for (const NewtonEdge& e : newton_polygon(g)) {
    if (min_val && e.root_valuation <= *min_val) continue;
    if (boost::multiprecision::denominator(e.root_valuation) != 1) {
      ws.ramified.push_back(e.root_valuation);
      continue;
    }
    int v = int(boost::multiprecision::numerator(e.root_valuation));
    // x = u^v y with v(y) = 0 on this segment
    LPoly n(g.size(), Laurent::zero(*ws.gf));
    long long hmin = 0;
    bool have_h = false;
    for (size_t i = 0; i < g.size(); ++i) {
      if (!g[i].nonzero_at_precision()) continue;
      long long w = *g[i].val() + (long long)i * v;
      if (!have_h || w < hmin) hmin = w, have_h = true;
    }
    for (size_t i = 0; i < g.size(); ++i)
      n[i] = g[i].shifted(int(i) * v - int(hmin));
    std::vector<uint8_t> rbar = residue_poly(n);
    for (int u0 = 1; u0 < ws.gf->q(); ++u0) {
      int mult = root_multiplicity(rbar, uint8_t(u0), *ws.gf);
      if (mult == 0) continue;
      if (mult == 1) {
        Laurent y = newton_lift(n, uint8_t(u0), ws.prec + std::max(0, -v), *ws.gf);
        Laurent r = y.shifted(v);
        out.push_back(r.is_exact() ? r : r.truncated(ws.prec));
      } else {
        // branch: y = u0 + w, roots with v(w) > 0
        LPoly h = shift_poly(n, uint8_t(u0), *ws.gf);
        std::vector<Laurent> sub;
        roots_rec(h, Rat(0), depth + 1, ws, sub);
        for (const Laurent& w : sub) {
          Laurent r = (Laurent::monomial(*ws.gf, 0, uint8_t(u0)) + w).shifted(v);
          out.push_back(r.is_exact() ? r : r.truncated(ws.prec));
        }
      }
    }
  }
}

}  // namespace

RootSearch all_roots(const LPoly& f, int prec) {
  if (f.empty()) throw std::invalid_argument("all_roots: empty polynomial");
  bool all_zero = true;
  for (const auto& c : f)
    if (!c.is_exact_zero()) all_zero = false;
  if (all_zero) throw std::invalid_argument("all_roots: zero polynomial");
  const GF& gf = f[0].gf();
  Workspace ws;
  ws.gf = &gf;
  ws.prec = prec;
  RootSearch rs;
  roots_rec(f, std::nullopt, 0, ws, rs.roots);
  rs.zero_multiplicity = ws.zero_mult;
  rs.ramified = ws.ramified;
  rs.complete = ws.complete;
  return rs;
}

Laurent hensel_root(const LPoly& f, int root_valuation, int prec) {
  const GF& gf = f.at(0).gf();
  for (const NewtonEdge& e : newton_polygon(f)) {
    if (e.root_valuation != Rat(root_valuation)) continue;
    int v = root_valuation;
    LPoly n(f.size(), Laurent::zero(gf));
    long long hmin = 0;
    bool have_h = false;
    for (size_t i = 0; i < f.size(); ++i) {
      if (!f[i].nonzero_at_precision()) continue;
      long long w = *f[i].val() + (long long)i * v;
      if (!have_h || w < hmin) hmin = w, have_h = true;
    }
    for (size_t i = 0; i < f.size(); ++i) n[i] = f[i].shifted(int(i) * v - int(hmin));
    std::vector<uint8_t> rbar = residue_poly(n);
    for (int u0 = 1; u0 < gf.q(); ++u0) {
      if (root_multiplicity(rbar, uint8_t(u0), gf) == 1) {
        Laurent y = newton_lift(n, uint8_t(u0), prec + std::max(0, -v), gf);
        return y.shifted(v).truncated(prec);
      }
    }
    throw std::domain_error("not Hensel-liftable here: no simple residual root on the segment");
  }
  throw std::domain_error("not Hensel-liftable here: no segment with the requested valuation");
}

}  // namespace tmw
