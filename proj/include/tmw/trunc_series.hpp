#ifndef TMW_TRUNC_SERIES_HPP
#define TMW_TRUNC_SERIES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "tmw/binom.hpp"
#include "tmw/mag.hpp"

namespace tmw {

using Expo = std::vector<uint16_t>;

inline int expo_total(const Expo& e) {
  int s = 0;
  for (auto x : e) s += x;
  return s;
}

// enumerate all multi-indices with nvars components and total degree <= maxdeg,
// graded-lexicographically
inline std::vector<Expo> all_exponents(int nvars, int maxdeg) {
  std::vector<Expo> out;
  Expo cur(size_t(nvars), 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == nvars) {
      out.push_back(cur);
      return;
    }
    for (int d = 0; d <= rem; ++d) {
      cur[size_t(pos)] = uint16_t(d);
      rec(pos + 1, rem - d);
    }
    cur[size_t(pos)] = 0;
  };
  rec(0, maxdeg);
  std::sort(out.begin(), out.end(), [](const Expo& a, const Expo& b) {
    int da = expo_total(a), db = expo_total(b);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

// Multivariate formal power series truncated at a total degree bound.
// Arithmetic is exact modulo terms of total degree > maxdeg.
template <class F>
class TruncSeries {
public:
  TruncSeries(int nvars, int maxdeg, const F& like)
      : nvars_(nvars), maxdeg_(maxdeg), like_(like.zero_like()) {}

  static TruncSeries zero(int nvars, int maxdeg, const F& like) {
    return TruncSeries(nvars, maxdeg, like);
  }
  static TruncSeries constant(int nvars, int maxdeg, const F& value) {
    TruncSeries s(nvars, maxdeg, value);
    s.set(Expo(size_t(nvars), 0), value);
    return s;
  }
  static TruncSeries variable(int nvars, int maxdeg, int idx, const F& like) {
    TruncSeries s(nvars, maxdeg, like);
    Expo e(size_t(nvars), 0);
    e[size_t(idx)] = 1;
    s.set(e, like.one_like());
    return s;
  }

  int nvars() const { return nvars_; }
  int maxdeg() const { return maxdeg_; }
  const F& like() const { return like_; }
  const std::map<Expo, F>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  F coeff(const Expo& e) const {
    auto it = c_.find(e);
    return it == c_.end() ? like_ : it->second;
  }
  void set(const Expo& e, const F& v) {
    if (int(e.size()) != nvars_) throw std::invalid_argument("TruncSeries: exponent arity");
    if (expo_total(e) > maxdeg_) return;
    if (v.is_zero())
      c_.erase(e);
    else
      c_.insert_or_assign(e, v);
  }
  void add_to(const Expo& e, const F& v) { set(e, coeff(e) + v); }

  TruncSeries operator+(const TruncSeries& o) const {
    check(o);
    TruncSeries r = *this;
    for (auto& [e, v] : o.c_) r.add_to(e, v);
    return r;
  }
  TruncSeries operator-(const TruncSeries& o) const {
    check(o);
    TruncSeries r = *this;
    for (auto& [e, v] : o.c_) r.add_to(e, like_ - v);
    return r;
  }
  TruncSeries operator*(const TruncSeries& o) const {
    check(o);
    TruncSeries r(nvars_, maxdeg_, like_);
    for (auto& [ea, va] : c_) {
      int da = expo_total(ea);
      for (auto& [eb, vb] : o.c_) {
        if (da + expo_total(eb) > maxdeg_) continue;
        Expo e = ea;
        for (size_t i = 0; i < e.size(); ++i) e[i] = uint16_t(e[i] + eb[i]);
        r.add_to(e, va * vb);
      }
    }
    return r;
  }
  TruncSeries scaled(const F& s) const {
    TruncSeries r(nvars_, maxdeg_, like_);
    for (auto& [e, v] : c_) r.set(e, v * s);
    return r;
  }

  bool operator==(const TruncSeries& o) const { return c_ == o.c_; }
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }

  // substitute variable i by args[i]; all args share arity and degree bound
  TruncSeries substitute(const std::vector<TruncSeries>& args) const {
    if (int(args.size()) != nvars_) throw std::invalid_argument("substitute: arity mismatch");
    int out_vars = args.empty() ? nvars_ : args[0].nvars_;
    int out_deg = args.empty() ? maxdeg_ : args[0].maxdeg_;
    TruncSeries r(out_vars, out_deg, like_);
    // cached powers of each substituted series
    auto pows = std::vector<std::vector<TruncSeries>>(size_t(nvars_));
    for (int i = 0; i < nvars_; ++i)
      pows[size_t(i)].push_back(constant(out_vars, out_deg, like_.one_like()));
    for (auto& [e, v] : c_) {
      TruncSeries term = constant(out_vars, out_deg, v);
      for (int i = 0; i < nvars_ && !term.is_zero(); ++i) {
        while (int(pows[size_t(i)].size()) <= e[size_t(i)])
          pows[size_t(i)].push_back(pows[size_t(i)].back() * args[size_t(i)]);
        if (e[size_t(i)] > 0) term = term * pows[size_t(i)][e[size_t(i)]];
      }
      r = r + term;
    }
    return r;
  }

  F eval(const std::vector<F>& x) const {
    if (int(x.size()) != nvars_) throw std::invalid_argument("eval: arity mismatch");
    F acc = like_;
    for (auto& [e, v] : c_) {
      F term = v;
      for (int i = 0; i < nvars_; ++i)
        for (int t = 0; t < int(e[size_t(i)]); ++t) term = term * x[size_t(i)];
      acc = acc + term;
    }
    return acc;
  }

  // hyperderivatives at z0: the coefficients of the expansion around z0,
  // computed via the char-p binomial shift (exact in the truncation)
  TruncSeries shifted_to(const std::vector<F>& z0, int p) const {
    if (int(z0.size()) != nvars_) throw std::invalid_argument("shifted_to: arity mismatch");
    TruncSeries r(nvars_, maxdeg_, like_);
    for (auto& [e, v] : c_) {
      // v * prod (z_i + z0_i)^{e_i} expanded termwise
      std::vector<std::pair<Expo, F>> acc = {{Expo(size_t(nvars_), 0), v}};
      for (int i = 0; i < nvars_; ++i) {
        if (e[size_t(i)] == 0) continue;
        std::vector<std::pair<Expo, F>> nxt;
        // powers of z0_i
        std::vector<F> z0p = {like_.one_like()};
        for (int t = 1; t <= int(e[size_t(i)]); ++t) z0p.push_back(z0p.back() * z0[size_t(i)]);
        for (auto& [ee, vv] : acc)
          for (int j = 0; j <= int(e[size_t(i)]); ++j) {
            uint8_t b = binom_mod_p(e[size_t(i)], uint64_t(j), p);
            if (b == 0) continue;
            F scal = vv * z0p[size_t(e[size_t(i)] - j)];
            // multiply by the residue b (an integer < p) via repeated addition
            F scaled_v = like_;
            for (int t = 0; t < int(b); ++t) scaled_v = scaled_v + scal;
            if (scaled_v.is_zero()) continue;
            Expo en = ee;
            en[size_t(i)] = uint16_t(en[size_t(i)] + j);
            nxt.push_back({std::move(en), std::move(scaled_v)});
          }
        acc = std::move(nxt);
      }
      for (auto& [ee, vv] : acc) r.add_to(ee, vv);
    }
    return r;
  }

  // hyperderivative extraction: the mu-th coefficient of the shift to z0
  F hyperderivative_at(const Expo& mu, const std::vector<F>& z0, int p) const {
    return shifted_to(z0, p).coeff(mu);
  }

  // first-order coefficients as a row of the Jacobian at 0
  std::vector<F> gradient_at_zero() const {
    std::vector<F> g(size_t(nvars_), like_);
    for (int i = 0; i < nvars_; ++i) {
      Expo e(size_t(nvars_), 0);
      e[size_t(i)] = 1;
      g[size_t(i)] = coeff(e);
    }
    return g;
  }

  // Gauss norm on the closed unit polydisc: the largest coefficient magnitude
  Mag gauss_norm() const {
    Mag m = Mag::zero();
    for (auto& [e, v] : c_) m = Mag::max(m, v.mag());
    return m;
  }

  // drop all terms of total degree > d
  TruncSeries truncated_to(int d) const {
    TruncSeries r(nvars_, std::min(d, maxdeg_), like_);
    for (auto& [e, v] : c_)
      if (expo_total(e) <= r.maxdeg_) r.set(e, v);
    return r;
  }

  std::string str(const std::string& var = "z") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, v] : c_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << v.str() << ")";
      for (int i = 0; i < nvars_; ++i)
        if (e[size_t(i)] > 0) {
          os << "*" << var << i + 1;
          if (e[size_t(i)] > 1) os << "^" << e[size_t(i)];
        }
    }
    return os.str();
  }

private:
  void check(const TruncSeries& o) const {
    if (nvars_ != o.nvars_ || maxdeg_ != o.maxdeg_)
      throw std::invalid_argument("TruncSeries: shape mismatch");
  }

  int nvars_, maxdeg_;
  F like_;
  std::map<Expo, F> c_;
};

}  // namespace tmw

#endif  // TMW_TRUNC_SERIES_HPP
