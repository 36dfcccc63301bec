#ifndef TMW_TWISTED_HPP
#define TMW_TWISTED_HPP

#include <sstream>
#include <stdexcept>
#include <vector>

#include "tmw/matrix.hpp"

namespace tmw {

// Twisted (Ore) polynomial sum_i M_i tau^i with m x m matrix coefficients,
// where tau is the q-power Frobenius. Multiplication is composition of the
// additive maps: tau * c = c^{(q)} * tau, the Frobenius acting entrywise on
// matrix coefficients.
template <class F>
class TwistedPoly {
public:
  TwistedPoly(int m, int q, const F& like)
      : m_(m), q_(q), like_(like) {}
  TwistedPoly(std::vector<Mat<F>> coeffs, int q)
      : m_(coeffs.at(0).rows()), q_(q), like_(coeffs[0](0, 0).zero_like()), c_(std::move(coeffs)) {
    trim();
  }

  static TwistedPoly zero(int m, int q, const F& like) { return TwistedPoly(m, q, like); }
  static TwistedPoly identity(int m, int q, const F& like) {
    TwistedPoly t(m, q, like);
    t.c_.push_back(Mat<F>::identity(m, like));
    return t;
  }
  // scalar (1x1) polynomial from a coefficient list c_0 + c_1 tau + ...
  static TwistedPoly scalar(std::vector<F> coeffs, int q) {
    std::vector<Mat<F>> ms;
    for (auto& c : coeffs) {
      Mat<F> m(1, 1, c);
      ms.push_back(m);
    }
    return TwistedPoly(std::move(ms), q);
  }

  int dim() const { return m_; }
  int q() const { return q_; }
  // degree in tau; -1 for the zero polynomial
  int deg() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Mat<F>& coeff_ref(int i) const { return c_[i]; }
  Mat<F> coeff(int i) const {
    if (i < 0 || i > deg()) return Mat<F>::zeros(m_, m_, like_);
    return c_[i];
  }
  // the tau^0 coefficient, i.e. the induced map on the tangent space
  Mat<F> differential() const { return coeff(0); }

  TwistedPoly operator+(const TwistedPoly& o) const {
    check_compat(o);
    TwistedPoly r(m_, q_, like_);
    int n = std::max(deg(), o.deg());
    for (int i = 0; i <= n; ++i) r.c_.push_back(coeff(i) + o.coeff(i));
    r.trim();
    return r;
  }
  TwistedPoly operator-(const TwistedPoly& o) const {
    check_compat(o);
    TwistedPoly r(m_, q_, like_);
    int n = std::max(deg(), o.deg());
    for (int i = 0; i <= n; ++i) r.c_.push_back(coeff(i) - o.coeff(i));
    r.trim();
    return r;
  }
  TwistedPoly scaled(const F& s) const {
    TwistedPoly r = *this;
    for (auto& m : r.c_) m = m.scaled(s);
    r.trim();
    return r;
  }

  // composition product: (f o g)_s = sum_{i+j=s} f_i * g_j^{(q^i)}
  TwistedPoly compose(const TwistedPoly& g) const {
    check_compat(g);
    if (is_zero() || g.is_zero()) return zero(m_, q_, like_);
    std::vector<Mat<F>> out(size_t(deg() + g.deg()) + 1, Mat<F>::zeros(m_, m_, like_));
    for (int i = 0; i <= deg(); ++i) {
      if (c_[i].is_zero()) continue;
      for (int j = 0; j <= g.deg(); ++j) {
        if (g.c_[j].is_zero()) continue;
        out[i + j] = out[i + j] + c_[i] * g.c_[j].frobenius_q(unsigned(i));
      }
    }
    return TwistedPoly(std::move(out), q_);
  }

  // evaluation as an additive map on a coordinate vector
  std::vector<F> eval(const std::vector<F>& x) const {
    if (int(x.size()) != m_) throw std::invalid_argument("TwistedPoly: point dimension mismatch");
    std::vector<F> acc(m_, like_.zero_like());
    for (int i = 0; i <= deg(); ++i) {
      if (c_[i].is_zero()) continue;
      std::vector<F> xi(m_, like_.zero_like());
      for (int t = 0; t < m_; ++t) xi[t] = x[t].frobenius_q(unsigned(i));
      std::vector<F> term = c_[i].apply(xi);
      for (int t = 0; t < m_; ++t) acc[t] = acc[t] + term[t];
    }
    return acc;
  }

  // right division: *this = quot o g + rem with deg_tau(rem) < deg_tau(g).
  // Requires the leading matrix coefficient of g to be invertible.
  std::pair<TwistedPoly, TwistedPoly> right_divide(const TwistedPoly& g) const {
    check_compat(g);
    if (g.is_zero()) throw std::domain_error("TwistedPoly: right division by zero");
    Mat<F> lead = g.c_.back();
    Mat<F> lead_inv(m_, m_, like_);
    try {
      lead_inv = lead.inverse();
    } catch (const std::domain_error&) {
      throw std::domain_error("right division unavailable: leading coefficient not invertible");
    }
    TwistedPoly quot = zero(m_, q_, like_), rem = *this;
    while (!rem.is_zero() && rem.deg() >= g.deg()) {
      int k = rem.deg() - g.deg();
      // Q_k * lead^{(q^k)} = rem_top
      Mat<F> qk = rem.c_.back() * lead_inv.frobenius_q(unsigned(k));
      TwistedPoly term(m_, q_, like_);
      term.c_.assign(size_t(k) + 1, Mat<F>::zeros(m_, m_, like_));
      term.c_[k] = qk;
      quot = quot + term;
      rem = rem - term.compose(g);
      if (rem.deg() == int(rem.c_.size()) - 1 && rem.deg() >= k + g.deg() && !rem.c_.back().is_zero())
        throw std::domain_error("TwistedPoly: right division failed to reduce degree");
    }
    return {quot, rem};
  }

  bool operator==(const TwistedPoly& o) const {
    return m_ == o.m_ && q_ == o.q_ && c_ == o.c_;
  }
  bool operator!=(const TwistedPoly& o) const { return !(*this == o); }

  std::string str(const std::string& var = "T") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (int i = 0; i <= deg(); ++i) {
      if (c_[i].is_zero()) continue;
      if (os.tellp() > 0) os << " + ";
      os << "[";
      for (int r = 0; r < m_; ++r) {
        if (r) os << "; ";
        for (int cc = 0; cc < m_; ++cc) {
          if (cc) os << ", ";
          os << entry_str(c_[i](r, cc), var);
        }
      }
      os << "]";
      if (i == 1) os << " tau";
      if (i > 1) os << " tau^" << i;
    }
    return os.str();
  }

private:
  template <class G>
  static std::string entry_str(const G& x, const std::string& var) {
    if constexpr (requires(const G& g) { g.str(var); })
      return x.str(var);
    else
      return x.str();
  }
  void check_compat(const TwistedPoly& o) const {
    if (m_ != o.m_ || q_ != o.q_)
      throw std::invalid_argument("TwistedPoly: dimension mismatch");
  }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  int m_, q_;
  F like_;
  std::vector<Mat<F>> c_;
};

}  // namespace tmw

#endif  // TMW_TWISTED_HPP
