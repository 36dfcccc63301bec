#include "tmw/extfield.hpp"

#include <sstream>
#include <stdexcept>

#include "tmw/binom.hpp"
#include "tmw/newton.hpp"

namespace tmw {

std::vector<Laurent> renormalize_unit_generator(const GF& gf, std::vector<Laurent> modulus) {
  int n = int(modulus.size()) - 1;
  if (n < 1 || modulus[size_t(n)] != Laurent::one(gf))
    throw std::invalid_argument("renormalize: modulus must be monic of degree >= 1");
  auto edges = newton_polygon(modulus);
  if (edges.size() != 1)
    throw std::invalid_argument(
        "renormalize: modulus Newton polygon has several slopes (not irreducible here)");
  Rat v0 = edges[0].root_valuation;
  if (v0 == 0) {
    // already a unit generator when all coefficients are integral
    bool ok = true;
    for (int i = 0; i < n; ++i)
      if (modulus[size_t(i)].nonzero_at_precision() && *modulus[size_t(i)].val() < 0) ok = false;
    if (ok) return modulus;
  }
  // k = -floor(v0): w(T^{-k} alpha) = v0 + k lies in [0, 1)
  BigInt num = boost::multiprecision::numerator(v0), den = boost::multiprecision::denominator(v0);
  BigInt fl = num / den;
  if (num < 0 && fl * den != num) fl -= 1;
  int k = -fl.convert_to<int>();
  bool add_one = (v0 + k) != 0;
  // alpha = T^k (x - c): substitute and renormalize monic:
  // m(T^k x) has coefficients c_i T^{ki}; dividing by T^{kn} gives
  // c_i' = c_i u^{k(n-i)}
  std::vector<Laurent> scaled(modulus.size(), Laurent::zero(gf));
  for (int i = 0; i <= n; ++i) scaled[size_t(i)] = modulus[size_t(i)].shifted(k * (n - i));
  if (!add_one) return scaled;
  // shift x -> x + c with c = -(−1)... beta = T^{-k} alpha + 1, so
  // alpha = T^k (beta - 1) and the modulus in beta is m_scaled(x - 1)
  std::vector<Laurent> out(scaled.size(), Laurent::zero(gf));
  uint8_t minus_one = gf.neg(1);
  for (int i = 0; i <= n; ++i) {
    if (scaled[size_t(i)].is_exact_zero()) continue;
    uint8_t cpow = 1;
    for (int j = i; j >= 0; --j) {
      uint8_t b = binom_mod_p(uint64_t(i), uint64_t(j), gf.p());
      if (b != 0 && cpow != 0)
        out[size_t(j)] = out[size_t(j)] + scaled[size_t(i)].scaled(gf.mul(b, cpow));
      cpow = gf.mul(cpow, minus_one);
    }
  }
  return out;
}

ExtFieldPtr make_extension(const GF& gf, std::vector<Laurent> modulus, int gamma_budget) {
  int n = int(modulus.size()) - 1;
  if (n < 1) throw std::invalid_argument("make_extension: degree must be >= 1");
  if (modulus[size_t(n)] != Laurent::one(gf))
    throw std::invalid_argument("make_extension: modulus must be monic");
  // |alpha| = 1 certificate: integral coefficients, unit constant term
  if (!modulus[0].nonzero_at_precision() || *modulus[0].val() != 0)
    throw std::invalid_argument(
        "make_extension: |alpha| != 1; apply renormalize_unit_generator first");
  for (int i = 1; i < n; ++i)
    if (modulus[size_t(i)].nonzero_at_precision() && *modulus[size_t(i)].val() < 0)
      throw std::invalid_argument(
          "make_extension: non-integral modulus coefficient; renormalize first");

  auto F = std::make_shared<ExtField>();
  F->gf = &gf;
  F->n = n;
  F->modulus = modulus;
  // power table: alpha^j for j = 0..2n-2
  std::vector<Laurent> cur(size_t(n), Laurent::zero(gf));
  cur[0] = Laurent::one(gf);
  F->alpha_pow.push_back(cur);
  for (int j = 1; j <= 2 * n - 2; ++j) {
    // multiply by alpha: shift coordinates, reduce the overflow by the modulus
    std::vector<Laurent> nxt(size_t(n), Laurent::zero(gf));
    Laurent top = cur[size_t(n - 1)];
    for (int i = n - 1; i >= 1; --i) nxt[size_t(i)] = cur[size_t(i - 1)];
    nxt[0] = Laurent::zero(gf);
    if (!top.is_exact_zero())
      for (int i = 0; i < n; ++i) nxt[size_t(i)] = nxt[size_t(i)] - top * modulus[size_t(i)];
    F->alpha_pow.push_back(nxt);
    cur = std::move(nxt);
  }

  // gamma: find the least K such that the norm form has no primitive zero
  // modulo u^K; then |z| >= q^{-(K-1)/n} F_alpha(z) for every z
  {
    long long combos = 1;
    bool certified = false;
    int kappa = 0;
    for (int K = 1; K <= gamma_budget && !certified; ++K) {
      combos = 1;
      for (int t = 0; t < n * K; ++t) {
        combos *= gf.q();
        if (combos > (1 << 22)) break;
      }
      if (combos > (1 << 22)) break;
      bool zero_found = false;
      std::vector<uint8_t> digits(size_t(n) * K, 0);
      while (true) {
        bool primitive = false;
        for (int j = 0; j < n; ++j) primitive |= digits[size_t(j) * K] != 0;
        if (primitive) {
          std::vector<Laurent> w;
          for (int j = 0; j < n; ++j)
            w.push_back(Laurent(gf, 0,
                                {digits.begin() + size_t(j) * K, digits.begin() + size_t(j + 1) * K},
                                K));
          ExtElem z(ExtFieldPtr(F), std::move(w));
          Laurent norm = multiplication_matrix(z).det();
          if (!norm.nonzero_at_precision()) {
            zero_found = true;
            break;
          }
        }
        size_t t = 0;
        while (t < digits.size()) {
          if (++digits[t] < gf.q()) break;
          digits[t] = 0;
          ++t;
        }
        if (t == digits.size()) break;
      }
      if (!zero_found) {
        kappa = K - 1;
        certified = true;
      }
    }
    F->gamma_certified = certified;
    F->gamma_depth = kappa;
    F->gamma = certified ? Mag::qpow(Rat(-kappa, n)) : Mag::qpow(Rat(-gamma_budget, 1));
  }
  return F;
}

ExtElem::ExtElem(ExtFieldPtr F, std::vector<Laurent> coords) : F_(std::move(F)), w_(std::move(coords)) {
  if (int(w_.size()) != F_->n) throw std::invalid_argument("ExtElem: coordinate count mismatch");
}

ExtElem ExtElem::zero(const ExtFieldPtr& F) {
  return ExtElem(F, std::vector<Laurent>(size_t(F->n), Laurent::zero(*F->gf)));
}

ExtElem ExtElem::one(const ExtFieldPtr& F) {
  auto w = std::vector<Laurent>(size_t(F->n), Laurent::zero(*F->gf));
  w[0] = Laurent::one(*F->gf);
  return ExtElem(F, std::move(w));
}

ExtElem ExtElem::from_base(const ExtFieldPtr& F, const Laurent& x) {
  auto w = std::vector<Laurent>(size_t(F->n), Laurent::zero(*F->gf));
  w[0] = x;
  return ExtElem(F, std::move(w));
}

ExtElem ExtElem::generator(const ExtFieldPtr& F) {
  auto w = std::vector<Laurent>(size_t(F->n), Laurent::zero(*F->gf));
  if (F->n == 1)
    throw std::invalid_argument("ExtElem::generator: trivial extension has no generator");
  w[1] = Laurent::one(*F->gf);
  return ExtElem(F, std::move(w));
}

bool ExtElem::is_zero() const {
  for (const auto& c : w_)
    if (!c.is_zero()) return false;
  return true;
}

bool ExtElem::is_exact_zero() const {
  for (const auto& c : w_)
    if (!c.is_exact_zero()) return false;
  return true;
}

ExtElem ExtElem::operator+(const ExtElem& o) const {
  std::vector<Laurent> w = w_;
  for (size_t i = 0; i < w.size(); ++i) w[i] = w[i] + o.w_[i];
  return ExtElem(F_, std::move(w));
}

ExtElem ExtElem::operator-() const {
  std::vector<Laurent> w = w_;
  for (auto& c : w) c = -c;
  return ExtElem(F_, std::move(w));
}

ExtElem ExtElem::operator-(const ExtElem& o) const { return *this + (-o); }

ExtElem ExtElem::operator*(const ExtElem& o) const {
  int n = F_->n;
  std::vector<Laurent> acc(size_t(n), Laurent::zero(*F_->gf));
  for (int i = 0; i < n; ++i) {
    if (w_[size_t(i)].is_exact_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (o.w_[size_t(j)].is_exact_zero()) continue;
      Laurent prod = w_[size_t(i)] * o.w_[size_t(j)];
      const auto& pw = F_->alpha_pow[size_t(i + j)];
      for (int t = 0; t < n; ++t)
        if (!pw[size_t(t)].is_exact_zero()) acc[size_t(t)] = acc[size_t(t)] + prod * pw[size_t(t)];
    }
  }
  return ExtElem(F_, std::move(acc));
}

ExtElem ExtElem::inverse() const {
  // solve M_z w = e_1 over k_inf
  Mat<Laurent> M = multiplication_matrix(*this);
  Mat<Laurent> Minv = M.inverse();
  std::vector<Laurent> e1(size_t(F_->n), Laurent::zero(*F_->gf));
  e1[0] = Laurent::one(*F_->gf);
  return ExtElem(F_, Minv.apply(e1));
}

ExtElem ExtElem::operator/(const ExtElem& o) const { return *this * o.inverse(); }

ExtElem ExtElem::pow_int(long n) const {
  ExtElem b = n < 0 ? inverse() : *this;
  unsigned long e = n < 0 ? -(unsigned long)n : (unsigned long)n;
  ExtElem r = one(F_);
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

ExtElem ExtElem::frobenius_q(unsigned j) const {
  ExtElem r = *this;
  long steps = long(j) * F_->gf->e();
  for (long t = 0; t < steps; ++t) r = r.pow_int(F_->gf->p());
  return r;
}

Mag ExtElem::abs() const {
  if (is_exact_zero()) return Mag::zero();
  Laurent norm = multiplication_matrix(*this).det();
  if (!norm.nonzero_at_precision())
    throw std::domain_error("ExtElem: norm zero at precision, magnitude undetermined");
  return Mag::qpow(Rat(-(*norm.val()), F_->n));
}

Mag ExtElem::f_alpha() const {
  Mag m = Mag::zero();
  for (const auto& c : w_) {
    if (c.is_exact_zero()) continue;
    m = Mag::max(m, c.abs());
  }
  return m;
}

std::string ExtElem::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < w_.size(); ++i) {
    if (i) os << "; ";
    os << w_[i].str();
  }
  os << "]";
  return os.str();
}

Mag f_alpha_norm(const std::vector<ExtElem>& z) {
  Mag m = Mag::zero();
  for (const auto& zi : z) m = Mag::max(m, zi.f_alpha());
  return m;
}

Mat<Laurent> multiplication_matrix(const ExtElem& z) {
  const ExtFieldPtr& F = z.field();
  int n = F->n;
  Mat<Laurent> M = Mat<Laurent>::zeros(n, n, Laurent::zero(*F->gf));
  // column j holds the coordinates of z * alpha^j
  for (int j = 0; j < n; ++j) {
    std::vector<Laurent> col(size_t(n), Laurent::zero(*F->gf));
    for (int i = 0; i < n; ++i) {
      const Laurent& wi = z.coords()[size_t(i)];
      if (wi.is_exact_zero()) continue;
      const auto& pw = F->alpha_pow[size_t(i + j)];
      for (int t = 0; t < n; ++t)
        if (!pw[size_t(t)].is_exact_zero()) col[size_t(t)] = col[size_t(t)] + wi * pw[size_t(t)];
    }
    for (int t = 0; t < n; ++t) M(t, j) = col[size_t(t)];
  }
  return M;
}

}  // namespace tmw
