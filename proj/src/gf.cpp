#include "tmw/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace tmw {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Fixed irreducible moduli (Conway polynomials) for the q <= 16 extensions,
// low-to-high coefficient lists over F_p.
const std::vector<int>* conway(int p, int e) {
  static const std::vector<int> f2_2 = {1, 1, 1};        // x^2+x+1
  static const std::vector<int> f2_3 = {1, 1, 0, 1};     // x^3+x+1
  static const std::vector<int> f2_4 = {1, 1, 0, 0, 1};  // x^4+x+1
  static const std::vector<int> f3_2 = {2, 2, 1};        // x^2+2x+2
  if (p == 2 && e == 2) return &f2_2;
  if (p == 2 && e == 3) return &f2_3;
  if (p == 2 && e == 4) return &f2_4;
  if (p == 3 && e == 2) return &f3_2;
  return nullptr;
}

// Multiply two elements encoded as base-p digit strings, reducing by the modulus.
int raw_mul(int a, int b, int p, int e, const std::vector<int>& mod) {
  std::vector<int> da(e), db(e), prod(2 * e - 1, 0);
  for (int i = 0; i < e; ++i, a /= p) da[i] = a % p;
  for (int i = 0; i < e; ++i, b /= p) db[i] = b % p;
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (int k = 2 * e - 2; k >= e; --k) {
    int c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    // x^e = -(mod_0 + ... + mod_{e-1} x^{e-1})
    for (int j = 0; j < e; ++j) prod[k - e + j] = ((prod[k - e + j] - c * mod[j]) % p + p) % p;
  }
  int out = 0;
  for (int i = e - 1; i >= 0; --i) out = out * p + prod[i];
  return out;
}

}  // namespace

GF::GF(int p, int e) : p_(p), e_(e), q_(1) {
  if (!is_prime(p) || p > 13) throw std::invalid_argument("GF: p must be a prime <= 13");
  if (e < 1) throw std::invalid_argument("GF: e must be >= 1");
  for (int i = 0; i < e; ++i) q_ *= p;
  if (q_ > 16) throw std::invalid_argument("GF: q = p^e must be <= 16");
  if (e > 1) {
    const auto* m = conway(p, e);
    if (!m) throw std::invalid_argument("GF: no modulus on record for this (p, e)");
    modulus_ = *m;
  }
  add_.resize(size_t(q_) * q_);
  mul_.resize(size_t(q_) * q_);
  neg_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    // addition is digitwise mod p
    for (int b = 0; b < q_; ++b) {
      int x = a, y = b, out = 0, w = 1;
      for (int i = 0; i < e_; ++i) {
        out += ((x % p_ + y % p_) % p_) * w;
        w *= p_;
        x /= p_;
        y /= p_;
      }
      add_[idx(uint8_t(a), uint8_t(b))] = uint8_t(out);
    }
    {
      int x = a, out = 0, w = 1;
      for (int i = 0; i < e_; ++i) {
        out += ((p_ - x % p_) % p_) * w;
        w *= p_;
        x /= p_;
      }
      neg_[a] = uint8_t(out);
    }
    for (int b = 0; b < q_; ++b)
      mul_[idx(uint8_t(a), uint8_t(b))] =
          e_ == 1 ? uint8_t((a * b) % p_) : uint8_t(raw_mul(a, b, p_, e_, modulus_));
  }
}

const GF& GF::of_order(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GF>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return *it->second;
  int p = 0, e = 0;
  for (int cand = 2; cand <= 13; ++cand) {
    if (!is_prime(cand)) continue;
    int pe = cand, ee = 1;
    while (pe < q) pe *= cand, ++ee;
    if (pe == q) {
      p = cand;
      e = ee;
      break;
    }
  }
  if (p == 0) throw std::invalid_argument("GF: q is not a prime power <= 16");
  auto gf = std::make_unique<GF>(p, e);
  const GF& ref = *gf;
  cache.emplace(q, std::move(gf));
  return ref;
}

uint8_t GF::inv(uint8_t a) const {
  if (a == 0) throw std::domain_error("GF: inverse of zero");
  return pow(a, uint64_t(q_) - 2);
}

uint8_t GF::pow(uint8_t a, uint64_t n) const {
  uint8_t r = 1;
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

uint8_t GF::frob(uint8_t a, unsigned j) const {
  for (unsigned i = 0; i < j; ++i) a = pow(a, uint64_t(p_));
  return a;
}

std::string GF::describe() const {
  std::string s = "F_" + std::to_string(q_);
  if (e_ > 1) {
    s += " = F_" + std::to_string(p_) + "[x]/(";
    for (int i = e_; i >= 0; --i) {
      int c = i == e_ ? 1 : modulus_[i];
      if (c == 0) continue;
      if (i < e_) s += "+";
      if (c != 1 || i == 0) s += std::to_string(c);
      if (i >= 1) s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    s += ")";
  }
  return s;
}

}  // namespace tmw
