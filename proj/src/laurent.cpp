#include "tmw/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tmw/polydisc.hpp"

namespace tmw {

void Laurent::normalize() {
  if (!is_exact()) {
    // drop digits at or beyond the precision
    if (lead_ >= prec_) {
      c_.clear();
    } else if (lead_ + int(c_.size()) > prec_) {
      c_.resize(prec_ - lead_);
    }
  }
  size_t lz = 0;
  while (lz < c_.size() && c_[lz] == 0) ++lz;
  if (lz) {
    c_.erase(c_.begin(), c_.begin() + lz);
    lead_ += int(lz);
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) lead_ = 0;
}

Laurent Laurent::monomial(const GF& gf, int exp_u, uint8_t v) {
  Laurent x(gf);
  if (v != 0) {
    x.lead_ = exp_u;
    x.c_ = {v};
  }
  return x;
}

Laurent Laurent::from_poly(const Poly& p) {
  Laurent x(p.gf());
  if (p.is_zero()) return x;
  x.lead_ = -p.degree();
  x.c_.assign(p.coeffs().rbegin(), p.coeffs().rend());
  x.normalize();
  return x;
}

Laurent Laurent::from_frac(const Frac& f, int rel_digits) {
  Laurent n = from_poly(f.num());
  if (f.is_integral()) return n;
  return n * from_poly(f.den()).inv(rel_digits);
}

Mag Laurent::abs() const {
  if (!c_.empty()) return Mag::qpow(-lead_);
  if (is_exact()) return Mag::zero();
  throw std::domain_error("Laurent: zero at precision O(u^" + std::to_string(prec_) +
                          "), magnitude undetermined");
}

Mag Laurent::abs_bound() const {
  if (!c_.empty()) return Mag::qpow(-lead_);
  if (is_exact()) return Mag::zero();
  return Mag::qpow(-prec_);
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r(*gf_);
  r.prec_ = std::min(prec_, o.prec_);
  if (c_.empty() && o.c_.empty()) {
    r.normalize();
    return r;
  }
  int lo = c_.empty() ? o.lead_ : (o.c_.empty() ? lead_ : std::min(lead_, o.lead_));
  int hi_a = c_.empty() ? lo : lead_ + int(c_.size());
  int hi_b = o.c_.empty() ? lo : o.lead_ + int(o.c_.size());
  int hi = std::max(hi_a, hi_b);
  r.lead_ = lo;
  r.c_.assign(hi - lo, 0);
  for (int j = lo; j < hi; ++j) r.c_[j - lo] = gf_->add(coeff(j), o.coeff(j));
  r.normalize();
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& d : r.c_) d = gf_->neg(d);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r(*gf_);
  if (is_exact() && o.is_exact())
    r.prec_ = kExact;
  else
    r.prec_ = clamp_prec(std::min(eff_val() + (long long)o.prec_, o.eff_val() + (long long)prec_));
  if (c_.empty() || o.c_.empty()) {
    r.normalize();
    return r;
  }
  r.lead_ = lead_ + o.lead_;
  size_t len = c_.size() + o.c_.size() - 1;
  if (!r.is_exact()) len = std::min<size_t>(len, size_t(std::max(0, r.prec_ - r.lead_)));
  r.c_.assign(len, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    size_t jmax = std::min(o.c_.size(), len > i ? len - i : 0);
    for (size_t j = 0; j < jmax; ++j)
      r.c_[i + j] = gf_->add(r.c_[i + j], gf_->mul(c_[i], o.c_[j]));
  }
  r.normalize();
  return r;
}

Laurent Laurent::scaled(uint8_t s) const {
  Laurent r = *this;
  for (auto& d : r.c_) d = gf_->mul(d, s);
  r.normalize();
  return r;
}

Laurent Laurent::inv(int rel_digits) const {
  if (c_.empty()) {
    if (is_exact()) throw std::domain_error("Laurent: inverse of zero");
    throw std::domain_error("Laurent: division by a value indistinguishable from zero at precision O(u^" +
                            std::to_string(prec_) + ")");
  }
  int v = lead_;
  uint8_t c0i = gf_->inv(c_[0]);
  if (c_.size() == 1) {
    // monomial inverse is exact
    Laurent r = monomial(*gf_, -v, c0i);
    if (!is_exact()) r.prec_ = clamp_prec((long long)prec_ - 2LL * v);
    r.normalize();
    return r;
  }
  int rel = std::min<long long>(rel_digits, is_exact() ? (long long)rel_digits : prec_ - v);
  // digits y_k of the inverse of the unit part x = c_0 (1 + t)
  std::vector<uint8_t> y(rel, 0);
  y[0] = c0i;
  for (int k = 1; k < rel; ++k) {
    uint8_t s = 0;
    for (int j = 1; j <= k; ++j) {
      uint8_t xj = (j < int(c_.size())) ? c_[j] : 0;
      if (xj) s = gf_->add(s, gf_->mul(xj, y[k - j]));
    }
    y[k] = gf_->neg(gf_->mul(c0i, s));
  }
  Laurent r(*gf_, -v, std::move(y), clamp_prec(-(long long)v + rel));
  return r;
}

Laurent Laurent::operator/(const Laurent& o) const { return *this * o.inv(); }

Laurent Laurent::pow(long n) const {
  Laurent b = n < 0 ? inv() : *this;
  unsigned long e = n < 0 ? -(unsigned long)n : (unsigned long)n;
  Laurent r = one(*gf_);
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Laurent Laurent::shifted(int k) const {
  Laurent r = *this;
  r.lead_ += k;
  if (!r.is_exact()) r.prec_ = clamp_prec((long long)r.prec_ + k);
  return r;
}

Laurent Laurent::char_power(unsigned pj) const {
  if (pj == 0) return *this;
  long long step = 1;
  for (unsigned t = 0; t < pj; ++t) step *= gf_->p();
  Laurent r(*gf_);
  r.prec_ = clamp_prec(is_exact() ? (long long)kExact : (long long)prec_ * step);
  if (c_.empty()) {
    r.normalize();
    return r;
  }
  r.lead_ = int(lead_ * step);
  r.c_.assign(size_t((c_.size() - 1) * step + 1), 0);
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) r.c_[i * step] = gf_->frob(c_[i], pj);
  r.normalize();
  return r;
}

Laurent Laurent::truncated(int new_prec) const {
  Laurent r = *this;
  r.prec_ = std::min(r.prec_, new_prec);
  r.normalize();
  return r;
}

std::string Laurent::str() const {
  std::ostringstream os;
  os << "v=" << (c_.empty() ? 0 : lead_) << ";prec=";
  if (is_exact())
    os << "inf";
  else
    os << prec_;
  os << ";coeffs=[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << int(c_[i]);
  }
  os << "]";
  return os.str();
}

Laurent Laurent::parse(const GF& gf, const std::string& text) {
  auto grab = [&](const std::string& key) -> std::string {
    size_t p = text.find(key);
    if (p == std::string::npos) throw std::invalid_argument("Laurent::parse: missing " + key);
    p += key.size();
    size_t e = text.find(';', p);
    return text.substr(p, e == std::string::npos ? std::string::npos : e - p);
  };
  int lead = std::stoi(grab("v="));
  std::string ps = grab("prec=");
  int prec = ps == "inf" ? kExact : std::stoi(ps);
  std::string cs = grab("coeffs=");
  size_t lb = cs.find('['), rb = cs.find(']');
  std::vector<uint8_t> digits;
  std::istringstream is(cs.substr(lb + 1, rb - lb - 1));
  std::string tok;
  while (std::getline(is, tok, ','))
    if (tok.find_first_not_of(" \t") != std::string::npos) digits.push_back(uint8_t(std::stoi(tok)));
  return Laurent(gf, lead, std::move(digits), prec);
}

std::string Laurent::pretty(int max_terms) const {
  if (c_.empty()) return is_exact() ? "0" : "O((1/T)^" + std::to_string(prec_) + ")";
  std::ostringstream os;
  int shown = 0;
  bool first = true;
  for (size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    ++shown;
    int e = lead_ + int(i);
    if (e == 0)
      os << int(c_[i]);
    else {
      if (c_[i] != 1) os << int(c_[i]) << "*";
      if (e < 0)
        os << "T^" << -e;
      else
        os << "(1/T)^" << e;
    }
  }
  if (shown == max_terms && lead_ + int(c_.size()) > lead_ + max_terms) os << " + ...";
  if (!is_exact()) os << " + O((1/T)^" << prec_ << ")";
  return os.str();
}

bool equal_at_precision(const Laurent& a, const Laurent& b) { return (a - b).is_zero(); }

int agreement_exponent(const Laurent& a, const Laurent& b) {
  Laurent d = a - b;
  if (d.is_zero()) return d.precision();
  return *d.val();
}

std::vector<Polydisc> unit_polydisc_cover(const GF& gf, int h, int s) {
  if (s < 0) throw std::invalid_argument("unit_polydisc_cover: radius exponent must be >= 0");
  long long total = 1;
  for (int i = 0; i < h * s; ++i) {
    total *= gf.q();
    if (total > (1 << 24)) throw std::invalid_argument("unit_polydisc_cover: cover too large");
  }
  std::vector<Polydisc> cover;
  cover.reserve(size_t(total));
  // odometer over h coordinates x s digits in F_q
  std::vector<uint8_t> digits(size_t(h) * s, 0);
  while (true) {
    Polydisc d;
    d.radius_exp = s;
    for (int i = 0; i < h; ++i) {
      std::vector<uint8_t> cs(digits.begin() + size_t(i) * s, digits.begin() + size_t(i + 1) * s);
      d.center.push_back(Laurent(gf, 0, std::move(cs)));
    }
    cover.push_back(std::move(d));
    int k = 0;
    while (k < h * s) {
      if (++digits[k] < gf.q()) break;
      digits[k] = 0;
      ++k;
    }
    if (k == h * s) break;
  }
  return cover;
}

}  // namespace tmw
