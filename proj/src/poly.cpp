#include "tmw/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace tmw {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const GF& gf, uint8_t v) {
  Poly p(gf);
  if (v != 0) p.c_ = {v};
  return p;
}

Poly Poly::monomial(const GF& gf, int degree, uint8_t v) {
  Poly p(gf);
  if (v != 0) {
    p.c_.assign(degree + 1, 0);
    p.c_[degree] = v;
  }
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(*gf_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = gf_->add(coeff(int(i)), o.coeff(int(i)));
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = gf_->neg(x);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(*gf_);
  Poly r(*gf_);
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = gf_->add(r.c_[i + j], gf_->mul(c_[i], o.c_[j]));
  }
  r.trim();
  return r;
}

Poly Poly::scaled(uint8_t s) const {
  Poly r = *this;
  for (auto& x : r.c_) x = gf_->mul(x, s);
  r.trim();
  return r;
}

Poly Poly::pow(uint64_t n) const {
  Poly r = one(*gf_), b = *this;
  while (n) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

bool Poly::operator<(const Poly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& g) const {
  if (g.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
  Poly rem = *this, quot(*gf_);
  quot.c_.assign(std::max<int>(degree() - g.degree() + 1, 0), 0);
  uint8_t lead_inv = gf_->inv(g.leading());
  while (!rem.is_zero() && rem.degree() >= g.degree()) {
    int k = rem.degree() - g.degree();
    uint8_t s = gf_->mul(rem.leading(), lead_inv);
    quot.c_[k] = s;
    rem = rem - (g * monomial(*gf_, k, s));
  }
  quot.trim();
  return {quot, rem};
}

Poly Poly::make_monic() const {
  if (is_zero()) return *this;
  return scaled(gf_->inv(leading()));
}

Poly Poly::char_power(unsigned pj) const {
  // (sum a_i T^i)^{p^j} = sum a_i^{p^j} T^{i p^j}; a^{p^j} via GF::frob
  if (is_zero()) return *this;
  uint64_t step = 1;
  for (unsigned t = 0; t < pj; ++t) step *= uint64_t(gf_->p());
  Poly r(*gf_);
  r.c_.assign(size_t(degree()) * step + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) r.c_[i * step] = gf_->frob(c_[i], pj);
  r.trim();
  return r;
}

Poly Poly::frobenius_q(unsigned j) const { return char_power(j * unsigned(gf_->e())); }

Poly Poly::substitute_square() const {
  if (is_zero()) return *this;
  Poly r(*gf_);
  r.c_.assign(size_t(degree()) * 2 + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[2 * i] = c_[i];
  r.trim();
  return r;
}

std::optional<Poly> Poly::char_root() const {
  int p = gf_->p();
  Poly r(*gf_);
  if (is_zero()) return r;
  r.c_.assign(degree() / p + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (i % p != 0) return std::nullopt;
    // coefficient must be a p-th power; x -> x^{p^{e-1}} inverts x -> x^p on F_q
    r.c_[i / p] = gf_->frob(c_[i], unsigned(gf_->e() > 1 ? gf_->e() - 1 : 0));
    if (gf_->e() == 1) r.c_[i / p] = c_[i];  // x^p = x on F_p
  }
  r.trim();
  return r;
}

uint8_t Poly::eval(uint8_t x) const {
  uint8_t acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = gf_->add(gf_->mul(acc, x), c_[i]);
  return acc;
}

std::string Poly::list_str() const {
  std::ostringstream os;
  os << "q=" << gf_->q() << ";[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << int(c_[i]);
  }
  os << "]";
  return os.str();
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    uint8_t a = c_[i];
    if (a == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || a != 1) os << int(a);
    if (i == 0) continue;
    if (a != 1) os << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

Poly Poly::parse(const GF& gf, const std::string& text, const std::string& var) {
  // accepts both the list form "q=<q>;[c0,c1,...]" and terms like "T^3+2T+1"
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(uint8_t(text[pos]))) ++pos;
  };
  skip_ws();
  if (text.compare(pos, 2, "q=") == 0) {
    size_t semi = text.find(';', pos);
    if (semi == std::string::npos) throw std::invalid_argument("Poly::parse: missing ';'");
    int q = std::stoi(text.substr(pos + 2, semi - pos - 2));
    if (q != gf.q()) throw std::invalid_argument("Poly::parse: q mismatch");
    size_t lb = text.find('[', semi), rb = text.find(']', semi);
    if (lb == std::string::npos || rb == std::string::npos)
      throw std::invalid_argument("Poly::parse: malformed list");
    std::vector<uint8_t> cs;
    std::string body = text.substr(lb + 1, rb - lb - 1);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      if (tok.find_first_not_of(" \t") == std::string::npos) continue;
      int v = std::stoi(tok);
      if (v < 0 || v >= gf.q()) throw std::invalid_argument("Poly::parse: coefficient out of range");
      cs.push_back(uint8_t(v));
    }
    return Poly(gf, std::move(cs));
  }

  Poly out(gf);
  int sign = 1;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] == '+') {
      sign = 1;
      ++pos;
      continue;
    }
    if (text[pos] == '-') {
      sign = -1;
      ++pos;
      continue;
    }
    int coef = 1;
    bool saw_num = false;
    if (std::isdigit(uint8_t(text[pos]))) {
      coef = 0;
      saw_num = true;
      while (pos < text.size() && std::isdigit(uint8_t(text[pos])))
        coef = coef * 10 + (text[pos++] - '0');
    }
    skip_ws();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
    }
    int deg = 0;
    if (text.compare(pos, var.size(), var) == 0) {
      pos += var.size();
      deg = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        deg = 0;
        while (pos < text.size() && std::isdigit(uint8_t(text[pos])))
          deg = deg * 10 + (text[pos++] - '0');
      }
    } else if (!saw_num) {
      throw std::invalid_argument("Poly::parse: unexpected character '" +
                                  std::string(1, text[pos]) + "'");
    }
    uint8_t c = uint8_t(((coef % gf.p()) + gf.p()) % gf.p());
    if (sign < 0) c = gf.neg(c);
    out = out + monomial(gf, deg, c);
    sign = 1;
  }
  return out;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("poly_gcd: both arguments are zero");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x.divmod(y).second;
    x = y;
    y = r;
  }
  return x.make_monic();
}

std::pair<Poly, Poly> poly_gcd_lcm(const Poly& a, const Poly& b) {
  Poly g = poly_gcd(a, b);
  if (a.is_zero() || b.is_zero()) return {g, Poly::zero(a.gf())};
  Poly l = (a * b).divmod(g).first.make_monic();
  return {g, l};
}

}  // namespace tmw
