#include "tmw/frac.hpp"

#include <stdexcept>

namespace tmw {

Frac::Frac(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Frac: zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::one(num_.gf());
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  uint8_t lead = den_.leading();
  if (lead != 1) {
    uint8_t inv = num_.gf().inv(lead);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Frac Frac::operator-() const {
  Frac r = *this;
  r.num_ = -r.num_;
  return r;
}

Frac Frac::operator/(const Frac& o) const {
  if (o.is_zero()) throw std::domain_error("Frac: division by zero");
  return Frac(num_ * o.den_, den_ * o.num_);
}

Frac Frac::inverse() const {
  if (is_zero()) throw std::domain_error("Frac: inverse of zero");
  return Frac(den_, num_);
}

Frac Frac::pow(long n) const {
  Frac b = n < 0 ? inverse() : *this;
  unsigned long e = n < 0 ? -(unsigned long)n : (unsigned long)n;
  Frac r = one(gf());
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::string Frac::str(const std::string& var) const {
  if (is_integral()) return num_.str(var);
  std::string n = num_.str(var), d = den_.str(var);
  if (n.find('+') != std::string::npos) n = "(" + n + ")";
  if (d.find('+') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

Frac Frac::parse(const GF& gf, const std::string& text, const std::string& var) {
  // split on a top-level '/', respecting parentheses
  int depth = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '/' && depth == 0) {
      auto strip = [](std::string s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '(')) s.erase(s.begin());
        while (!s.empty() && (s.back() == ' ' || s.back() == ')')) s.pop_back();
        return s;
      };
      return Frac(Poly::parse(gf, strip(text.substr(0, i)), var),
                  Poly::parse(gf, strip(text.substr(i + 1)), var));
    }
  }
  return Frac(Poly::parse(gf, text, var));
}

}  // namespace tmw
