#ifndef TMW_MAG_HPP
#define TMW_MAG_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tmw {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Magnitude of an element of a valued field whose value group is q^Q:
// either 0 or q^e with an exact rational exponent e. The base q is kept
// implicit; since q > 1, comparisons and products never need it.
class Mag {
public:
  Mag() : zero_(true) {}
  static Mag zero() { return Mag(); }
  static Mag qpow(Rat e) {
    Mag m;
    m.zero_ = false;
    m.e_ = std::move(e);
    return m;
  }
  static Mag one() { return qpow(0); }

  bool is_zero() const { return zero_; }
  const Rat& exponent() const {
    if (zero_) throw std::domain_error("Mag: exponent of zero magnitude");
    return e_;
  }

  Mag operator*(const Mag& o) const {
    if (zero_ || o.zero_) return zero();
    return qpow(e_ + o.e_);
  }
  Mag operator/(const Mag& o) const {
    if (o.zero_) throw std::domain_error("Mag: division by zero magnitude");
    if (zero_) return zero();
    return qpow(e_ - o.e_);
  }
  Mag pow(const Rat& k) const {
    if (zero_) {
      if (k <= 0) throw std::domain_error("Mag: 0^k with k <= 0");
      return zero();
    }
    return qpow(e_ * k);
  }

  friend bool operator==(const Mag& a, const Mag& b) {
    if (a.zero_ != b.zero_) return false;
    return a.zero_ || a.e_ == b.e_;
  }
  friend bool operator<(const Mag& a, const Mag& b) {
    if (a.zero_) return !b.zero_;
    if (b.zero_) return false;
    return a.e_ < b.e_;
  }
  friend bool operator<=(const Mag& a, const Mag& b) { return a < b || a == b; }
  friend bool operator>(const Mag& a, const Mag& b) { return b < a; }
  friend bool operator>=(const Mag& a, const Mag& b) { return b <= a; }

  static Mag max(const Mag& a, const Mag& b) { return a < b ? b : a; }

  double to_double(int q) const {
    if (zero_) return 0.0;
    return std::pow(double(q), double(boost::multiprecision::numerator(e_)) /
                                    double(boost::multiprecision::denominator(e_)));
  }

  std::string str() const {
    if (zero_) return "0";
    return "q^" + e_.str();
  }

private:
  bool zero_;
  Rat e_ = 0;
};

}  // namespace tmw

#endif  // TMW_MAG_HPP
