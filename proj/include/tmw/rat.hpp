#ifndef TMW_RAT_HPP
#define TMW_RAT_HPP

#include <stdexcept>
#include <string>

#include "tmw/mag.hpp"

namespace tmw {

// Exact rational scalar conforming to the field-element interface of the
// templated containers; used for the real-valued majorant computations.
class RatF {
public:
  RatF() : v_(0) {}
  explicit RatF(Rat v) : v_(std::move(v)) {}
  explicit RatF(long v) : v_(v) {}

  const Rat& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  RatF operator+(const RatF& o) const { return RatF(Rat(v_ + o.v_)); }
  RatF operator-(const RatF& o) const { return RatF(Rat(v_ - o.v_)); }
  RatF operator-() const { return RatF(Rat(-v_)); }
  RatF operator*(const RatF& o) const { return RatF(Rat(v_ * o.v_)); }
  RatF operator/(const RatF& o) const { return RatF(Rat(v_ / o.v_)); }

  bool operator==(const RatF& o) const { return v_ == o.v_; }
  bool operator!=(const RatF& o) const { return !(*this == o); }
  bool operator<(const RatF& o) const { return v_ < o.v_; }
  bool operator<=(const RatF& o) const { return v_ <= o.v_; }

  RatF zero_like() const { return RatF(); }
  RatF one_like() const { return RatF(Rat(1)); }

  std::string str() const { return v_.str(); }

private:
  Rat v_;
};

// exact rational value of a power-of-q magnitude (integer exponent required)
inline Rat mag_to_rat(const Mag& m, int q) {
  if (m.is_zero()) return Rat(0);
  if (boost::multiprecision::denominator(m.exponent()) != 1)
    throw std::invalid_argument("mag_to_rat: fractional exponent");
  long e = boost::multiprecision::numerator(m.exponent()).convert_to<long>();
  Rat r = 1;
  for (long t = 0; t < (e < 0 ? -e : e); ++t) r *= q;
  return e < 0 ? Rat(1 / r) : r;
}

}  // namespace tmw

#endif  // TMW_RAT_HPP
