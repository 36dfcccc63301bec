#ifndef TMW_BINOM_HPP
#define TMW_BINOM_HPP

#include <cstdint>

#include "tmw/mag.hpp"

namespace tmw {

// C(h, i) mod p via the base-p digit (Lucas) decomposition. Requires i <= h.
uint8_t binom_mod_p(uint64_t h, uint64_t i, int p);

// Exact big-integer binomial coefficient, used as the independent oracle.
BigInt binomial_exact(unsigned h, unsigned i);

}  // namespace tmw

#endif  // TMW_BINOM_HPP
