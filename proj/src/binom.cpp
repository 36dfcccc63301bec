#include "tmw/binom.hpp"

#include <stdexcept>
#include <vector>

namespace tmw {

namespace {

// Pascal triangle mod p for single-digit arguments.
uint8_t small_binom_mod(int a, int b, int p) {
  if (b < 0 || b > a) return 0;
  std::vector<std::vector<int>> tri(a + 1);
  for (int n = 0; n <= a; ++n) {
    tri[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) tri[n][k] = (tri[n - 1][k - 1] + tri[n - 1][k]) % p;
  }
  return uint8_t(tri[a][b]);
}

}  // namespace

uint8_t binom_mod_p(uint64_t h, uint64_t i, int p) {
  if (i > h) throw std::invalid_argument("binom_mod_p: requires i <= h");
  if (p < 2) throw std::invalid_argument("binom_mod_p: p must be a prime >= 2");
  uint64_t r = 1;
  while (h || i) {
    int hd = int(h % p), id = int(i % p);
    if (id > hd) return 0;
    r = (r * small_binom_mod(hd, id, p)) % uint64_t(p);
    h /= p;
    i /= p;
  }
  return uint8_t(r);
}

BigInt binomial_exact(unsigned h, unsigned i) {
  if (i > h) return 0;
  if (i > h - i) i = h - i;
  BigInt r = 1;
  for (unsigned k = 1; k <= i; ++k) {
    r *= h - i + k;
    r /= k;
  }
  return r;
}

}  // namespace tmw
