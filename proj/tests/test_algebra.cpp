#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tmw/binom.hpp"
#include "tmw/frac.hpp"
#include "tmw/gf.hpp"
#include "tmw/poly.hpp"

using namespace tmw;

TEST_CASE("GF basic laws and Frobenius fixes the field") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    const GF& gf = GF::of_order(q);
    CHECK(gf.q() == q);
    // x^q = x for all elements, exhaustively
    for (int a = 0; a < q; ++a) {
      CHECK(gf.pow(uint8_t(a), uint64_t(q)) == a);
      CHECK(gf.frob(uint8_t(a), unsigned(gf.e())) == a);
    }
    // field laws on a full sweep
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        CHECK(gf.add(uint8_t(a), uint8_t(b)) == gf.add(uint8_t(b), uint8_t(a)));
        CHECK(gf.mul(uint8_t(a), uint8_t(b)) == gf.mul(uint8_t(b), uint8_t(a)));
        if (b != 0) CHECK(gf.mul(gf.div(uint8_t(a), uint8_t(b)), uint8_t(b)) == a);
      }
    // Frobenius is additive (then a field automorphism)
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        CHECK(gf.frob(gf.add(uint8_t(a), uint8_t(b))) ==
              gf.add(gf.frob(uint8_t(a)), gf.frob(uint8_t(b))));
  }
}

TEST_CASE("Poly degree, division, gcd/lcm") {
  const GF& gf = GF::of_order(2);
  Poly T = Poly::variable(gf);
  Poly f = T * T * T + T;  // T^3+T
  CHECK(f.degree() == 3);
  CHECK(f.str() == "T^3+T");
  CHECK(f.list_str() == "q=2;[0,1,0,1]");
  CHECK(Poly::parse(gf, "T^3+T") == f);
  CHECK(Poly::parse(gf, "q=2;[0,1,0,1]") == f);

  // deg(fg) = deg f + deg g for nonzero f, g (sweep over degree <= 3)
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      Poly pa(gf, {uint8_t(a & 1), uint8_t((a >> 1) & 1), uint8_t((a >> 2) & 1),
                   uint8_t((a >> 3) & 1)});
      Poly pb(gf, {uint8_t(b & 1), uint8_t((b >> 1) & 1), uint8_t((b >> 2) & 1),
                   uint8_t((b >> 3) & 1)});
      if (pa.is_zero() || pb.is_zero()) continue;
      CHECK((pa * pb).degree() == pa.degree() + pb.degree());
      auto [qt, rm] = pa.divmod(pb);
      CHECK(qt * pb + rm == pa);
      CHECK((rm.is_zero() || rm.degree() < pb.degree()));
    }

  // gcd/lcm worked examples
  {
    auto [g, l] = poly_gcd_lcm(T * T + T, T);
    CHECK(g == T);
    CHECK(l == T * T + T);
  }
  {
    Poly a = Poly::parse(gf, "T^2+T");
    auto [g, l] = poly_gcd_lcm(a, Poly::one(gf));
    CHECK(g.is_one());
    CHECK(l == a.make_monic());
  }
  {
    // T^2+1 = (T+1)^2 over F_2
    auto [g, l] = poly_gcd_lcm(Poly::parse(gf, "T^2+1"), Poly::parse(gf, "T+1"));
    CHECK(g == Poly::parse(gf, "T+1"));
    CHECK(l == Poly::parse(gf, "T^2+1"));
  }
  CHECK_THROWS(poly_gcd(Poly::zero(gf), Poly::zero(gf)));
}

TEST_CASE("1/T-adic absolute value on A and k") {
  const GF& gf = GF::of_order(2);
  CHECK(Poly::parse(gf, "T^3+T").abs() == Mag::qpow(3));
  CHECK(Poly::parse(gf, "T^3+T").abs().to_double(2) == doctest::Approx(8.0));
  CHECK(Poly::zero(gf).abs() == Mag::zero());
  CHECK(Poly::one(gf).abs() == Mag::one());

  // ultrametric law, exhaustive on degree <= 4 polynomials over F_2
  std::vector<Poly> all;
  for (int mask = 0; mask < 32; ++mask)
    all.push_back(Poly(gf, {uint8_t(mask & 1), uint8_t((mask >> 1) & 1), uint8_t((mask >> 2) & 1),
                            uint8_t((mask >> 3) & 1), uint8_t((mask >> 4) & 1)}));
  for (const Poly& x : all)
    for (const Poly& y : all) {
      CHECK((x * y).abs() == x.abs() * y.abs());
      Mag s = (x + y).abs();
      CHECK(s <= Mag::max(x.abs(), y.abs()));
      if (!(x.abs() == y.abs())) CHECK(s == Mag::max(x.abs(), y.abs()));
    }

  // multiplicativity extends to fractions
  Frac a(Poly::parse(gf, "T^2+1"), Poly::parse(gf, "T"));
  Frac b(Poly::parse(gf, "T"), Poly::parse(gf, "T+1"));
  CHECK((a * b).abs() == a.abs() * b.abs());
  CHECK((a / b).abs() == a.abs() / b.abs());
}

TEST_CASE("Frac canonical form") {
  const GF& gf = GF::of_order(2);
  Poly T = Poly::variable(gf);
  Frac x(T * T + T, T);  // (T^2+T)/T = T+1
  CHECK(x.is_integral());
  CHECK(x.num() == T + Poly::one(gf));
  Frac y(Poly::one(gf), T);
  CHECK((x + y) * Frac(T) == Frac(T * T + T + Poly::one(gf)));
  CHECK(Frac::parse(gf, "(T^2+1)/(T+1)") == Frac(T + Poly::one(gf)));
  CHECK(y.inverse() == Frac(T));
  CHECK(y.height() == Mag::qpow(1));
  CHECK(Frac::zero(gf).height() == Mag::one());
  // inversion symmetry of the height
  for (const char* s : {"T", "(T+1)/T", "(T^2+T+1)/(T^2+1)", "1/T^3"}) {
    Frac f = Frac::parse(gf, s);
    CHECK(f.inverse().height() == f.height());
  }
}

TEST_CASE("binom_mod_p: worked values and the Lucas congruence") {
  CHECK(binom_mod_p(6, 2, 2) == 1);   // 15 mod 2
  CHECK(binom_mod_p(4, 2, 2) == 0);   // 6 mod 2
  CHECK(binom_mod_p(17, 0, 5) == 1);  // boundary
  CHECK_THROWS(binom_mod_p(3, 5, 2));

  // against exact big-integer binomials, p in {2, 3}, h <= 64
  for (int p : {2, 3})
    for (unsigned h = 0; h <= 64; ++h)
      for (unsigned i = 0; i <= h; ++i)
        CHECK(binom_mod_p(h, i, p) == uint8_t(binomial_exact(h, i) % p));

  // Lucas factorization: C(s p^b + u, t p^b + v) = C(s,t) C(u,v) mod p for u,v < p^b
  for (int p : {2, 3}) {
    for (int beta = 1; beta <= 3; ++beta) {
      uint64_t pb = 1;
      for (int t = 0; t < beta; ++t) pb *= uint64_t(p);
      for (uint64_t s = 0; s <= 4; ++s)
        for (uint64_t t = 0; t <= s; ++t)
          for (uint64_t u = 0; u < pb && s * pb + u <= 64; ++u)
            for (uint64_t v = 0; v <= u; ++v)
              CHECK(binom_mod_p(s * pb + u, t * pb + v, p) ==
                    (binom_mod_p(s, t, p) * binom_mod_p(u, v, p)) % p);
    }
  }
}
