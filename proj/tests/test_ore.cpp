#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tmw/tmodule.hpp"
#include "tmw/twisted.hpp"

using namespace tmw;

static const GF& gf2 = GF::of_order(2);

static Frac rnd_frac(std::mt19937_64& rng) {
  auto rnd_poly = [&](int maxdeg) {
    std::vector<uint8_t> c(size_t(maxdeg) + 1);
    for (auto& x : c) x = uint8_t(rng() & 1);
    return Poly(gf2, c);
  };
  Poly den = rnd_poly(2);
  while (den.is_zero()) den = rnd_poly(2);
  return Frac(rnd_poly(2), den);
}

static TwistedPoly<Frac> rnd_twisted(std::mt19937_64& rng, int m, int deg) {
  std::vector<Mat<Frac>> cs;
  for (int s = 0; s <= deg; ++s) {
    Mat<Frac> M = Mat<Frac>::zeros(m, m, Frac::zero(gf2));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) M(i, j) = rnd_frac(rng);
    cs.push_back(M);
  }
  return TwistedPoly<Frac>(std::move(cs), 2);
}

TEST_CASE("compose: Carlitz square and identities") {
  TModule C = carlitz_module(2);
  // (T + tau) o (T + tau) = T^2 + (T^2+T) tau + tau^2
  TwistedPoly<Frac> sq = C.phi_T.compose(C.phi_T);
  CHECK(sq.deg() == 2);
  CHECK(sq.coeff(0)(0, 0) == Frac(Poly::parse(gf2, "T^2")));
  CHECK(sq.coeff(1)(0, 0) == Frac(Poly::parse(gf2, "T^2+T")));
  CHECK(sq.coeff(2)(0, 0) == Frac::one(gf2));

  // f o identity = f
  std::mt19937_64 rng(7);
  for (int t = 0; t < 5; ++t) {
    TwistedPoly<Frac> f = rnd_twisted(rng, 2, 2);
    TwistedPoly<Frac> id = TwistedPoly<Frac>::identity(2, 2, Frac::zero(gf2));
    CHECK(f.compose(id) == f);
    CHECK(id.compose(f) == f);
  }
}

TEST_CASE("compose matches evaluation") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    TwistedPoly<Frac> f = rnd_twisted(rng, 2, 2), g = rnd_twisted(rng, 2, 1);
    std::vector<Frac> x = {rnd_frac(rng), rnd_frac(rng)};
    auto lhs = f.compose(g).eval(x);
    auto rhs = f.eval(g.eval(x));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("evaluation is F_q-linear") {
  std::mt19937_64 rng(13);
  TwistedPoly<Frac> f = rnd_twisted(rng, 2, 2);
  std::vector<Frac> x = {rnd_frac(rng), rnd_frac(rng)};
  std::vector<Frac> y = {rnd_frac(rng), rnd_frac(rng)};
  std::vector<Frac> xy = {x[0] + y[0], x[1] + y[1]};
  auto fx = f.eval(x), fy = f.eval(y), fxy = f.eval(xy);
  for (int i = 0; i < 2; ++i) CHECK(fxy[size_t(i)] == fx[size_t(i)] + fy[size_t(i)]);
}

TEST_CASE("right division") {
  Frac one = Frac::one(gf2), zero = Frac::zero(gf2);
  // f = tau^2, g = tau + 1: quotient tau + 1, remainder 1
  TwistedPoly<Frac> f = TwistedPoly<Frac>::scalar({zero, zero, one}, 2);
  TwistedPoly<Frac> g = TwistedPoly<Frac>::scalar({one, one}, 2);
  auto [qt, rm] = f.right_divide(g);
  CHECK(qt == TwistedPoly<Frac>::scalar({one, one}, 2));
  CHECK(rm == TwistedPoly<Frac>::scalar({one}, 2));
  CHECK(qt.compose(g) + rm == f);

  // f = g
  auto [q2, r2] = g.right_divide(g);
  CHECK(q2 == TwistedPoly<Frac>::scalar({one}, 2));
  CHECK(r2.is_zero());

  // deg f < deg g
  TwistedPoly<Frac> c = TwistedPoly<Frac>::scalar({Frac(Poly::variable(gf2))}, 2);
  auto [q3, r3] = c.right_divide(g);
  CHECK(q3.is_zero());
  CHECK(r3 == c);

  // round-trip on random scalar instances with invertible leading coefficient
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    TwistedPoly<Frac> a = rnd_twisted(rng, 1, 3);
    TwistedPoly<Frac> b = rnd_twisted(rng, 1, 2);
    if (b.is_zero() || b.deg() < 2) continue;
    auto [qq, rr] = a.right_divide(b);
    CHECK(qq.compose(b) + rr == a);
    CHECK(rr.deg() < b.deg());
  }

  // non-invertible leading matrix coefficient is rejected
  Mat<Frac> sing = Mat<Frac>::zeros(2, 2, zero);
  sing(0, 0) = one;
  TwistedPoly<Frac> bad({Mat<Frac>::identity(2, zero), sing}, 2);
  TwistedPoly<Frac> num = rnd_twisted(rng, 2, 2);
  CHECK_THROWS_AS((void)num.right_divide(bad), std::domain_error);
}

TEST_CASE("differential is multiplicative under compose") {
  TModule C2 = carlitz_tensor(2, 2);
  Frac T = Frac(Poly::variable(gf2));
  // dPhi(T) of the 2nd tensor power is [[T,1],[0,T]]
  Mat<Frac> d = C2.phi_T.differential();
  CHECK(d(0, 0) == T);
  CHECK(d(0, 1) == Frac::one(gf2));
  CHECK(d(1, 0) == Frac::zero(gf2));
  CHECK(d(1, 1) == T);

  std::mt19937_64 rng(23);
  for (int t = 0; t < 10; ++t) {
    TwistedPoly<Frac> f = rnd_twisted(rng, 2, 2), g = rnd_twisted(rng, 2, 2);
    CHECK(f.compose(g).differential() == f.differential() * g.differential());
  }

  CHECK(TwistedPoly<Frac>::identity(3, 2, Frac::zero(gf2)).differential() ==
        Mat<Frac>::identity(3, Frac::zero(gf2)));
}

TEST_CASE("homomorphism law for phi_action, exhaustive deg <= 3 at q=2") {
  for (const TModule& M : {carlitz_module(2), carlitz_tensor(2, 2)}) {
    std::vector<Poly> polys;
    for (int mask = 1; mask < 16; ++mask)
      polys.push_back(Poly(gf2, {uint8_t(mask & 1), uint8_t((mask >> 1) & 1),
                                 uint8_t((mask >> 2) & 1), uint8_t((mask >> 3) & 1)}));
    for (const Poly& a : polys)
      for (const Poly& b : polys) {
        CHECK(phi_action(M, a * b) == phi_action(M, a).compose(phi_action(M, b)));
        CHECK(phi_action(M, a + b) == phi_action(M, a) + phi_action(M, b));
      }
  }
}

TEST_CASE("textual form of twisted polynomials") {
  TModule C = carlitz_module(2);
  CHECK(C.phi_T.str() == "[T] + [1] tau");
}
