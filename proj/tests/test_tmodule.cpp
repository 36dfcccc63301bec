#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "tmw/exp_log.hpp"
#include "tmw/newton.hpp"
#include "tmw/tmodule.hpp"

using namespace tmw;

static const GF& gf2 = GF::of_order(2);

TEST_CASE("carlitz_tensor shape and nilpotency") {
  TModule C = carlitz_module(2);
  CHECK(C.m == 1);
  CHECK(C.phi_T.coeff(0)(0, 0) == Frac(Poly::variable(gf2)));
  CHECK(C.phi_T.coeff(1)(0, 0) == Frac::one(gf2));

  TModule C2 = carlitz_tensor(2, 2);
  CHECK(C2.phi_T.coeff(0)(0, 1) == Frac::one(gf2));
  CHECK(C2.phi_T.coeff(1)(1, 0) == Frac::one(gf2));
  CHECK(C2.phi_T.coeff(1)(0, 0) == Frac::zero(gf2));
  CHECK(C2.nilpotency == 2);

  for (int m = 1; m <= 4; ++m) {
    TModule Cm = carlitz_tensor(m, 2);
    CHECK(Cm.nilpotency == m);  // N^m = 0, N^{m-1} != 0
  }
}

TEST_CASE("phi_action reproduces the displayed T^2 iteration on C^{(x)2}") {
  TModule C2 = carlitz_tensor(2, 2);
  TwistedPoly<Frac> p = phi_action(C2, Poly::parse(gf2, "T^2"));
  // (T^2 X + X^2, T^2 Y + (T+T^2) X^2 + Y^2)
  CHECK(p.deg() == 1);
  Frac T2 = Frac(Poly::parse(gf2, "T^2"));
  CHECK(p.coeff(0)(0, 0) == T2);
  CHECK(p.coeff(0)(0, 1) == Frac::zero(gf2));
  CHECK(p.coeff(0)(1, 0) == Frac::zero(gf2));
  CHECK(p.coeff(0)(1, 1) == T2);
  CHECK(p.coeff(1)(0, 0) == Frac::one(gf2));
  CHECK(p.coeff(1)(0, 1) == Frac::zero(gf2));
  CHECK(p.coeff(1)(1, 0) == Frac(Poly::parse(gf2, "T^2+T")));
  CHECK(p.coeff(1)(1, 1) == Frac::one(gf2));

  // phi(T) is Phi_T itself
  CHECK(phi_action(C2, Poly::variable(gf2)) == C2.phi_T);

  // cross-check Phi(T^2+T) = Phi(T) o Phi(T) + Phi(T)
  TModule C = carlitz_module(2);
  CHECK(phi_action(C, Poly::parse(gf2, "T^2+T")) ==
        C.phi_T.compose(C.phi_T) + C.phi_T);
}

TEST_CASE("lie_torsion enumeration") {
  // q=2, d=1, a=T: {0, 1/T}
  LieTorsionSet s1 = lie_torsion(gf2, Poly::variable(gf2), 1);
  CHECK(s1.tuples.size() == 2);
  std::set<std::string> reps;
  for (auto& t : s1.tuples) reps.insert(t[0].str());
  CHECK(reps.count("0") == 1);
  CHECK(reps.count("1/T") == 1);

  // q=2, d=1, a=T^2: {0, 1/T, 1/T^2, (T+1)/T^2}
  LieTorsionSet s2 = lie_torsion(gf2, Poly::parse(gf2, "T^2"), 1);
  CHECK(s2.tuples.size() == 4);
  reps.clear();
  for (auto& t : s2.tuples) reps.insert(t[0].str());
  CHECK(reps.count("0") == 1);
  CHECK(reps.count("1/T") == 1);
  CHECK(reps.count("1/T^2") == 1);
  CHECK(reps.count("(T+1)/T^2") == 1);

  // cardinality q^{d deg a}, canonical-form invariants
  for (const char* as : {"T", "T^2", "T^2+T+1", "T^3+T", "T^4+T^2+1"})
    for (int d = 1; d <= 2; ++d) {
      Poly a = Poly::parse(gf2, as);
      LieTorsionSet s = lie_torsion(gf2, a, d);
      size_t expect = 1;
      for (int i = 0; i < d * a.degree(); ++i) expect *= 2;
      CHECK(s.tuples.size() == expect);
      std::set<std::string> uniq;
      bool zero_found = false;
      for (auto& t : s.tuples) {
        std::string key;
        bool all_zero = true;
        for (auto& c : t) {
          key += c.str() + "|";
          all_zero &= c.is_zero();
          // beta_i | a, |alpha_i| < |a|, gcd = 1 (canonical form)
          if (!c.is_zero()) {
            CHECK(a.divmod(c.den()).second.is_zero());
            CHECK(c.num().degree() < a.degree());
          }
        }
        zero_found |= all_zero;
        uniq.insert(key);
      }
      CHECK(zero_found);
      CHECK(uniq.size() == s.tuples.size());
    }
}

TEST_CASE("module_torsion: Carlitz worked cases") {
  TModule C = carlitz_module(2);
  // a = T: {0, T}
  ModuleTorsion t1 = module_torsion(C, Poly::variable(gf2), 40);
  CHECK(t1.points.size() == 2);
  bool zero_found = false, T_found = false;
  for (auto& p : t1.points) {
    if (p[0].is_zero()) zero_found = true;
    if (equal_at_precision(p[0], Laurent::t_power(gf2, 1))) T_found = true;
  }
  CHECK(zero_found);
  CHECK(T_found);

  // a = T^2: {0, T} plus the two Hensel roots of x^2 + Tx + T
  ModuleTorsion t2 = module_torsion(C, Poly::parse(gf2, "T^2"), 40);
  CHECK(t2.points.size() == 4);
  CHECK(t2.complete);
  Laurent T = Laurent::t_power(gf2, 1);
  int quad_roots = 0;
  for (auto& p : t2.points) {
    if (p[0].is_zero() || equal_at_precision(p[0], T)) continue;
    LPoly quad = {T, T, Laurent::one(gf2)};
    CHECK(lpoly_eval(quad, p[0]).is_zero());
    ++quad_roots;
  }
  CHECK(quad_roots == 2);
}

TEST_CASE("module_torsion: C^{(x)2} via triangular elimination") {
  TModule C2 = carlitz_tensor(2, 2);
  // T-torsion: Phi(T)(x,y) = (Tx + y, Ty + x^2) = 0 has exactly q^{deg T} = 2 points
  ModuleTorsion t = module_torsion(C2, Poly::variable(gf2), 40);
  CHECK(t.points.size() == 2);
  bool origin = false, other = false;
  for (auto& p : t.points) {
    if (p[0].is_zero() && p[1].is_zero()) origin = true;
    // the nonzero point is (T^2, T^3)
    if (equal_at_precision(p[0], Laurent::t_power(gf2, 2)) &&
        equal_at_precision(p[1], Laurent::t_power(gf2, 3)))
      other = true;
  }
  CHECK(origin);
  CHECK(other);

  // T^2-torsion of C^{(x)2} has 4 points (rank 1)
  ModuleTorsion t2 = module_torsion(C2, Poly::parse(gf2, "T^2"), 40);
  CHECK(t2.points.size() == 4);
}

TEST_CASE("0 is always torsion") {
  for (const TModule& M : {carlitz_module(2), carlitz_tensor(2, 2), carlitz_tensor(3, 2)}) {
    for (const char* as : {"T", "T^2+T"}) {
      ModuleTorsion t = module_torsion(M, Poly::parse(gf2, as), 30);
      bool zero_found = false;
      for (auto& p : t.points) {
        bool all = true;
        for (auto& c : p) all &= c.is_zero();
        zero_found |= all;
      }
      CHECK(zero_found);
    }
  }
}

TEST_CASE("gallery: Frobenius half-twist identity over F_2[S]") {
  GalleryVerdict v = check_frobenius_twist_identity();
  CHECK(v.holds);
  // sqrt(T^2+T) = T + S when T = S^2: (S^2+S)^2 = S^4+S^2
  auto r = Poly::parse(gf2, "S^4+S^2", "S").char_root();
  REQUIRE(r.has_value());
  CHECK(*r == Poly::parse(gf2, "S^2+S", "S"));
}

TEST_CASE("rank of lattice intersections drops on proper subspaces") {
  // rank-1 lattice spanned by (xi, xi T) inside k_inf^2; H = first axis
  Laurent xi(gf2, -2, {1, 0, 1, 1, 1});  // any nonzero vector works here
  std::vector<std::vector<Laurent>> periods = {{xi, xi * Laurent::t_power(gf2, 1)}};
  std::vector<std::vector<Laurent>> axis = {{Laurent::one(gf2), Laurent::zero(gf2)}};
  CHECK(lattice_intersection_rank(periods, axis) == 0);
  std::vector<std::vector<Laurent>> containing = {
      {Laurent::one(gf2), Laurent::t_power(gf2, 1)}};
  CHECK(lattice_intersection_rank(periods, containing) == 1);
  // the d=1 lattice meets a proper subspace in rank < 1 = rank(Lambda)
  CHECK(lattice_intersection_rank(periods, axis) < 1);
}

TEST_CASE("drinfeld_product block action and isogeny-graph stabilization") {
  // two copies of the Carlitz module; P = identity isogeny stabilizes the diagonal
  TModule C = carlitz_module(2);
  TModule prod = drinfeld_product({C.phi_T, C.phi_T}, 2);
  CHECK(prod.m == 2);
  CHECK(prod.phi_T.coeff(0)(0, 0) == Frac(Poly::variable(gf2)));
  // graph of P is stabilized iff Phi_1 o P = P o Phi_2
  TwistedPoly<Frac> P = TwistedPoly<Frac>::identity(1, 2, Frac::zero(gf2));
  CHECK(C.phi_T.compose(P) == P.compose(C.phi_T));
}
