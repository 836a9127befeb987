#include <doctest.h>

#include <random>

#include "spcob/pclass.hpp"

using namespace spcob;

namespace {

const Symbol zeta{"zeta", 1};

NamedPoly sym(const std::string& name, int power = 1) { return NamedPoly::symbol({name, 1}, power); }
NamedPoly z(int power = 1) { return NamedPoly::symbol(zeta, power); }

PontVector roots(int n, int first = 1) { return pont_from_roots(FormalBundle::with_roots("x", n, first)); }

// Substitutes integers for the roots x1..xn.
Integer at_points(const NamedPoly& p, const std::vector<long>& values) {
  std::map<Symbol, NamedPoly> sub;
  for (std::size_t i = 0; i < values.size(); ++i) {
    sub.emplace(Symbol{"x" + std::to_string(i + 1), 1}, NamedPoly::constant(values[i]));
  }
  const NamedPoly v = p.evaluate(sub);
  if (v.is_zero()) return 0;
  REQUIRE(v.degree() == 0);
  return v.terms().begin()->second;
}

}  // namespace

TEST_CASE("NamedPoly arithmetic") {
  const NamedPoly x = sym("x"), y = sym("y");
  CHECK((x + y) * (x - y) == x.pow(2) - y.pow(2));
  CHECK((x * Integer(0)).is_zero());
  CHECK((x + y).pow(2).degree() == 2);
  CHECK((x + NamedPoly::constant(1)).is_homogeneous() == false);
  CHECK(NamedPoly().degree() == -1);
  CHECK_THROWS_AS(NamedPoly::symbol(zeta, -1), DomainError);
  CHECK((z(2) * x + z()).coefficients_in(zeta) == std::vector<NamedPoly>{NamedPoly(), NamedPoly::constant(1), x});
  CHECK(NamedPoly::from_coefficients({x, y}, zeta) == x + y * z());
}

TEST_CASE("pont_from_roots examples") {
  CHECK(roots(0) == PontVector::trivial(0));
  CHECK(roots(0).classes().size() == 1);
  CHECK(roots(1).p(1) == sym("x1"));
  const PontVector two = roots(2);
  CHECK(two.p(0) == NamedPoly::constant(1));
  CHECK(two.p(1) == sym("x1") + sym("x2"));
  CHECK(two.p(2) == sym("x1") * sym("x2"));
  CHECK(two.p(3).is_zero());
  CHECK(FormalBundle::with_roots("x", 3).rank() == 6);
}

TEST_CASE("PontVector validation") {
  CHECK_THROWS_AS(PontVector(1, {NamedPoly::constant(2), sym("x")}), DomainError);
  CHECK_THROWS_AS(PontVector(1, {NamedPoly::constant(1), sym("x").pow(2)}), DomainError);
  CHECK_THROWS_AS(PontVector(2, {NamedPoly::constant(1), sym("x")}), DomainError);
  CHECK_NOTHROW(PontVector(1, {NamedPoly::constant(1), NamedPoly()}));
  const PontVector f = PontVector::opaque("F", 2);
  CHECK(f.p(2).to_string() == "p2(F)");
  CHECK(f.p(2).degree() == 2);
}

TEST_CASE("Cartan formula on all splits") {
  for (int k = 0; k <= 5; ++k) {
    const PontVector whole = roots(k);
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      FormalBundle a, b;
      const auto all = FormalBundle::with_roots("x", k);
      for (int i = 0; i < k; ++i) ((mask >> i) & 1u ? a : b).roots.push_back(all.roots[static_cast<std::size_t>(i)]);
      const PontVector pa = pont_from_roots(a), pb = pont_from_roots(b);
      CHECK(cartan_sum(pa, pb) == whole);
      CHECK(cartan_sum(pa, pb).total() == pa.total() * pb.total());
    }
  }
}

TEST_CASE("Cartan sum is associative and commutative") {
  const PontVector a = roots(2, 1), b = roots(2, 3), c = roots(1, 5);
  CHECK(cartan_sum(cartan_sum(a, b), c) == cartan_sum(a, cartan_sum(b, c)));
  CHECK(cartan_sum(a, b) == cartan_sum(b, a));
  const PontVector f = PontVector::opaque("F", 2), g = PontVector::opaque("G", 1);
  CHECK(cartan_sum(cartan_sum(f, g), c) == cartan_sum(f, cartan_sum(g, c)));
  CHECK(cartan_sum(f, PontVector::trivial(3)).p(2) == f.p(2));
}

TEST_CASE("Cartan formula survives numeric specialization") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> dist(-9, 9);
  const PontVector sum = cartan_sum(roots(2, 1), roots(3, 3));
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long> v(5);
    for (auto& t : v) t = dist(rng);
    // prod (1 + x_i) evaluated directly.
    Integer expected = 1;
    for (long t : v) expected *= 1 + t;
    CHECK(at_points(sum.total(), v) == expected);
  }
}

TEST_CASE("zero roots give the trivial bundle") {
  for (int k = 0; k <= 5; ++k) {
    std::map<Symbol, NamedPoly> zero;
    for (const auto& s : FormalBundle::with_roots("x", k).roots) zero.emplace(s, NamedPoly());
    const PontVector pv = roots(k);
    std::vector<NamedPoly> c;
    for (const auto& p : pv.classes()) c.push_back(p.evaluate(zero));
    CHECK(PontVector(k, c) == PontVector::trivial(k));
  }
}

TEST_CASE("hp_relation examples") {
  const PontVector one(1, {NamedPoly::constant(1), sym("c")});
  CHECK(hp_relation(one, zeta).as_poly() == z() - sym("c"));
  const NamedPoly x = sym("x1"), y = sym("x2");
  CHECK(hp_relation(roots(2), zeta).as_poly() == z(2) - (x + y) * z() + x * y);
  for (int n = 0; n <= 4; ++n) CHECK(hp_relation(PontVector::trivial(n), zeta).as_poly() == z(n));
  // Alternating signs from +1.
  const auto rel = hp_relation(PontVector::opaque("F", 3), zeta);
  CHECK(rel.degree() == 3);
  CHECK(rel.coeffs[3] == NamedPoly::constant(1));
  CHECK(rel.coeffs[2] == -NamedPoly::symbol({"p1(F)", 1}));
  CHECK(rel.coeffs[1] == NamedPoly::symbol({"p2(F)", 2}));
  CHECK(rel.coeffs[0] == -NamedPoly::symbol({"p3(F)", 3}));
}

TEST_CASE("the relation annihilates every root") {
  const PontVector pv = roots(3);
  const NamedPoly rel = hp_relation(pv, zeta).as_poly();
  for (int i = 1; i <= 3; ++i) {
    std::map<Symbol, NamedPoly> sub{{zeta, sym("x" + std::to_string(i))}};
    CHECK(rel.evaluate(sub).is_zero());
  }
}

TEST_CASE("reduce_mod") {
  const auto rel = hp_relation(roots(2), zeta);
  CHECK(reduce_mod(rel.as_poly(), rel).is_zero());
  CHECK(reduce_mod(z(), rel) == z());
  const NamedPoly f = z(3) + sym("x1");
  const NamedPoly reduced = reduce_mod(f, rel);
  CHECK(reduced.coefficients_in(zeta).size() <= 2);
  CHECK(reduce_mod(f - reduced, rel).is_zero());
}

TEST_CASE("perp_classes examples") {
  const PontVector one = roots(1);
  const PontVector perp1 = perp_classes(one, zeta);
  CHECK(perp1.quaternionic_rank() == 0);
  CHECK(perp_top_residue(one, zeta).is_zero());
  CHECK(perp_check(one, zeta).pass);

  const PontVector perp2 = perp_classes(roots(2), zeta);
  CHECK(perp2.p(1) == sym("x1") + sym("x2") - z());
  CHECK(perp_check(roots(2), zeta).pass);

  const PontVector trivial_perp = perp_classes(PontVector::trivial(2), zeta);
  CHECK(trivial_perp.p(1) == -z());
  CHECK(reduce_mod(z(2), hp_relation(PontVector::trivial(2), zeta)).is_zero());
  CHECK_THROWS_AS(perp_classes(PontVector::trivial(0), zeta), DomainError);
}

TEST_CASE("perp identities for up to four roots and opaque bundles") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(perp_check(roots(n), zeta).pass);
    CHECK(perp_check(PontVector::opaque("F", n), zeta).pass);
    CHECK(perp_check(PontVector::trivial(n), zeta).pass);
    const PontVector perp = perp_classes(roots(n), zeta);
    for (const auto& p : perp.classes()) {
      CHECK(p.coefficients_in(zeta).size() <= static_cast<std::size_t>(n));
    }
  }
}

TEST_CASE("the top complement class is the relation up to sign") {
  for (int n = 1; n <= 4; ++n) {
    const PontVector pv = PontVector::opaque("F", n);
    NamedPoly raw;
    for (int k = 0; k <= n; ++k) raw += pv.p(n - k) * (-z()).pow(k);
    const NamedPoly rel = hp_relation(pv, zeta).as_poly();
    CHECK(raw == (n % 2 == 0 ? rel : -rel));
    CHECK_FALSE(raw.is_zero());
    CHECK(perp_top_residue(pv, zeta).is_zero());
  }
}

TEST_CASE("Thom sign") {
  CHECK(thom_top_sign(1) == -1);
  CHECK(thom_top_sign(2) == 1);
  CHECK(thom_top_sign(3) == -1);
  CHECK_THROWS_AS(thom_top_sign(0), DomainError);
  const NamedPoly th = sym("th");
  CHECK(top_pontryagin_from_thom(th, 1) == -th);
  CHECK(top_pontryagin_from_thom(th, 2) == th);
}
