#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spcob/integer.hpp"
#include "spcob/symfun.hpp"

using namespace spcob;

namespace {

EPoly e(int r, int i, int power = 1) { return EPoly::generator(r, i, power); }
XPoly x(int r, int i, int power = 1) { return XPoly::generator(r, i, power); }

}  // namespace

TEST_CASE("h_poly examples") {
  for (int r = 1; r <= 4; ++r) CHECK(h_poly(0, r) == EPoly::one(r));
  CHECK(h_poly(2, 2) == e(2, 1, 2) - e(2, 2));
  CHECK(h_poly(2, 1) == e(1, 1, 2));
  CHECK(h_poly(-1, 3).is_zero());
  CHECK(h_poly(3, 3) == e(3, 1, 3) - e(3, 1) * e(3, 2) * 2 + e(3, 3));
}

TEST_CASE("h_expand_x examples") {
  CHECK(h_expand_x(1, 2) == x(2, 1) + x(2, 2));
  CHECK(h_expand_x(2, 2) == x(2, 1, 2) + x(2, 1) * x(2, 2) + x(2, 2, 2));
  CHECK(h_expand_x(-1, 3).is_zero());
  CHECK(h_expand_x(0, 3) == XPoly::one(3));
}

TEST_CASE("h_poly agrees with the monomial sum") {
  for (int r = 1; r <= 4; ++r) {
    for (int m = -2; m <= 8; ++m) {
      CHECK(epoly_to_x(h_poly(m, r)) == h_expand_x(m, r));
      if (m >= 0) {
        CHECK(h_poly(m, r).is_homogeneous());
        CHECK(h_poly(m, r).degree() == m);
      }
    }
  }
}

TEST_CASE("the printed (-1)^r sign fails the monomial oracle") {
  // h_2 = -(-1)^r (e_1 h_1 + e_2 h_0) with r = 2 gives -e_1^2 - e_2.
  const EPoly wrong = -(e(2, 1) * e(2, 1) + e(2, 2));
  CHECK_FALSE(epoly_to_x(wrong) == h_expand_x(2, 2));
}

TEST_CASE("Jacobi-Trudi examples") {
  for (int i = 1; i <= 4; ++i) {
    for (int r = i; r <= 4; ++r) {
      CHECK(schur_jt_e(Partition(std::vector<int>(static_cast<std::size_t>(i), 1)), r) == e(r, i));
    }
  }
  CHECK(schur_jt_e(Partition{2}, 2) == e(2, 1, 2) - e(2, 2));
  CHECK(schur_jt_e(Partition{2, 1}, 3) == e(3, 1) * e(3, 2) - e(3, 3));
  CHECK(schur_jt_e(Partition{2, 1}, 4) == e(4, 1) * e(4, 2) - e(4, 3));
  for (int i = 0; i <= 6; ++i) {
    for (int r = 1; r <= 3; ++r) CHECK(schur_jt_h(Partition{i}, r) == h_poly(i, r));
  }
  CHECK(schur_jt_h(Partition{1, 1}, 2) == e(2, 2));
  for (int r = 1; r <= 4; ++r) {
    CHECK(schur_jt_h(Partition{}, r) == EPoly::one(r));
    CHECK(schur_jt_e(Partition{}, r) == EPoly::one(r));
  }
}

TEST_CASE("Jacobi-Trudi rejects long partitions") {
  CHECK_THROWS_AS(schur_jt_e(Partition{1, 1, 1}, 2), DomainError);
  CHECK_THROWS_AS(schur_jt_h(Partition{1, 1, 1}, 2), DomainError);
  CHECK_THROWS_AS(schur_alternant(Partition{1, 1, 1}, 2), DomainError);
}

TEST_CASE("alternant examples") {
  CHECK(schur_alternant(Partition{1}, 2) == x(2, 1) + x(2, 2));
  CHECK(schur_alternant(Partition{1, 1}, 2) == x(2, 1) * x(2, 2));
  CHECK(schur_alternant(Partition{}, 3) == XPoly::one(3));
}

TEST_CASE("all three Schur constructions agree with semistandard tableaux") {
  long cases = 0;
  for (int r = 1; r <= 4; ++r) {
    for (int d = 0; d <= 8; ++d) {
      for (const auto& l : partitions_of(d, r)) {
        const XPoly expected = oracle::tableau_schur(l, r);
        CHECK(epoly_to_x(schur_jt_e(l, r)) == expected);
        CHECK(epoly_to_x(schur_jt_h(l, r)) == expected);
        CHECK(schur_alternant(l, r) == expected);
        ++cases;
      }
    }
  }
  CHECK(cases == 128);
}

TEST_CASE("epoly_to_x examples") {
  CHECK(epoly_to_x(e(2, 1)) == x(2, 1) + x(2, 2));
  CHECK(epoly_to_x(e(2, 2)) == x(2, 1) * x(2, 2));
  CHECK(epoly_to_x(e(2, 1, 2) - e(2, 2)) == x(2, 1, 2) + x(2, 1) * x(2, 2) + x(2, 2, 2));
  for (int r = 1; r <= 4; ++r) {
    for (int i = 0; i <= r; ++i) CHECK(epoly_to_x(i == 0 ? EPoly::one(r) : e(r, i)) == elementary_x(i, r));
  }
}

TEST_CASE("xpoly_to_schur examples and errors") {
  const XPoly s1 = x(2, 1) + x(2, 2);
  CHECK(xpoly_to_schur(s1) == SchurVector::basis(2, Partition{1}));
  CHECK(xpoly_to_schur(x(2, 1, 2) + x(2, 1) * x(2, 2) + x(2, 2, 2)) == SchurVector::basis(2, Partition{2}));
  CHECK(xpoly_to_schur(s1 * s1) ==
        SchurVector::basis(2, Partition{2}) + SchurVector::basis(2, Partition{1, 1}));
  CHECK(xpoly_to_schur(XPoly::zero(3)).is_zero());
  CHECK_FALSE(is_symmetric(x(2, 1)));
  CHECK_THROWS_AS(xpoly_to_schur(x(2, 1)), DomainError);
  CHECK_THROWS_AS(xpoly_to_schur(x(3, 1, 2) + x(3, 2, 2)), DomainError);
}

TEST_CASE("straightening is a left inverse on random Schur vectors") {
  std::mt19937 rng(20261015);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = 1 + trial % 3;
    SchurVector v(r);
    const int terms = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < terms; ++k) {
      const auto pool = partitions_of(static_cast<int>(rng() % 9), r);
      v.add_term(pool[rng() % pool.size()], coeff(rng));
    }
    const XPoly xv = epoly_to_x(schur_to_epoly(v));
    CHECK(xpoly_to_schur(xv) == v);
    CHECK(oracle::tableau_straighten(xv) == v);
    CHECK(epoly_to_schur(schur_to_epoly(v)) == v);
  }
}

TEST_CASE("multiply_schur examples") {
  const SchurVector one = SchurVector::one(3);
  const SchurVector v = SchurVector::basis(3, Partition{2, 1}) * Integer(3) + SchurVector::basis(3, Partition{1});
  CHECK(multiply_schur(one, v) == v);
  const SchurVector s1 = SchurVector::basis(2, Partition{1});
  CHECK(multiply_schur(s1, s1) ==
        SchurVector::basis(2, Partition{2}) + SchurVector::basis(2, Partition{1, 1}));
  const SchurVector t1 = SchurVector::basis(1, Partition{1});
  CHECK(multiply_schur(t1, t1) == SchurVector::basis(1, Partition{2}));
}

TEST_CASE("structure constants are nonnegative and match the tableau oracle") {
  for (int r = 1; r <= 3; ++r) {
    for (int d1 = 0; d1 <= 4; ++d1) {
      for (int d2 = 0; d1 + d2 <= 8 && d2 <= 4; ++d2) {
        for (const auto& a : partitions_of(d1, r)) {
          for (const auto& b : partitions_of(d2, r)) {
            const SchurVector prod = multiply_schur(SchurVector::basis(r, a), SchurVector::basis(r, b));
            for (const auto& [l, c] : prod.terms()) CHECK(c > 0);
            CHECK(prod == oracle::tableau_straighten(oracle::tableau_schur(a, r) * oracle::tableau_schur(b, r)));
            CHECK(prod == multiply_schur(SchurVector::basis(r, b), SchurVector::basis(r, a)));
          }
        }
      }
    }
  }
}

TEST_CASE("multiplication is associative") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = 2 + trial % 2;
    auto pick = [&] {
      const auto pool = partitions_of(static_cast<int>(rng() % 3) + 1, r);
      return SchurVector::basis(r, pool[rng() % pool.size()]);
    };
    const SchurVector a = pick(), b = pick(), c = pick();
    CHECK(multiply_schur(multiply_schur(a, b), c) == multiply_schur(a, multiply_schur(b, c)));
  }
}

TEST_CASE("SchurVector validation and grading") {
  SchurVector v(2);
  CHECK_THROWS_AS(v.add_term(Partition{1, 1, 1}, 1), DomainError);
  v.add_term(Partition{2}, 1);
  v.add_term(Partition{2}, -1);
  CHECK(v.is_zero());
  CHECK(v.degree() == -1);
  const SchurVector w = SchurVector::basis(2, Partition{2, 1}) + SchurVector::basis(2, Partition{1});
  CHECK(w.degree() == 3);
  CHECK(w.homogeneous_part(1) == SchurVector::basis(2, Partition{1}));
}

TEST_CASE("large coefficients stay exact") {
  const EPoly big = e(2, 1, 40);
  const Integer c = epoly_to_x(big).coeff({20, 20});
  CHECK(c == binomial(40, 20));
  CHECK(c > Integer("100000000000"));
}
