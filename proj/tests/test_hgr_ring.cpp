#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spcob/hgr_ring.hpp"
#include "spcob/integer.hpp"

using namespace spcob;

namespace {

GrassElem s(const GrassRing& ring, const Partition& l) { return GrassElem::basis(ring, l); }

}  // namespace

TEST_CASE("rank examples") {
  CHECK(rank(GrassRing(2, 4)) == 6);
  for (int m = 0; m <= 7; ++m) CHECK(rank(GrassRing(1, m + 1)) == m + 1);
  CHECK(rank(GrassRing(3, 3)) == 1);
  CHECK(rank(GrassRing(0, 4)) == 1);
  for (int n = 1; n <= 8; ++n) {
    for (int r = 0; r <= n; ++r) {
      const GrassRing ring(r, n);
      CHECK(rank(ring) == binomial(n, r));
      CHECK(rank(ring) == static_cast<long>(ring.basis().size()));
    }
  }
}

TEST_CASE("ring descriptors are validated") {
  CHECK_THROWS_AS(GrassRing(3, 2), DomainError);
  CHECK_THROWS_AS(GrassRing(-1, 2), DomainError);
  CHECK(GrassRing(2, 4).to_string() == "HGr(2,4)");
  CHECK(GrassRing(2, 4).relation_range() == std::pair<int, int>{3, 4});
}

TEST_CASE("normal_form examples") {
  const GrassRing r24(2, 4);
  CHECK(normal_form(h_poly(3, 2), r24).is_zero());
  CHECK(normal_form(h_poly(4, 2), r24).is_zero());
  CHECK(normal_form(EPoly::generator(1, 1), GrassRing(1, 3)) == s(GrassRing(1, 3), Partition{1}));
  CHECK(normal_form(EPoly::generator(1, 1, 2), GrassRing(1, 2)).is_zero());
  CHECK_THROWS_AS(normal_form(EPoly::generator(3, 1), r24), DomainError);
}

TEST_CASE("elements must live in the box") {
  const GrassRing ring(2, 4);
  CHECK_THROWS_AS(GrassElem(ring, SchurVector::basis(2, Partition{3})), DomainError);
  CHECK_THROWS_AS(GrassElem::basis(ring, Partition{1, 1, 1}), DomainError);
  CHECK(GrassElem::basis(ring, Partition{2, 1}).bidegree() == std::pair<int, int>{12, 6});
  CHECK(GrassElem::one(ring).bidegree() == std::pair<int, int>{0, 0});
  const GrassElem mixed = s(ring, Partition{1}) + s(ring, Partition{2});
  CHECK_FALSE(mixed.is_homogeneous());
  CHECK_THROWS_AS(mixed.bidegree(), DomainError);
}

TEST_CASE("multiply examples") {
  const GrassRing hp1(1, 2);
  CHECK(multiply(s(hp1, Partition{1}), s(hp1, Partition{1})).is_zero());
  const GrassRing r24(2, 4);
  CHECK(multiply(s(r24, Partition{1}), s(r24, Partition{1})) == s(r24, Partition{2}) + s(r24, Partition{1, 1}));
  CHECK(multiply(s(r24, Partition{2, 2}), s(r24, Partition{1})).is_zero());
  CHECK_THROWS_AS(multiply(s(r24, Partition{1}), s(GrassRing(2, 5), Partition{1})), DomainError);
}

TEST_CASE("multiplication agrees with tableau products truncated to the box") {
  for (int r = 1; r <= 3; ++r) {
    for (int n = r; n <= 5; ++n) {
      const GrassRing ring(r, n);
      const auto basis = ring.basis();
      for (const auto& a : basis) {
        for (const auto& b : basis) {
          const SchurVector full = oracle::tableau_straighten(oracle::tableau_schur(a, r) * oracle::tableau_schur(b, r));
          CHECK(multiply(s(ring, a), s(ring, b)) == truncate_to(full, ring));
        }
      }
    }
  }
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(11);
  const GrassRing ring(3, 6);
  const auto basis = ring.basis();
  auto random_elem = [&] {
    GrassElem x = GrassElem::zero(ring);
    for (int k = 0; k < 3; ++k) {
      SchurVector v(3);
      v.add_term(basis[rng() % basis.size()], static_cast<long>(rng() % 7) - 3);
      x += GrassElem(ring, v);
    }
    return x;
  };
  for (int trial = 0; trial < 15; ++trial) {
    const GrassElem a = random_elem(), b = random_elem(), c = random_elem();
    CHECK(multiply(a, b) == multiply(b, a));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, b + c) == multiply(a, b) + multiply(a, c));
    CHECK(multiply(GrassElem::one(ring), a) == a);
  }
}

TEST_CASE("relations vanish and outside classes have certificates") {
  for (int r = 1; r <= 3; ++r) {
    for (int n = r; n <= 6; ++n) {
      const GrassRing ring(r, n);
      for (int k = n - r + 1; k <= n + 2; ++k) CHECK(normal_form(h_poly(k, r), ring).is_zero());
      for (int d = 0; d <= r * (n - r) + 2; ++d) {
        for (const auto& l : partitions_of(d, r)) {
          const EPoly p = schur_jt_e(l, r);
          if (ring.contains(l)) {
            CHECK(normal_form(p, ring) == s(ring, l));
            CHECK_THROWS_AS(ideal_certificate(p, ring), DomainError);
            continue;
          }
          const auto q = ideal_certificate(p, ring);
          REQUIRE(q.size() == static_cast<std::size_t>(r));
          EPoly rebuilt = EPoly::zero(r);
          for (int i = 1; i <= r; ++i) rebuilt += q[static_cast<std::size_t>(i - 1)] * h_poly(n - r + i, r);
          CHECK(rebuilt == p);
        }
      }
    }
  }
}

TEST_CASE("HP^n is a truncated polynomial ring") {
  for (int n = 0; n <= 6; ++n) {
    const GrassRing ring(1, n + 1);
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        const GrassElem expected = i + j <= n ? s(ring, Partition{i + j}) : GrassElem::zero(ring);
        CHECK(multiply(s(ring, Partition{i}), s(ring, Partition{j})) == expected);
      }
    }
  }
}

TEST_CASE("alpha_map examples") {
  const GrassRing r13(1, 3);
  CHECK(alpha_map(s(r13, Partition{1})) == s(GrassRing(1, 2), Partition{1}));
  CHECK(alpha_map(s(r13, Partition{2})).is_zero());
  CHECK(alpha_map(s(r13, Partition{2})).ring() == GrassRing(1, 2));
  CHECK_THROWS_AS(alpha_map(GrassElem::one(GrassRing(2, 2))), DomainError);
}

TEST_CASE("beta_map examples") {
  const GrassRing r23(2, 3);
  CHECK(beta_map(s(r23, Partition{1, 1})).is_zero());
  CHECK(beta_map(s(r23, Partition{1})) == s(GrassRing(1, 2), Partition{1}));
  CHECK(beta_map(s(GrassRing(2, 4), Partition{2})) == s(GrassRing(1, 3), Partition{2}));
  CHECK_THROWS_AS(beta_map(GrassElem::one(GrassRing(0, 2))), DomainError);
}

TEST_CASE("alpha and beta are ring maps compatible with normal forms") {
  std::mt19937 rng(5);
  for (int r = 1; r <= 3; ++r) {
    for (int n = r; n <= 5; ++n) {
      const GrassRing big(r, n + 1);
      const GrassRing wide(r + 1, n + 1);
      for (int trial = 0; trial < 10; ++trial) {
        EPoly p = EPoly::zero(r);
        EPoly q = EPoly::zero(r + 1);
        for (int i = 1; i <= r; ++i) {
          const auto k = static_cast<int>(rng() % 3);
          p += EPoly::generator(r, i, k);
          q += EPoly::generator(r + 1, i, k);
        }
        q += EPoly::generator(r + 1, r + 1, 1 + static_cast<int>(rng() % 2));
        CHECK(alpha_map(normal_form(p, big)) == normal_form(p, GrassRing(r, n)));
        // e_{r+1} -> 0 on the e-side.
        EPoly q_low = EPoly::zero(r);
        for (const auto& [ex, c] : q.terms()) {
          if (ex.back() == 0) q_low += EPoly(MPoly::monomial(Exponents(ex.begin(), ex.end() - 1), c));
        }
        CHECK(beta_map(normal_form(q, wide)) == normal_form(q_low, GrassRing(r, n)));
      }
    }
  }
}

TEST_CASE("thom_inclusion examples") {
  for (int r = 1; r <= 3; ++r) {
    const GrassRing target(r, r + 2);
    const GrassRing source(r, r + 1);
    CHECK(thom_inclusion(GrassElem::one(source), target) ==
          s(target, Partition(std::vector<int>(static_cast<std::size_t>(r), 1))));
  }
  CHECK(thom_inclusion(s(GrassRing(2, 3), Partition{1}), GrassRing(2, 4)) == s(GrassRing(2, 4), Partition{2, 1}));
  CHECK_THROWS_AS(thom_inclusion(GrassElem::one(GrassRing(2, 3)), GrassRing(2, 5)), DomainError);
}

TEST_CASE("thom_inclusion image is the kernel of length truncation in HGr(2,4)") {
  const GrassRing source(2, 3);
  const GrassRing target(2, 4);
  std::vector<Partition> image;
  for (const auto& mu : source.basis()) {
    const GrassElem v = thom_inclusion(s(source, mu), target);
    REQUIRE(v.vec().terms().size() == 1);
    image.push_back(v.vec().terms().begin()->first);
  }
  std::vector<Partition> kernel;
  for (const auto& l : target.basis()) {
    if (length_truncation(s(target, l)).is_zero()) kernel.push_back(l);
  }
  std::sort(image.begin(), image.end());
  std::sort(kernel.begin(), kernel.end());
  CHECK(image == kernel);
  CHECK(image == std::vector<Partition>{{1, 1}, {2, 1}, {2, 2}});
}
