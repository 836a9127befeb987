#include <doctest.h>

#include <numeric>

#include "spcob/spmat.hpp"

using namespace spcob;

namespace {

using IntGrid = std::vector<std::vector<Integer>>;

// Plain integer matrices for checking the polynomial arithmetic pointwise.
IntGrid at(const TMatrix& m, long t) {
  IntGrid g(static_cast<std::size_t>(m.size()), std::vector<Integer>(static_cast<std::size_t>(m.size())));
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j).evaluate(t);
  }
  return g;
}

IntGrid mul(const IntGrid& a, const IntGrid& b) {
  const std::size_t n = a.size();
  IntGrid c(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

IntGrid transpose(const IntGrid& a) {
  IntGrid t = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) t[i][j] = a[j][i];
  }
  return t;
}

IntGrid plain_omega(std::size_t n) {
  IntGrid w(n, std::vector<Integer>(n));
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    w[k][k + 1] = 1;
    w[k + 1][k] = -1;
  }
  return w;
}

bool pointwise_symplectic(const TMatrix& m) {
  const IntGrid w = plain_omega(static_cast<std::size_t>(m.size()));
  for (long t = -3; t <= 3; ++t) {
    const IntGrid g = at(m, t);
    if (mul(mul(transpose(g), w), g) != w) return false;
  }
  return true;
}

TPoly p(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return TPoly(std::move(v));
}

}  // namespace

TEST_CASE("TPoly arithmetic") {
  CHECK(p({1, 2, 0, 0}) == p({1, 2}));
  CHECK(p({0, 0}).is_zero());
  CHECK((p({1, 1}) * p({1, -1})) == p({1, 0, -1}));
  CHECK((p({1, 1}) - p({1, 1})).is_zero());
  CHECK(p({1, 0, -1}).evaluate(3) == -8);
  CHECK(p({0, -2, 0, 13}).to_string() == "-2*t + 13*t^3");
  CHECK(TPoly().degree() == -1);
}

TEST_CASE("omega") {
  CHECK(omega(2) == TMatrix::constant({{0, 1}, {-1, 0}}));
  CHECK(omega(4) == TMatrix::constant({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}));
  for (int n = 2; n <= 8; n += 2) {
    const TMatrix w = omega(n);
    CHECK(w.transpose() == TMatrix(n) - w);
    CHECK(w * w == TMatrix(n) - TMatrix::identity(n));
  }
  CHECK_THROWS_AS(omega(3), DomainError);
  CHECK_THROWS_AS(omega(0), DomainError);
}

TEST_CASE("is_symplectic examples") {
  CHECK(is_symplectic(TMatrix::identity(4)));
  CHECK(is_symplectic(block_swap4()));
  TMatrix twice = TMatrix::identity(4);
  for (int i = 0; i < 4; ++i) twice.at(i, i) = TPoly(2);
  CHECK_FALSE(is_symplectic(twice));
  const auto defect = symplectic_defect(twice);
  REQUIRE_FALSE(defect.empty());
  CHECK(defect.front().value == TPoly(3));  // 4 omega - omega
}

TEST_CASE("paper matrix endpoints and symplecticity") {
  const TMatrix m = paper_homotopy_matrix();
  CHECK(m.evaluate(0) == TMatrix::identity(4));
  CHECK(m.evaluate(1) == block_swap4());
  CHECK(is_symplectic(m));
  CHECK(pointwise_symplectic(m));
  CHECK(m.determinant() == TPoly(1));
  CHECK(m.max_degree() == 7);
  CHECK(m.at(0, 2) == p({0, -2, 0, 13, 0, -14, 0, 4}));
  CHECK(m.at(2, 0) == p({0, 1}));
  CHECK(verify_homotopy(m).pass);
}

TEST_CASE("a perturbed matrix is rejected with a discrepancy list") {
  TMatrix m = paper_homotopy_matrix();
  // t^3 - t^5 vanishes at both endpoints.
  m.at(0, 2) = m.at(0, 2) + p({0, 0, 0, 1, 0, -1});
  CHECK(m.evaluate(0) == TMatrix::identity(4));
  CHECK(m.evaluate(1) == block_swap4());
  const CheckOutcome out = verify_homotopy(m);
  CHECK_FALSE(out.pass);
  CHECK(out.witness.find("M^T w M - w nonzero") != std::string::npos);
  CHECK_FALSE(pointwise_symplectic(m));
}

TEST_CASE("elementary-factor fallback homotopy") {
  const TMatrix f = transvection_homotopy();
  CHECK(verify_homotopy(f).pass);
  CHECK(pointwise_symplectic(f));
  CHECK(f.determinant() == TPoly(1));
  CHECK_FALSE(transvection_homotopy_factors().empty());
}

TEST_CASE("symplectic matrices are closed under products") {
  const TMatrix a = paper_homotopy_matrix();
  const TMatrix b = transvection_homotopy();
  CHECK(is_symplectic(a * b));
  CHECK(is_symplectic(b * a * b));
  const TMatrix perm = block_permutation({2, 0, 3, 1});
  CHECK(is_symplectic(perm));
  CHECK(is_symplectic(perm * perm.transpose()));
  CHECK(perm * perm.transpose() == TMatrix::identity(8));
}

TEST_CASE("block_embed") {
  const TMatrix swap3 = block_embed(1, 3, block_swap4());
  CHECK(swap3 == block_permutation({1, 0, 2}));
  CHECK(block_embed(2, 3, TMatrix::identity(4)) == TMatrix::identity(6));
  CHECK(block_embed(2, 4, paper_homotopy_matrix()).evaluate(1) == block_permutation({0, 2, 1, 3}));
  CHECK_THROWS_AS(block_embed(3, 3, block_swap4()), DomainError);
  CHECK_THROWS_AS(block_embed(0, 3, block_swap4()), DomainError);
  CHECK_THROWS_AS(block_embed(1, 3, TMatrix::identity(2)), DomainError);
}

TEST_CASE("shift product examples") {
  CHECK(shift_homotopy_product(4, 1).evaluate(1) == block_permutation({1, 0, 2, 3}));
  CHECK(shift_homotopy_product(4, 3).evaluate(1) == block_permutation({1, 2, 3, 0}));
  CHECK(shift_homotopy_product(4, 3).evaluate(0) == TMatrix::identity(8));
  CHECK_THROWS_AS(shift_homotopy_product(4, 4), DomainError);
}

TEST_CASE("shift product checks for every K up to 5") {
  for (int k = 1; k <= 5; ++k) {
    CHECK(shift_product_check(k + 1, k, paper_homotopy_matrix()).pass);
    CHECK(shift_product_check(6, k, paper_homotopy_matrix()).pass);
    CHECK(shift_product_check(6, k, transvection_homotopy()).pass);
  }
  CHECK(pointwise_symplectic(shift_homotopy_product(5, 4)));
}

TEST_CASE("block_permutation validates") {
  CHECK_THROWS_AS(block_permutation({0, 0}), DomainError);
  CHECK_THROWS_AS(block_permutation({0, 2}), DomainError);
}
