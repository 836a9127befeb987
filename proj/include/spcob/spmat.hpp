#pragma once

#include <string>
#include <vector>

#include "spcob/check.hpp"
#include "spcob/integer.hpp"

namespace spcob {

/// Dense polynomial in t; coefficient of t^k at index k, no trailing zeros.
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(std::vector<Integer> coeffs);
  TPoly(long c) : TPoly(std::vector<Integer>{Integer(c)}) {}  // NOLINT

  static TPoly t() { return TPoly(std::vector<Integer>{0, 1}); }

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Integer evaluate(const Integer& t) const;

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly operator-() const;
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  bool operator==(const TPoly&) const = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Square matrix over Z[t].
class TMatrix {
 public:
  TMatrix() = default;
  explicit TMatrix(int size);
  TMatrix(int size, std::vector<TPoly> row_major);

  static TMatrix identity(int size);
  /// Constant matrix from integer rows.
  static TMatrix constant(const std::vector<std::vector<long>>& rows);

  int size() const { return size_; }
  TPoly& at(int i, int j) { return entries_[index(i, j)]; }
  const TPoly& at(int i, int j) const { return entries_[index(i, j)]; }

  TMatrix transpose() const;
  /// Substitutes an integer for t.
  TMatrix evaluate(const Integer& t) const;
  TPoly determinant() const;
  int max_degree() const;

  friend TMatrix operator*(const TMatrix& a, const TMatrix& b);
  friend TMatrix operator-(const TMatrix& a, const TMatrix& b);
  bool operator==(const TMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const;
  int size_ = 0;
  std::vector<TPoly> entries_;
};

/// Block-diagonal standard form with n copies of [[0,1],[-1,0]]; two_n
/// must be even and positive.
TMatrix omega(int two_n);

/// One nonzero entry of M^T omega M - omega.
struct Discrepancy {
  int row;
  int col;
  TPoly value;
};

/// Entries where M^T omega M differs from omega (empty iff symplectic).
std::vector<Discrepancy> symplectic_defect(const TMatrix& m);

bool is_symplectic(const TMatrix& m);

/// The 4x4 homotopy from the identity to the block swap, exactly as printed.
TMatrix paper_homotopy_matrix();

/// Evaluated block swap exchanging the two rank-2 summands of O^4.
TMatrix block_swap4();

/// Homotopy to the block swap assembled from elementary symplectic factors,
/// each with its parameter scaled by t. Used when the printed matrix fails.
TMatrix transvection_homotopy();

/// Description of the factors used by transvection_homotopy.
std::vector<std::string> transvection_homotopy_factors();

/// Checks on a candidate homotopy: value at 0 is I, value at 1 is the
/// block swap, symplectic identically in t. Failure witness lists the
/// discrepancy entries.
CheckOutcome verify_homotopy(const TMatrix& m);

/// diag(I_{2n-2}, core, I) of size 2N. Requires 1 <= n and n+1 <= N.
TMatrix block_embed(int n, int block_count, const TMatrix& core);

/// f_1(t) f_2(t) ... f_K(t) in size 2N. Requires K <= N-1.
TMatrix shift_homotopy_product(int block_count, int factors, const TMatrix& core);
TMatrix shift_homotopy_product(int block_count, int factors);

/// Permutation matrix sending block j to block perm[j] (0-based blocks of
/// size 2), i.e. column block j has its identity in row block perm[j].
TMatrix block_permutation(const std::vector<int>& perm);

/// P(0) = I, P(1) = cyclic shift of the first K+1 blocks (checked against
/// the product of adjacent transpositions), symplectic identically, and the
/// first 2n columns of f_1...f_M agree for all n <= M <= K.
CheckOutcome shift_product_check(int block_count, int factors, const TMatrix& core);

std::string to_string(const TMatrix& m);

}  // namespace spcob
