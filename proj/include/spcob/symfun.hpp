#pragma once

#include <map>
#include <string>
#include <vector>

#include "spcob/integer.hpp"
#include "spcob/mpoly.hpp"
#include "spcob/partition.hpp"

namespace spcob {

/// Integer combination of Schur symbols s_lambda with l(lambda) <= r.
class SchurVector {
 public:
  using Terms = std::map<Partition, Integer>;

  SchurVector() = default;
  explicit SchurVector(int num_vars) : num_vars_(num_vars) {}
  static SchurVector basis(int num_vars, const Partition& lambda,
                           const Integer& c = 1);
  static SchurVector one(int num_vars) { return basis(num_vars, Partition{}); }

  int num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(const Partition& lambda) const;

  /// Throws DomainError when l(lambda) > num_vars.
  void add_term(const Partition& lambda, const Integer& c);

  SchurVector& operator+=(const SchurVector& o);
  SchurVector& operator-=(const SchurVector& o);
  SchurVector& operator*=(const Integer& c);
  friend SchurVector operator+(SchurVector a, const SchurVector& b) { return a += b; }
  friend SchurVector operator-(SchurVector a, const SchurVector& b) { return a -= b; }
  friend SchurVector operator*(SchurVector a, const Integer& c) { return a *= c; }
  bool operator==(const SchurVector&) const = default;

  SchurVector homogeneous_part(int d) const;
  /// Highest |lambda| in the support, -1 for zero.
  int degree() const;

  std::string to_string() const;

 private:
  int num_vars_ = 0;
  Terms terms_;
};

/// h_m in terms of e_1..e_r via sum_{i=0}^{min(m,r)} (-1)^i e_i h_{m-i} = 0.
/// Zero for m < 0, one for m == 0.
EPoly h_poly(int m, int r);

/// h_0 .. h_max as EPolys, sharing one pass of the recurrence.
std::vector<EPoly> h_polys_upto(int max, int r);

/// Sum of all monomials of degree m in x_1..x_r.
XPoly h_expand_x(int m, int r);

/// Elementary symmetric polynomial e_i(x_1..x_r).
XPoly elementary_x(int i, int r);

/// det(e_{lambda'_i - i + j}) over an l(lambda') square grid.
EPoly schur_jt_e(const Partition& lambda, int r);

/// det(h_{lambda_i - i + j}) over an r x r grid, expanded into the e-basis.
EPoly schur_jt_h(const Partition& lambda, int r);

/// a_{lambda+delta} / a_delta computed by exact division.
XPoly schur_alternant(const Partition& lambda, int r);

/// Ring map e_i -> e_i(x_1..x_r).
XPoly epoly_to_x(const EPoly& p);

/// True when every permutation of every exponent vector carries the same
/// coefficient.
bool is_symmetric(const XPoly& p);

/// Schur expansion by greedy straightening against alternants. Throws
/// DomainError on non-symmetric input.
SchurVector xpoly_to_schur(const XPoly& p);

/// Linear extension of schur_jt_e.
EPoly schur_to_epoly(const SchurVector& v);

SchurVector epoly_to_schur(const EPoly& p);

/// Product of Schur vectors computed through the e-basis.
SchurVector multiply_schur(const SchurVector& a, const SchurVector& b);

}  // namespace spcob
