#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spcob/integer.hpp"
#include "spcob/mpoly.hpp"
#include "spcob/partition.hpp"
#include "spcob/symfun.hpp"

namespace spcob {

/// Z[e_1..e_r] / (h_{n-r+1}, ..., h_n): the cohomology ring of the
/// quaternionic Grassmannian HGr(r, n) with integer coefficients.
/// r = 0 is accepted and gives Z.
class GrassRing {
 public:
  GrassRing(int r, int n);

  int r() const { return r_; }
  int n() const { return n_; }
  /// Width of the box that indexes the Schur basis.
  int width() const { return n_ - r_; }

  bool contains(const Partition& lambda) const {
    return lambda.length() <= r_ && lambda.largest() <= width();
  }
  /// Schur basis in enumerate_box order.
  std::vector<Partition> basis() const { return enumerate_box(r_, width()); }
  /// Indices k of the first and last relation h_k.
  std::pair<int, int> relation_range() const { return {n_ - r_ + 1, n_}; }

  bool operator==(const GrassRing&) const = default;
  std::string to_string() const;

 private:
  int r_;
  int n_;
};

Integer rank(const GrassRing& ring);

/// Element of a GrassRing stored in Schur normal form.
class GrassElem {
 public:
  /// Throws DomainError if the vector's support leaves the box.
  GrassElem(GrassRing ring, SchurVector vec);

  static GrassElem zero(const GrassRing& ring);
  static GrassElem one(const GrassRing& ring);
  static GrassElem basis(const GrassRing& ring, const Partition& lambda);

  const GrassRing& ring() const { return ring_; }
  const SchurVector& vec() const { return vec_; }
  bool is_zero() const { return vec_.is_zero(); }
  bool is_homogeneous() const;
  int degree() const { return vec_.degree(); }
  /// Motivic bidegree (4d, 2d) of a homogeneous element of degree d.
  std::pair<int, int> bidegree() const;

  GrassElem& operator+=(const GrassElem& o);
  GrassElem& operator-=(const GrassElem& o);
  friend GrassElem operator+(GrassElem a, const GrassElem& b) { return a += b; }
  friend GrassElem operator-(GrassElem a, const GrassElem& b) { return a -= b; }
  bool operator==(const GrassElem&) const = default;

 private:
  GrassRing ring_;
  SchurVector vec_;
};

/// Drops every s_lambda outside the ring's box.
GrassElem truncate_to(const SchurVector& v, const GrassRing& ring);

/// Quotient map Z[e] -> ring.
GrassElem normal_form(const EPoly& p, const GrassRing& ring);

GrassElem multiply(const GrassElem& a, const GrassElem& b);

/// Restriction along HGr(r, n) -> HGr(r, n+1): source ring (r, n+1).
GrassElem alpha_map(const GrassElem& x);

/// Restriction along HGr(r, n) -> HGr(r+1, n+1): source ring (r+1, n+1),
/// sends e_{r+1} to 0.
GrassElem beta_map(const GrassElem& x);

/// Multiplication by e_r from Z[e]/(h_{n-r}, ..., h_{n-1}) (the ring
/// (r, n-1)) into the ring (r, n). `target` fixes n.
GrassElem thom_inclusion(const GrassElem& v, const GrassRing& target);

/// Reduction of e_1..e_r into r-1 variables: the ring (r, n) to (r-1, n-1).
GrassElem length_truncation(const GrassElem& x);

/// Coefficients q_1..q_r with p = sum_i q_i * h_{n-r+i} in Z[e_1..e_r].
/// Requires normal_form(p) == 0; throws DomainError otherwise.
std::vector<EPoly> ideal_certificate(const EPoly& p, const GrassRing& ring);

}  // namespace spcob
