#pragma once

#include <string>
#include <vector>

#include "spcob/check.hpp"
#include "spcob/hgr_ring.hpp"
#include "spcob/integer.hpp"
#include "spcob/linalg.hpp"
#include "spcob/mpoly.hpp"

namespace spcob {

/// Homogeneous power series in graded variables, truncated above degree D.
/// The standard model of A(BSp_2r) uses p_1..p_r with deg p_i = i; the
/// coproduct target uses the weights (1..r, 1..s).
class HomSeries {
 public:
  HomSeries(std::vector<int> weights, int trunc);
  HomSeries(std::vector<int> weights, int trunc, const MPoly& poly);

  /// Series ring on p_1..p_r.
  static HomSeries zero(int r, int trunc) { return HomSeries(graded_weights(r), trunc); }
  static HomSeries one(int r, int trunc);
  /// The variable p_i (1-based) in the standard grading.
  static HomSeries p(int r, int i, int trunc);

  const std::vector<int>& weights() const { return weights_; }
  int num_vars() const { return static_cast<int>(weights_.size()); }
  int trunc() const { return trunc_; }
  const MPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  HomSeries& operator+=(const HomSeries& o);
  HomSeries& operator-=(const HomSeries& o);
  HomSeries& operator*=(const HomSeries& o);
  HomSeries& operator*=(const Integer& c);
  friend HomSeries operator+(HomSeries a, const HomSeries& b) { return a += b; }
  friend HomSeries operator-(HomSeries a, const HomSeries& b) { return a -= b; }
  friend HomSeries operator*(HomSeries a, const HomSeries& b) { return a *= b; }
  friend HomSeries operator*(HomSeries a, const Integer& c) { return a *= c; }
  bool operator==(const HomSeries&) const = default;

  HomSeries homogeneous_part(int d) const;
  /// Same series with a lower truncation.
  HomSeries truncated(int new_trunc) const;
  /// Sets variable i (1-based) to zero.
  HomSeries with_var_zero(int i) const;
  /// Ring map on variables: variable i goes to images[i-1]. All images must
  /// share the target weights and truncation.
  HomSeries substitute(const std::vector<HomSeries>& images) const;

  /// Split gradings print their groups as p'_i, p''_j, ...
  std::string to_string() const;

 private:
  void check_compatible(const HomSeries& o) const;

  std::vector<int> weights_;
  int trunc_;
  MPoly poly_;
};

/// Element of the Thom ideal p_r * Z[[p_1..p_r]]; every term carries p_r.
class ThomIdealElem {
 public:
  /// Throws DomainError when some term is not divisible by p_r.
  explicit ThomIdealElem(HomSeries series);
  const HomSeries& series() const { return series_; }

 private:
  HomSeries series_;
};

/// p_r * x, truncated at x's truncation.
ThomIdealElem thom_ideal_embed(const HomSeries& x);

/// Whitney coproduct Z[[p_1..p_{r+s}]] -> Z[[p'_1..p'_r, p''_1..p''_s]],
/// p_i -> sum_{j=0}^{i} p'_{i-j} p''_j. `x` must be a series in r+s
/// standard-graded variables.
HomSeries coproduct(const HomSeries& x, int r, int s, int trunc);

/// Image of p_i under the coproduct, for i in 1..r+s.
HomSeries coproduct_generator(int i, int r, int s, int trunc);

/// Graded pieces of the degree-<= D truncation of Z[[p_1, p_2, ...]]:
/// entry d lists the exponent vectors (over p_1..p_D) of degree d.
struct MspRing {
  int trunc;
  int vars;
  std::vector<std::vector<Exponents>> basis_by_degree;
};
MspRing msp_ring(int trunc);

/// Image of the monomial p^a in GrassRing(r, n) under p_i -> e_i.
GrassElem tower_image(const Exponents& a, const GrassRing& ring);

/// For n in [r+D, r+D+2]: degrees <= D of Z[p_1..p_r] inject into
/// GrassRing(r, n), and the images agree under alpha_map between
/// consecutive n.
CheckOutcome limit_from_tower(int r, int trunc);

/// Same checks for an explicit list of n values (alpha compatibility between
/// n and n+1 whenever both are listed).
CheckOutcome tower_check(int r, int trunc, const std::vector<int>& ns);

/// Monomials of degree >= r(n-r)+1 vanish in GrassRing(r,n), and nothing
/// nonzero of degree <= n-r does.
CheckOutcome sandwich_check(int r, int n);

/// Multiplication by p_r is injective on truncations and its image is the
/// kernel of p_r -> 0, degree by degree up to D; p_r -> 0 is onto r-1
/// variables.
CheckOutcome thom_ideal_check(int r, int trunc);

/// Exact kernel computation showing the coproduct has zero kernel in each
/// degree <= D, both directly and after p'_i -> e_i(t_1..t_r),
/// p''_j -> e_j(t_{r+1}..t_{r+s}).
CheckOutcome coproduct_injectivity(int r, int s, int trunc);

}  // namespace spcob
