#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "spcob/integer.hpp"

namespace spcob {

using Exponents = std::vector<int>;

/// Sparse multivariate polynomial with integer coefficients, keyed by
/// exponent vectors of fixed length. Terms are kept in lexicographic order of
/// the exponent vector, so the last entry is the lex-leading term. Zero
/// coefficients are never stored.
class MPoly {
 public:
  using Terms = std::map<Exponents, Integer>;

  MPoly() = default;
  explicit MPoly(int num_vars) : num_vars_(num_vars) {}

  static MPoly constant(int num_vars, const Integer& c);
  static MPoly variable(int num_vars, int index, int power = 1);
  static MPoly monomial(Exponents exps, const Integer& c = 1);

  int num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of the given monomial (zero if absent).
  Integer coeff(const Exponents& exps) const;

  void add_term(const Exponents& exps, const Integer& c);

  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const Integer& c);
  MPoly operator-() const;

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Integer& c) { return a *= c; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  bool operator==(const MPoly& other) const = default;

  MPoly pow(int e) const;

  /// Max over terms of sum_i weights[i]*exps[i]; -1 for zero.
  int degree(const std::vector<int>& weights) const;
  bool is_homogeneous(const std::vector<int>& weights) const;
  MPoly homogeneous_part(const std::vector<int>& weights, int d) const;
  /// Drops terms of weighted degree > max_degree.
  MPoly truncated(const std::vector<int>& weights, int max_degree) const;

  /// Multiplies like operator* but never forms terms above max_degree.
  static MPoly multiply_truncated(const MPoly& a, const MPoly& b,
                                  const std::vector<int>& weights,
                                  int max_degree);

  /// Ring homomorphism sending variable i to images[i].
  MPoly substitute(const std::vector<MPoly>& images, int target_vars) const;

  /// Exact quotient a / b under lexicographic leading-term elimination.
  /// Throws ConsistencyError if b does not divide a.
  static MPoly divide_exact(const MPoly& a, const MPoly& b);

  std::string to_string(const std::string& var_prefix) const;
  /// Uses names[i] for variable i.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int num_vars_ = 0;
  Terms terms_;
};

/// Weighted degree of a single exponent vector.
int weighted_degree(const Exponents& exps, const std::vector<int>& weights);

/// All exponent vectors of the given weighted degree, lexicographically
/// descending (so p1^3 comes before p1 p2 before p3).
std::vector<Exponents> exponents_of_degree(const std::vector<int>& weights,
                                           int degree);

/// weights (1, 2, ..., r)
std::vector<int> graded_weights(int r);

/// Strong wrapper around MPoly tagged by basis. The tag supplies the grading
/// and the variable prefix used when printing.
template <class Tag>
class GradedPoly {
 public:
  GradedPoly() = default;
  explicit GradedPoly(int num_vars) : poly_(num_vars) {}
  explicit GradedPoly(MPoly poly) : poly_(std::move(poly)) {}

  static GradedPoly constant(int num_vars, const Integer& c) {
    return GradedPoly(MPoly::constant(num_vars, c));
  }
  static GradedPoly zero(int num_vars) { return GradedPoly(num_vars); }
  static GradedPoly one(int num_vars) { return constant(num_vars, 1); }
  /// The generator with 1-based index i.
  static GradedPoly generator(int num_vars, int i, int power = 1) {
    return GradedPoly(MPoly::variable(num_vars, i - 1, power));
  }

  const MPoly& raw() const { return poly_; }
  int num_vars() const { return poly_.num_vars(); }
  const MPoly::Terms& terms() const { return poly_.terms(); }
  bool is_zero() const { return poly_.is_zero(); }
  Integer coeff(const Exponents& e) const { return poly_.coeff(e); }

  std::vector<int> weights() const {
    std::vector<int> w(static_cast<std::size_t>(num_vars()));
    for (int i = 0; i < num_vars(); ++i) w[static_cast<std::size_t>(i)] = Tag::weight(i + 1);
    return w;
  }
  int degree() const { return poly_.degree(weights()); }
  bool is_homogeneous() const { return poly_.is_homogeneous(weights()); }
  GradedPoly homogeneous_part(int d) const {
    return GradedPoly(poly_.homogeneous_part(weights(), d));
  }

  GradedPoly& operator+=(const GradedPoly& o) { poly_ += o.poly_; return *this; }
  GradedPoly& operator-=(const GradedPoly& o) { poly_ -= o.poly_; return *this; }
  GradedPoly& operator*=(const GradedPoly& o) { poly_ = poly_ * o.poly_; return *this; }
  GradedPoly& operator*=(const Integer& c) { poly_ *= c; return *this; }
  GradedPoly operator-() const { return GradedPoly(-poly_); }
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(GradedPoly a, const GradedPoly& b) { return a *= b; }
  friend GradedPoly operator*(GradedPoly a, const Integer& c) { return a *= c; }
  bool operator==(const GradedPoly&) const = default;

  GradedPoly pow(int e) const { return GradedPoly(poly_.pow(e)); }

  std::string to_string() const { return poly_.to_string(Tag::prefix); }

 private:
  MPoly poly_;
};

struct ElementaryBasis {
  static constexpr const char* prefix = "e";
  static constexpr int weight(int i) { return i; }
};

struct MonomialBasis {
  static constexpr const char* prefix = "x";
  static constexpr int weight(int) { return 1; }
};

/// Polynomial in e_1..e_r, deg e_i = i.
using EPoly = GradedPoly<ElementaryBasis>;
/// Polynomial in x_1..x_r, all of degree 1.
using XPoly = GradedPoly<MonomialBasis>;

}  // namespace spcob
