#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "spcob/check.hpp"
#include "spcob/integer.hpp"

namespace spcob {

/// A named graded generator of the ambient coefficient ring: a Chern-style
/// root ("x1", degree 1), the hyperplane class ("zeta", degree 1), or an
/// opaque class such as "p2(F)" of degree 2.
struct Symbol {
  std::string name;
  int degree = 1;
  auto operator<=>(const Symbol&) const = default;
};

/// Polynomial with integer coefficients in named graded symbols.
class NamedPoly {
 public:
  using Monomial = std::map<Symbol, int>;
  using Terms = std::map<Monomial, Integer>;

  NamedPoly() = default;
  static NamedPoly constant(const Integer& c);
  static NamedPoly symbol(const Symbol& s, int power = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Monomial& m, const Integer& c);

  /// Max total degree over terms; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  /// All symbols that occur, sorted.
  std::vector<Symbol> symbols() const;

  NamedPoly& operator+=(const NamedPoly& o);
  NamedPoly& operator-=(const NamedPoly& o);
  NamedPoly& operator*=(const NamedPoly& o);
  NamedPoly& operator*=(const Integer& c);
  NamedPoly operator-() const;
  friend NamedPoly operator+(NamedPoly a, const NamedPoly& b) { return a += b; }
  friend NamedPoly operator-(NamedPoly a, const NamedPoly& b) { return a -= b; }
  friend NamedPoly operator*(NamedPoly a, const NamedPoly& b) { return a *= b; }
  friend NamedPoly operator*(NamedPoly a, const Integer& c) { return a *= c; }
  bool operator==(const NamedPoly&) const = default;

  NamedPoly pow(int e) const;

  /// Coefficients c_k with self = sum_k c_k z^k, c_k free of z.
  std::vector<NamedPoly> coefficients_in(const Symbol& z) const;
  static NamedPoly from_coefficients(const std::vector<NamedPoly>& coeffs, const Symbol& z);

  /// Replaces every symbol in `values` by its image.
  NamedPoly evaluate(const std::map<Symbol, NamedPoly>& values) const;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// A symplectic bundle split into rank-2 summands, one formal root each.
struct FormalBundle {
  std::vector<Symbol> roots;

  int rank() const { return 2 * static_cast<int>(roots.size()); }
  /// Roots named prefix1..prefixN.
  static FormalBundle with_roots(const std::string& prefix, int count, int first_index = 1);
};

/// Pontryagin classes (p_0 = 1, p_1, ..., p_n) of a bundle of rank 2n.
class PontVector {
 public:
  /// classes[0] must be 1 and classes[i] homogeneous of degree i (or zero);
  /// classes.size() must be quaternionic_rank + 1.
  PontVector(int quaternionic_rank, std::vector<NamedPoly> classes);

  /// The trivial bundle of rank 2n: every p_i with i >= 1 vanishes.
  static PontVector trivial(int quaternionic_rank);
  /// Classes of an unknown bundle F kept as opaque symbols "p1(F)", ...
  static PontVector opaque(const std::string& bundle, int quaternionic_rank);

  int quaternionic_rank() const { return rank_; }
  /// p_i; zero for i beyond the rank.
  NamedPoly p(int i) const;
  const std::vector<NamedPoly>& classes() const { return classes_; }
  /// Total class sum_i p_i.
  NamedPoly total() const;

  bool operator==(const PontVector&) const = default;

 private:
  int rank_;
  std::vector<NamedPoly> classes_;
};

/// p_i = e_i(roots).
PontVector pont_from_roots(const FormalBundle& bundle);

/// Classes of an orthogonal direct sum.
PontVector cartan_sum(const PontVector& a, const PontVector& b);

/// The monic relation z^n - p_1 z^{n-1} + ... + (-1)^n p_n satisfied by
/// z = p_1 of the tautological rank-2 subbundle on HP(E).
struct ZetaRelation {
  Symbol zeta;
  /// coeffs[k] multiplies zeta^k; coeffs.back() == 1.
  std::vector<NamedPoly> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  NamedPoly as_poly() const { return NamedPoly::from_coefficients(coeffs, zeta); }
};

ZetaRelation hp_relation(const PontVector& pv, const Symbol& zeta);

/// Remainder of f on division by the monic relation in zeta.
NamedPoly reduce_mod(const NamedPoly& f, const ZetaRelation& relation);

/// The rank-2 tautological line: (1, zeta).
PontVector tautological_line(const Symbol& zeta);

/// Classes of the orthogonal complement of the tautological subbundle on
/// HP(F): p_j = sum_{k=0}^{j} p_{j-k}(F) (-zeta)^k, j < n, reduced modulo
/// hp_relation. Requires n >= 1.
PontVector perp_classes(const PontVector& pv, const Symbol& zeta);

/// sum_{k=0}^{n} p_{n-k}(F) (-zeta)^k reduced modulo hp_relation; the
/// top class of the complement, which must vanish.
NamedPoly perp_top_residue(const PontVector& pv, const Symbol& zeta);

/// Both perp identities: the top residue vanishes and
/// cartan_sum(tautological_line, perp) agrees with pv modulo the relation.
CheckOutcome perp_check(const PontVector& pv, const Symbol& zeta);

/// (-1)^r: p_r(F) = (-1)^r z^* th(F) for F of rank 2r.
int thom_top_sign(int r);

/// Converts a pulled-back Thom class into the top Pontryagin class.
NamedPoly top_pontryagin_from_thom(const NamedPoly& thom_pullback, int r);

}  // namespace spcob
