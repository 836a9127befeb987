#include "spcob/pclass.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace spcob {

NamedPoly NamedPoly::constant(const Integer& c) {
  NamedPoly p;
  p.add_term({}, c);
  return p;
}

NamedPoly NamedPoly::symbol(const Symbol& s, int power) {
  if (power < 0) throw DomainError("NamedPoly::symbol: negative power");
  NamedPoly p;
  Monomial m;
  if (power > 0) m.emplace(s, power);
  p.add_term(m, 1);
  return p;
}

void NamedPoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  for (const auto& [s, e] : m) {
    if (e <= 0) throw DomainError("NamedPoly: monomial exponents must be positive");
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

int monomial_degree(const NamedPoly::Monomial& m) {
  int d = 0;
  for (const auto& [s, e] : m) d += s.degree * e;
  return d;
}

NamedPoly::Monomial multiply_monomials(NamedPoly::Monomial a, const NamedPoly::Monomial& b) {
  for (const auto& [s, e] : b) a[s] += e;
  return a;
}

}  // namespace

int NamedPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

bool NamedPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    const int dm = monomial_degree(m);
    if (d >= 0 && dm != d) return false;
    d = dm;
  }
  return true;
}

std::vector<Symbol> NamedPoly::symbols() const {
  std::set<Symbol> seen;
  for (const auto& [m, c] : terms_) {
    for (const auto& [s, e] : m) seen.insert(s);
  }
  return {seen.begin(), seen.end()};
}

NamedPoly& NamedPoly::operator+=(const NamedPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NamedPoly& NamedPoly::operator-=(const NamedPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

NamedPoly& NamedPoly::operator*=(const NamedPoly& o) {
  NamedPoly out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) out.add_term(multiply_monomials(ma, mb), ca * cb);
  }
  *this = std::move(out);
  return *this;
}

NamedPoly& NamedPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

NamedPoly NamedPoly::operator-() const {
  NamedPoly out = *this;
  return out *= Integer(-1);
}

NamedPoly NamedPoly::pow(int e) const {
  if (e < 0) throw DomainError("NamedPoly::pow: negative exponent");
  NamedPoly out = constant(1);
  for (int i = 0; i < e; ++i) out *= *this;
  return out;
}

std::vector<NamedPoly> NamedPoly::coefficients_in(const Symbol& z) const {
  std::vector<NamedPoly> out;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    int k = 0;
    if (auto it = rest.find(z); it != rest.end()) {
      k = it->second;
      rest.erase(it);
    }
    if (static_cast<int>(out.size()) <= k) out.resize(static_cast<std::size_t>(k) + 1);
    out[static_cast<std::size_t>(k)].add_term(rest, c);
  }
  return out;
}

NamedPoly NamedPoly::from_coefficients(const std::vector<NamedPoly>& coeffs, const Symbol& z) {
  NamedPoly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out += coeffs[k] * symbol(z, static_cast<int>(k));
  }
  return out;
}

NamedPoly NamedPoly::evaluate(const std::map<Symbol, NamedPoly>& values) const {
  NamedPoly out;
  for (const auto& [m, c] : terms_) {
    NamedPoly term = constant(c);
    for (const auto& [s, e] : m) {
      if (auto it = values.find(s); it != values.end()) {
        term *= it->second.pow(e);
      } else {
        term *= symbol(s, e);
      }
    }
    out += term;
  }
  return out;
}

std::string NamedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Integer mag = abs(c);
    bool wrote = false;
    if (mag != 1 || m.empty()) {
      os << mag.get_str();
      wrote = true;
    }
    for (const auto& [s, e] : m) {
      if (wrote) os << '*';
      os << s.name;
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

FormalBundle FormalBundle::with_roots(const std::string& prefix, int count, int first_index) {
  FormalBundle b;
  for (int i = 0; i < count; ++i) {
    b.roots.push_back(Symbol{prefix + std::to_string(first_index + i), 1});
  }
  return b;
}

PontVector::PontVector(int quaternionic_rank, std::vector<NamedPoly> classes)
    : rank_(quaternionic_rank), classes_(std::move(classes)) {
  if (rank_ < 0) throw DomainError("PontVector: negative rank");
  if (static_cast<int>(classes_.size()) != rank_ + 1) {
    throw DomainError("PontVector: expected " + std::to_string(rank_ + 1) + " classes, got " +
                      std::to_string(classes_.size()));
  }
  if (!(classes_[0] == NamedPoly::constant(1))) throw DomainError("PontVector: p_0 must be 1");
  for (int i = 1; i <= rank_; ++i) {
    const NamedPoly& c = classes_[static_cast<std::size_t>(i)];
    if (!c.is_zero() && (!c.is_homogeneous() || c.degree() != i)) {
      throw DomainError("PontVector: p_" + std::to_string(i) + " is not homogeneous of degree " +
                        std::to_string(i));
    }
  }
}

PontVector PontVector::trivial(int quaternionic_rank) {
  std::vector<NamedPoly> classes(static_cast<std::size_t>(quaternionic_rank) + 1);
  classes[0] = NamedPoly::constant(1);
  return PontVector(quaternionic_rank, std::move(classes));
}

PontVector PontVector::opaque(const std::string& bundle, int quaternionic_rank) {
  std::vector<NamedPoly> classes{NamedPoly::constant(1)};
  for (int i = 1; i <= quaternionic_rank; ++i) {
    classes.push_back(NamedPoly::symbol(Symbol{"p" + std::to_string(i) + "(" + bundle + ")", i}));
  }
  return PontVector(quaternionic_rank, std::move(classes));
}

NamedPoly PontVector::p(int i) const {
  if (i < 0 || i > rank_) return {};
  return classes_[static_cast<std::size_t>(i)];
}

NamedPoly PontVector::total() const {
  NamedPoly out;
  for (const auto& c : classes_) out += c;
  return out;
}

PontVector pont_from_roots(const FormalBundle& bundle) {
  const int n = static_cast<int>(bundle.roots.size());
  // e_i of the roots via prod (1 + x_k), tracked degree by degree.
  std::vector<NamedPoly> e(static_cast<std::size_t>(n) + 1);
  e[0] = NamedPoly::constant(1);
  for (int k = 0; k < n; ++k) {
    const NamedPoly x = NamedPoly::symbol(bundle.roots[static_cast<std::size_t>(k)]);
    for (int i = k + 1; i >= 1; --i) {
      e[static_cast<std::size_t>(i)] += e[static_cast<std::size_t>(i - 1)] * x;
    }
  }
  return PontVector(n, std::move(e));
}

PontVector cartan_sum(const PontVector& a, const PontVector& b) {
  const int n = a.quaternionic_rank() + b.quaternionic_rank();
  std::vector<NamedPoly> classes(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    NamedPoly pi = a.p(i) + b.p(i);
    for (int j = 1; j <= i - 1; ++j) pi += a.p(i - j) * b.p(j);
    classes[static_cast<std::size_t>(i)] = std::move(pi);
  }
  classes[0] = NamedPoly::constant(1);  // the i = 0 line above double counts
  return PontVector(n, std::move(classes));
}

ZetaRelation hp_relation(const PontVector& pv, const Symbol& zeta) {
  const int n = pv.quaternionic_rank();
  ZetaRelation rel{zeta, std::vector<NamedPoly>(static_cast<std::size_t>(n) + 1)};
  for (int i = 0; i <= n; ++i) {
    NamedPoly c = pv.p(i);
    if (i % 2 == 1) c = -c;
    rel.coeffs[static_cast<std::size_t>(n - i)] = std::move(c);
  }
  return rel;
}

NamedPoly reduce_mod(const NamedPoly& f, const ZetaRelation& relation) {
  const int n = relation.degree();
  if (n < 0 || !(relation.coeffs.back() == NamedPoly::constant(1))) {
    throw DomainError("reduce_mod: relation is not monic");
  }
  for (const auto& c : relation.coeffs) {
    for (const auto& s : c.symbols()) {
      if (s == relation.zeta) throw DomainError("reduce_mod: relation coefficients involve zeta");
    }
  }
  std::vector<NamedPoly> coeffs = f.coefficients_in(relation.zeta);
  // zeta^n = -sum_{k<n} c_k zeta^k, applied from the top down.
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= n; --k) {
    const NamedPoly lead = coeffs[static_cast<std::size_t>(k)];
    if (lead.is_zero()) continue;
    coeffs[static_cast<std::size_t>(k)] = NamedPoly();
    for (int j = 0; j < n; ++j) {
      coeffs[static_cast<std::size_t>(k - n + j)] -= lead * relation.coeffs[static_cast<std::size_t>(j)];
    }
  }
  return NamedPoly::from_coefficients(coeffs, relation.zeta);
}

PontVector tautological_line(const Symbol& zeta) {
  return PontVector(1, {NamedPoly::constant(1), NamedPoly::symbol(zeta)});
}

namespace {

// sum_{k=0}^{j} p_{j-k} (-zeta)^k
NamedPoly twisted_class(const PontVector& pv, const Symbol& zeta, int j) {
  NamedPoly out;
  const NamedPoly minus_zeta = -NamedPoly::symbol(zeta);
  for (int k = 0; k <= j; ++k) out += pv.p(j - k) * minus_zeta.pow(k);
  return out;
}

}  // namespace

PontVector perp_classes(const PontVector& pv, const Symbol& zeta) {
  const int n = pv.quaternionic_rank();
  if (n < 1) throw DomainError("perp_classes: bundle rank must be at least 2");
  const ZetaRelation rel = hp_relation(pv, zeta);
  std::vector<NamedPoly> classes;
  for (int j = 0; j <= n - 1; ++j) classes.push_back(reduce_mod(twisted_class(pv, zeta, j), rel));
  return PontVector(n - 1, std::move(classes));
}

NamedPoly perp_top_residue(const PontVector& pv, const Symbol& zeta) {
  const int n = pv.quaternionic_rank();
  if (n < 1) throw DomainError("perp_top_residue: bundle rank must be at least 2");
  return reduce_mod(twisted_class(pv, zeta, n), hp_relation(pv, zeta));
}

CheckOutcome perp_check(const PontVector& pv, const Symbol& zeta) {
  CheckOutcome out;
  const ZetaRelation rel = hp_relation(pv, zeta);
  const NamedPoly top = perp_top_residue(pv, zeta);
  if (!top.is_zero()) out.fail("top class of the complement reduces to " + top.to_string());
  const PontVector sum = cartan_sum(tautological_line(zeta), perp_classes(pv, zeta));
  for (int i = 0; i <= pv.quaternionic_rank(); ++i) {
    const NamedPoly diff = reduce_mod(sum.p(i) - pv.p(i), rel);
    if (!diff.is_zero()) {
      out.fail("p_" + std::to_string(i) + " of U + U^perp differs by " + diff.to_string());
    }
  }
  out.stat("bundles", 1);
  return out;
}

int thom_top_sign(int r) {
  if (r < 1) throw DomainError("thom_top_sign: rank must be positive");
  return r % 2 == 0 ? 1 : -1;
}

NamedPoly top_pontryagin_from_thom(const NamedPoly& thom_pullback, int r) {
  return thom_pullback * Integer(thom_top_sign(r));
}

}  // namespace spcob
