#include "spcob/symfun.hpp"

#include <algorithm>
#include <sstream>

#include "spcob/determinant.hpp"

namespace spcob {

SchurVector SchurVector::basis(int num_vars, const Partition& lambda,
                               const Integer& c) {
  SchurVector v(num_vars);
  v.add_term(lambda, c);
  return v;
}

Integer SchurVector::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SchurVector::add_term(const Partition& lambda, const Integer& c) {
  if (lambda.length() > num_vars_) {
    throw DomainError("s" + lambda.to_string() + " needs more than " +
                      std::to_string(num_vars_) + " variables");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SchurVector& SchurVector::operator+=(const SchurVector& o) {
  if (o.num_vars_ != num_vars_) throw DomainError("SchurVector: variable count mismatch");
  for (const auto& [l, c] : o.terms_) add_term(l, c);
  return *this;
}

SchurVector& SchurVector::operator-=(const SchurVector& o) {
  if (o.num_vars_ != num_vars_) throw DomainError("SchurVector: variable count mismatch");
  for (const auto& [l, c] : o.terms_) add_term(l, -c);
  return *this;
}

SchurVector& SchurVector::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [l, v] : terms_) v *= c;
  return *this;
}

SchurVector SchurVector::homogeneous_part(int d) const {
  SchurVector out(num_vars_);
  for (const auto& [l, c] : terms_) {
    if (weight(l) == d) out.terms_.emplace(l, c);
  }
  return out;
}

int SchurVector::degree() const {
  int d = -1;
  for (const auto& [l, c] : terms_) d = std::max(d, weight(l));
  return d;
}

std::string SchurVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, c] : terms_) {
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Integer mag = abs(c);
    if (mag != 1) os << mag.get_str() << '*';
    os << 's' << l.to_string();
  }
  return os.str();
}

std::vector<EPoly> h_polys_upto(int max, int r) {
  std::vector<EPoly> h;
  if (max < 0) return h;
  h.reserve(static_cast<std::size_t>(max) + 1);
  h.push_back(EPoly::one(r));
  for (int m = 1; m <= max; ++m) {
    EPoly hm = EPoly::zero(r);
    for (int i = 1; i <= std::min(m, r); ++i) {
      EPoly term = EPoly::generator(r, i) * h[static_cast<std::size_t>(m - i)];
      if (i % 2 == 1) {
        hm += term;
      } else {
        hm -= term;
      }
    }
    h.push_back(std::move(hm));
  }
  return h;
}

EPoly h_poly(int m, int r) {
  if (m < 0) return EPoly::zero(r);
  return h_polys_upto(m, r).back();
}

XPoly h_expand_x(int m, int r) {
  XPoly out(r);
  if (m < 0) return out;
  MPoly raw(r);
  for (const auto& e : exponents_of_degree(std::vector<int>(static_cast<std::size_t>(r), 1), m)) {
    raw.add_term(e, 1);
  }
  return XPoly(std::move(raw));
}

XPoly elementary_x(int i, int r) {
  MPoly raw(r);
  if (i < 0 || i > r) return XPoly(std::move(raw));
  // Squarefree exponent vectors with i ones.
  Exponents e(static_cast<std::size_t>(r), 0);
  std::fill(e.begin(), e.begin() + i, 1);
  std::sort(e.begin(), e.end());
  do {
    raw.add_term(e, 1);
  } while (std::next_permutation(e.begin(), e.end()));
  return XPoly(std::move(raw));
}

namespace {

void require_length(const Partition& lambda, int r, const char* who) {
  if (r < 0) throw DomainError(std::string(who) + ": negative variable count");
  if (lambda.length() > r) {
    throw DomainError(std::string(who) + ": l" + lambda.to_string() + " > r = " +
                      std::to_string(r));
  }
}

}  // namespace

EPoly schur_jt_e(const Partition& lambda, int r) {
  require_length(lambda, r, "schur_jt_e");
  const Partition dual = conjugate(lambda);
  const int m = dual.length();
  auto e_entry = [&](int k) -> EPoly {
    if (k < 0 || k > r) return EPoly::zero(r);
    if (k == 0) return EPoly::one(r);
    return EPoly::generator(r, k);
  };
  Grid<EPoly> grid(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    auto& row = grid[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= m; ++j) row.push_back(e_entry(dual[static_cast<std::size_t>(i - 1)] - i + j));
  }
  return laplace_determinant(grid, EPoly::zero(r), EPoly::one(r));
}

EPoly schur_jt_h(const Partition& lambda, int r) {
  require_length(lambda, r, "schur_jt_h");
  const int top = lambda.largest() + r;
  const std::vector<EPoly> h = h_polys_upto(top, r);
  auto h_entry = [&](int k) -> EPoly {
    if (k < 0) return EPoly::zero(r);
    return h[static_cast<std::size_t>(k)];
  };
  Grid<EPoly> grid(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) {
    auto& row = grid[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= r; ++j) row.push_back(h_entry(lambda[static_cast<std::size_t>(i - 1)] - i + j));
  }
  return laplace_determinant(grid, EPoly::zero(r), EPoly::one(r));
}

namespace {

XPoly alternant(const std::vector<int>& shifted, int r) {
  Grid<XPoly> grid(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      grid[static_cast<std::size_t>(i)].push_back(
          XPoly::generator(r, i + 1, shifted[static_cast<std::size_t>(j)]));
    }
  }
  return laplace_determinant(grid, XPoly::zero(r), XPoly::one(r));
}

}  // namespace

XPoly schur_alternant(const Partition& lambda, int r) {
  require_length(lambda, r, "schur_alternant");
  if (r == 0) return XPoly::one(0);
  std::vector<int> delta(static_cast<std::size_t>(r));
  std::vector<int> shifted(static_cast<std::size_t>(r));
  for (int j = 1; j <= r; ++j) {
    delta[static_cast<std::size_t>(j - 1)] = r - j;
    shifted[static_cast<std::size_t>(j - 1)] = lambda[static_cast<std::size_t>(j - 1)] + r - j;
  }
  const XPoly numerator = alternant(shifted, r);
  const XPoly vandermonde = alternant(delta, r);
  return XPoly(MPoly::divide_exact(numerator.raw(), vandermonde.raw()));
}

XPoly epoly_to_x(const EPoly& p) {
  const int r = p.num_vars();
  std::vector<MPoly> images;
  images.reserve(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) images.push_back(elementary_x(i, r).raw());
  return XPoly(p.raw().substitute(images, r));
}

bool is_symmetric(const XPoly& p) {
  for (const auto& [e, c] : p.terms()) {
    Exponents perm = e;
    std::sort(perm.begin(), perm.end());
    do {
      if (p.coeff(perm) != c) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

SchurVector xpoly_to_schur(const XPoly& p) {
  if (!is_symmetric(p)) throw DomainError("xpoly_to_schur: input is not symmetric");
  const int r = p.num_vars();
  std::map<Partition, XPoly> alternants;
  SchurVector out(r);
  MPoly remainder = p.raw();
  while (!remainder.is_zero()) {
    const auto [lead, c] = *remainder.terms().rbegin();
    const Partition lambda(lead);
    auto it = alternants.find(lambda);
    if (it == alternants.end()) {
      it = alternants.emplace(lambda, schur_alternant(lambda, r)).first;
    }
    out.add_term(lambda, c);
    remainder -= it->second.raw() * c;
  }
  return out;
}

EPoly schur_to_epoly(const SchurVector& v) {
  EPoly out = EPoly::zero(v.num_vars());
  for (const auto& [lambda, c] : v.terms()) {
    out += schur_jt_e(lambda, v.num_vars()) * c;
  }
  return out;
}

SchurVector epoly_to_schur(const EPoly& p) { return xpoly_to_schur(epoly_to_x(p)); }

SchurVector multiply_schur(const SchurVector& a, const SchurVector& b) {
  if (a.num_vars() != b.num_vars()) throw DomainError("multiply_schur: variable count mismatch");
  return epoly_to_schur(schur_to_epoly(a) * schur_to_epoly(b));
}

}  // namespace spcob
