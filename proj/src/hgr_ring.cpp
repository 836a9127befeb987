#include "spcob/hgr_ring.hpp"

#include <map>

#include "spcob/determinant.hpp"

namespace spcob {

GrassRing::GrassRing(int r, int n) : r_(r), n_(n) {
  if (r < 0 || n < r) {
    throw DomainError("GrassRing needs 0 <= r <= n, got r=" + std::to_string(r) +
                      " n=" + std::to_string(n));
  }
}

std::string GrassRing::to_string() const {
  return "HGr(" + std::to_string(r_) + "," + std::to_string(n_) + ")";
}

Integer rank(const GrassRing& ring) {
  return static_cast<long>(ring.basis().size());
}

GrassElem::GrassElem(GrassRing ring, SchurVector vec)
    : ring_(std::move(ring)), vec_(std::move(vec)) {
  if (vec_.num_vars() != ring_.r()) {
    throw DomainError("GrassElem: vector has " + std::to_string(vec_.num_vars()) +
                      " variables, ring " + ring_.to_string() + " needs " +
                      std::to_string(ring_.r()));
  }
  for (const auto& [lambda, c] : vec_.terms()) {
    if (!ring_.contains(lambda)) {
      throw DomainError("GrassElem: s" + lambda.to_string() + " is not in the basis of " +
                        ring_.to_string());
    }
  }
}

GrassElem GrassElem::zero(const GrassRing& ring) {
  return GrassElem(ring, SchurVector(ring.r()));
}

GrassElem GrassElem::one(const GrassRing& ring) {
  return GrassElem(ring, SchurVector::one(ring.r()));
}

GrassElem GrassElem::basis(const GrassRing& ring, const Partition& lambda) {
  return GrassElem(ring, SchurVector::basis(ring.r(), lambda));
}

bool GrassElem::is_homogeneous() const {
  return vec_.homogeneous_part(vec_.degree()) == vec_;
}

std::pair<int, int> GrassElem::bidegree() const {
  if (!is_homogeneous()) throw DomainError("bidegree of a non-homogeneous element");
  const int d = std::max(0, degree());
  return {4 * d, 2 * d};
}

GrassElem& GrassElem::operator+=(const GrassElem& o) {
  if (!(o.ring_ == ring_)) throw DomainError("GrassElem: ring mismatch");
  vec_ += o.vec_;
  return *this;
}

GrassElem& GrassElem::operator-=(const GrassElem& o) {
  if (!(o.ring_ == ring_)) throw DomainError("GrassElem: ring mismatch");
  vec_ -= o.vec_;
  return *this;
}

GrassElem truncate_to(const SchurVector& v, const GrassRing& ring) {
  SchurVector out(ring.r());
  for (const auto& [lambda, c] : v.terms()) {
    if (ring.contains(lambda)) out.add_term(lambda, c);
  }
  return GrassElem(ring, std::move(out));
}

GrassElem normal_form(const EPoly& p, const GrassRing& ring) {
  if (p.num_vars() != ring.r()) {
    throw DomainError("normal_form: polynomial in " + std::to_string(p.num_vars()) +
                      " variables, ring " + ring.to_string());
  }
  return truncate_to(epoly_to_schur(p), ring);
}

GrassElem multiply(const GrassElem& a, const GrassElem& b) {
  if (!(a.ring() == b.ring())) {
    throw DomainError("multiply: " + a.ring().to_string() + " vs " + b.ring().to_string());
  }
  return truncate_to(multiply_schur(a.vec(), b.vec()), a.ring());
}

GrassElem alpha_map(const GrassElem& x) {
  const GrassRing& src = x.ring();
  if (src.n() == src.r()) throw DomainError("alpha_map: source ring has no smaller n");
  return truncate_to(x.vec(), GrassRing(src.r(), src.n() - 1));
}

GrassElem beta_map(const GrassElem& x) {
  const GrassRing& src = x.ring();
  if (src.r() == 0) throw DomainError("beta_map: source ring has r = 0");
  const GrassRing target(src.r() - 1, src.n() - 1);
  SchurVector out(target.r());
  for (const auto& [lambda, c] : x.vec().terms()) {
    if (lambda.length() <= target.r()) out.add_term(lambda, c);
  }
  return GrassElem(target, std::move(out));
}

GrassElem length_truncation(const GrassElem& x) { return beta_map(x); }

GrassElem thom_inclusion(const GrassElem& v, const GrassRing& target) {
  const GrassRing& src = v.ring();
  if (src.r() != target.r() || src.n() + 1 != target.n()) {
    throw DomainError("thom_inclusion: source must be (r, n-1) for target " +
                      target.to_string() + ", got " + src.to_string());
  }
  SchurVector out(target.r());
  for (const auto& [mu, c] : v.vec().terms()) {
    out.add_term(add_full_column(mu, target.r()), c);
  }
  return GrassElem(target, std::move(out));
}

std::vector<EPoly> ideal_certificate(const EPoly& p, const GrassRing& ring) {
  const int r = ring.r();
  const int w = ring.width();
  if (p.num_vars() != r) throw DomainError("ideal_certificate: variable count mismatch");
  const SchurVector expansion = epoly_to_schur(p);
  for (const auto& [lambda, c] : expansion.terms()) {
    if (ring.contains(lambda)) {
      throw DomainError("ideal_certificate: polynomial is not in the ideal of " +
                        ring.to_string());
    }
  }
  std::vector<EPoly> q(static_cast<std::size_t>(r), EPoly::zero(r));
  if (r == 0) return q;

  // h_k for k > w expressed over the generators h_{w+1}..h_{w+r}.
  std::map<int, std::vector<EPoly>> reduced;
  auto reduce_h = [&](auto&& self, int k) -> const std::vector<EPoly>& {
    if (auto it = reduced.find(k); it != reduced.end()) return it->second;
    std::vector<EPoly> coeffs(static_cast<std::size_t>(r), EPoly::zero(r));
    if (k <= ring.n()) {
      coeffs[static_cast<std::size_t>(k - w - 1)] = EPoly::one(r);
    } else {
      // h_k = sum_{i=1}^{r} (-1)^{i+1} e_i h_{k-i}
      for (int i = 1; i <= r; ++i) {
        const std::vector<EPoly> lower = self(self, k - i);
        EPoly factor = EPoly::generator(r, i);
        if (i % 2 == 0) factor = -factor;
        for (int g = 0; g < r; ++g) {
          coeffs[static_cast<std::size_t>(g)] += factor * lower[static_cast<std::size_t>(g)];
        }
      }
    }
    return reduced.emplace(k, std::move(coeffs)).first->second;
  };

  int top = 0;
  for (const auto& [lambda, c] : expansion.terms()) top = std::max(top, lambda.largest());
  const std::vector<EPoly> h = h_polys_upto(top + r, r);
  auto h_entry = [&](int k) {
    return k < 0 ? EPoly::zero(r) : h[static_cast<std::size_t>(k)];
  };

  for (const auto& [lambda, c] : expansion.terms()) {
    // Expand det(h_{lambda_i - i + j}) along its first row; every entry there
    // is some h_k with k >= lambda_1 > w.
    for (int j = 1; j <= r; ++j) {
      Grid<EPoly> minor;
      for (int i = 2; i <= r; ++i) {
        std::vector<EPoly> row;
        for (int col = 1; col <= r; ++col) {
          if (col != j) row.push_back(h_entry(lambda[static_cast<std::size_t>(i - 1)] - i + col));
        }
        minor.push_back(std::move(row));
      }
      EPoly cofactor = laplace_determinant(minor, EPoly::zero(r), EPoly::one(r)) * c;
      if (j % 2 == 0) cofactor = -cofactor;
      const std::vector<EPoly>& coeffs = reduce_h(reduce_h, lambda.largest() - 1 + j);
      for (int g = 0; g < r; ++g) {
        q[static_cast<std::size_t>(g)] += cofactor * coeffs[static_cast<std::size_t>(g)];
      }
    }
  }

  EPoly check = EPoly::zero(r);
  for (int g = 0; g < r; ++g) {
    check += q[static_cast<std::size_t>(g)] * h_poly(w + g + 1, r);
  }
  if (!(check == p)) throw ConsistencyError("ideal_certificate: reconstruction failed");
  return q;
}

}  // namespace spcob
