#include "spcob/stable.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace spcob {

HomSeries::HomSeries(std::vector<int> weights, int trunc)
    : weights_(std::move(weights)), trunc_(trunc), poly_(static_cast<int>(weights_.size())) {
  if (trunc_ < 0) throw DomainError("HomSeries: negative truncation");
  for (int w : weights_) {
    if (w <= 0) throw DomainError("HomSeries: variable weights must be positive");
  }
}

HomSeries::HomSeries(std::vector<int> weights, int trunc, const MPoly& poly)
    : HomSeries(std::move(weights), trunc) {
  if (poly.num_vars() != num_vars()) throw DomainError("HomSeries: variable count mismatch");
  poly_ = poly.truncated(weights_, trunc_);
}

HomSeries HomSeries::one(int r, int trunc) {
  return HomSeries(graded_weights(r), trunc, MPoly::constant(r, 1));
}

HomSeries HomSeries::p(int r, int i, int trunc) {
  return HomSeries(graded_weights(r), trunc, MPoly::variable(r, i - 1));
}

std::string HomSeries::to_string() const {
  const long groups = std::count(weights_.begin(), weights_.end(), 1);
  if (groups <= 1) return poly_.to_string("p");
  std::vector<std::string> names;
  int group = 0;
  for (int w : weights_) {
    if (w == 1) ++group;
    names.push_back("p" + std::string(static_cast<std::size_t>(group), '\'') + std::to_string(w));
  }
  return poly_.to_string(names);
}

void HomSeries::check_compatible(const HomSeries& o) const {
  if (o.weights_ != weights_ || o.trunc_ != trunc_) {
    throw DomainError("HomSeries: incompatible rings");
  }
}

HomSeries& HomSeries::operator+=(const HomSeries& o) {
  check_compatible(o);
  poly_ += o.poly_;
  return *this;
}

HomSeries& HomSeries::operator-=(const HomSeries& o) {
  check_compatible(o);
  poly_ -= o.poly_;
  return *this;
}

HomSeries& HomSeries::operator*=(const HomSeries& o) {
  check_compatible(o);
  poly_ = MPoly::multiply_truncated(poly_, o.poly_, weights_, trunc_);
  return *this;
}

HomSeries& HomSeries::operator*=(const Integer& c) {
  poly_ *= c;
  return *this;
}

HomSeries HomSeries::homogeneous_part(int d) const {
  return HomSeries(weights_, trunc_, poly_.homogeneous_part(weights_, d));
}

HomSeries HomSeries::truncated(int new_trunc) const {
  if (new_trunc > trunc_) throw DomainError("HomSeries: cannot raise the truncation");
  return HomSeries(weights_, new_trunc, poly_);
}

HomSeries HomSeries::with_var_zero(int i) const {
  if (i < 1 || i > num_vars()) throw DomainError("with_var_zero: index out of range");
  MPoly out(num_vars());
  for (const auto& [e, c] : poly_.terms()) {
    if (e[static_cast<std::size_t>(i - 1)] == 0) out.add_term(e, c);
  }
  return HomSeries(weights_, trunc_, out);
}

HomSeries HomSeries::substitute(const std::vector<HomSeries>& images) const {
  if (static_cast<int>(images.size()) != num_vars()) {
    throw DomainError("HomSeries::substitute: need one image per variable");
  }
  if (images.empty()) {
    // Only a constant can live here; it maps to a constant of the target,
    // which is unknown without an image, so require a nonempty list.
    throw DomainError("HomSeries::substitute: empty variable list");
  }
  const HomSeries& model = images.front();
  for (const auto& img : images) model.check_compatible(img);
  std::vector<std::vector<HomSeries>> powers(images.size());
  auto power_of = [&](std::size_t var, int e) -> const HomSeries& {
    auto& cache = powers[var];
    if (cache.empty()) {
      cache.push_back(HomSeries(model.weights_, model.trunc_,
                                MPoly::constant(model.num_vars(), 1)));
    }
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[var]);
    return cache[static_cast<std::size_t>(e)];
  };
  HomSeries out(model.weights_, model.trunc_);
  for (const auto& [e, c] : poly_.terms()) {
    HomSeries term(model.weights_, model.trunc_, MPoly::constant(model.num_vars(), c));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) term *= power_of(i, e[i]);
    }
    out += term;
  }
  return out;
}

ThomIdealElem::ThomIdealElem(HomSeries series) : series_(std::move(series)) {
  const int r = series_.num_vars();
  if (r == 0) throw DomainError("ThomIdealElem: no variables");
  for (const auto& [e, c] : series_.poly().terms()) {
    if (e[static_cast<std::size_t>(r - 1)] == 0) {
      throw DomainError("ThomIdealElem: a term is not divisible by p_" + std::to_string(r));
    }
  }
}

ThomIdealElem thom_ideal_embed(const HomSeries& x) {
  const int r = x.num_vars();
  if (r == 0) throw DomainError("thom_ideal_embed: no variables");
  HomSeries top(x.weights(), x.trunc(), MPoly::variable(r, r - 1));
  return ThomIdealElem(top * x);
}

HomSeries coproduct_generator(int i, int r, int s, int trunc) {
  if (i < 1 || i > r + s) {
    throw DomainError("coproduct_generator: p_" + std::to_string(i) + " is not among p_1..p_" +
                      std::to_string(r + s));
  }
  std::vector<int> weights = graded_weights(r);
  const std::vector<int> second = graded_weights(s);
  weights.insert(weights.end(), second.begin(), second.end());
  const int vars = r + s;
  auto first_var = [&](int a) -> MPoly {
    if (a == 0) return MPoly::constant(vars, 1);
    if (a > r) return MPoly(vars);
    return MPoly::variable(vars, a - 1);
  };
  auto second_var = [&](int b) -> MPoly {
    if (b == 0) return MPoly::constant(vars, 1);
    if (b > s) return MPoly(vars);
    return MPoly::variable(vars, r + b - 1);
  };
  MPoly image(vars);
  for (int j = 0; j <= i; ++j) image += first_var(i - j) * second_var(j);
  return HomSeries(weights, trunc, image);
}

HomSeries coproduct(const HomSeries& x, int r, int s, int trunc) {
  if (x.weights() != graded_weights(r + s)) {
    throw DomainError("coproduct: source must be a series in p_1..p_" + std::to_string(r + s));
  }
  std::vector<HomSeries> images;
  for (int i = 1; i <= r + s; ++i) images.push_back(coproduct_generator(i, r, s, trunc));
  return x.substitute(images);
}

MspRing msp_ring(int trunc) {
  if (trunc < 0) throw DomainError("msp_ring: negative truncation");
  MspRing out{trunc, trunc, {}};
  const std::vector<int> weights = graded_weights(trunc);
  for (int d = 0; d <= trunc; ++d) out.basis_by_degree.push_back(exponents_of_degree(weights, d));
  return out;
}

namespace {

std::string exps_to_string(const Exponents& e, const char* prefix) {
  return MPoly::monomial(e).to_string(prefix);
}

std::string vector_to_string(const std::vector<Integer>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ']';
  return os.str();
}

// Columns are the given vectors written against `rows` (keys absent from
// `rows` make the function throw, since the basis must be complete).
template <class Key, class Vec>
IntMatrix columns_matrix(const std::vector<Key>& rows, const std::vector<Vec>& cols) {
  std::map<Key, std::size_t> index;
  for (std::size_t i = 0; i < rows.size(); ++i) index.emplace(rows[i], i);
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [key, c] : cols[j]) {
      auto it = index.find(key);
      if (it == index.end()) throw ConsistencyError("columns_matrix: key outside the basis");
      m(it->second, j) = c;
    }
  }
  return m;
}

std::vector<Partition> basis_of_degree(const GrassRing& ring, int d) {
  std::vector<Partition> out;
  for (const auto& lambda : partitions_of(d, ring.r())) {
    if (ring.contains(lambda)) out.push_back(lambda);
  }
  return out;
}

// Schur expansions of e-monomials, shared between rings with the same r.
class TowerImages {
 public:
  const SchurVector& expansion(const Exponents& a) {
    auto it = cache_.find(a);
    if (it == cache_.end()) {
      it = cache_.emplace(a, epoly_to_schur(EPoly(MPoly::monomial(a)))).first;
    }
    return it->second;
  }
  GrassElem image(const Exponents& a, const GrassRing& ring) {
    return truncate_to(expansion(a), ring);
  }

 private:
  std::map<Exponents, SchurVector> cache_;
};

}  // namespace

GrassElem tower_image(const Exponents& a, const GrassRing& ring) {
  if (static_cast<int>(a.size()) != ring.r()) throw DomainError("tower_image: exponent length");
  return normal_form(EPoly(MPoly::monomial(a)), ring);
}

CheckOutcome tower_check(int r, int trunc, const std::vector<int>& ns) {
  CheckOutcome out;
  TowerImages images;
  const std::vector<int> weights = graded_weights(r);
  long monomials = 0;
  for (int n : ns) {
    const GrassRing ring(r, n);
    for (int d = 0; d <= trunc; ++d) {
      const auto monos = exponents_of_degree(weights, d);
      if (n == ns.front()) monomials += static_cast<long>(monos.size());
      std::vector<SchurVector::Terms> cols;
      for (const auto& a : monos) cols.push_back(images.image(a, ring).vec().terms());
      const IntMatrix m = columns_matrix(basis_of_degree(ring, d), cols);
      const auto kernel = kernel_basis(m);
      if (!kernel.empty()) {
        out.fail("degree " + std::to_string(d) + " does not inject into " + ring.to_string() +
                 "; kernel vector " + vector_to_string(kernel.front()));
      }
    }
  }
  for (int n : ns) {
    if (std::find(ns.begin(), ns.end(), n + 1) == ns.end()) continue;
    const GrassRing big(r, n + 1);
    const GrassRing small(r, n);
    for (int d = 0; d <= trunc; ++d) {
      for (const auto& a : exponents_of_degree(weights, d)) {
        if (!(alpha_map(images.image(a, big)) == images.image(a, small))) {
          out.fail("alpha_map mismatch for " + exps_to_string(a, "p") + " between " +
                   big.to_string() + " and " + small.to_string());
        }
      }
    }
  }
  out.stat("monomials", monomials);
  out.stat("rings", static_cast<long>(ns.size()));
  return out;
}

CheckOutcome limit_from_tower(int r, int trunc) {
  return tower_check(r, trunc, {r + trunc, r + trunc + 1, r + trunc + 2});
}

CheckOutcome sandwich_check(int r, int n) {
  CheckOutcome out;
  const GrassRing ring(r, n);
  const std::vector<int> weights = graded_weights(r);
  if (r == 0) return out;
  // Any monomial of degree >= N is divisible by one of degree in [N, N+r-1].
  const int low = r * (n - r) + 1;
  long vanishing = 0;
  for (int d = low; d < low + r; ++d) {
    for (const auto& a : exponents_of_degree(weights, d)) {
      ++vanishing;
      if (!tower_image(a, ring).is_zero()) {
        out.fail(exps_to_string(a, "e") + " does not vanish in " + ring.to_string());
      }
    }
  }
  out.stat("high_degree_monomials", vanishing);
  CheckOutcome low_degrees = tower_check(r, n - r, {n});
  out.absorb(low_degrees);
  return out;
}

CheckOutcome thom_ideal_check(int r, int trunc) {
  CheckOutcome out;
  if (r < 1) throw DomainError("thom_ideal_check: r must be positive");
  const std::vector<int> weights = graded_weights(r);
  const std::vector<int> lower_weights = graded_weights(r - 1);
  long monomials = 0;
  for (int d = 0; d <= trunc; ++d) {
    const auto monos = exponents_of_degree(weights, d);
    const auto sources = exponents_of_degree(weights, d - r);
    monomials += static_cast<long>(monos.size());
    // Image of p_r * (degree d-r) in degree d.
    std::vector<MPoly::Terms> image_cols;
    for (const auto& a : sources) {
      HomSeries x(weights, trunc, MPoly::monomial(a));
      image_cols.push_back(thom_ideal_embed(x).series().poly().terms());
    }
    const IntMatrix image = columns_matrix(monos, image_cols);
    if (rank(image) != sources.size()) {
      out.fail("multiplication by p_r is not injective in degree " + std::to_string(d - r));
    }
    // Evaluation p_r -> 0 into r-1 variables.
    const auto targets = exponents_of_degree(lower_weights, d);
    std::vector<MPoly::Terms> eval_cols;
    for (const auto& a : monos) {
      MPoly lowered(r - 1);
      if (a.back() == 0) lowered.add_term(Exponents(a.begin(), a.end() - 1), 1);
      eval_cols.push_back(lowered.terms());
    }
    const IntMatrix eval = columns_matrix(targets, eval_cols);
    const std::size_t kernel_dim = monos.size() - rank(eval);
    if (kernel_dim != sources.size()) {
      out.fail("degree " + std::to_string(d) + ": kernel of p_r -> 0 has dimension " +
               std::to_string(kernel_dim) + ", image of p_r has " + std::to_string(sources.size()));
    }
    // Composite is zero, and image columns are distinct unit vectors, so the
    // image is saturated and equals the integer kernel.
    for (const auto& col : image_cols) {
      MPoly v(r);
      for (const auto& [e, c] : col) v.add_term(e, c);
      HomSeries series(weights, trunc, v);
      if (!series.with_var_zero(r).is_zero()) {
        out.fail("p_r * x does not vanish under p_r -> 0 in degree " + std::to_string(d));
      }
      if (col.size() != 1 || col.begin()->second != 1) {
        out.fail("image of a monomial is not a monomial in degree " + std::to_string(d));
      }
    }
    // Surjectivity onto r-1 variables: each target monomial is hit exactly.
    if (rank(eval) != targets.size()) {
      out.fail("p_r -> 0 is not surjective in degree " + std::to_string(d));
    }
  }
  out.stat("monomials", monomials);
  return out;
}

CheckOutcome coproduct_injectivity(int r, int s, int trunc) {
  CheckOutcome out;
  const int vars = r + s;
  const std::vector<int> source_weights = graded_weights(vars);
  std::vector<int> split_weights = graded_weights(r);
  for (int w : graded_weights(s)) split_weights.push_back(w);
  const std::vector<int> flat(static_cast<std::size_t>(vars), 1);

  // p'_i -> e_i(t_1..t_r), p''_j -> e_j(t_{r+1}..t_{r+s}) inside Z[t_1..t_{r+s}].
  auto block_elementary = [&](int i, int offset, int width) {
    MPoly out_poly(vars);
    const XPoly e = elementary_x(i, width);
    for (const auto& [ex, c] : e.terms()) {
      Exponents full(static_cast<std::size_t>(vars), 0);
      for (int k = 0; k < width; ++k) full[static_cast<std::size_t>(offset + k)] = ex[static_cast<std::size_t>(k)];
      out_poly.add_term(full, c);
    }
    return out_poly;
  };
  std::vector<MPoly> split_to_t;
  for (int i = 1; i <= r; ++i) split_to_t.push_back(block_elementary(i, 0, r));
  for (int j = 1; j <= s; ++j) split_to_t.push_back(block_elementary(j, r, s));
  std::vector<MPoly> direct_to_t;
  for (int i = 1; i <= vars; ++i) direct_to_t.push_back(elementary_x(i, vars).raw());

  long checked = 0;
  for (int d = 0; d <= trunc; ++d) {
    const auto sources = exponents_of_degree(source_weights, d);
    std::vector<MPoly::Terms> split_cols;
    std::vector<MPoly::Terms> t_cols;
    for (const auto& a : sources) {
      ++checked;
      const HomSeries x(source_weights, trunc, MPoly::monomial(a));
      const HomSeries image = coproduct(x, r, s, trunc);
      split_cols.push_back(image.poly().terms());
      const MPoly composite = image.poly().substitute(split_to_t, vars);
      const MPoly direct = MPoly::monomial(a).substitute(direct_to_t, vars);
      if (!(composite == direct)) {
        out.fail("composite with the root substitution differs from p_i -> e_i(t) on " +
                 exps_to_string(a, "p"));
      }
      t_cols.push_back(composite.terms());
    }
    const IntMatrix split_matrix =
        columns_matrix(exponents_of_degree(split_weights, d), split_cols);
    if (auto kernel = kernel_basis(split_matrix); !kernel.empty()) {
      out.fail("coproduct has a kernel in degree " + std::to_string(d) + ": " +
               vector_to_string(kernel.front()));
    }
    const IntMatrix t_matrix = columns_matrix(exponents_of_degree(flat, d), t_cols);
    if (auto kernel = kernel_basis(t_matrix); !kernel.empty()) {
      out.fail("root composite has a kernel in degree " + std::to_string(d) + ": " +
               vector_to_string(kernel.front()));
    }
  }
  out.stat("source_monomials", checked);
  return out;
}

}  // namespace spcob
