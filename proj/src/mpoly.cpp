#include "spcob/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace spcob {

MPoly MPoly::constant(int num_vars, const Integer& c) {
  MPoly p(num_vars);
  p.add_term(Exponents(static_cast<std::size_t>(num_vars), 0), c);
  return p;
}

MPoly MPoly::variable(int num_vars, int index, int power) {
  if (index < 0 || index >= num_vars) {
    throw DomainError("variable index " + std::to_string(index + 1) +
                      " out of range for " + std::to_string(num_vars) +
                      " variables");
  }
  Exponents e(static_cast<std::size_t>(num_vars), 0);
  e[static_cast<std::size_t>(index)] = power;
  MPoly p(num_vars);
  p.add_term(e, 1);
  return p;
}

MPoly MPoly::monomial(Exponents exps, const Integer& c) {
  MPoly p(static_cast<int>(exps.size()));
  p.add_term(exps, c);
  return p;
}

Integer MPoly::coeff(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Integer(0) : it->second;
}

void MPoly::add_term(const Exponents& exps, const Integer& c) {
  if (static_cast<int>(exps.size()) != num_vars_) {
    throw DomainError("exponent vector length " + std::to_string(exps.size()) +
                      " does not match " + std::to_string(num_vars_) +
                      " variables");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& other) {
  if (other.num_vars_ != num_vars_) throw DomainError("MPoly: variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  if (other.num_vars_ != num_vars_) throw DomainError("MPoly: variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

namespace {

Exponents add_exps(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.num_vars_ != b.num_vars_) throw DomainError("MPoly: variable count mismatch");
  MPoly out(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(add_exps(ea, eb), ca * cb);
  }
  return out;
}

MPoly MPoly::multiply_truncated(const MPoly& a, const MPoly& b,
                                const std::vector<int>& weights,
                                int max_degree) {
  if (a.num_vars_ != b.num_vars_) throw DomainError("MPoly: variable count mismatch");
  MPoly out(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    int da = weighted_degree(ea, weights);
    if (da > max_degree) continue;
    for (const auto& [eb, cb] : b.terms_) {
      if (da + weighted_degree(eb, weights) > max_degree) continue;
      out.add_term(add_exps(ea, eb), ca * cb);
    }
  }
  return out;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw DomainError("MPoly::pow: negative exponent");
  MPoly result = constant(num_vars_, 1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

int weighted_degree(const Exponents& exps, const std::vector<int>& weights) {
  int d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) d += exps[i] * weights[i];
  return d;
}

int MPoly::degree(const std::vector<int>& weights) const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, weighted_degree(e, weights));
  return best;
}

bool MPoly::is_homogeneous(const std::vector<int>& weights) const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int de = weighted_degree(e, weights);
    if (d >= 0 && de != d) return false;
    d = de;
  }
  return true;
}

MPoly MPoly::homogeneous_part(const std::vector<int>& weights, int d) const {
  MPoly out(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (weighted_degree(e, weights) == d) out.terms_.emplace(e, c);
  }
  return out;
}

MPoly MPoly::truncated(const std::vector<int>& weights, int max_degree) const {
  MPoly out(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (weighted_degree(e, weights) <= max_degree) out.terms_.emplace(e, c);
  }
  return out;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images, int target_vars) const {
  if (static_cast<int>(images.size()) != num_vars_) {
    throw DomainError("substitute: need one image per variable");
  }
  // Cache powers per variable; inputs are small so a flat vector suffices.
  std::vector<std::vector<MPoly>> powers(images.size());
  auto power_of = [&](std::size_t var, int e) -> const MPoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(constant(target_vars, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[var]);
    return cache[static_cast<std::size_t>(e)];
  };
  MPoly out(target_vars);
  for (const auto& [e, c] : terms_) {
    MPoly term = constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) term = term * power_of(i, e[i]);
    }
    out += term;
  }
  return out;
}

MPoly MPoly::divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw ConsistencyError("divide_exact: division by zero");
  if (a.num_vars_ != b.num_vars_) throw DomainError("MPoly: variable count mismatch");
  const auto& [lead_b, lead_cb] = *b.terms_.rbegin();
  MPoly quotient(a.num_vars_);
  MPoly remainder = a;
  while (!remainder.is_zero()) {
    const auto& [lead_r, lead_cr] = *remainder.terms_.rbegin();
    Exponents shift(lead_r.size());
    for (std::size_t i = 0; i < shift.size(); ++i) {
      shift[i] = lead_r[i] - lead_b[i];
      if (shift[i] < 0) throw ConsistencyError("divide_exact: nonzero remainder");
    }
    if (!mpz_divisible_p(lead_cr.get_mpz_t(), lead_cb.get_mpz_t())) {
      throw ConsistencyError("divide_exact: nonzero remainder");
    }
    Integer qc = lead_cr / lead_cb;
    MPoly step = monomial(shift, qc);
    quotient += step;
    remainder -= step * b;
  }
  return quotient;
}

std::string MPoly::to_string(const std::string& var_prefix) const {
  std::vector<std::string> names;
  for (int i = 1; i <= num_vars_; ++i) names.push_back(var_prefix + std::to_string(i));
  return to_string(names);
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || is_const) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (wrote) os << '*';
      os << names.at(i);
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

void fill_exponents(const std::vector<int>& weights, std::size_t index,
                    int remaining, Exponents& current,
                    std::vector<Exponents>& out) {
  if (index == weights.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const int w = weights[index];
  for (int e = remaining / w; e >= 0; --e) {
    current[index] = e;
    fill_exponents(weights, index + 1, remaining - e * w, current, out);
  }
  current[index] = 0;
}

}  // namespace

std::vector<Exponents> exponents_of_degree(const std::vector<int>& weights,
                                           int degree) {
  std::vector<Exponents> out;
  if (degree < 0) return out;
  for (int w : weights) {
    if (w <= 0) throw DomainError("exponents_of_degree: weights must be positive");
  }
  Exponents current(weights.size(), 0);
  fill_exponents(weights, 0, degree, current, out);
  return out;
}

std::vector<int> graded_weights(int r) {
  std::vector<int> w(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return w;
}

}  // namespace spcob
