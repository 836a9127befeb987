#include "spcob/spmat.hpp"

#include <numeric>
#include <sstream>

#include "spcob/determinant.hpp"

namespace spcob {

TPoly::TPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void TPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer TPoly::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

TPoly TPoly::operator-() const {
  TPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TPoly(std::move(out));
}

std::string TPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Integer mag = abs(c);
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 't';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

TMatrix::TMatrix(int size) : size_(size), entries_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
  if (size < 0) throw DomainError("TMatrix: negative size");
}

TMatrix::TMatrix(int size, std::vector<TPoly> row_major) : TMatrix(size) {
  if (row_major.size() != entries_.size()) throw DomainError("TMatrix: wrong number of entries");
  entries_ = std::move(row_major);
}

std::size_t TMatrix::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= size_ || j >= size_) throw DomainError("TMatrix: index out of range");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(j);
}

TMatrix TMatrix::identity(int size) {
  TMatrix m(size);
  for (int i = 0; i < size; ++i) m.at(i, i) = TPoly(1);
  return m;
}

TMatrix TMatrix::constant(const std::vector<std::vector<long>>& rows) {
  const int n = static_cast<int>(rows.size());
  TMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw DomainError("TMatrix::constant: rows must be square");
    }
    for (int j = 0; j < n; ++j) m.at(i, j) = TPoly(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return m;
}

TMatrix TMatrix::transpose() const {
  TMatrix out(size_);
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

TMatrix TMatrix::evaluate(const Integer& t) const {
  TMatrix out(size_);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    out.entries_[k] = TPoly(std::vector<Integer>{entries_[k].evaluate(t)});
  }
  return out;
}

TPoly TMatrix::determinant() const {
  Grid<TPoly> grid(static_cast<std::size_t>(size_));
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j) grid[static_cast<std::size_t>(i)].push_back(at(i, j));
  }
  return laplace_determinant(grid, TPoly(), TPoly(1));
}

int TMatrix::max_degree() const {
  int d = -1;
  for (const auto& e : entries_) d = std::max(d, e.degree());
  return d;
}

TMatrix operator*(const TMatrix& a, const TMatrix& b) {
  if (a.size_ != b.size_) throw DomainError("TMatrix: size mismatch");
  const int n = a.size_;
  TMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const TPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const TPoly& bkj = b.at(k, j);
        if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

TMatrix operator-(const TMatrix& a, const TMatrix& b) {
  if (a.size_ != b.size_) throw DomainError("TMatrix: size mismatch");
  TMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
  return out;
}

TMatrix omega(int two_n) {
  if (two_n <= 0 || two_n % 2 != 0) {
    throw DomainError("omega: size must be even and positive, got " + std::to_string(two_n));
  }
  TMatrix m(two_n);
  for (int b = 0; b < two_n; b += 2) {
    m.at(b, b + 1) = TPoly(1);
    m.at(b + 1, b) = TPoly(-1);
  }
  return m;
}

std::vector<Discrepancy> symplectic_defect(const TMatrix& m) {
  if (m.size() == 0 || m.size() % 2 != 0) return {Discrepancy{-1, -1, TPoly(1)}};
  const TMatrix w = omega(m.size());
  const TMatrix diff = m.transpose() * w * m - w;
  std::vector<Discrepancy> out;
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      if (!diff.at(i, j).is_zero()) out.push_back({i, j, diff.at(i, j)});
    }
  }
  return out;
}

bool is_symplectic(const TMatrix& m) { return symplectic_defect(m).empty(); }

namespace {

TPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Integer> v;
  for (long c : coeffs) v.emplace_back(c);
  return TPoly(std::move(v));
}

// I + a * E_{ij}
TMatrix elementary(int size, int i, int j, const TPoly& a) {
  TMatrix m = TMatrix::identity(size);
  m.at(i, j) += a;
  return m;
}

std::string describe_discrepancies(const std::vector<Discrepancy>& ds) {
  std::ostringstream os;
  os << "M^T w M - w nonzero at";
  for (const auto& d : ds) os << " (" << d.row << ',' << d.col << "): " << d.value.to_string() << ';';
  return os.str();
}

}  // namespace

TMatrix paper_homotopy_matrix() {
  // Coefficients listed from t^0 upward.
  return TMatrix(4, {
      poly({1, 0, -1}), poly({0}), poly({0, -2, 0, 13, 0, -14, 0, 4}), poly({0, 0, 8, 0, -12, 0, 4}),
      poly({0}), poly({1, 0, -1}), poly({0, 0, -2, 0, 2}), poly({0, -1, 0, 2}),
      poly({0, 1}), poly({0}), poly({1, 0, -7, 0, 10, 0, -4}), poly({0, -4, 0, 8, 0, -4}),
      poly({0}), poly({0, 2, 0, -1}), poly({0, 2, 0, -4, 0, 2}), poly({1, 0, -3, 0, 2}),
  });
}

TMatrix block_swap4() {
  return TMatrix::constant({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
}

TMatrix transvection_homotopy() {
  // Coordinates (x1, y1, x2, y2). The swap is (-I on the second plane) times
  // the lift of the rotation [[0,1],[-1,0]] acting on (x1, x2) and dually on
  // (y1, y2); both factor into elementary symplectic matrices.
  const TPoly t = TPoly::t();
  auto lift_upper = [&](const TPoly& a) {  // x1 += a x2, y2 -= a y1
    return elementary(4, 0, 2, a) * elementary(4, 3, 1, -a);
  };
  auto lift_lower = [&](const TPoly& a) {  // x2 += a x1, y1 -= a y2
    return elementary(4, 2, 0, a) * elementary(4, 1, 3, -a);
  };
  auto plane_upper = [&](const TPoly& a) { return elementary(4, 2, 3, a); };
  auto plane_lower = [&](const TPoly& a) { return elementary(4, 3, 2, a); };
  const TMatrix plane_rotation = plane_upper(t) * plane_lower(-t) * plane_upper(t);
  const TMatrix lifted_rotation = lift_upper(t) * lift_lower(-t) * lift_upper(t);
  return plane_rotation * plane_rotation * lifted_rotation;
}

std::vector<std::string> transvection_homotopy_factors() {
  return {"E23(t)", "E32(-t)", "E23(t)", "E23(t)", "E32(-t)", "E23(t)",
          "E02(t)E31(-t)", "E20(-t)E13(t)", "E02(t)E31(-t)"};
}

CheckOutcome verify_homotopy(const TMatrix& m) {
  CheckOutcome out;
  if (m.size() != 4) {
    out.fail("homotopy must be 4x4");
    return out;
  }
  if (!(m.evaluate(0) == TMatrix::identity(4))) out.fail("value at t=0 is not the identity");
  if (!(m.evaluate(1) == block_swap4())) out.fail("value at t=1 is not the block swap");
  if (auto defect = symplectic_defect(m); !defect.empty()) out.fail(describe_discrepancies(defect));
  out.stat("max_degree", m.max_degree());
  return out;
}

TMatrix block_embed(int n, int block_count, const TMatrix& core) {
  if (core.size() != 4) throw DomainError("block_embed: core must be 4x4");
  if (n < 1 || n + 1 > block_count) {
    throw DomainError("block_embed: need 1 <= n and n+1 <= N, got n=" + std::to_string(n) +
                      " N=" + std::to_string(block_count));
  }
  TMatrix m = TMatrix::identity(2 * block_count);
  const int offset = 2 * n - 2;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m.at(offset + i, offset + j) = core.at(i, j);
  }
  return m;
}

TMatrix shift_homotopy_product(int block_count, int factors, const TMatrix& core) {
  if (factors < 0 || factors > block_count - 1) {
    throw DomainError("shift_homotopy_product: need 0 <= K <= N-1");
  }
  TMatrix p = TMatrix::identity(2 * block_count);
  for (int n = 1; n <= factors; ++n) p = p * block_embed(n, block_count, core);
  return p;
}

TMatrix shift_homotopy_product(int block_count, int factors) {
  return shift_homotopy_product(block_count, factors, paper_homotopy_matrix());
}

TMatrix block_permutation(const std::vector<int>& perm) {
  const int blocks = static_cast<int>(perm.size());
  TMatrix m(2 * blocks);
  std::vector<bool> hit(perm.size(), false);
  for (int j = 0; j < blocks; ++j) {
    const int target = perm[static_cast<std::size_t>(j)];
    if (target < 0 || target >= blocks || hit[static_cast<std::size_t>(target)]) {
      throw DomainError("block_permutation: not a permutation");
    }
    hit[static_cast<std::size_t>(target)] = true;
    m.at(2 * target, 2 * j) = TPoly(1);
    m.at(2 * target + 1, 2 * j + 1) = TPoly(1);
  }
  return m;
}

CheckOutcome shift_product_check(int block_count, int factors, const TMatrix& core) {
  CheckOutcome out;
  const int size = 2 * block_count;
  std::vector<TMatrix> prefixes{TMatrix::identity(size)};
  for (int n = 1; n <= factors; ++n) {
    prefixes.push_back(prefixes.back() * block_embed(n, block_count, core));
  }
  const TMatrix& p = prefixes.back();

  if (!(p.evaluate(0) == TMatrix::identity(size))) out.fail("P(0) is not the identity");

  // Oracle: adjacent block transpositions multiplied as permutations.
  TMatrix oracle = TMatrix::identity(size);
  for (int n = 1; n <= factors; ++n) {
    std::vector<int> swap(static_cast<std::size_t>(block_count));
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[static_cast<std::size_t>(n - 1)], swap[static_cast<std::size_t>(n)]);
    oracle = oracle * block_permutation(swap);
  }
  if (!(p.evaluate(1) == oracle)) out.fail("P(1) differs from the product of block transpositions");

  // The product is the cycle block j -> j+1 on the first K+1 blocks.
  std::vector<int> cycle(static_cast<std::size_t>(block_count));
  std::iota(cycle.begin(), cycle.end(), 0);
  for (int j = 0; j <= factors; ++j) cycle[static_cast<std::size_t>(j)] = (j + 1) % (factors + 1);
  if (!(p.evaluate(1) == block_permutation(cycle))) {
    out.fail("P(1) is not the cyclic shift of the first K+1 blocks");
  }

  if (auto defect = symplectic_defect(p); !defect.empty()) out.fail(describe_discrepancies(defect));

  for (int n = 1; n <= factors; ++n) {
    for (int m = n + 1; m <= factors; ++m) {
      for (int col = 0; col < 2 * n; ++col) {
        for (int row = 0; row < size; ++row) {
          if (!(prefixes[static_cast<std::size_t>(m)].at(row, col) ==
                prefixes[static_cast<std::size_t>(n)].at(row, col))) {
            out.fail("column " + std::to_string(col) + " of f_1..f_" + std::to_string(m) +
                     " differs from f_1..f_" + std::to_string(n));
          }
        }
      }
    }
    // Columns 2n-1, 2n (1-based) vanish below row 2n+2.
    for (int col = 2 * n - 2; col < 2 * n; ++col) {
      for (int row = 2 * n + 2; row < size; ++row) {
        if (!p.at(row, col).is_zero()) {
          out.fail("entry (" + std::to_string(row) + "," + std::to_string(col) +
                   ") below the band is nonzero");
        }
      }
    }
  }
  out.stat("size", size);
  out.stat("max_degree", p.max_degree());
  return out;
}

std::string to_string(const TMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.size(); ++i) {
    os << '[';
    for (int j = 0; j < m.size(); ++j) os << (j ? ", " : "") << m.at(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

}  // namespace spcob
