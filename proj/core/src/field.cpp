#include "wsat/field.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "wsat/error.hpp"

namespace wsat {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
    throw InvalidInput("field modulus " + std::to_string(p) + " is not a prime below 2^32");
  }
}

std::uint64_t PrimeField::reduce(std::int64_t x) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = x % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const noexcept {
  std::uint64_t result = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw InvalidInput("inverse of zero");
  return pow(a, p_ - 2);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const PrimeField& f, std::vector<FieldVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const std::uint64_t scale = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, scale);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t factor = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t field_rank(const PrimeField& field, std::span<const FieldVector> vectors) {
  if (vectors.empty()) return 0;
  EchelonBasis basis(field, vectors.front().size());
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

std::vector<FieldVector> kernel_basis(const PrimeField& field, std::span<const FieldVector> vectors) {
  const std::size_t k = vectors.size();
  if (k == 0) return {};
  const std::size_t dim = vectors.front().size();
  // Columns are the vectors; solve A * lambda = 0.
  std::vector<FieldVector> a(dim, FieldVector(k, 0));
  for (std::size_t j = 0; j < k; ++j) {
    if (vectors[j].size() != dim) throw InvalidInput("vectors have different lengths");
    for (std::size_t i = 0; i < dim; ++i) a[i][j] = vectors[j][i] % field.prime();
  }
  const auto pivots = rref(field, a, k);
  std::vector<char> is_pivot(k, 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;

  std::vector<FieldVector> kernel;
  for (std::size_t free = 0; free < k; ++free) {
    if (is_pivot[free]) continue;
    FieldVector lambda(k, 0);
    lambda[free] = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row) lambda[pivots[row]] = field.neg(a[row][free]);
    kernel.push_back(std::move(lambda));
  }
  return kernel;
}

EchelonBasis::EchelonBasis(const PrimeField& field, std::size_t dimension) : field_(field), dimension_(dimension) {}

bool EchelonBasis::insert(FieldVector v) {
  if (v.size() != dimension_) throw InvalidInput("vector has the wrong dimension");
  for (auto& x : v) x %= field_.prime();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::uint64_t factor = v[pivots_[i]];
    if (factor == 0) continue;
    for (std::size_t j = pivots_[i]; j < dimension_; ++j) v[j] = field_.sub(v[j], field_.mul(factor, rows_[i][j]));
  }
  std::size_t pivot = 0;
  while (pivot < dimension_ && v[pivot] == 0) ++pivot;
  if (pivot == dimension_) return false;
  const std::uint64_t scale = field_.inv(v[pivot]);
  for (std::size_t j = pivot; j < dimension_; ++j) v[j] = field_.mul(v[j], scale);
  // Rows stay sorted by pivot so one forward sweep fully reduces a vector.
  const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  rows_.insert(rows_.begin() + at, std::move(v));
  pivots_.insert(pivots_.begin() + at, pivot);
  return true;
}

}  // namespace wsat
