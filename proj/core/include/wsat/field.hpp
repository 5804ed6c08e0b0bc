#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace wsat {

/// Arithmetic in F_p for a prime p < 2^32.
class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1

  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t prime() const noexcept { return p_; }
  std::uint64_t reduce(std::int64_t x) const noexcept;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return (a * b) % p_; }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
  /// Throws InvalidInput for a == 0.
  std::uint64_t inv(std::uint64_t a) const;

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

using FieldVector = std::vector<std::uint64_t>;

/// Rank of a list of equal-length vectors over F_p.
std::size_t field_rank(const PrimeField& field, std::span<const FieldVector> vectors);

/// Basis of {lambda : sum_i lambda_i * vectors[i] = 0}, one FieldVector of
/// length vectors.size() per kernel dimension.
std::vector<FieldVector> kernel_basis(const PrimeField& field, std::span<const FieldVector> vectors);

/// Incremental row-echelon basis; insert() reports whether a vector was new.
class EchelonBasis {
 public:
  EchelonBasis(const PrimeField& field, std::size_t dimension);
  bool insert(FieldVector v);
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  const PrimeField& field_;
  std::size_t dimension_;
  std::vector<FieldVector> rows_;     // normalized, pivot entry 1
  std::vector<std::size_t> pivots_;   // pivot column per row
};

}  // namespace wsat
