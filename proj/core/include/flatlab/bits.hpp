#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

namespace flatlab {

/// Dot product over F2 of two bit vectors packed little-endian.
constexpr unsigned dot(std::uint64_t a, std::uint64_t b) noexcept {
  return static_cast<unsigned>(std::popcount(a & b) & 1);
}

constexpr unsigned parity(std::uint64_t x) noexcept {
  return static_cast<unsigned>(std::popcount(x) & 1);
}

/// Dense matrix over F2 with at most 32 columns. Row i holds the linear
/// functional producing output bit i, so apply(x) has bit i = <row_i, x>.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(unsigned rows, unsigned cols);
  BitMatrix(unsigned rows, unsigned cols, std::vector<std::uint32_t> row_bits);

  static BitMatrix identity(unsigned size);
  static BitMatrix zero(unsigned rows, unsigned cols) { return BitMatrix(rows, cols); }
  static BitMatrix random(unsigned rows, unsigned cols, std::mt19937_64& rng);
  static BitMatrix random_invertible(unsigned size, std::mt19937_64& rng);
  /// Permutation matrix sending input bit i to output bit perm[i].
  static BitMatrix permutation(const std::vector<unsigned>& perm);

  unsigned rows() const noexcept { return rows_; }
  unsigned cols() const noexcept { return cols_; }
  std::uint32_t row(unsigned i) const { return row_bits_[i]; }
  bool get(unsigned i, unsigned j) const { return (row_bits_[i] >> j) & 1U; }
  void set(unsigned i, unsigned j, bool value);

  std::uint32_t apply(std::uint32_t x) const noexcept;

  unsigned rank() const;
  bool invertible() const { return rows_ == cols_ && rank() == rows_; }
  /// Throws SingularMatrix when not invertible.
  BitMatrix inverse() const;

  BitMatrix operator*(const BitMatrix& rhs) const;
  bool operator==(const BitMatrix&) const = default;

 private:
  unsigned rows_ = 0;
  unsigned cols_ = 0;
  std::vector<std::uint32_t> row_bits_;
};

}  // namespace flatlab
