#include "flatlab/bits.hpp"

#include <utility>

#include "flatlab/error.hpp"

namespace flatlab {

BitMatrix::BitMatrix(unsigned rows, unsigned cols) : rows_(rows), cols_(cols), row_bits_(rows, 0) {
  require(cols <= 32, Errc::InvalidArgument, "BitMatrix supports at most 32 columns");
}

BitMatrix::BitMatrix(unsigned rows, unsigned cols, std::vector<std::uint32_t> row_bits)
    : rows_(rows), cols_(cols), row_bits_(std::move(row_bits)) {
  require(cols <= 32, Errc::InvalidArgument, "BitMatrix supports at most 32 columns");
  require(row_bits_.size() == rows, Errc::InvalidArgument, "row count mismatch");
  const std::uint64_t mask = (std::uint64_t{1} << cols) - 1;
  for (auto r : row_bits_) {
    require((r & ~mask) == 0, Errc::InvalidArgument, "row has bits beyond column count");
  }
}

BitMatrix BitMatrix::identity(unsigned size) {
  BitMatrix m(size, size);
  for (unsigned i = 0; i < size; ++i) m.row_bits_[i] = std::uint32_t{1} << i;
  return m;
}

BitMatrix BitMatrix::random(unsigned rows, unsigned cols, std::mt19937_64& rng) {
  BitMatrix m(rows, cols);
  const std::uint64_t mask = (std::uint64_t{1} << cols) - 1;
  for (auto& r : m.row_bits_) r = static_cast<std::uint32_t>(rng() & mask);
  return m;
}

BitMatrix BitMatrix::random_invertible(unsigned size, std::mt19937_64& rng) {
  for (;;) {
    BitMatrix m = random(size, size, rng);
    if (m.invertible()) return m;
  }
}

BitMatrix BitMatrix::permutation(const std::vector<unsigned>& perm) {
  const auto size = static_cast<unsigned>(perm.size());
  BitMatrix m(size, size);
  for (unsigned i = 0; i < size; ++i) {
    require(perm[i] < size, Errc::InvalidArgument, "permutation entry out of range");
    m.set(perm[i], i, true);
  }
  require(m.invertible(), Errc::InvalidArgument, "not a permutation");
  return m;
}

void BitMatrix::set(unsigned i, unsigned j, bool value) {
  if (value) {
    row_bits_[i] |= std::uint32_t{1} << j;
  } else {
    row_bits_[i] &= ~(std::uint32_t{1} << j);
  }
}

std::uint32_t BitMatrix::apply(std::uint32_t x) const noexcept {
  std::uint32_t y = 0;
  for (unsigned i = 0; i < rows_; ++i) y |= dot(row_bits_[i], x) << i;
  return y;
}

unsigned BitMatrix::rank() const {
  std::vector<std::uint32_t> work = row_bits_;
  unsigned rank = 0;
  for (unsigned col = 0; col < cols_ && rank < rows_; ++col) {
    const std::uint32_t bit = std::uint32_t{1} << col;
    unsigned pivot = rank;
    while (pivot < rows_ && !(work[pivot] & bit)) ++pivot;
    if (pivot == rows_) continue;
    std::swap(work[rank], work[pivot]);
    for (unsigned r = 0; r < rows_; ++r) {
      if (r != rank && (work[r] & bit)) work[r] ^= work[rank];
    }
    ++rank;
  }
  return rank;
}

BitMatrix BitMatrix::inverse() const {
  require(rows_ == cols_, Errc::SingularMatrix, "matrix is not square");
  const unsigned n = rows_;
  std::vector<std::uint32_t> left = row_bits_;
  std::vector<std::uint32_t> right(n);
  for (unsigned i = 0; i < n; ++i) right[i] = std::uint32_t{1} << i;
  for (unsigned col = 0; col < n; ++col) {
    const std::uint32_t bit = std::uint32_t{1} << col;
    unsigned pivot = col;
    while (pivot < n && !(left[pivot] & bit)) ++pivot;
    if (pivot == n) fail(Errc::SingularMatrix, "matrix is singular over F2");
    std::swap(left[col], left[pivot]);
    std::swap(right[col], right[pivot]);
    for (unsigned r = 0; r < n; ++r) {
      if (r != col && (left[r] & bit)) {
        left[r] ^= left[col];
        right[r] ^= right[col];
      }
    }
  }
  return BitMatrix(n, n, std::move(right));
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
  require(cols_ == rhs.rows_, Errc::InvalidArgument, "dimension mismatch in product");
  BitMatrix out(rows_, rhs.cols_);
  for (unsigned i = 0; i < rows_; ++i) {
    std::uint32_t acc = 0;
    for (unsigned k = 0; k < cols_; ++k) {
      if (get(i, k)) acc ^= rhs.row_bits_[k];
    }
    out.row_bits_[i] = acc;
  }
  return out;
}

}  // namespace flatlab
