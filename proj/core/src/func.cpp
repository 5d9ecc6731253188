#include "flatlab/func.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "flatlab/error.hpp"

namespace flatlab {

VectorialFunc::VectorialFunc(unsigned n, unsigned m, std::vector<std::uint32_t> table)
    : n_(n), m_(m), table_(std::move(table)) {
  if (n < 1 || n > kMaxInputs) fail(Errc::BadLength, "n must lie in [1,16]");
  if (m < 1 || m > kMaxOutputs) fail(Errc::BadLength, "m must lie in [1,31]");
  if (table_.size() != (std::size_t{1} << n)) {
    fail(Errc::BadLength, "table has " + std::to_string(table_.size()) + " entries, expected 2^" +
                              std::to_string(n));
  }
  const std::uint32_t mask = output_mask();
  for (std::size_t x = 0; x < table_.size(); ++x) {
    if (table_[x] & ~mask) {
      fail(Errc::EntryOutOfRange, "entry at x=" + std::to_string(x) + " is >= 2^m");
    }
  }
}

VectorialFunc VectorialFunc::constant(unsigned n, unsigned m, std::uint32_t value) {
  return VectorialFunc(n, m, std::vector<std::uint32_t>(std::size_t{1} << n, value));
}

VectorialFunc VectorialFunc::random(unsigned n, unsigned m, std::mt19937_64& rng) {
  std::vector<std::uint32_t> table(std::size_t{1} << n);
  const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
  for (auto& v : table) v = static_cast<std::uint32_t>(rng() & mask);
  return VectorialFunc(n, m, std::move(table));
}

VectorialFunc VectorialFunc::random_of_degree(unsigned n, unsigned m, unsigned max_degree,
                                              std::mt19937_64& rng) {
  AnfTable a{n, m, std::vector<std::uint32_t>(std::size_t{1} << n, 0)};
  const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
  for (std::size_t v = 0; v < a.coeffs.size(); ++v) {
    if (static_cast<unsigned>(std::popcount(v)) <= max_degree) {
      a.coeffs[v] = static_cast<std::uint32_t>(rng() & mask);
    }
  }
  return anf_inverse(a);
}

void moebius_transform(std::span<std::uint32_t> values) {
  const std::size_t len = values.size();
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) values[j + h] ^= values[j];
    }
  }
}

AnfTable anf(const VectorialFunc& f) {
  AnfTable out{f.n(), f.m(), std::vector<std::uint32_t>(f.table().begin(), f.table().end())};
  moebius_transform(out.coeffs);
  return out;
}

VectorialFunc anf_inverse(const AnfTable& a) {
  std::vector<std::uint32_t> table = a.coeffs;
  moebius_transform(table);
  return VectorialFunc(a.n, a.m, std::move(table));
}

unsigned degree(const VectorialFunc& f) {
  const AnfTable a = anf(f);
  unsigned d = 0;
  for (std::size_t v = 0; v < a.coeffs.size(); ++v) {
    if (a.coeffs[v] != 0) d = std::max(d, static_cast<unsigned>(std::popcount(v)));
  }
  return d;
}

VectorialFunc component(const VectorialFunc& f, std::uint32_t b) {
  if (b == 0) fail(Errc::ZeroMask, "component mask must be nonzero");
  if (b & ~f.output_mask()) fail(Errc::InvalidArgument, "component mask exceeds 2^m");
  std::vector<std::uint32_t> table(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) table[x] = dot(b, f(x));
  return VectorialFunc(f.n(), 1, std::move(table));
}

VectorialFunc derivative(const VectorialFunc& f, std::uint32_t a) {
  require(a < f.size(), Errc::InvalidArgument, "direction out of range");
  std::vector<std::uint32_t> table(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) table[x] = f(x ^ a) ^ f(x);
  return VectorialFunc(f.n(), f.m(), std::move(table));
}

VectorialFunc second_derivative(const VectorialFunc& f, std::uint32_t a, std::uint32_t b) {
  require(a < f.size() && b < f.size(), Errc::InvalidArgument, "direction out of range");
  std::vector<std::uint32_t> table(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    table[x] = f(x) ^ f(x ^ a) ^ f(x ^ b) ^ f(x ^ a ^ b);
  }
  return VectorialFunc(f.n(), f.m(), std::move(table));
}

VectorialFunc operator^(const VectorialFunc& lhs, const VectorialFunc& rhs) {
  require(lhs.n() == rhs.n() && lhs.m() == rhs.m(), Errc::InvalidArgument,
          "XOR of functions with different shapes");
  std::vector<std::uint32_t> table(lhs.size());
  for (std::uint32_t x = 0; x < lhs.size(); ++x) table[x] = lhs(x) ^ rhs(x);
  return VectorialFunc(lhs.n(), lhs.m(), std::move(table));
}

VectorialFunc project(const VectorialFunc& f, unsigned s) {
  if (s < 1 || s >= f.m()) fail(Errc::BadSplit, "projection needs 1 <= s < m");
  const std::uint32_t mask = (std::uint32_t{1} << s) - 1;
  std::vector<std::uint32_t> table(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) table[x] = f(x) & mask;
  return VectorialFunc(f.n(), s, std::move(table));
}

VectorialFunc complement_project(const VectorialFunc& f, unsigned s) {
  if (s < 1 || s >= f.m()) fail(Errc::BadSplit, "projection needs 1 <= s < m");
  std::vector<std::uint32_t> table(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) table[x] = f(x) >> s;
  return VectorialFunc(f.n(), f.m() - s, std::move(table));
}

VectorialFunc concat(const VectorialFunc& f, const VectorialFunc& g) {
  if (g.n() != f.n() || g.m() != 1) fail(Errc::BadSplit, "concat expects a Boolean function on F2^n");
  std::vector<std::uint32_t> table(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) table[x] = f(x) | (g(x) << f.m());
  return VectorialFunc(f.n(), f.m() + 1, std::move(table));
}

VectorialFunc affine_boolean(unsigned n, std::uint32_t a, unsigned c) {
  std::vector<std::uint32_t> table(std::size_t{1} << n);
  for (std::uint32_t x = 0; x < table.size(); ++x) table[x] = dot(a, x) ^ (c & 1U);
  return VectorialFunc(n, 1, std::move(table));
}

EaTransform EaTransform::identity(unsigned n, unsigned m) {
  return {BitMatrix::identity(n), BitMatrix::zero(m, n), BitMatrix::identity(m), 0, 0};
}

EaTransform EaTransform::random(unsigned n, unsigned m, std::mt19937_64& rng) {
  EaTransform t;
  t.a11 = BitMatrix::random_invertible(n, rng);
  t.a21 = BitMatrix::random(m, n, rng);
  t.a22 = BitMatrix::random_invertible(m, rng);
  t.in_shift = static_cast<std::uint32_t>(rng() & ((std::uint64_t{1} << n) - 1));
  t.out_shift = static_cast<std::uint32_t>(rng() & ((std::uint64_t{1} << m) - 1));
  return t;
}

VectorialFunc apply_ea(const VectorialFunc& f, const EaTransform& t) {
  require(t.a11.rows() == f.n() && t.a11.cols() == f.n(), Errc::InvalidArgument, "A11 must be n x n");
  require(t.a21.rows() == f.m() && t.a21.cols() == f.n(), Errc::InvalidArgument, "A21 must be m x n");
  require(t.a22.rows() == f.m() && t.a22.cols() == f.m(), Errc::InvalidArgument, "A22 must be m x m");
  if (!t.a11.invertible()) fail(Errc::SingularMatrix, "A11 is singular");
  if (!t.a22.invertible()) fail(Errc::SingularMatrix, "A22 is singular");
  require(t.in_shift < f.size() && t.out_shift <= f.output_mask(), Errc::InvalidArgument,
          "shift vector out of range");
  std::vector<std::uint32_t> table(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    table[t.map_point(x)] = t.a21.apply(x) ^ t.a22.apply(f(x)) ^ t.out_shift;
  }
  return VectorialFunc(f.n(), f.m(), std::move(table));
}

}  // namespace flatlab
