#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "flatlab/bits.hpp"

namespace flatlab {

/// Truth table of an (n,m)-function F: F2^n -> F2^m. Index x encodes
/// (x1,...,xn) little-endian (x1 is bit 0); entry bit i-1 is f_i(x).
class VectorialFunc {
 public:
  static constexpr unsigned kMaxInputs = 16;
  static constexpr unsigned kMaxOutputs = 31;

  VectorialFunc() = default;
  /// Validates shape. Throws BadLength or EntryOutOfRange.
  VectorialFunc(unsigned n, unsigned m, std::vector<std::uint32_t> table);

  static VectorialFunc from_truth_table(unsigned n, unsigned m, std::vector<std::uint32_t> table) {
    return VectorialFunc(n, m, std::move(table));
  }
  static VectorialFunc constant(unsigned n, unsigned m, std::uint32_t value);
  static VectorialFunc random(unsigned n, unsigned m, std::mt19937_64& rng);
  /// Uniformly random function of algebraic degree at most `max_degree`.
  static VectorialFunc random_of_degree(unsigned n, unsigned m, unsigned max_degree,
                                        std::mt19937_64& rng);

  unsigned n() const noexcept { return n_; }
  unsigned m() const noexcept { return m_; }
  std::uint32_t size() const noexcept { return std::uint32_t{1} << n_; }
  std::uint32_t output_mask() const noexcept { return (std::uint32_t{1} << m_) - 1; }
  std::uint32_t operator()(std::uint32_t x) const { return table_[x]; }
  std::span<const std::uint32_t> table() const noexcept { return table_; }
  bool is_boolean() const noexcept { return m_ == 1; }

  bool operator==(const VectorialFunc&) const = default;

 private:
  unsigned n_ = 0;
  unsigned m_ = 0;
  std::vector<std::uint32_t> table_;
};

/// Algebraic normal form: coeffs[v] bit i is the coefficient of x^v in f_{i+1}.
struct AnfTable {
  unsigned n = 0;
  unsigned m = 0;
  std::vector<std::uint32_t> coeffs;

  bool operator==(const AnfTable&) const = default;
};

/// In-place binary Moebius transform; it is its own inverse.
void moebius_transform(std::span<std::uint32_t> values);

AnfTable anf(const VectorialFunc& f);
VectorialFunc anf_inverse(const AnfTable& anf);

/// Max popcount over monomials present; the zero function has degree 0.
unsigned degree(const VectorialFunc& f);

/// x -> <b, F(x)>. Throws ZeroMask when b == 0.
VectorialFunc component(const VectorialFunc& f, std::uint32_t b);

VectorialFunc derivative(const VectorialFunc& f, std::uint32_t a);
VectorialFunc second_derivative(const VectorialFunc& f, std::uint32_t a, std::uint32_t b);

/// Pointwise XOR of two functions with equal shape.
VectorialFunc operator^(const VectorialFunc& lhs, const VectorialFunc& rhs);

/// F_s = (f_1..f_s). Throws BadSplit unless 1 <= s < m.
VectorialFunc project(const VectorialFunc& f, unsigned s);
/// F_{m-s} = (f_{s+1}..f_m). Throws BadSplit unless 1 <= s < m.
VectorialFunc complement_project(const VectorialFunc& f, unsigned s);
/// Appends Boolean `g` as output bit m, giving an (n, m+1)-function.
VectorialFunc concat(const VectorialFunc& f, const VectorialFunc& g);

/// Affine map x -> <a, x> ^ c as a Boolean function on F2^n.
VectorialFunc affine_boolean(unsigned n, std::uint32_t a, unsigned c);

/// Graph transform (x, y) -> (A11 x + a, A21 x + A22 y + b) of the EA type.
struct EaTransform {
  BitMatrix a11;  // n x n, invertible
  BitMatrix a21;  // m x n
  BitMatrix a22;  // m x m, invertible
  std::uint32_t in_shift = 0;
  std::uint32_t out_shift = 0;

  static EaTransform identity(unsigned n, unsigned m);
  static EaTransform random(unsigned n, unsigned m, std::mt19937_64& rng);

  std::uint32_t map_point(std::uint32_t x) const { return a11.apply(x) ^ in_shift; }
};

/// F' with graph L(G_F): F'(A11 x + a) = A21 x + A22 F(x) + b.
/// Throws SingularMatrix when A11 or A22 is singular.
VectorialFunc apply_ea(const VectorialFunc& f, const EaTransform& t);

}  // namespace flatlab
