#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "flatlab/func.hpp"

namespace flatlab {

/// True iff `poly` (bit i = coefficient of x^i) is irreducible over F2.
bool is_irreducible(std::uint32_t poly);

/// GF(2^n) in polynomial basis. Elements are coefficient vectors read as
/// little-endian integers, matching the truth-table index convention.
class Field {
 public:
  static constexpr unsigned kMaxDegree = 16;

  /// Throws DegreeMismatch unless `poly` has degree exactly `degree`
  /// (2 <= degree <= 16) and constant term 1; ReduciblePolynomial if it factors.
  Field(unsigned degree, std::uint32_t poly);

  unsigned degree() const noexcept { return degree_; }
  std::uint32_t polynomial() const noexcept { return poly_; }
  std::uint32_t order() const noexcept { return std::uint32_t{1} << degree_; }
  /// Whether the class of x generates the multiplicative group.
  bool x_is_primitive() const noexcept { return x_primitive_; }
  /// Primitive element the log tables are built on (x itself when primitive).
  std::uint32_t generator() const noexcept { return generator_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return a ^ b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  std::uint32_t inv(std::uint32_t a) const;

  /// Discrete log base generator(); `e` must be nonzero.
  std::uint32_t log(std::uint32_t e) const;
  std::uint32_t antilog(std::uint32_t k) const noexcept { return antilog_[k % (order() - 1)]; }

  /// Multiplicative order of a nonzero element.
  std::uint32_t multiplicative_order(std::uint32_t a) const;

 private:
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const noexcept;

  unsigned degree_;
  std::uint32_t poly_;
  bool x_primitive_ = false;
  std::uint32_t generator_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> antilog_;
};

/// One term c * x^exponent of a univariate polynomial over GF(2^n), where the
/// coefficient is either zero or a power of a (the class of the indeterminate).
struct UnivariateTerm {
  std::optional<std::uint32_t> coeff_power;  // nullopt: zero coefficient
  std::uint64_t exponent = 0;

  static UnivariateTerm monomial(std::uint64_t exponent) { return {std::uint32_t{0}, exponent}; }
  static UnivariateTerm scaled(std::uint32_t power, std::uint64_t exponent) {
    return {power, exponent};
  }
};

/// Evaluates the polynomial at every element and returns the (n,n) table.
/// Throws ExponentOutOfRange for exponents outside [0, 2^n - 1]. x^0 is 1 everywhere.
VectorialFunc univariate_to_table(const Field& field, std::span<const UnivariateTerm> terms);

}  // namespace flatlab
