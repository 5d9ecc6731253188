#include "flatlab/field.hpp"

#include <bit>
#include <string>

#include "flatlab/error.hpp"

namespace flatlab {
namespace {

unsigned poly_degree(std::uint64_t p) { return p == 0 ? 0 : 63 - std::countl_zero(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const unsigned dm = poly_degree(m);
  while (a != 0 && poly_degree(a) >= dm) a ^= m << (poly_degree(a) - dm);
  return a;
}

}  // namespace

bool is_irreducible(std::uint32_t poly) {
  const unsigned d = poly_degree(poly);
  if (d == 0) return false;
  // Trial division by every polynomial of degree 1..d/2.
  for (std::uint64_t q = 2; poly_degree(q) <= d / 2; ++q) {
    if (poly_mod(poly, q) == 0) return false;
  }
  return true;
}

Field::Field(unsigned degree, std::uint32_t poly) : degree_(degree), poly_(poly) {
  if (degree < 2 || degree > kMaxDegree) {
    fail(Errc::DegreeMismatch, "field degree must lie in [2,16], got " + std::to_string(degree));
  }
  if (poly_degree(poly) != degree || (poly & 1U) == 0) {
    fail(Errc::DegreeMismatch, "polynomial must have degree " + std::to_string(degree) +
                                   " and constant term 1");
  }
  if (!is_irreducible(poly)) fail(Errc::ReduciblePolynomial, "defining polynomial is reducible");

  const std::uint32_t q1 = order() - 1;
  x_primitive_ = multiplicative_order(2) == q1;
  generator_ = 2;
  if (!x_primitive_) {
    for (std::uint32_t g = 3; g < order(); ++g) {
      if (multiplicative_order(g) == q1) {
        generator_ = g;
        break;
      }
    }
  }
  log_.assign(order(), 0);
  antilog_.assign(q1, 0);
  std::uint32_t e = 1;
  for (std::uint32_t k = 0; k < q1; ++k) {
    antilog_[k] = e;
    log_[e] = k;
    e = mul_slow(e, generator_);
  }
}

std::uint32_t Field::mul_slow(std::uint32_t a, std::uint32_t b) const noexcept {
  std::uint32_t r = 0;
  const std::uint32_t top = order();
  while (b != 0) {
    if (b & 1U) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= poly_;
  }
  return r;
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const noexcept {
  if (a == 0 || b == 0) return 0;
  if (antilog_.empty()) return mul_slow(a, b);
  const std::uint32_t k = log_[a] + log_[b];
  const std::uint32_t q1 = order() - 1;
  return antilog_[k >= q1 ? k - q1 : k];
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t r = 1;
  while (e != 0) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  require(a != 0, Errc::InvalidArgument, "zero has no inverse");
  return pow(a, order() - 2);
}

std::uint32_t Field::log(std::uint32_t e) const {
  require(e != 0 && e < order(), Errc::InvalidArgument, "log of zero or out-of-range element");
  return log_[e];
}

std::uint32_t Field::multiplicative_order(std::uint32_t a) const {
  require(a != 0 && a < order(), Errc::InvalidArgument, "order of zero element");
  auto pow_slow = [this](std::uint32_t base, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e != 0) {
      if (e & 1U) r = mul_slow(r, base);
      base = mul_slow(base, base);
      e >>= 1;
    }
    return r;
  };
  std::uint32_t ord = order() - 1;
  std::uint32_t rest = ord;
  for (std::uint32_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    while (ord % p == 0 && pow_slow(a, ord / p) == 1) ord /= p;
  }
  return ord;
}

VectorialFunc univariate_to_table(const Field& field, std::span<const UnivariateTerm> terms) {
  const std::uint32_t q = field.order();
  struct Prepared {
    std::uint32_t coeff;
    std::uint64_t exponent;
  };
  std::vector<Prepared> prepared;
  for (const auto& t : terms) {
    if (t.exponent > q - 1) {
      fail(Errc::ExponentOutOfRange, "exponent " + std::to_string(t.exponent) + " exceeds 2^n-1");
    }
    if (!t.coeff_power) continue;
    prepared.push_back({field.pow(2, *t.coeff_power), t.exponent});
  }
  std::vector<std::uint32_t> table(q, 0);
  for (std::uint32_t x = 0; x < q; ++x) {
    std::uint32_t acc = 0;
    for (const auto& p : prepared) {
      const std::uint32_t power = p.exponent == 0 ? 1 : field.pow(x, p.exponent);
      acc ^= field.mul(p.coeff, power);
    }
    table[x] = acc;
  }
  return VectorialFunc(field.degree(), field.degree(), std::move(table));
}

}  // namespace flatlab
