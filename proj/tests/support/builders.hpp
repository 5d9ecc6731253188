#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <flatlab/func.hpp>

#include "oracles.hpp"

namespace builders {

/// Maiorana-McFarland f(x, y) = <x, pi(y)> + g(y) on F2^h x F2^h, z = x | y << h.
inline flatlab::VectorialFunc mm(unsigned h, const std::vector<std::uint32_t>& pi,
                                 const std::vector<std::uint32_t>& g) {
  std::vector<std::uint32_t> t(1U << (2 * h));
  const std::uint32_t mask = (1U << h) - 1;
  for (std::uint32_t z = 0; z < t.size(); ++z) {
    const std::uint32_t x = z & mask;
    const std::uint32_t y = z >> h;
    t[z] = oracle::dot(x, pi[y]) ^ g[y];
  }
  return flatlab::VectorialFunc(2 * h, 1, std::move(t));
}

inline flatlab::VectorialFunc random_mm(unsigned h, std::mt19937_64& rng) {
  std::vector<std::uint32_t> pi(1U << h);
  std::iota(pi.begin(), pi.end(), 0U);
  std::shuffle(pi.begin(), pi.end(), rng);
  std::vector<std::uint32_t> g(1U << h);
  for (auto& v : g) v = rng() & 1U;
  return mm(h, pi, g);
}

/// (2h, h)-bent F(x, y) = x * y in GF(2^h) given by `poly`.
inline flatlab::VectorialFunc field_product(unsigned h, std::uint32_t poly) {
  std::vector<std::uint32_t> t(1U << (2 * h));
  const std::uint32_t mask = (1U << h) - 1;
  for (std::uint32_t z = 0; z < t.size(); ++z) t[z] = oracle::gf_mul(z & mask, z >> h, poly, h);
  return flatlab::VectorialFunc(2 * h, h, std::move(t));
}

/// First m coordinates of F.
inline flatlab::VectorialFunc truncate(const flatlab::VectorialFunc& f, unsigned m) {
  std::vector<std::uint32_t> t(f.table().begin(), f.table().end());
  for (auto& v : t) v &= (1U << m) - 1;
  return flatlab::VectorialFunc(f.n(), m, std::move(t));
}

}  // namespace builders
