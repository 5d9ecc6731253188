#pragma once

// Brute-force reference implementations. They only read truth tables and
// share no code with the library beyond VectorialFunc accessors.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <flatlab/func.hpp>

namespace oracle {

using flatlab::VectorialFunc;
using Block = std::vector<std::uint32_t>;

inline unsigned dot(std::uint64_t a, std::uint64_t b) { return __builtin_popcountll(a & b) & 1U; }

/// Shift-and-add product in GF(2)[x] / poly.
inline std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, std::uint32_t poly, unsigned n) {
  std::uint32_t r = 0;
  while (b) {
    if (b & 1U) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> n & 1U) a ^= poly;
  }
  return r;
}

inline std::uint32_t gf_pow(std::uint32_t a, std::uint64_t e, std::uint32_t poly, unsigned n) {
  std::uint32_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = gf_mul(r, a, poly, n);
  return r;
}

/// Terms (coefficient power of x or nullopt for zero, exponent).
inline std::vector<std::uint32_t> univariate(std::uint32_t poly, unsigned n,
                                             const std::vector<std::pair<std::optional<unsigned>, unsigned>>& terms) {
  std::vector<std::uint32_t> table(1U << n);
  for (std::uint32_t z = 0; z < table.size(); ++z) {
    std::uint32_t y = 0;
    for (const auto& [c, e] : terms) {
      if (!c) continue;
      y ^= gf_mul(gf_pow(2, *c, poly, n), gf_pow(z, e, poly, n), poly, n);
    }
    table[z] = y;
  }
  return table;
}

inline std::int64_t walsh(const VectorialFunc& f, std::uint32_t a, std::uint32_t b) {
  std::int64_t s = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x) s += (dot(b, f(x)) ^ dot(a, x)) ? -1 : 1;
  return s;
}

inline std::map<std::int64_t, std::uint64_t> walsh_multiset(const VectorialFunc& f, bool include_b0) {
  std::map<std::int64_t, std::uint64_t> ms;
  for (std::uint32_t b = include_b0 ? 0 : 1; b < (1U << f.m()); ++b) {
    for (std::uint32_t a = 0; a < f.size(); ++a) ++ms[walsh(f, a, b)];
  }
  return ms;
}

inline bool is_bent(const VectorialFunc& f) {
  if (f.n() % 2) return false;
  const std::int64_t amp = std::int64_t{1} << (f.n() / 2);
  for (std::uint32_t b = 1; b < (1U << f.m()); ++b) {
    for (std::uint32_t a = 0; a < f.size(); ++a) {
      const auto w = walsh(f, a, b);
      if (w != amp && w != -amp) return false;
    }
  }
  return true;
}

/// Amplitude exponent s of component b, or nullopt.
inline std::optional<unsigned> plateau(const VectorialFunc& f, std::uint32_t b) {
  std::set<std::int64_t> mags;
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    const auto w = walsh(f, a, b);
    if (w) mags.insert(w < 0 ? -w : w);
  }
  if (mags.size() != 1) return std::nullopt;
  const std::int64_t amp = *mags.begin();
  for (unsigned s = 0; s <= f.n(); ++s) {
    if ((f.n() + s) % 2 == 0 && amp == (std::int64_t{1} << ((f.n() + s) / 2))) return s;
  }
  return std::nullopt;
}

inline std::uint64_t delta(const VectorialFunc& f, std::uint32_t a, std::uint32_t b) {
  std::uint64_t c = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x) c += (f(x ^ a) ^ f(x)) == b;
  return c;
}

inline std::uint64_t second_order(const VectorialFunc& f, std::uint32_t v, std::uint32_t x) {
  std::uint64_t c = 0;
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    for (std::uint32_t b = 0; b < f.size(); ++b) c += (f(x) ^ f(x ^ a) ^ f(x ^ b) ^ f(x ^ a ^ b)) == v;
  }
  return c;
}

/// Every XOR-zero 4-subset, keyed by the XOR of its F-values (0 = vanishing).
inline std::map<std::uint32_t, std::set<Block>> flats(const VectorialFunc& f) {
  std::map<std::uint32_t, std::set<Block>> out;
  const std::uint32_t q = f.size();
  for (std::uint32_t x1 = 0; x1 < q; ++x1) {
    for (std::uint32_t x2 = x1 + 1; x2 < q; ++x2) {
      for (std::uint32_t x3 = x2 + 1; x3 < q; ++x3) {
        const std::uint32_t x4 = x1 ^ x2 ^ x3;
        if (x4 <= x3) continue;
        out[f(x1) ^ f(x2) ^ f(x3) ^ f(x4)].insert({x1, x2, x3, x4});
      }
    }
  }
  return out;
}

/// lambda if every t-subset of [0,v) lies in the same number of blocks (t <= 2).
inline std::optional<std::uint64_t> design_lambda(const std::set<Block>& blocks, std::uint32_t v, unsigned t) {
  std::optional<std::uint64_t> lambda;
  auto check = [&](std::uint64_t c) {
    if (!lambda) lambda = c;
    return *lambda == c;
  };
  auto has = [](const Block& b, std::uint32_t p) {
    for (auto x : b) {
      if (x == p) return true;
    }
    return false;
  };
  for (std::uint32_t p = 0; p < v; ++p) {
    if (t == 1) {
      std::uint64_t c = 0;
      for (const auto& b : blocks) c += has(b, p);
      if (!check(c)) return std::nullopt;
      continue;
    }
    for (std::uint32_t q = p + 1; q < v; ++q) {
      std::uint64_t c = 0;
      for (const auto& b : blocks) c += has(b, p) && has(b, q);
      if (!check(c)) return std::nullopt;
    }
  }
  return lambda.value_or(0);
}

/// Codewords c0 + <u,x> + <v,F(x)> as bit vectors, deduplicated.
inline std::set<std::vector<bool>> codewords(const VectorialFunc& f) {
  std::set<std::vector<bool>> out;
  for (unsigned c0 = 0; c0 < 2; ++c0) {
    for (std::uint32_t u = 0; u < f.size(); ++u) {
      for (std::uint32_t v = 0; v < (1U << f.m()); ++v) {
        std::vector<bool> w(f.size());
        for (std::uint32_t x = 0; x < f.size(); ++x) w[x] = c0 ^ dot(u, x) ^ dot(v, f(x));
        out.insert(std::move(w));
      }
    }
  }
  return out;
}

inline std::map<std::uint64_t, std::uint64_t> weight_enumerator(const VectorialFunc& f) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& w : codewords(f)) {
    std::uint64_t wt = 0;
    for (bool b : w) wt += b;
    ++out[wt];
  }
  return out;
}

inline std::set<Block> supports(const VectorialFunc& f, std::uint64_t weight) {
  std::set<Block> out;
  for (const auto& w : codewords(f)) {
    Block b;
    for (std::uint32_t x = 0; x < w.size(); ++x) {
      if (w[x]) b.push_back(x);
    }
    if (b.size() == weight) out.insert(b);
  }
  return out;
}

}  // namespace oracle
