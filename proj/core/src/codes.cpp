#include "flatlab/codes.hpp"

#include <algorithm>

#include "flatlab/designs.hpp"
#include "flatlab/error.hpp"
#include "flatlab/flats.hpp"
#include "flatlab/parallel.hpp"
#include "flatlab/spectra.hpp"

namespace flatlab {
namespace {

unsigned rank_of(std::vector<std::vector<std::uint64_t>> rows) {
  unsigned rank = 0;
  const std::size_t words = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < words * 64 && rank < rows.size(); ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r][w] & bit)) {
        for (std::size_t k = 0; k < words; ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

void require_enumerable(const CodeView& code) {
  if (code.n() + code.m() + 1 > kMaxCodeLog) {
    fail(Errc::TooLarge, "codeword enumeration needs n + m + 1 <= " + std::to_string(kMaxCodeLog));
  }
}

std::uint64_t weight_of(const WalshTable& w, unsigned c0, std::uint32_t u, std::uint32_t v) {
  const std::int64_t chi = w.at(u, v);
  const std::int64_t half = std::int64_t{1} << (w.n() - 1);
  return static_cast<std::uint64_t>(c0 ? half + chi / 2 : half - chi / 2);
}

}  // namespace

CodeView::CodeView(VectorialFunc f) : f_(std::move(f)) {
  const std::size_t words = (std::size_t{f_.size()} + 63) / 64;
  auto row_of = [&](auto bit) {
    std::vector<std::uint64_t> row(words);
    for (std::uint32_t x = 0; x < f_.size(); ++x) {
      if (bit(x)) row[x / 64] |= std::uint64_t{1} << (x % 64);
    }
    return row;
  };
  rows_.push_back(row_of([](std::uint32_t) { return true; }));
  for (unsigned i = 0; i < f_.n(); ++i) rows_.push_back(row_of([i](std::uint32_t x) { return (x >> i) & 1U; }));
  for (unsigned i = 0; i < f_.m(); ++i) {
    rows_.push_back(row_of([&, i](std::uint32_t x) { return (f_(x) >> i) & 1U; }));
  }
  rank_ = rank_of(rows_);
}

unsigned CodeView::codeword_bit(unsigned c0, std::uint32_t u, std::uint32_t v, std::uint32_t x) const {
  return (c0 & 1U) ^ dot(u, x) ^ dot(v, f_(x));
}

WeightEnumerator weight_enumerator(const CodeView& code) {
  require_enumerable(code);
  const WalshTable w(code.function());
  const std::uint32_t us = std::uint32_t{1} << code.n();
  const std::uint32_t vs = std::uint32_t{1} << code.m();
  std::vector<WeightEnumerator> partial(worker_count());
  parallel_for(0, vs, [&](std::uint64_t lo, std::uint64_t hi, unsigned worker) {
    auto& out = partial[worker];
    for (std::uint64_t v = lo; v < hi; ++v) {
      for (std::uint32_t u = 0; u < us; ++u) {
        for (unsigned c0 = 0; c0 < 2; ++c0) ++out[weight_of(w, c0, u, static_cast<std::uint32_t>(v))];
      }
    }
  });
  WeightEnumerator total;
  for (const auto& p : partial) {
    for (const auto& [wt, count] : p) total[wt] += count;
  }
  // Each codeword appears 2^(n+m+1-rank) times when the generators are dependent.
  const unsigned extra = code.n() + code.m() + 1 - code.dimension();
  if (extra) {
    for (auto& [wt, count] : total) count >>= extra;
  }
  return total;
}

std::uint64_t min_distance(const CodeView& code) {
  for (const auto& [wt, count] : weight_enumerator(code)) {
    if (wt > 0 && count > 0) return wt;
  }
  return 0;
}

IncidenceStructure dual_weight_six(const VectorialFunc& f) {
  if (f.n() > kMaxDualSixDim) {
    fail(Errc::TooLarge, "weight-6 dual search needs n <= " + std::to_string(kMaxDualSixDim));
  }
  const std::uint32_t size = f.size();
  const auto table = f.table();
  // The sixth point is x1 + .. + x5 and must exceed x5, so each set is found once.
  const std::uint64_t pair_count = std::uint64_t{size} * size;
  std::vector<std::vector<std::uint32_t>> partial(worker_count());
  parallel_for(0, pair_count, [&](std::uint64_t lo, std::uint64_t hi, unsigned worker) {
    auto& out = partial[worker];
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      const auto x1 = static_cast<std::uint32_t>(idx / size);
      const auto x2 = static_cast<std::uint32_t>(idx % size);
      if (x2 <= x1) continue;
      const std::uint32_t s2 = x1 ^ x2;
      const std::uint32_t f2 = table[x1] ^ table[x2];
      for (std::uint32_t x3 = x2 + 1; x3 < size; ++x3) {
        const std::uint32_t s3 = s2 ^ x3;
        const std::uint32_t f3 = f2 ^ table[x3];
        for (std::uint32_t x4 = x3 + 1; x4 < size; ++x4) {
          const std::uint32_t s4 = s3 ^ x4;
          const std::uint32_t f4 = f3 ^ table[x4];
          for (std::uint32_t x5 = x4 + 1; x5 < size; ++x5) {
            const std::uint32_t x6 = s4 ^ x5;
            if (x6 <= x5) continue;
            if ((f4 ^ table[x5] ^ table[x6]) != 0) continue;
            out.insert(out.end(), {x1, x2, x3, x4, x5, x6});
          }
        }
      }
    }
  });
  std::vector<std::uint32_t> flat;
  for (auto& p : partial) flat.insert(flat.end(), p.begin(), p.end());
  return IncidenceStructure(size, 6, std::move(flat));
}

DualDistance dual_min_distance(const CodeView& code) {
  if (!vanishing_flats(code.function()).empty()) return {4, false};
  if (!dual_weight_six(code.function()).empty()) return {6, false};
  return {8, true};
}

IncidenceStructure support_design(const CodeView& code, std::uint64_t w, CodeSide side) {
  const auto& f = code.function();
  if (side == CodeSide::Dual) {
    if (w == 4) return vanishing_flats(f);
    if (w == 6) return dual_weight_six(f);
    fail(Errc::UnsupportedDualWeight, "dual support designs exist for weights 4 and 6 only");
  }
  require_enumerable(code);
  require(w <= code.length(), Errc::InvalidArgument, "weight exceeds the code length");
  const WalshTable wt(f);
  const std::uint32_t us = std::uint32_t{1} << code.n();
  const std::uint32_t vs = std::uint32_t{1} << code.m();
  std::vector<std::vector<std::uint32_t>> partial(worker_count());
  parallel_for(0, vs, [&](std::uint64_t lo, std::uint64_t hi, unsigned worker) {
    auto& out = partial[worker];
    for (std::uint64_t v64 = lo; v64 < hi; ++v64) {
      const auto v = static_cast<std::uint32_t>(v64);
      for (std::uint32_t u = 0; u < us; ++u) {
        for (unsigned c0 = 0; c0 < 2; ++c0) {
          if (weight_of(wt, c0, u, v) != w) continue;
          for (std::uint32_t x = 0; x < f.size(); ++x) {
            if (code.codeword_bit(c0, u, v, x)) out.push_back(x);
          }
        }
      }
    }
  });
  std::vector<std::uint32_t> flat;
  for (auto& p : partial) flat.insert(flat.end(), p.begin(), p.end());
  return IncidenceStructure(f.size(), static_cast<unsigned>(w), std::move(flat));
}

AmOriginalVerdict am_original_check(const CodeView& code, unsigned t) {
  AmOriginalVerdict r;
  r.t = t;
  const auto enumerator = weight_enumerator(code);
  r.d = min_distance(code);
  r.d_dual = dual_min_distance(code);
  const std::uint64_t v = code.length();
  for (const auto& [wt, count] : enumerator) {
    if (wt >= 1 && wt + t <= v && count > 0) r.weights_in_range.push_back(wt);
  }
  r.allowed = static_cast<std::int64_t>(r.d_dual.value) - static_cast<std::int64_t>(t);
  r.t_below_distances = t < std::min(r.d, r.d_dual.value);
  r.holds = r.t_below_distances &&
            static_cast<std::int64_t>(r.weights_in_range.size()) <= r.allowed;
  return r;
}

AmExtendedVerdict am_extended_check(const CodeView& code, unsigned t,
                                    const std::vector<std::uint64_t>& exceptional) {
  AmExtendedVerdict r;
  r.t = t;
  r.exceptional = exceptional;
  std::sort(r.exceptional.begin(), r.exceptional.end());
  r.exceptional.erase(std::unique(r.exceptional.begin(), r.exceptional.end()), r.exceptional.end());
  const std::uint64_t v = code.length();
  const std::uint64_t d = min_distance(code);
  const DualDistance dd = dual_min_distance(code);
  r.t_below_distances = t < std::min(d, dd.value);
  r.exceptional_in_range = std::all_of(r.exceptional.begin(), r.exceptional.end(),
                                       [&](std::uint64_t l) { return l >= d && l + t <= v; });
  require(t >= 1, Errc::InvalidArgument, "t must be at least 1");
  const std::uint64_t dual_top = r.exceptional.size() + t - 1;
  // Dual words have even weight (1 is in C), so weight 7 never occurs.
  if (dual_top >= 8) {
    fail(Errc::DualWeightUnverifiable,
         "dual weights up to " + std::to_string(dual_top) + " would be needed; enumeration stops at 6");
  }
  bool ok = r.t_below_distances && r.exceptional_in_range;

  const auto enumerator = weight_enumerator(code);
  for (const auto& [l, count] : enumerator) {
    if (l < d || l + t > v || count == 0) continue;
    if (std::binary_search(r.exceptional.begin(), r.exceptional.end(), l)) continue;
    const auto lambda = is_t_design(support_design(code, l, CodeSide::Primal), t);
    r.primal.emplace_back(l, lambda);
    if (!lambda) ok = false;
  }
  // Weight 2 is impossible; 4 and 6 are enumerated.
  for (std::uint64_t l = 4; l <= dual_top; l += 2) {
    const auto s = support_design(code, l, CodeSide::Dual);
    if (s.empty()) continue;
    const auto lambda = is_t_design(s, t);
    r.dual.emplace_back(l, lambda);
    if (!lambda) ok = false;
  }
  r.holds = ok;
  return r;
}

}  // namespace flatlab
