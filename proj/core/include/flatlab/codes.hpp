#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "flatlab/func.hpp"
#include "flatlab/incidence.hpp"

namespace flatlab {

/// Largest n + m + 1 for codeword enumeration, and largest n for the
/// weight-6 dual search.
inline constexpr unsigned kMaxCodeLog = 24;
inline constexpr unsigned kMaxDualSixDim = 7;

/// The code C_F of length 2^n spanned by 1, x_1..x_n and f_1..f_m.
class CodeView {
 public:
  explicit CodeView(VectorialFunc f);

  const VectorialFunc& function() const noexcept { return f_; }
  unsigned n() const noexcept { return f_.n(); }
  unsigned m() const noexcept { return f_.m(); }
  std::uint64_t length() const noexcept { return f_.size(); }
  unsigned dimension() const noexcept { return rank_; }
  /// Generator rows as packed 2^n-bit words: 1, x_1..x_n, f_1..f_m.
  const std::vector<std::vector<std::uint64_t>>& generators() const noexcept { return rows_; }

  /// Value at x of the codeword c0 + <u,x> + <v,F(x)>.
  unsigned codeword_bit(unsigned c0, std::uint32_t u, std::uint32_t v, std::uint32_t x) const;

 private:
  VectorialFunc f_;
  std::vector<std::vector<std::uint64_t>> rows_;
  unsigned rank_ = 0;
};

using WeightEnumerator = std::map<std::uint64_t, std::uint64_t>;

/// Throws TooLarge when n + m + 1 > kMaxCodeLog.
WeightEnumerator weight_enumerator(const CodeView& code);
std::uint64_t min_distance(const CodeView& code);

struct DualDistance {
  std::uint64_t value = 0;
  /// value is only a lower bound (no dual word of weight 4 or 6).
  bool lower_bound = false;
};
/// Throws TooLarge when the weight-6 search is needed and n > kMaxDualSixDim.
DualDistance dual_min_distance(const CodeView& code);

/// Supports of the 6-subsets S with sum of x and sum of F(x) both zero.
IncidenceStructure dual_weight_six(const VectorialFunc& f);

enum class CodeSide { Primal, Dual };

/// Deduplicated supports of the codewords of weight w. Dual side supports
/// w in {4, 6} only (UnsupportedDualWeight otherwise).
IncidenceStructure support_design(const CodeView& code, std::uint64_t w, CodeSide side);

struct AmOriginalVerdict {
  unsigned t = 0;
  std::uint64_t d = 0;
  DualDistance d_dual;
  /// Nonzero weights of C in {1, .., 2^n - t}.
  std::vector<std::uint64_t> weights_in_range;
  std::int64_t allowed = 0;  // d_dual - t
  bool t_below_distances = false;
  bool holds = false;
};
AmOriginalVerdict am_original_check(const CodeView& code, unsigned t);

struct AmExtendedVerdict {
  unsigned t = 0;
  std::vector<std::uint64_t> exceptional;
  bool t_below_distances = false;
  bool exceptional_in_range = false;
  /// Primal weights l in {d..v-t} minus S that carry codewords, with lambda_t if a t-design.
  std::vector<std::pair<std::uint64_t, std::optional<std::uint64_t>>> primal;
  /// Dual weights 1 <= l <= s+t-1 that carry codewords, with lambda_t if a t-design.
  std::vector<std::pair<std::uint64_t, std::optional<std::uint64_t>>> dual;
  bool holds = false;
};
/// Throws DualWeightUnverifiable when a dual weight above 6 would be needed.
AmExtendedVerdict am_extended_check(const CodeView& code, unsigned t,
                                    const std::vector<std::uint64_t>& exceptional);

}  // namespace flatlab
