#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flatlab/codes.hpp"
#include "flatlab/func.hpp"

namespace flatlab {

/// A binary word of length <= 64, bit i is coordinate i. For a Boolean
/// function on F2^n (n <= 6), bit x is f(x).
using Word = std::uint64_t;

inline constexpr unsigned kMaxWordLength = 64;
/// Covering-radius sweeps visit 2^length words.
inline constexpr unsigned kDefaultSweepLength = 16;
inline constexpr unsigned kMaxSweepLength = 24;

Word word_of(const VectorialFunc& f);
VectorialFunc function_of(Word w, unsigned n);

class WordSet {
 public:
  WordSet() = default;
  /// Sorts and deduplicates. Throws LengthOverCap above 64,
  /// InvalidArgument for words with bits beyond the length.
  static WordSet explicit_set(unsigned length, std::vector<Word> words);
  /// The code C_F as an implicit set. Throws LengthOverCap for n > 6.
  static WordSet code(const CodeView& code);

  unsigned length() const noexcept { return length_; }
  bool is_implicit() const noexcept { return code_ != nullptr; }
  const CodeView* code_view() const noexcept { return code_.get(); }
  /// Sorted members; materialized on construction.
  const std::vector<Word>& members() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  bool contains(Word w) const;

  /// Same members, regardless of representation.
  bool operator==(const WordSet& other) const {
    return length_ == other.length_ && words_ == other.words_;
  }

 private:
  unsigned length_ = 0;
  std::vector<Word> words_;
  std::shared_ptr<const CodeView> code_;
};

/// First-order Reed-Muller code RM(n,1): all affine functions, n <= 6.
WordSet reed_muller_1(unsigned n);

/// Throws LengthMismatch when the word length differs from the set's.
std::uint64_t distance_to_set(Word w, unsigned length, const WordSet& a);
/// Distance from a Boolean function to C_F using one FWHT per component.
std::uint64_t distance_to_code(const VectorialFunc& g, const VectorialFunc& f);

struct SweepOptions {
  /// Allow lengths up to kMaxSweepLength instead of kDefaultSweepLength.
  bool allow_long = false;
};

/// Multi-source BFS over all 2^length words. Throws LengthOverCap.
std::uint64_t covering_radius(const WordSet& a, SweepOptions opts = {});
WordSet metric_complement(const WordSet& a, SweepOptions opts = {});
bool is_metrically_regular(const WordSet& a, SweepOptions opts = {});

/// f + g bent. Throws OddDimension.
bool bent_sum_check(const VectorialFunc& f, const VectorialFunc& g);
/// Every affine shift l satisfies d(f + l, g) = 2^(n-1) +- 2^(n/2-1).
bool bent_sum_by_distances(const VectorialFunc& f, const VectorialFunc& g);

/// Every component F_v + f (v in F2^m, including v = 0) is bent.
bool extends_with(const VectorialFunc& f, const VectorialFunc& g);

enum class ExtendMode { Exhaustive, CoveringRadius, Family };
enum class ExtendVerdict { Extendable, Lonely, Unknown };

struct ExtendOptions {
  std::uint64_t seed = 1;
  std::uint64_t budget = 10000;
};

struct ExtendResult {
  ExtendVerdict verdict = ExtendVerdict::Unknown;
  ExtendMode mode = ExtendMode::Exhaustive;
  std::optional<VectorialFunc> witness;
  std::uint64_t candidates_tested = 0;
  /// CoveringRadius mode: rho(C_F) and the bent threshold 2^(n-1) - 2^(n/2-1).
  std::optional<std::uint64_t> covering_radius;
  std::uint64_t threshold = 0;
  /// Family mode: largest distance from a tested candidate to C_F.
  std::optional<std::uint64_t> rho_lower_bound;
  /// Set when the verdict follows from m = n/2.
  bool nyberg_bound = false;
};

/// Throws NotBent, UnsupportedDimension (exhaustive and covering radius need
/// n = 4, family needs even n <= 8).
ExtendResult is_extendable(const VectorialFunc& f, ExtendMode mode, const ExtendOptions& opts = {});

struct ComplementStructure {
  std::uint64_t complement_size = 0;
  std::uint64_t code_size = 0;
  std::vector<Word> coset_leaders;  // smallest word of each coset of C_F
  bool cosets_inside_complement = false;
  bool members_extend = false;  // every member g has F_v + g bent for all v
  bool uniquely_extendable() const { return coset_leaders.size() == 1; }
};

/// Throws UnsupportedDimension unless n = 4, NotExtendable when rho(C_F) < 6.
ComplementStructure metric_complement_structure(const VectorialFunc& f);

struct AuAnalysis {
  WordSet au;
  std::uint64_t rho_a = 0;
  std::uint64_t rho_au = 0;
  /// Some w in B \ U has w + U inside B.
  bool condition = false;
  /// {w in B \ U : w + U inside B}.
  WordSet predicted_complement;
  WordSet actual_complement;
  /// condition <=> rho_au == rho_a, and when both hold the complements agree.
  bool theorem_consistent = false;
};

/// AU = {a + lambda u}. Throws ZeroNotInA, UNotInComplement, LengthMismatch.
AuAnalysis au_set(const WordSet& a, const WordSet& u, SweepOptions opts = {});

/// Sorted bent words for n in {2, 4}; computed once per process.
const std::vector<Word>& bent_catalog(unsigned n);
/// Loads and verifies a cache file; regenerates and writes it when missing.
std::vector<Word> load_or_build_bent_catalog(unsigned n, const std::filesystem::path& cache);

struct TokarevaReport {
  unsigned n = 0;
  std::uint64_t checked = 0;
  std::vector<Word> exceptions;
  bool holds() const { return exceptions.empty(); }
};
/// Every f of degree <= n/2 is a sum of two bent functions. n = 4 only.
TokarevaReport tokareva_check(unsigned n);

}  // namespace flatlab
