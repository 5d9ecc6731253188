#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "flatlab/func.hpp"
#include "flatlab/incidence.hpp"

namespace flatlab {

enum class FlatScope {
  All,            // vf and every nf[v]; n <= kMaxAllFlatsDim
  VanishingOnly,  // vf only; n <= kMaxVanishingFlatsDim
};

inline constexpr unsigned kMaxAllFlatsDim = 9;
inline constexpr unsigned kMaxVanishingFlatsDim = 14;

struct FlatFamily {
  unsigned n = 0;
  unsigned m = 0;
  FlatScope scope = FlatScope::All;
  IncidenceStructure vf;
  /// Only nonempty v are present.
  std::map<std::uint32_t, IncidenceStructure> nf;

  /// nf[v], or the empty structure on 2^n points when absent.
  IncidenceStructure nonvanishing(std::uint32_t v) const;
  std::uint64_t total_blocks() const;
};

/// Pair bucketing by (x1+x2, F(x1)+F(x2)). Throws DimensionTooLarge past the
/// scope's dimension cap.
FlatFamily enumerate_flats(const VectorialFunc& f, FlatScope scope = FlatScope::All);

IncidenceStructure vanishing_flats(const VectorialFunc& f);

/// All XOR-zero 4-subsets of F2^n: the 3-(2^n,4,1) design.
IncidenceStructure sqs(unsigned n);
std::uint64_t sqs_block_count(unsigned n);

/// Throw BadParameters unless n is even and 1 <= m <= n/2.
std::uint64_t vf_count_bent(unsigned n, unsigned m);
std::uint64_t nf_count_bent(unsigned n, unsigned m);
/// profile[b-1] = s_b for every nonzero b. Throws BadParameters on a profile
/// of the wrong size, an impossible exponent, or a non-integral count.
std::uint64_t vf_count_plateaued(unsigned n, unsigned m, const std::vector<unsigned>& profile);

/// VF of the first-s-coordinate projection minus VF_F. Throws BadSplit.
IncidenceStructure derived_flats(const VectorialFunc& f, unsigned s);

struct FlatSummary {
  std::uint64_t blocks = 0;
  /// (point degree, number of points with that degree), ascending.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> degrees;

  /// The common degree when every point has the same degree.
  std::optional<std::uint64_t> regular_degree() const;
  auto operator<=>(const FlatSummary&) const = default;
};

FlatSummary summarize(const IncidenceStructure& s);

struct EaFingerprint {
  FlatSummary vf;
  /// One entry per nonzero v, sorted.
  std::vector<FlatSummary> nf;

  bool operator==(const EaFingerprint&) const = default;
};

/// Requires scope All.
EaFingerprint ea_fingerprint(const FlatFamily& family);
EaFingerprint ea_fingerprint(const VectorialFunc& f);

}  // namespace flatlab
