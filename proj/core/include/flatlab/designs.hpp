#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "flatlab/func.hpp"
#include "flatlab/incidence.hpp"

namespace flatlab {

/// Largest point count for pair coverage (t = 2) and triple coverage (t = 3).
inline constexpr std::uint32_t kMaxPairCoveragePoints = 1024;
inline constexpr std::uint32_t kMaxTripleCoveragePoints = 512;

/// lambda when every t-subset lies in the same number of blocks. The empty
/// structure is a t-design with lambda = 0. Throws InvalidArgument unless
/// 1 <= t <= k, TooLarge when t > 3 or the point count exceeds the cap.
std::optional<std::uint64_t> is_t_design(const IncidenceStructure& s, unsigned t);

struct DesignReport {
  std::uint32_t v = 0;
  unsigned k = 0;
  std::uint64_t b = 0;
  /// Largest verified t (0 when not even a 1-design) and its lambda.
  unsigned t = 0;
  std::optional<std::uint64_t> lambda;
  /// Replication number when the structure is a 1-design.
  std::optional<std::uint64_t> r;
  /// Index t-1: lambda_t, or nullopt when not a t-design.
  std::vector<std::optional<std::uint64_t>> verdicts;
  /// t values skipped because coverage counting was over the cap.
  std::vector<unsigned> unchecked;

  std::optional<std::uint64_t> lambda_at(unsigned t_) const {
    return t_ >= 1 && t_ <= verdicts.size() ? verdicts[t_ - 1] : std::nullopt;
  }
  bool is_design(unsigned t_, std::uint64_t lambda_) const { return lambda_at(t_) == lambda_; }
};

/// Checks t = 1, 2, 3 (bounded by k and max_t), stopping at the first failure.
DesignReport design_report(const IncidenceStructure& s, unsigned max_t = 3);

/// Throws OverlappingBlocks on a shared block, MismatchedPoints on (v,k) mismatch.
IncidenceStructure union_disjoint(const IncidenceStructure& a, const IncidenceStructure& b);
/// Parts pairwise block-disjoint and their union equals `whole`.
bool verify_partition(const IncidenceStructure& whole, const std::vector<IncidenceStructure>& parts);

struct ExtensionLevel {
  unsigned m = 0;  // output dimension of the level below
  IncidenceStructure d;
  std::uint64_t lambda = 0;
  std::uint64_t expected_blocks = 0;
};

struct ExtensionPartitionReport {
  unsigned n = 0;
  unsigned s = 0;
  std::vector<ExtensionLevel> levels;
};

/// `chain[i]` adds one coordinate to the previous level (chain[-1] = f). Checks
/// VF(level i-1) = VF(level i) + D_i with D_i a 2-(2^n,4,2^(n-s-1-i)) design of
/// (2^(3n-s-3-i) - 2^(2n-s-3-i))/3 blocks. Throws NotBentInChain,
/// PartitionFails, or InvalidArgument when a level does not extend the previous one.
ExtensionPartitionReport verify_extension_partition(const VectorialFunc& f,
                                                    const std::vector<VectorialFunc>& chain);

/// Blocks supp(f) + g for g in F2^n. Throws EmptySupport.
IncidenceStructure translation_design(const VectorialFunc& f);
/// Supports of f + l over affine l with wt(f + l) = wt(f).
IncidenceStructure addition_design(const VectorialFunc& f);
/// Supports of rows dual(x) + f(y) + <x,y> + dual(0). Throws NotBent.
IncidenceStructure addition_design_via_dual(const VectorialFunc& f);

struct RdsVerdict {
  bool holds = false;
  bool forbidden_subgroup_avoided = false;
  /// Parameters (2^n, 2^m, 2^n, lambda); lambda = 2^(n-m) when m <= n.
  std::uint64_t group_order = 0;
  std::uint64_t subgroup_order = 0;
  std::uint64_t set_size = 0;
  std::optional<std::uint64_t> lambda;
  std::uint64_t min_count = 0;
  std::uint64_t max_count = 0;
};
/// Difference multiset of the graph of F in F2^n x F2^m.
RdsVerdict rds_check(const VectorialFunc& f);

struct DesignFingerprint {
  std::uint32_t v = 0;
  unsigned k = 0;
  std::uint64_t b = 0;
  std::vector<std::uint64_t> point_degrees;                 // sorted
  std::optional<std::map<std::uint64_t, std::uint64_t>> pair_coverage;   // v <= 256
  std::optional<std::map<std::uint64_t, std::uint64_t>> intersections;   // b <= 25000

  bool operator==(const DesignFingerprint&) const = default;
};
DesignFingerprint fingerprint(const IncidenceStructure& s);

enum class IsoVerdict { Yes, No, Unknown };

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Unknown;
  /// For Yes: point map p -> mapping[p] taking blocks of the first onto the second.
  std::vector<std::uint32_t> mapping;
  std::uint64_t nodes = 0;
};

/// Backtracking point-bijection search. Throws ShapeMismatch when v or k differ.
IsoResult isomorphic(const IncidenceStructure& a, const IncidenceStructure& b,
                     std::uint64_t budget = 1'000'000);

}  // namespace flatlab
