#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace flatlab {

/// Simple incidence structure on points [0, v) whose blocks are k-subsets.
/// Blocks are kept sorted internally and the block list is strictly sorted
/// lexicographically, so equality is block-set equality.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  IncidenceStructure(std::uint32_t points, unsigned block_size);
  /// `flat_blocks` holds consecutive groups of `block_size` points. Points
  /// inside a block are sorted here, repeated blocks collapse. Throws
  /// InvalidArgument for out-of-range or repeated points within a block.
  IncidenceStructure(std::uint32_t points, unsigned block_size, std::vector<std::uint32_t> flat_blocks);

  static IncidenceStructure from_blocks(std::uint32_t points, unsigned block_size,
                                        const std::vector<std::vector<std::uint32_t>>& blocks);

  std::uint32_t points() const noexcept { return points_; }
  unsigned block_size() const noexcept { return k_; }
  std::size_t block_count() const noexcept { return k_ == 0 ? 0 : flat_.size() / k_; }
  bool empty() const noexcept { return flat_.empty(); }

  std::span<const std::uint32_t> block(std::size_t i) const {
    return {flat_.data() + i * k_, k_};
  }
  std::span<const std::uint32_t> flat() const noexcept { return flat_; }

  /// `sorted_block` must be sorted ascending.
  bool contains(std::span<const std::uint32_t> sorted_block) const;

  /// Number of blocks through each point.
  std::vector<std::uint64_t> point_degrees() const;

  /// Image under the point map p -> perm[p] (perm must be a bijection of [0,v)).
  IncidenceStructure relabeled(std::span<const std::uint32_t> perm) const;

  /// Blocks of *this that are not blocks of other (same v, k).
  IncidenceStructure minus(const IncidenceStructure& other) const;
  IncidenceStructure intersect(const IncidenceStructure& other) const;

  bool operator==(const IncidenceStructure&) const = default;

 private:
  struct Normalized {};
  IncidenceStructure(Normalized, std::uint32_t points, unsigned block_size,
                     std::vector<std::uint32_t> flat_blocks)
      : points_(points), k_(block_size), flat_(std::move(flat_blocks)) {}
  void normalize();

  std::uint32_t points_ = 0;
  unsigned k_ = 0;
  std::vector<std::uint32_t> flat_;
};

}  // namespace flatlab
