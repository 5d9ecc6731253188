#include "flatlab/incidence.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "flatlab/error.hpp"

namespace flatlab {
namespace {

bool block_less(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

IncidenceStructure::IncidenceStructure(std::uint32_t points, unsigned block_size)
    : points_(points), k_(block_size) {
  require(block_size >= 1 && block_size <= points, Errc::InvalidArgument,
          "block size must lie in [1, v]");
}

IncidenceStructure::IncidenceStructure(std::uint32_t points, unsigned block_size,
                                       std::vector<std::uint32_t> flat_blocks)
    : points_(points), k_(block_size), flat_(std::move(flat_blocks)) {
  require(block_size >= 1 && block_size <= points, Errc::InvalidArgument,
          "block size must lie in [1, v]");
  require(flat_.size() % k_ == 0, Errc::InvalidArgument, "flat block list not a multiple of k");
  normalize();
}

IncidenceStructure IncidenceStructure::from_blocks(
    std::uint32_t points, unsigned block_size, const std::vector<std::vector<std::uint32_t>>& blocks) {
  std::vector<std::uint32_t> flat;
  flat.reserve(blocks.size() * block_size);
  for (const auto& b : blocks) {
    require(b.size() == block_size, Errc::InvalidArgument, "block of wrong size");
    flat.insert(flat.end(), b.begin(), b.end());
  }
  return IncidenceStructure(points, block_size, std::move(flat));
}

void IncidenceStructure::normalize() {
  const std::size_t count = block_count();
  for (std::size_t i = 0; i < count; ++i) {
    auto first = flat_.begin() + static_cast<std::ptrdiff_t>(i * k_);
    std::sort(first, first + k_);
    for (unsigned j = 0; j < k_; ++j) {
      require(first[j] < points_, Errc::InvalidArgument, "block point out of range");
      if (j > 0) require(first[j] != first[j - 1], Errc::InvalidArgument, "repeated point in block");
    }
  }
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  const bool already_sorted = [&] {
    for (std::size_t i = 1; i < count; ++i) {
      if (!block_less(block(i - 1), block(i))) return false;
    }
    return true;
  }();
  if (already_sorted) return;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return block_less(block(a), block(b)); });
  std::vector<std::uint32_t> out;
  out.reserve(flat_.size());
  for (std::size_t idx = 0; idx < count; ++idx) {
    auto cur = block(order[idx]);
    if (idx > 0 && std::equal(cur.begin(), cur.end(), out.end() - k_)) continue;
    out.insert(out.end(), cur.begin(), cur.end());
  }
  flat_ = std::move(out);
}

bool IncidenceStructure::contains(std::span<const std::uint32_t> sorted_block) const {
  if (sorted_block.size() != k_) return false;
  std::size_t lo = 0;
  std::size_t hi = block_count();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (block_less(block(mid), sorted_block)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo == block_count()) return false;
  auto b = block(lo);
  return std::equal(b.begin(), b.end(), sorted_block.begin());
}

std::vector<std::uint64_t> IncidenceStructure::point_degrees() const {
  std::vector<std::uint64_t> deg(points_, 0);
  for (auto p : flat_) ++deg[p];
  return deg;
}

IncidenceStructure IncidenceStructure::relabeled(std::span<const std::uint32_t> perm) const {
  require(perm.size() == points_, Errc::InvalidArgument, "relabeling size mismatch");
  std::vector<std::uint32_t> flat(flat_.size());
  for (std::size_t i = 0; i < flat_.size(); ++i) flat[i] = perm[flat_[i]];
  return IncidenceStructure(points_, k_, std::move(flat));
}

IncidenceStructure IncidenceStructure::minus(const IncidenceStructure& other) const {
  require(points_ == other.points_ && k_ == other.k_, Errc::MismatchedPoints,
          "set difference of structures with different (v,k)");
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < block_count(); ++i) {
    if (!other.contains(block(i))) out.insert(out.end(), block(i).begin(), block(i).end());
  }
  return IncidenceStructure(Normalized{}, points_, k_, std::move(out));
}

IncidenceStructure IncidenceStructure::intersect(const IncidenceStructure& other) const {
  require(points_ == other.points_ && k_ == other.k_, Errc::MismatchedPoints,
          "intersection of structures with different (v,k)");
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < block_count(); ++i) {
    if (other.contains(block(i))) out.insert(out.end(), block(i).begin(), block(i).end());
  }
  return IncidenceStructure(Normalized{}, points_, k_, std::move(out));
}

}  // namespace flatlab
