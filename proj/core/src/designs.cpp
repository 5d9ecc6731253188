#include "flatlab/designs.hpp"

#include <algorithm>
#include <numeric>

#include "flatlab/error.hpp"
#include "flatlab/flats.hpp"
#include "flatlab/parallel.hpp"
#include "flatlab/spectra.hpp"

namespace flatlab {
namespace {

std::uint64_t choose(std::uint64_t n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::uint32_t> support(const VectorialFunc& f) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (f(x)) out.push_back(x);
  }
  return out;
}

void require_boolean(const VectorialFunc& f) {
  require(f.is_boolean(), Errc::InvalidArgument, "expected a Boolean function");
  if (f.n() > 12) fail(Errc::TooLarge, "design construction supports n <= 12");
}

std::vector<std::uint32_t> pair_matrix(const IncidenceStructure& s) {
  const std::uint32_t v = s.points();
  std::vector<std::uint32_t> mat(std::size_t{v} * v);
  for (std::size_t i = 0; i < s.block_count(); ++i) {
    const auto blk = s.block(i);
    for (std::size_t p = 0; p < blk.size(); ++p) {
      for (std::size_t q = p + 1; q < blk.size(); ++q) {
        ++mat[std::size_t{blk[p]} * v + blk[q]];
        ++mat[std::size_t{blk[q]} * v + blk[p]];
      }
    }
  }
  return mat;
}

}  // namespace

std::optional<std::uint64_t> is_t_design(const IncidenceStructure& s, unsigned t) {
  const unsigned k = s.block_size();
  if (t < 1 || (k > 0 && t > k)) fail(Errc::InvalidArgument, "t must satisfy 1 <= t <= k");
  if (t > 3) fail(Errc::TooLarge, "t-design check supports t <= 3");
  if (s.empty()) return 0;
  const std::uint32_t v = s.points();
  if (t == 2 && v > kMaxPairCoveragePoints) fail(Errc::TooLarge, "pair coverage over the point cap");
  if (t == 3 && v > kMaxTripleCoveragePoints) fail(Errc::TooLarge, "triple coverage over the point cap");

  const std::size_t slots = choose(v, t);
  const std::size_t blocks = s.block_count();
  const bool split = t < 3;
  const unsigned workers = split ? worker_count() : 1;
  std::vector<std::vector<std::uint32_t>> counts(workers);
  auto body = [&](std::uint64_t lo, std::uint64_t hi, unsigned w) {
    auto& c = counts[w];
    c.assign(slots, 0);
    for (std::uint64_t i = lo; i < hi; ++i) {
      const auto blk = s.block(i);
      const std::size_t len = blk.size();
      if (t == 1) {
        for (auto p : blk) ++c[p];
      } else if (t == 2) {
        for (std::size_t b2 = 1; b2 < len; ++b2) {
          const std::uint64_t j = blk[b2];
          const std::uint64_t base = j * (j - 1) / 2;
          for (std::size_t b1 = 0; b1 < b2; ++b1) ++c[base + blk[b1]];
        }
      } else {
        for (std::size_t b3 = 2; b3 < len; ++b3) {
          const std::uint64_t l = blk[b3];
          const std::uint64_t base3 = l * (l - 1) * (l - 2) / 6;
          for (std::size_t b2 = 1; b2 < b3; ++b2) {
            const std::uint64_t j = blk[b2];
            const std::uint64_t base2 = base3 + j * (j - 1) / 2;
            for (std::size_t b1 = 0; b1 < b2; ++b1) ++c[base2 + blk[b1]];
          }
        }
      }
    }
  };
  if (split) parallel_for(0, blocks, body);
  else body(0, blocks, 0);

  auto& total = counts[0];
  for (unsigned w = 1; w < workers; ++w) {
    if (counts[w].empty()) continue;
    for (std::size_t i = 0; i < slots; ++i) total[i] += counts[w][i];
  }
  const std::uint32_t first = total[0];
  for (std::size_t i = 1; i < slots; ++i) {
    if (total[i] != first) return std::nullopt;
  }
  return first;
}

DesignReport design_report(const IncidenceStructure& s, unsigned max_t) {
  DesignReport r;
  r.v = s.points();
  r.k = s.block_size();
  r.b = s.block_count();
  const unsigned top = std::min({max_t, 3U, std::max(r.k, 1U)});
  bool alive = true;
  for (unsigned t = 1; t <= top; ++t) {
    if (!alive) {
      r.verdicts.push_back(std::nullopt);
      continue;
    }
    if ((t == 2 && r.v > kMaxPairCoveragePoints) || (t == 3 && r.v > kMaxTripleCoveragePoints)) {
      for (unsigned u = t; u <= top; ++u) r.unchecked.push_back(u);
      break;
    }
    const auto lambda = is_t_design(s, t);
    r.verdicts.push_back(lambda);
    if (lambda) {
      r.t = t;
      r.lambda = lambda;
      if (t == 1) r.r = lambda;
    } else {
      alive = false;
    }
  }
  return r;
}

IncidenceStructure union_disjoint(const IncidenceStructure& a, const IncidenceStructure& b) {
  if (a.points() != b.points() || a.block_size() != b.block_size()) {
    fail(Errc::MismatchedPoints, "union needs equal point count and block size");
  }
  if (!a.intersect(b).empty()) fail(Errc::OverlappingBlocks, "structures share a block");
  std::vector<std::uint32_t> flat(a.flat().begin(), a.flat().end());
  flat.insert(flat.end(), b.flat().begin(), b.flat().end());
  return IncidenceStructure(a.points(), a.block_size(), std::move(flat));
}

bool verify_partition(const IncidenceStructure& whole, const std::vector<IncidenceStructure>& parts) {
  std::uint64_t total = 0;
  std::vector<std::uint32_t> flat;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (p.points() != whole.points() || p.block_size() != whole.block_size()) {
      fail(Errc::MismatchedPoints, "partition part has a different shape");
    }
    total += p.block_count();
    flat.insert(flat.end(), p.flat().begin(), p.flat().end());
  }
  if (total != whole.block_count()) return false;
  if (whole.empty()) return true;
  const IncidenceStructure merged(whole.points(), whole.block_size(), std::move(flat));
  // Overlaps collapse during normalization, so the count drops below total.
  return merged.block_count() == total && merged == whole;
}

ExtensionPartitionReport verify_extension_partition(const VectorialFunc& f,
                                                    const std::vector<VectorialFunc>& chain) {
  ExtensionPartitionReport report;
  report.n = f.n();
  report.s = f.m();
  if (!is_bent(f)) fail(Errc::NotBentInChain, "base function is not bent");
  const unsigned n = f.n();
  const unsigned s = f.m();
  const VectorialFunc* prev = &f;
  IncidenceStructure prev_vf = vanishing_flats(f);
  for (std::size_t idx = 0; idx < chain.size(); ++idx) {
    const auto& next = chain[idx];
    if (next.n() != n || next.m() != prev->m() + 1 || project(next, prev->m()) != *prev) {
      fail(Errc::InvalidArgument, "chain level does not extend the previous one");
    }
    if (!is_bent(next)) fail(Errc::NotBentInChain, "chain level " + std::to_string(idx + 1) + " is not bent");
    const unsigned i = static_cast<unsigned>(idx + 1);
    IncidenceStructure next_vf = vanishing_flats(next);
    ExtensionLevel level;
    level.m = prev->m();
    level.d = prev_vf.minus(next_vf);
    level.lambda = std::uint64_t{1} << (n - s - 1 - i);
    level.expected_blocks =
        ((std::uint64_t{1} << (3 * n - s - 3 - i)) - (std::uint64_t{1} << (2 * n - s - 3 - i))) / 3;
    if (!verify_partition(prev_vf, {next_vf, level.d})) {
      fail(Errc::PartitionFails, "VF of level " + std::to_string(i) + " is not a sub-structure");
    }
    if (level.d.block_count() != level.expected_blocks) {
      fail(Errc::PartitionFails, "D_" + std::to_string(i) + " has " + std::to_string(level.d.block_count()) +
                                     " blocks, expected " + std::to_string(level.expected_blocks));
    }
    if (is_t_design(level.d, 2) != level.lambda) {
      fail(Errc::PartitionFails, "D_" + std::to_string(i) + " is not a 2-design with the expected lambda");
    }
    report.levels.push_back(std::move(level));
    prev = &next;
    prev_vf = std::move(next_vf);
  }
  return report;
}

IncidenceStructure translation_design(const VectorialFunc& f) {
  require_boolean(f);
  const auto supp = support(f);
  if (supp.empty()) fail(Errc::EmptySupport, "translation design of the zero function");
  std::vector<std::uint32_t> flat;
  flat.reserve(std::size_t{f.size()} * supp.size());
  for (std::uint32_t g = 0; g < f.size(); ++g) {
    for (auto x : supp) flat.push_back(x ^ g);
  }
  return IncidenceStructure(f.size(), static_cast<unsigned>(supp.size()), std::move(flat));
}

IncidenceStructure addition_design(const VectorialFunc& f) {
  require_boolean(f);
  const auto w = walsh_boolean(f);
  const auto wt = support(f).size();
  if (wt == 0) fail(Errc::EmptySupport, "addition design of the zero function");
  std::vector<std::uint32_t> flat;
  // wt(f + <a,x> + c) = (2^n - (-1)^c chi(a)) / 2
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    for (unsigned c = 0; c < 2; ++c) {
      const std::int64_t signed_w = c ? -w[a] : w[a];
      if (signed_w != w[0]) continue;
      for (std::uint32_t x = 0; x < f.size(); ++x) {
        if (f(x) ^ dot(a, x) ^ c) flat.push_back(x);
      }
    }
  }
  return IncidenceStructure(f.size(), static_cast<unsigned>(wt), std::move(flat));
}

IncidenceStructure addition_design_via_dual(const VectorialFunc& f) {
  require_boolean(f);
  const VectorialFunc dual = dual_bent(f);
  std::vector<std::uint32_t> flat;
  unsigned k = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    unsigned row = 0;
    for (std::uint32_t y = 0; y < f.size(); ++y) {
      if (dual(x) ^ f(y) ^ dot(x, y) ^ dual(0)) {
        flat.push_back(y);
        ++row;
      }
    }
    k = row;
  }
  return IncidenceStructure(f.size(), k, std::move(flat));
}

RdsVerdict rds_check(const VectorialFunc& f) {
  RdsVerdict r;
  r.group_order = std::uint64_t{1} << (f.n() + f.m());
  r.subgroup_order = std::uint64_t{1} << f.m();
  r.set_size = f.size();
  if (f.m() <= f.n()) r.lambda = std::uint64_t{1} << (f.n() - f.m());
  // Differences with first coordinate 0 come only from x1 = x2, i.e. (0,0).
  r.forbidden_subgroup_avoided = true;
  const auto ds = differential_spectrum(f);
  if (!ds.multiset.empty()) {
    r.min_count = static_cast<std::uint64_t>(ds.multiset.begin()->first);
    r.max_count = static_cast<std::uint64_t>(ds.multiset.rbegin()->first);
  }
  r.holds = r.forbidden_subgroup_avoided && r.lambda && r.min_count == *r.lambda && r.max_count == *r.lambda;
  return r;
}

DesignFingerprint fingerprint(const IncidenceStructure& s) {
  DesignFingerprint fp;
  fp.v = s.points();
  fp.k = s.block_size();
  fp.b = s.block_count();
  fp.point_degrees = s.point_degrees();
  std::sort(fp.point_degrees.begin(), fp.point_degrees.end());
  if (fp.v <= 256) {
    const auto mat = pair_matrix(s);
    std::map<std::uint64_t, std::uint64_t> hist;
    for (std::uint32_t p = 0; p < fp.v; ++p) {
      for (std::uint32_t q = p + 1; q < fp.v; ++q) ++hist[mat[std::size_t{p} * fp.v + q]];
    }
    fp.pair_coverage = std::move(hist);
  }
  if (fp.b <= 25000) {
    const std::size_t words = (fp.v + 63) / 64;
    std::vector<std::uint64_t> bits(fp.b * words);
    for (std::size_t i = 0; i < fp.b; ++i) {
      for (auto p : s.block(i)) bits[i * words + p / 64] |= std::uint64_t{1} << (p % 64);
    }
    std::vector<std::map<std::uint64_t, std::uint64_t>> partial(worker_count());
    parallel_for(0, fp.b, [&](std::uint64_t lo, std::uint64_t hi, unsigned w) {
      std::vector<std::uint64_t> local(fp.k + 1);
      for (std::uint64_t i = lo; i < hi; ++i) {
        for (std::uint64_t j = i + 1; j < fp.b; ++j) {
          unsigned meet = 0;
          for (std::size_t word = 0; word < words; ++word) {
            meet += static_cast<unsigned>(std::popcount(bits[i * words + word] & bits[j * words + word]));
          }
          ++local[meet];
        }
      }
      for (std::size_t c = 0; c < local.size(); ++c) {
        if (local[c]) partial[w][c] += local[c];
      }
    });
    std::map<std::uint64_t, std::uint64_t> hist;
    for (const auto& p : partial) {
      for (const auto& [size, count] : p) hist[size] += count;
    }
    fp.intersections = std::move(hist);
  }
  return fp;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const IncidenceStructure& a, const IncidenceStructure& b, std::uint64_t budget)
      : a_(a), b_(b), v_(a.points()), budget_(budget) {
    deg_a_ = a.point_degrees();
    deg_b_ = b.point_degrees();
    if (v_ <= 256) {
      pairs_a_ = pair_matrix(a);
      pairs_b_ = pair_matrix(b);
    }
    order_points();
    closing_.resize(v_);
    std::vector<std::uint32_t> pos(v_);
    for (std::uint32_t d = 0; d < v_; ++d) pos[order_[d]] = d;
    for (std::size_t i = 0; i < a.block_count(); ++i) {
      std::uint32_t last = 0;
      for (auto p : a.block(i)) last = std::max(last, pos[p]);
      closing_[last].push_back(i);
    }
    map_.assign(v_, kUnset);
    used_.assign(v_, false);
  }

  IsoResult run() {
    IsoResult r;
    const bool found = extend(0);
    r.nodes = nodes_;
    if (found) {
      r.verdict = IsoVerdict::Yes;
      r.mapping = map_;
    } else {
      r.verdict = exhausted_ ? IsoVerdict::Unknown : IsoVerdict::No;
    }
    return r;
  }

 private:
  static constexpr std::uint32_t kUnset = UINT32_MAX;

  void order_points() {
    // Greedy order: each next point shares the most blocks with those already placed.
    order_.clear();
    std::vector<bool> placed(v_, false);
    std::vector<std::uint64_t> score(v_, 0);
    for (std::uint32_t step = 0; step < v_; ++step) {
      std::uint32_t best = kUnset;
      for (std::uint32_t p = 0; p < v_; ++p) {
        if (placed[p]) continue;
        if (best == kUnset || score[p] > score[best]) best = p;
      }
      placed[best] = true;
      order_.push_back(best);
      if (!pairs_a_.empty()) {
        for (std::uint32_t p = 0; p < v_; ++p) score[p] += pairs_a_[std::size_t{best} * v_ + p];
      }
    }
  }

  bool consistent(std::uint32_t depth, std::uint32_t p, std::uint32_t q) const {
    if (deg_a_[p] != deg_b_[q]) return false;
    if (!pairs_a_.empty()) {
      for (std::uint32_t d = 0; d < depth; ++d) {
        const std::uint32_t pp = order_[d];
        if (pairs_a_[std::size_t{p} * v_ + pp] != pairs_b_[std::size_t{q} * v_ + map_[pp]]) return false;
      }
    }
    std::vector<std::uint32_t> image;
    for (auto bi : closing_[depth]) {
      image.clear();
      for (auto x : a_.block(bi)) image.push_back(x == p ? q : map_[x]);
      std::sort(image.begin(), image.end());
      if (!b_.contains(image)) return false;
    }
    return true;
  }

  bool extend(std::uint32_t depth) {
    if (depth == v_) return true;
    const std::uint32_t p = order_[depth];
    for (std::uint32_t q = 0; q < v_; ++q) {
      if (used_[q]) continue;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      if (!consistent(depth, p, q)) continue;
      map_[p] = q;
      used_[q] = true;
      if (extend(depth + 1)) return true;
      map_[p] = kUnset;
      used_[q] = false;
      if (exhausted_) return false;
    }
    return false;
  }

  const IncidenceStructure& a_;
  const IncidenceStructure& b_;
  std::uint32_t v_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::uint64_t> deg_a_, deg_b_;
  std::vector<std::uint32_t> pairs_a_, pairs_b_;
  std::vector<std::uint32_t> order_;
  std::vector<std::vector<std::size_t>> closing_;
  std::vector<std::uint32_t> map_;
  std::vector<bool> used_;
};

}  // namespace

IsoResult isomorphic(const IncidenceStructure& a, const IncidenceStructure& b, std::uint64_t budget) {
  if (a.points() != b.points() || a.block_size() != b.block_size()) {
    fail(Errc::ShapeMismatch, "isomorphism needs equal point count and block size");
  }
  IsoResult r;
  if (a.block_count() != b.block_count() || fingerprint(a) != fingerprint(b)) {
    r.verdict = IsoVerdict::No;
    return r;
  }
  return IsoSearch(a, b, budget).run();
}

}  // namespace flatlab
