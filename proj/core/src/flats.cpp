#include "flatlab/flats.hpp"

#include <algorithm>

#include "flatlab/error.hpp"
#include "flatlab/parallel.hpp"

namespace flatlab {
namespace {

struct Pair {
  std::uint32_t key;  // F(x) + F(x + a)
  std::uint32_t x;    // smaller point of the pair
};

struct Partial {
  std::vector<std::uint32_t> vf;
  std::map<std::uint32_t, std::vector<std::uint32_t>> nf;
};

void push_block(std::vector<std::uint32_t>& out, std::uint32_t x, std::uint32_t z, std::uint32_t a) {
  out.push_back(x);
  out.push_back(x ^ a);
  out.push_back(z);
  out.push_back(z ^ a);
}

}  // namespace

IncidenceStructure FlatFamily::nonvanishing(std::uint32_t v) const {
  const auto it = nf.find(v);
  if (it != nf.end()) return it->second;
  return IncidenceStructure(std::uint32_t{1} << n, 4);
}

std::uint64_t FlatFamily::total_blocks() const {
  std::uint64_t total = vf.block_count();
  for (const auto& [v, s] : nf) total += s.block_count();
  return total;
}

FlatFamily enumerate_flats(const VectorialFunc& f, FlatScope scope) {
  const unsigned cap = scope == FlatScope::All ? kMaxAllFlatsDim : kMaxVanishingFlatsDim;
  if (f.n() > cap) {
    fail(Errc::DimensionTooLarge, "flat enumeration supports n <= " + std::to_string(cap));
  }
  const unsigned n = f.n();
  const std::uint32_t size = f.size();
  const auto table = f.table();
  const bool all = scope == FlatScope::All;

  // A block {x, x+a, z, z+a} has three pairings; it is emitted only for the
  // pairing whose difference a is the smallest of the three.
  std::vector<Partial> partial(worker_count());
  parallel_for(1, size, [&](std::uint64_t lo, std::uint64_t hi, unsigned worker) {
    Partial& out = partial[worker];
    std::vector<Pair> pairs;
    pairs.reserve(size / 2);
    for (std::uint64_t a64 = lo; a64 < hi; ++a64) {
      const auto a = static_cast<std::uint32_t>(a64);
      const std::uint32_t top = std::uint32_t{1} << (31 - std::countl_zero(a));
      pairs.clear();
      for (std::uint32_t x = 0; x < size; ++x) {
        if (x & top) continue;
        pairs.push_back({table[x] ^ table[x ^ a], x});
      }
      std::sort(pairs.begin(), pairs.end(),
                [](const Pair& l, const Pair& r) { return l.key != r.key ? l.key < r.key : l.x < r.x; });
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        std::size_t j = i + 1;
        std::size_t end = all ? pairs.size() : j;
        if (!all) {
          while (end < pairs.size() && pairs[end].key == p.key) ++end;
        }
        for (; j < end; ++j) {
          const auto& q = pairs[j];
          const std::uint32_t d = p.x ^ q.x;
          if (!(a < d && a < (d ^ a))) continue;
          const std::uint32_t v = p.key ^ q.key;
          if (v == 0) push_block(out.vf, p.x, q.x, a);
          else push_block(out.nf[v], p.x, q.x, a);
        }
      }
    }
  });

  FlatFamily fam;
  fam.n = n;
  fam.m = f.m();
  fam.scope = scope;
  std::vector<std::uint32_t> vf;
  std::map<std::uint32_t, std::vector<std::uint32_t>> nf;
  for (auto& p : partial) {
    vf.insert(vf.end(), p.vf.begin(), p.vf.end());
    for (auto& [v, blocks] : p.nf) {
      auto& dst = nf[v];
      dst.insert(dst.end(), blocks.begin(), blocks.end());
    }
    p = Partial{};
  }
  fam.vf = IncidenceStructure(size, 4, std::move(vf));
  for (auto& [v, blocks] : nf) fam.nf.emplace(v, IncidenceStructure(size, 4, std::move(blocks)));
  return fam;
}

IncidenceStructure vanishing_flats(const VectorialFunc& f) {
  return enumerate_flats(f, FlatScope::VanishingOnly).vf;
}

std::uint64_t sqs_block_count(unsigned n) {
  const std::uint64_t q = std::uint64_t{1} << n;
  return q * (q - 1) * (q - 2) / 24;
}

IncidenceStructure sqs(unsigned n) {
  if (n < 2 || n > kMaxAllFlatsDim) {
    fail(Errc::DimensionTooLarge, "SQS supports 2 <= n <= " + std::to_string(kMaxAllFlatsDim));
  }
  return enumerate_flats(VectorialFunc::constant(n, 1, 0), FlatScope::VanishingOnly).vf;
}

namespace {

void require_bent_params(unsigned n, unsigned m) {
  if (n % 2 != 0 || m < 1 || 2 * m > n || n > 20) {
    fail(Errc::BadParameters, "bent counts need n even and 1 <= m <= n/2");
  }
}

}  // namespace

std::uint64_t vf_count_bent(unsigned n, unsigned m) {
  require_bent_params(n, m);
  const std::uint64_t lead = (std::uint64_t{1} << (n + m)) - (std::uint64_t{1} << m);
  const std::uint64_t d = std::uint64_t{1} << (n - m);
  const std::uint64_t numer = lead * d * (d - 2);
  if (numer % 24 != 0) fail(Errc::BadParameters, "non-integral vanishing-flat count");
  return numer / 24;
}

std::uint64_t nf_count_bent(unsigned n, unsigned m) {
  require_bent_params(n, m);
  const std::uint64_t lead = (std::uint64_t{1} << (n + m)) - (std::uint64_t{1} << m);
  const std::uint64_t numer = lead * (std::uint64_t{1} << (2 * (n - m)));
  if (numer % 24 != 0) fail(Errc::BadParameters, "non-integral nonvanishing-flat count");
  return numer / 24;
}

std::uint64_t vf_count_plateaued(unsigned n, unsigned m, const std::vector<unsigned>& profile) {
  if (n < 2 || n > 20 || m < 1 || m > 20) fail(Errc::BadParameters, "dimensions out of range");
  if (profile.size() != (std::size_t{1} << m) - 1) {
    fail(Errc::BadParameters, "profile needs one exponent per nonzero b");
  }
  // 3 * 2^(m+3) * |VF| = 2^3n + 2^2n sum_b 2^(s_b) - 3 2^(2n+m) + 2^(n+m+1)
  __int128 sum = 0;
  for (unsigned s : profile) {
    if (s > n || (n + s) % 2 != 0) fail(Errc::BadParameters, "impossible amplitude exponent");
    sum += __int128{1} << s;
  }
  const __int128 numer = (__int128{1} << (3 * n)) + (__int128{1} << (2 * n)) * sum -
                         3 * (__int128{1} << (2 * n + m)) + (__int128{1} << (n + m + 1));
  const __int128 denom = 3 * (__int128{1} << (m + 3));
  if (numer < 0 || numer % denom != 0) fail(Errc::BadParameters, "non-integral vanishing-flat count");
  return static_cast<std::uint64_t>(numer / denom);
}

IncidenceStructure derived_flats(const VectorialFunc& f, unsigned s) {
  const VectorialFunc head = project(f, s);
  return vanishing_flats(head).minus(vanishing_flats(f));
}

std::optional<std::uint64_t> FlatSummary::regular_degree() const {
  if (degrees.size() == 1) return degrees.front().first;
  return std::nullopt;
}

FlatSummary summarize(const IncidenceStructure& s) {
  FlatSummary out;
  out.blocks = s.block_count();
  std::map<std::uint64_t, std::uint64_t> hist;
  for (auto d : s.point_degrees()) ++hist[d];
  out.degrees.assign(hist.begin(), hist.end());
  return out;
}

EaFingerprint ea_fingerprint(const FlatFamily& family) {
  require(family.scope == FlatScope::All, Errc::InvalidArgument, "fingerprint needs all flats");
  EaFingerprint fp;
  fp.vf = summarize(family.vf);
  const FlatSummary empty = summarize(IncidenceStructure(std::uint32_t{1} << family.n, 4));
  for (std::uint32_t v = 1; v < (std::uint32_t{1} << family.m); ++v) {
    const auto it = family.nf.find(v);
    fp.nf.push_back(it == family.nf.end() ? empty : summarize(it->second));
  }
  std::sort(fp.nf.begin(), fp.nf.end());
  return fp;
}

EaFingerprint ea_fingerprint(const VectorialFunc& f) { return ea_fingerprint(enumerate_flats(f)); }

}  // namespace flatlab
