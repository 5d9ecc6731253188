#include "flatlab/spectra.hpp"

#include <algorithm>
#include <cstdlib>

#include "flatlab/error.hpp"
#include "flatlab/parallel.hpp"

namespace flatlab {
namespace {

constexpr unsigned kMaxWalshLog = 26;

void merge_into(Multiset& dst, const Multiset& src) {
  for (const auto& [value, mult] : src) dst[value] += mult;
}

std::uint32_t max_abs(std::span<const std::int32_t> values) {
  std::uint32_t best = 0;
  for (auto v : values) best = std::max<std::uint32_t>(best, static_cast<std::uint32_t>(std::abs(v)));
  return best;
}

}  // namespace

void fwht(std::span<std::int32_t> values) {
  const std::size_t size = values.size();
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int32_t u = values[j];
        const std::int32_t v = values[j + h];
        values[j] = u + v;
        values[j + h] = u - v;
      }
    }
  }
}

std::vector<std::int32_t> walsh_boolean(const VectorialFunc& f) {
  require(f.is_boolean(), Errc::InvalidArgument, "walsh_boolean needs a Boolean function");
  std::vector<std::int32_t> values(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) values[x] = f(x) ? -1 : 1;
  fwht(values);
  return values;
}

WalshTable::WalshTable(const VectorialFunc& f) : n_(f.n()), m_(f.m()) {
  if (n_ + m_ > kMaxWalshLog) {
    fail(Errc::TooLarge, "Walsh table with 2^" + std::to_string(n_ + m_) + " entries");
  }
  const std::size_t size = f.size();
  values_.assign(size << m_, 0);
  values_[0] = static_cast<std::int32_t>(size);
  const auto table = f.table();
  parallel_for(1, std::uint64_t{1} << m_, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
    for (std::uint64_t b = lo; b < hi; ++b) {
      std::span<std::int32_t> row(values_.data() + (b << n_), size);
      for (std::size_t x = 0; x < size; ++x) row[x] = dot(b, table[x]) ? -1 : 1;
      fwht(row);
    }
  });
}

std::optional<unsigned> plateau_exponent(std::span<const std::int32_t> walsh, unsigned n) {
  const std::uint32_t amp = max_abs(walsh);
  if (amp == 0 || !std::has_single_bit(amp)) return std::nullopt;
  for (auto v : walsh) {
    if (v != 0 && static_cast<std::uint32_t>(std::abs(v)) != amp) return std::nullopt;
  }
  const unsigned k = static_cast<unsigned>(std::countr_zero(amp));
  if (2 * k < n) return std::nullopt;
  return 2 * k - n;
}

Multiset walsh_multiset(const WalshTable& w) {
  Multiset out;
  for (std::uint32_t b = 1; b < (std::uint32_t{1} << w.m()); ++b) {
    for (auto v : w.component(b)) ++out[v];
  }
  return out;
}

Multiset extended_walsh_multiset(const WalshTable& w) {
  Multiset out = walsh_multiset(w);
  out[std::int64_t{1} << w.n()] += 1;
  if (w.n() > 0) out[0] += (std::uint64_t{1} << w.n()) - 1;
  return out;
}

std::uint64_t nonlinearity(const WalshTable& w) {
  std::uint32_t amp = 0;
  for (std::uint32_t b = 1; b < (std::uint32_t{1} << w.m()); ++b) {
    amp = std::max(amp, max_abs(w.component(b)));
  }
  return (std::uint64_t{1} << (w.n() - 1)) - amp / 2;
}

DifferentialSpectrum differential_spectrum(const VectorialFunc& f) {
  const std::uint32_t size = f.size();
  const unsigned m = f.m();
  const bool dense = m <= 20;
  const auto table = f.table();
  const unsigned workers = worker_count();
  std::vector<Multiset> partial(workers);
  parallel_for(1, size, [&](std::uint64_t lo, std::uint64_t hi, unsigned worker) {
    Multiset& out = partial[worker];
    std::vector<std::uint32_t> counts(dense ? (std::size_t{1} << m) : 0);
    std::vector<std::uint32_t> derivs(dense ? 0 : size);
    for (std::uint64_t a = lo; a < hi; ++a) {
      std::uint64_t distinct = 0;
      if (dense) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::uint32_t x = 0; x < size; ++x) ++counts[table[x] ^ table[x ^ a]];
        for (auto c : counts) {
          if (c) {
            ++out[c];
            ++distinct;
          }
        }
      } else {
        for (std::uint32_t x = 0; x < size; ++x) derivs[x] = table[x] ^ table[x ^ a];
        std::sort(derivs.begin(), derivs.end());
        for (std::size_t i = 0; i < derivs.size();) {
          std::size_t j = i;
          while (j < derivs.size() && derivs[j] == derivs[i]) ++j;
          ++out[static_cast<std::int64_t>(j - i)];
          ++distinct;
          i = j;
        }
      }
      const std::uint64_t zeros = (std::uint64_t{1} << m) - distinct;
      if (zeros) out[0] += zeros;
    }
  });
  DifferentialSpectrum ds;
  for (const auto& p : partial) merge_into(ds.multiset, p);
  if (!ds.multiset.empty()) ds.delta = static_cast<std::uint64_t>(ds.multiset.rbegin()->first);
  return ds;
}

SpectrumReport analyze(const VectorialFunc& f) { return analyze(f, WalshTable(f)); }

SpectrumReport analyze(const VectorialFunc& f, const WalshTable& w) {
  SpectrumReport r;
  r.n = f.n();
  r.m = f.m();
  r.walsh_multiset = walsh_multiset(w);
  r.extended_walsh_multiset = extended_walsh_multiset(w);
  const auto ds = differential_spectrum(f);
  r.diff_multiset = ds.multiset;
  r.delta = ds.delta;
  r.nonlinearity = nonlinearity(w);

  const std::uint32_t components = (std::uint32_t{1} << f.m()) - 1;
  r.plateau_profile.resize(components);
  bool all_plateaued = true;
  bool bent = f.n() % 2 == 0;
  std::optional<unsigned> shared;
  bool single = true;
  for (std::uint32_t b = 1; b <= components; ++b) {
    const auto s = plateau_exponent(w.component(b), f.n());
    r.plateau_profile[b - 1] = s;
    if (!s) {
      all_plateaued = false;
      bent = false;
      single = false;
      continue;
    }
    if (*s != 0) bent = false;
    if (b == 1) shared = s;
    else if (shared != s) single = false;
  }
  r.flags.is_bent = bent;
  r.flags.is_plateaued = all_plateaued;
  if (all_plateaued && single) r.flags.s_plateaued = shared;
  r.flags.is_apn = f.n() == f.m() && ds.delta <= 2;
  return r;
}

bool is_bent(const VectorialFunc& f) {
  if (f.n() % 2 != 0 || 2 * f.m() > f.n()) return false;
  const WalshTable w(f);
  const std::uint32_t amp = std::uint32_t{1} << (f.n() / 2);
  for (std::uint32_t b = 1; b < (std::uint32_t{1} << f.m()); ++b) {
    for (auto v : w.component(b)) {
      if (static_cast<std::uint32_t>(std::abs(v)) != amp) return false;
    }
  }
  return true;
}

bool is_plateaued(const VectorialFunc& f) {
  const WalshTable w(f);
  for (std::uint32_t b = 1; b < (std::uint32_t{1} << f.m()); ++b) {
    if (!plateau_exponent(w.component(b), f.n())) return false;
  }
  return true;
}

bool is_apn(const VectorialFunc& f) {
  if (f.n() != f.m()) return false;
  const std::uint32_t size = f.size();
  const auto table = f.table();
  std::vector<std::uint8_t> seen(size);
  for (std::uint32_t a = 1; a < size; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t x = 0; x < size; ++x) {
      const std::uint32_t d = table[x] ^ table[x ^ a];
      if (++seen[d] > 2) return false;
    }
  }
  return true;
}

Multiset classical_walsh_template(unsigned n) {
  require(n >= 3, Errc::InvalidArgument, "classical template needs n >= 3");
  const std::int64_t q = std::int64_t{1} << n;
  Multiset t;
  t[q] = 1;
  if (n % 2 == 1) {
    const std::int64_t amp = std::int64_t{1} << ((n + 1) / 2);
    const std::int64_t base = std::int64_t{1} << (n - 2);
    const std::int64_t shift = std::int64_t{1} << ((n - 3) / 2);
    t[0] = static_cast<std::uint64_t>(((q >> 1) + 1) * (q - 1));
    t[amp] = static_cast<std::uint64_t>((q - 1) * (base + shift));
    t[-amp] = static_cast<std::uint64_t>((q - 1) * (base - shift));
  } else {
    require(n >= 4, Errc::InvalidArgument, "Gold template needs n >= 4");
    const std::int64_t big = std::int64_t{1} << ((n + 2) / 2);
    const std::int64_t small = std::int64_t{1} << (n / 2);
    const std::int64_t base3 = std::int64_t{1} << (n - 3);
    const std::int64_t shift4 = std::int64_t{1} << ((n - 4) / 2);
    const std::int64_t base1 = std::int64_t{1} << (n - 1);
    const std::int64_t shift2 = std::int64_t{1} << ((n - 2) / 2);
    t[0] = static_cast<std::uint64_t>((q - 1) * ((q >> 2) + 1));
    t[big] = static_cast<std::uint64_t>((q - 1) * (base3 + shift4) / 3);
    t[-big] = static_cast<std::uint64_t>((q - 1) * (base3 - shift4) / 3);
    t[small] = static_cast<std::uint64_t>(2 * (q - 1) * (base1 + shift2) / 3);
    t[-small] = static_cast<std::uint64_t>(2 * (q - 1) * (base1 - shift2) / 3);
  }
  return t;
}

bool has_classical_walsh_spectrum(const VectorialFunc& f) {
  if (!is_apn(f)) fail(Errc::NotApn, "classical spectrum check needs an APN function");
  std::vector<std::uint32_t> shifted(f.table().begin(), f.table().end());
  const std::uint32_t c = shifted[0];
  for (auto& y : shifted) y ^= c;
  const VectorialFunc g(f.n(), f.m(), std::move(shifted));
  return extended_walsh_multiset(WalshTable(g)) == classical_walsh_template(f.n());
}

std::vector<std::uint64_t> second_order_counts(const VectorialFunc& f, std::uint32_t v) {
  require(v <= f.output_mask(), Errc::InvalidArgument, "v out of range");
  const std::uint32_t size = f.size();
  const auto table = f.table();
  std::vector<std::uint64_t> out(size);
  parallel_for(0, size, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
    for (std::uint64_t x = lo; x < hi; ++x) {
      const std::uint32_t target = v ^ table[x];
      std::uint64_t count = 0;
      for (std::uint32_t a = 0; a < size; ++a) {
        const std::uint32_t fa = table[x ^ a];
        for (std::uint32_t b = 0; b < size; ++b) {
          if ((fa ^ table[x ^ b] ^ table[x ^ a ^ b]) == target) ++count;
        }
      }
      out[x] = count;
    }
  });
  return out;
}

std::vector<std::uint64_t> second_order_profile(const VectorialFunc& f, std::uint32_t x) {
  require(x < f.size(), Errc::InvalidArgument, "x out of range");
  if (f.m() > 24) fail(Errc::TooLarge, "second-order profile needs m <= 24");
  const std::uint32_t size = f.size();
  const auto table = f.table();
  std::vector<std::uint64_t> out(std::size_t{1} << f.m());
  for (std::uint32_t a = 0; a < size; ++a) {
    const std::uint32_t fa = table[x] ^ table[x ^ a];
    for (std::uint32_t b = 0; b < size; ++b) ++out[fa ^ table[x ^ b] ^ table[x ^ a ^ b]];
  }
  return out;
}

std::uint64_t second_order_count_by_characters(const VectorialFunc& f, const WalshTable& w,
                                               std::uint32_t v, std::uint32_t x) {
  // N = 2^-(n+m) sum_beta (-1)^(<beta,v> + F_beta(x)) sum_a chi_beta(a)^3 (-1)^<a,x>
  __int128 total = 0;
  for (std::uint32_t beta = 0; beta < (std::uint32_t{1} << f.m()); ++beta) {
    __int128 inner = 0;
    const auto row = w.component(beta);
    for (std::uint32_t a = 0; a < f.size(); ++a) {
      const __int128 c = row[a];
      const __int128 cube = c * c * c;
      inner += dot(a, x) ? -cube : cube;
    }
    total += (dot(beta, v) ^ dot(beta, f(x))) ? -inner : inner;
  }
  const __int128 denom = __int128{1} << (f.n() + f.m());
  if (total % denom != 0 || total < 0) fail(Errc::NonIntegerResult, "character sum not integral");
  return static_cast<std::uint64_t>(total / denom);
}

std::uint64_t a4_from_moments(const WalshTable& w) {
  const unsigned n = w.n();
  const unsigned m = w.m();
  __int128 moment = 0;
  for (std::uint32_t b = 0; b < (std::uint32_t{1} << m); ++b) {
    for (auto v : w.component(b)) {
      const __int128 sq = static_cast<__int128>(v) * v;
      moment += sq * sq;
    }
  }
  const __int128 denom = __int128{1} << (n + m);
  if (moment % denom != 0) fail(Errc::NonIntegerResult, "fourth moment not divisible by 2^(n+m)");
  const __int128 numer = moment / denom - 3 * (__int128{1} << (2 * n)) + (__int128{1} << (n + 1));
  if (numer % 24 != 0 || numer < 0) fail(Errc::NonIntegerResult, "weight-4 count not divisible by 24");
  return static_cast<std::uint64_t>(numer / 24);
}

std::uint64_t a4_from_moments(const VectorialFunc& f) { return a4_from_moments(WalshTable(f)); }

std::uint64_t GroupRingCube::coefficient(std::uint32_t x, std::uint32_t y) const {
  const auto it = std::lower_bound(entries.begin(), entries.end(), std::pair{x, y},
                                   [](const Entry& e, const std::pair<std::uint32_t, std::uint32_t>& k) {
                                     return std::pair{e.x, e.y} < k;
                                   });
  if (it != entries.end() && it->x == x && it->y == y) return it->count;
  return 0;
}

std::uint64_t GroupRingCube::total_mass() const {
  std::uint64_t total = 0;
  for (const auto& e : entries) total += e.count;
  return total;
}

GroupRingCube group_ring_cube(const VectorialFunc& f) {
  if (f.n() > 8) fail(Errc::DimensionTooLarge, "group ring cube needs n <= 8");
  const unsigned n = f.n();
  const unsigned m = f.m();
  const std::uint32_t size = f.size();
  const auto table = f.table();
  GroupRingCube g;
  g.n = n;
  g.m = m;

  std::vector<std::vector<GroupRingCube::Entry>> per_x(size);
  parallel_for(0, size, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
    std::vector<std::uint32_t> ys;
    ys.reserve(std::size_t{size} * size);
    for (std::uint64_t x = lo; x < hi; ++x) {
      ys.clear();
      for (std::uint32_t x1 = 0; x1 < size; ++x1) {
        for (std::uint32_t x2 = 0; x2 < size; ++x2) {
          const std::uint32_t x3 = static_cast<std::uint32_t>(x) ^ x1 ^ x2;
          ys.push_back(table[x1] ^ table[x2] ^ table[x3]);
        }
      }
      std::sort(ys.begin(), ys.end());
      auto& out = per_x[x];
      for (std::size_t i = 0; i < ys.size();) {
        std::size_t j = i;
        while (j < ys.size() && ys[j] == ys[i]) ++j;
        out.push_back({static_cast<std::uint32_t>(x), ys[i], j - i});
        i = j;
      }
    }
  });
  for (auto& part : per_x) g.entries.insert(g.entries.end(), part.begin(), part.end());

  // Coefficient of (x, F(x) + v) is N_F(v;x).
  g.x_independent = m <= 24;
  if (g.x_independent) {
    const std::size_t outputs = std::size_t{1} << m;
    std::vector<std::uint64_t> first(outputs);
    std::vector<std::uint64_t> current(outputs);
    for (std::uint32_t x = 0; x < size && g.x_independent; ++x) {
      std::fill(current.begin(), current.end(), 0);
      for (const auto& e : per_x[x]) current[e.y ^ table[x]] = e.count;
      if (x == 0) first = current;
      else if (current != first) g.x_independent = false;
    }
    if (g.x_independent) g.lambda = std::move(first);
  }

  const auto report = analyze(f);
  g.s = report.flags.s_plateaued;
  if (g.s && n + *g.s >= m) {
    const unsigned s = *g.s;
    const std::uint64_t group = (std::uint64_t{1} << (2 * n - m)) - (std::uint64_t{1} << (n + s - m));
    const std::uint64_t gamma = (std::uint64_t{1} << (n + s)) + group;
    g.group_coefficient = group;
    g.gamma_coefficient = gamma;
    bool holds = true;
    const std::uint64_t outputs = std::uint64_t{1} << m;
    for (std::uint32_t x = 0; x < size && holds; ++x) {
      const auto& row = per_x[x];
      std::uint64_t seen = 0;
      for (const auto& e : row) {
        const std::uint64_t want = e.y == table[x] ? gamma : group;
        if (e.count != want) holds = false;
        ++seen;
      }
      // Elements absent from the row have coefficient 0.
      if (seen != outputs && group != 0) holds = false;
      if (group == 0 && seen != 1) holds = false;
    }
    g.closed_form_holds = holds;
  }
  return g;
}

VectorialFunc dual_bent(const VectorialFunc& f) {
  if (!f.is_boolean() || !is_bent(f)) fail(Errc::NotBent, "dual needs a Boolean bent function");
  const auto w = walsh_boolean(f);
  std::vector<std::uint32_t> table(f.size());
  for (std::uint32_t a = 0; a < f.size(); ++a) table[a] = w[a] < 0 ? 1 : 0;
  return VectorialFunc(f.n(), 1, std::move(table));
}

}  // namespace flatlab
