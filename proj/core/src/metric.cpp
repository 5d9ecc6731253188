#include "flatlab/metric.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <stdexcept>

#include "flatlab/error.hpp"
#include "flatlab/io.hpp"
#include "flatlab/parallel.hpp"
#include "flatlab/spectra.hpp"

namespace flatlab {
namespace {

constexpr std::uint8_t kUnreached = 0xFF;

Word length_mask(unsigned length) {
  return length == 64 ? ~Word{0} : (Word{1} << length) - 1;
}

bool bent_walsh(std::span<const std::int32_t> w, unsigned n) {
  const std::int32_t amp = std::int32_t{1} << (n / 2);
  return std::all_of(w.begin(), w.end(), [&](std::int32_t v) { return v == amp || v == -amp; });
}

bool is_bent_word(Word w, unsigned n) {
  std::vector<std::int32_t> vals(std::size_t{1} << n);
  for (std::size_t x = 0; x < vals.size(); ++x) vals[x] = (w >> x) & 1U ? -1 : 1;
  fwht(vals);
  return bent_walsh(vals, n);
}

std::vector<std::uint8_t> distance_map(const WordSet& a, SweepOptions opts) {
  const unsigned cap = opts.allow_long ? kMaxSweepLength : kDefaultSweepLength;
  if (a.length() > cap) {
    fail(Errc::LengthOverCap, "covering-radius sweep over 2^" + std::to_string(a.length()) +
                                  " words exceeds the cap 2^" + std::to_string(cap));
  }
  require(!a.empty(), Errc::InvalidArgument, "covering radius of an empty set");
  const unsigned length = a.length();
  const std::uint64_t words = std::uint64_t{1} << length;
  std::vector<std::uint8_t> dist(words, kUnreached);
  for (Word w : a.members()) dist[w] = 0;
  std::vector<std::uint8_t> next(words, 0);
  for (std::uint8_t level = 0;; ++level) {
    std::vector<std::uint8_t> grew(worker_count(), 0);
    parallel_for(0, words, [&](std::uint64_t lo, std::uint64_t hi, unsigned worker) {
      for (std::uint64_t w = lo; w < hi; ++w) {
        if (dist[w] != kUnreached) continue;
        for (unsigned i = 0; i < length; ++i) {
          if (dist[w ^ (std::uint64_t{1} << i)] == level) {
            next[w] = 1;
            grew[worker] = 1;
            break;
          }
        }
      }
    });
    if (std::none_of(grew.begin(), grew.end(), [](std::uint8_t g) { return g != 0; })) break;
    for (std::uint64_t w = 0; w < words; ++w) {
      if (next[w]) {
        dist[w] = static_cast<std::uint8_t>(level + 1);
        next[w] = 0;
      }
    }
  }
  return dist;
}

}  // namespace

Word word_of(const VectorialFunc& f) {
  require(f.is_boolean(), Errc::InvalidArgument, "words are Boolean functions");
  if (f.n() > 6) fail(Errc::LengthOverCap, "words hold at most 64 coordinates");
  Word w = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x) w |= Word{f(x)} << x;
  return w;
}

VectorialFunc function_of(Word w, unsigned n) {
  if (n > 6) fail(Errc::LengthOverCap, "words hold at most 64 coordinates");
  std::vector<std::uint32_t> table(std::size_t{1} << n);
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = (w >> x) & 1U;
  return VectorialFunc(n, 1, std::move(table));
}

WordSet WordSet::explicit_set(unsigned length, std::vector<Word> words) {
  if (length == 0 || length > kMaxWordLength) fail(Errc::LengthOverCap, "word length must be 1..64");
  const Word mask = length_mask(length);
  for (Word w : words) {
    if (w & ~mask) fail(Errc::InvalidArgument, "word has bits beyond the length");
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  WordSet s;
  s.length_ = length;
  s.words_ = std::move(words);
  return s;
}

WordSet WordSet::code(const CodeView& code) {
  if (code.n() > 6) fail(Errc::LengthOverCap, "implicit code sets need n <= 6");
  if (code.n() + code.m() + 1 > 22) fail(Errc::TooLarge, "code has too many words to materialize");
  const auto& f = code.function();
  std::vector<Word> gens;
  gens.push_back(length_mask(static_cast<unsigned>(code.length())));
  for (unsigned i = 0; i < code.n(); ++i) {
    Word w = 0;
    for (std::uint32_t x = 0; x < f.size(); ++x) w |= Word{(x >> i) & 1U} << x;
    gens.push_back(w);
  }
  for (unsigned i = 0; i < code.m(); ++i) {
    Word w = 0;
    for (std::uint32_t x = 0; x < f.size(); ++x) w |= Word{(f(x) >> i) & 1U} << x;
    gens.push_back(w);
  }
  std::vector<Word> words(std::size_t{1} << gens.size());
  for (std::size_t idx = 1; idx < words.size(); ++idx) {
    const unsigned low = static_cast<unsigned>(std::countr_zero(idx));
    words[idx] = words[idx & (idx - 1)] ^ gens[low];
  }
  WordSet s = explicit_set(static_cast<unsigned>(code.length()), std::move(words));
  s.code_ = std::make_shared<const CodeView>(code);
  return s;
}

bool WordSet::contains(Word w) const { return std::binary_search(words_.begin(), words_.end(), w); }

WordSet reed_muller_1(unsigned n) {
  if (n < 1 || n > 6) fail(Errc::LengthOverCap, "RM(n,1) words need 1 <= n <= 6");
  std::vector<Word> words;
  for (std::uint32_t a = 0; a < (std::uint32_t{1} << n); ++a) {
    const Word w = word_of(affine_boolean(n, a, 0));
    words.push_back(w);
    words.push_back(w ^ length_mask(1U << n));
  }
  return WordSet::explicit_set(1U << n, std::move(words));
}

std::uint64_t distance_to_code(const VectorialFunc& g, const VectorialFunc& f) {
  require(g.is_boolean() && g.n() == f.n(), Errc::LengthMismatch, "word and code lengths differ");
  std::uint64_t best = g.size();
  std::vector<std::int32_t> vals(g.size());
  for (std::uint32_t v = 0; v < (std::uint32_t{1} << f.m()); ++v) {
    for (std::uint32_t x = 0; x < g.size(); ++x) vals[x] = (g(x) ^ dot(v, f(x))) ? -1 : 1;
    fwht(vals);
    std::uint32_t amp = 0;
    for (auto c : vals) amp = std::max<std::uint32_t>(amp, static_cast<std::uint32_t>(std::abs(c)));
    best = std::min<std::uint64_t>(best, (g.size() - amp) / 2);
  }
  return best;
}

std::uint64_t distance_to_set(Word w, unsigned length, const WordSet& a) {
  if (length != a.length()) fail(Errc::LengthMismatch, "word and set lengths differ");
  if (w & ~length_mask(length)) fail(Errc::InvalidArgument, "word has bits beyond the length");
  if (a.is_implicit()) {
    const auto& f = a.code_view()->function();
    return distance_to_code(function_of(w, f.n()), f);
  }
  require(!a.empty(), Errc::InvalidArgument, "distance to an empty set");
  std::uint64_t best = length;
  for (Word m : a.members()) best = std::min<std::uint64_t>(best, std::popcount(w ^ m));
  return best;
}

std::uint64_t covering_radius(const WordSet& a, SweepOptions opts) {
  const auto dist = distance_map(a, opts);
  return *std::max_element(dist.begin(), dist.end());
}

WordSet metric_complement(const WordSet& a, SweepOptions opts) {
  const auto dist = distance_map(a, opts);
  const std::uint8_t rho = *std::max_element(dist.begin(), dist.end());
  std::vector<Word> words;
  for (std::uint64_t w = 0; w < dist.size(); ++w) {
    if (dist[w] == rho) words.push_back(w);
  }
  return WordSet::explicit_set(a.length(), std::move(words));
}

bool is_metrically_regular(const WordSet& a, SweepOptions opts) {
  return metric_complement(metric_complement(a, opts), opts) == a;
}

bool bent_sum_check(const VectorialFunc& f, const VectorialFunc& g) {
  require(f.is_boolean() && g.is_boolean() && f.n() == g.n(), Errc::InvalidArgument,
          "bent sum needs two Boolean functions on the same space");
  if (f.n() % 2 != 0) fail(Errc::OddDimension, "bent functions need even n");
  return is_bent(f ^ g);
}

bool bent_sum_by_distances(const VectorialFunc& f, const VectorialFunc& g) {
  require(f.is_boolean() && g.is_boolean() && f.n() == g.n(), Errc::InvalidArgument,
          "bent sum needs two Boolean functions on the same space");
  if (f.n() % 2 != 0) fail(Errc::OddDimension, "bent functions need even n");
  const std::uint64_t half = std::uint64_t{1} << (f.n() - 1);
  const std::uint64_t off = std::uint64_t{1} << (f.n() / 2 - 1);
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    for (unsigned c = 0; c < 2; ++c) {
      std::uint64_t d = 0;
      for (std::uint32_t x = 0; x < f.size(); ++x) d += f(x) ^ dot(a, x) ^ c ^ g(x);
      if (d != half - off && d != half + off) return false;
    }
  }
  return true;
}

bool extends_with(const VectorialFunc& f, const VectorialFunc& g) {
  require(g.is_boolean() && g.n() == f.n(), Errc::InvalidArgument, "extension must be Boolean on F2^n");
  if (f.n() % 2 != 0) return false;
  std::vector<std::int32_t> vals(f.size());
  for (std::uint32_t v = 0; v < (std::uint32_t{1} << f.m()); ++v) {
    for (std::uint32_t x = 0; x < f.size(); ++x) vals[x] = (g(x) ^ dot(v, f(x))) ? -1 : 1;
    fwht(vals);
    if (!bent_walsh(vals, f.n())) return false;
  }
  return true;
}

ExtendResult is_extendable(const VectorialFunc& f, ExtendMode mode, const ExtendOptions& opts) {
  const unsigned n = f.n();
  if (mode != ExtendMode::Family && n != 4) fail(Errc::UnsupportedDimension, "this mode needs n = 4");
  if (mode == ExtendMode::Family && (n % 2 != 0 || n > 8)) {
    fail(Errc::UnsupportedDimension, "family mode needs even n <= 8");
  }
  if (!is_bent(f)) fail(Errc::NotBent, "extendability is defined for bent functions");
  ExtendResult r;
  r.mode = mode;
  r.threshold = (std::uint64_t{1} << (n - 1)) - (std::uint64_t{1} << (n / 2 - 1));
  switch (mode) {
    case ExtendMode::Exhaustive: {
      for (Word w : bent_catalog(4)) {
        ++r.candidates_tested;
        auto g = function_of(w, 4);
        if (extends_with(f, g)) {
          r.verdict = ExtendVerdict::Extendable;
          r.witness = std::move(g);
          return r;
        }
      }
      r.verdict = ExtendVerdict::Lonely;
      r.nyberg_bound = 2 * f.m() == n;
      return r;
    }
    case ExtendMode::CoveringRadius: {
      const WordSet code = WordSet::code(CodeView(f));
      const WordSet complement = metric_complement(code);
      r.covering_radius = covering_radius(code);
      if (*r.covering_radius == r.threshold) {
        r.verdict = ExtendVerdict::Extendable;
        r.witness = function_of(complement.members().front(), n);
      } else {
        r.verdict = ExtendVerdict::Lonely;
        r.nyberg_bound = 2 * f.m() == n;
      }
      return r;
    }
    case ExtendMode::Family: {
      if (2 * f.m() == n) {
        r.verdict = ExtendVerdict::Lonely;
        r.nyberg_bound = true;
        return r;
      }
      // Maiorana-McFarland candidates <x, pi(y)> + g(y), input index x | y << h.
      // Extending is invariant under adding components of F and affine
      // functions, so one representative per such class is tested.
      const unsigned h = n / 2;
      const std::uint32_t half = std::uint32_t{1} << h;
      std::mt19937_64 rng(opts.seed);
      std::vector<std::uint32_t> pi(half);
      std::vector<std::uint32_t> table(f.size());
      std::uint64_t best = 0;
      for (std::uint64_t trial = 0; trial < opts.budget; ++trial) {
        for (std::uint32_t i = 0; i < half; ++i) pi[i] = i;
        std::shuffle(pi.begin(), pi.end(), rng);
        const std::uint64_t gbits = rng();
        for (std::uint32_t z = 0; z < f.size(); ++z) {
          const std::uint32_t x = z & (half - 1);
          const std::uint32_t y = z >> h;
          table[z] = dot(x, pi[y]) ^ static_cast<unsigned>((gbits >> (y % 64)) & 1U);
        }
        VectorialFunc g(n, 1, table);
        ++r.candidates_tested;
        best = std::max(best, distance_to_code(g, f));
        if (extends_with(f, g)) {
          r.verdict = ExtendVerdict::Extendable;
          r.witness = std::move(g);
          r.rho_lower_bound = best;
          return r;
        }
      }
      r.verdict = ExtendVerdict::Unknown;
      r.rho_lower_bound = best;
      return r;
    }
  }
  return r;
}

ComplementStructure metric_complement_structure(const VectorialFunc& f) {
  if (f.n() != 4) fail(Errc::UnsupportedDimension, "complement structure needs n = 4");
  if (!is_bent(f)) fail(Errc::NotBent, "complement structure is defined for bent functions");
  const WordSet code = WordSet::code(CodeView(f));
  const std::uint64_t rho = covering_radius(code);
  if (rho != 6) fail(Errc::NotExtendable, "rho(C_F) = " + std::to_string(rho) + " < 6");
  const WordSet complement = metric_complement(code);
  ComplementStructure s;
  s.complement_size = complement.size();
  s.code_size = code.size();
  s.cosets_inside_complement = true;
  std::vector<bool> covered(complement.size(), false);
  for (std::size_t i = 0; i < complement.size(); ++i) {
    if (covered[i]) continue;
    const Word leader = complement.members()[i];
    s.coset_leaders.push_back(leader);
    for (Word c : code.members()) {
      const Word w = leader ^ c;
      const auto it = std::lower_bound(complement.members().begin(), complement.members().end(), w);
      if (it == complement.members().end() || *it != w) {
        s.cosets_inside_complement = false;
        continue;
      }
      covered[static_cast<std::size_t>(it - complement.members().begin())] = true;
    }
  }
  s.members_extend = std::all_of(complement.members().begin(), complement.members().end(),
                                 [&](Word w) { return extends_with(f, function_of(w, 4)); });
  return s;
}

AuAnalysis au_set(const WordSet& a, const WordSet& u, SweepOptions opts) {
  if (!u.empty() && u.length() != a.length()) fail(Errc::LengthMismatch, "A and U lengths differ");
  if (!a.contains(0)) fail(Errc::ZeroNotInA, "A must contain the zero word");
  AuAnalysis r;
  const WordSet b = metric_complement(a, opts);
  for (Word w : u.members()) {
    if (!b.contains(w)) fail(Errc::UNotInComplement, "U must lie in the metric complement of A");
  }
  std::vector<Word> words = a.members();
  for (Word x : a.members()) {
    for (Word w : u.members()) words.push_back(x ^ w);
  }
  r.au = WordSet::explicit_set(a.length(), std::move(words));
  r.rho_a = covering_radius(a, opts);
  r.rho_au = covering_radius(r.au, opts);
  std::vector<Word> predicted;
  for (Word w : b.members()) {
    if (u.contains(w)) continue;
    const bool inside = std::all_of(u.members().begin(), u.members().end(),
                                    [&](Word x) { return b.contains(w ^ x); });
    if (inside) predicted.push_back(w);
  }
  r.condition = !predicted.empty();
  r.predicted_complement = WordSet::explicit_set(a.length(), std::move(predicted));
  r.actual_complement = metric_complement(r.au, opts);
  r.theorem_consistent = r.condition == (r.rho_au == r.rho_a) &&
                         (!r.condition || r.predicted_complement == r.actual_complement);
  return r;
}

const std::vector<Word>& bent_catalog(unsigned n) {
  if (n != 2 && n != 4) fail(Errc::UnsupportedDimension, "bent catalog supports n = 2 and n = 4");
  static std::mutex mutex;
  static std::vector<Word> catalogs[5];
  std::lock_guard lock(mutex);
  auto& cat = catalogs[n];
  if (cat.empty()) {
    const std::uint64_t words = std::uint64_t{1} << (1U << n);
    for (std::uint64_t w = 0; w < words; ++w) {
      if (is_bent_word(w, n)) cat.push_back(w);
    }
    const std::size_t expected = n == 4 ? 896 : 8;
    if (cat.size() != expected) {
      throw std::logic_error("bent catalog has " + std::to_string(cat.size()) + " entries");
    }
  }
  return cat;
}

std::vector<Word> load_or_build_bent_catalog(unsigned n, const std::filesystem::path& cache) {
  const auto& built = bent_catalog(n);
  if (std::filesystem::exists(cache)) {
    const auto cat = io::parse_catalog(io::read_text_file(cache));
    if (cat.n != n || cat.predicate != "bent") fail(Errc::ParseError, "catalog cache header mismatch");
    for (Word w : cat.words) {
      if (!is_bent_word(w, n)) fail(Errc::ParseError, "catalog cache holds a non-bent word");
    }
    if (cat.words.size() != built.size()) fail(Errc::ParseError, "catalog cache is incomplete");
    return cat.words;
  }
  io::WordCatalog cat{n, "bent", built};
  io::write_text_file(cache, io::format_catalog(cat));
  return built;
}

TokarevaReport tokareva_check(unsigned n) {
  if (n != 4) fail(Errc::UnsupportedDimension, "Tokareva check is exhaustive at n = 4 only");
  const auto& bent = bent_catalog(n);
  TokarevaReport r;
  r.n = n;
  // Monomials of degree <= n/2, as ANF indices.
  std::vector<std::uint32_t> monomials;
  for (std::uint32_t mono = 0; mono < (1U << n); ++mono) {
    if (static_cast<unsigned>(std::popcount(mono)) <= n / 2) monomials.push_back(mono);
  }
  const std::uint64_t count = std::uint64_t{1} << monomials.size();
  for (std::uint64_t sel = 0; sel < count; ++sel) {
    std::vector<std::uint32_t> coeffs(1U << n, 0);
    for (std::size_t i = 0; i < monomials.size(); ++i) coeffs[monomials[i]] = (sel >> i) & 1U;
    const Word f = word_of(anf_inverse(AnfTable{n, 1, coeffs}));
    ++r.checked;
    const bool found = std::any_of(bent.begin(), bent.end(), [&](Word g) {
      return std::binary_search(bent.begin(), bent.end(), f ^ g);
    });
    if (!found) r.exceptions.push_back(f);
  }
  return r;
}

}  // namespace flatlab
