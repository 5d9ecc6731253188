#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "flatlab/func.hpp"

namespace flatlab {

/// value -> multiplicity, ordered by value.
using Multiset = std::map<std::int64_t, std::uint64_t>;

/// In-place unnormalized Walsh-Hadamard butterfly.
void fwht(std::span<std::int32_t> values);

/// Walsh values of the Boolean function f: chi(a) = sum_x (-1)^(f(x) + <a,x>).
std::vector<std::int32_t> walsh_boolean(const VectorialFunc& f);

/// Full table chi_F(a,b) for all a, b, with the b=0 row equal to 2^n [a=0].
class WalshTable {
 public:
  /// Throws TooLarge when 2^(n+m) entries would not fit in memory.
  explicit WalshTable(const VectorialFunc& f);

  unsigned n() const noexcept { return n_; }
  unsigned m() const noexcept { return m_; }
  std::int32_t at(std::uint32_t a, std::uint32_t b) const {
    return values_[(std::size_t{b} << n_) | a];
  }
  std::span<const std::int32_t> component(std::uint32_t b) const {
    return {values_.data() + (std::size_t{b} << n_), std::size_t{1} << n_};
  }

 private:
  unsigned n_ = 0;
  unsigned m_ = 0;
  std::vector<std::int32_t> values_;
};

/// Amplitude exponent of one component: values in {0, +-2^((n+s)/2)}.
std::optional<unsigned> plateau_exponent(std::span<const std::int32_t> walsh, unsigned n);

struct SpectrumFlags {
  bool is_bent = false;
  bool is_plateaued = false;
  /// Set when every component shares one amplitude exponent.
  std::optional<unsigned> s_plateaued;
  bool is_apn = false;
};

struct SpectrumReport {
  unsigned n = 0;
  unsigned m = 0;
  Multiset walsh_multiset;           // over a in F2^n, b != 0
  Multiset extended_walsh_multiset;  // over all (a,b)
  Multiset diff_multiset;            // delta_F(a,b) over a != 0, all b
  std::uint64_t nonlinearity = 0;
  std::uint64_t delta = 0;
  /// index b-1 -> s_b, or nullopt when F_b is not plateaued.
  std::vector<std::optional<unsigned>> plateau_profile;
  SpectrumFlags flags;

  bool is_s_plateaued(unsigned s) const { return flags.s_plateaued == s; }
};

Multiset walsh_multiset(const WalshTable& w);
Multiset extended_walsh_multiset(const WalshTable& w);
std::uint64_t nonlinearity(const WalshTable& w);

struct DifferentialSpectrum {
  Multiset multiset;
  std::uint64_t delta = 0;
};
DifferentialSpectrum differential_spectrum(const VectorialFunc& f);

SpectrumReport analyze(const VectorialFunc& f);
SpectrumReport analyze(const VectorialFunc& f, const WalshTable& w);

bool is_bent(const VectorialFunc& f);
bool is_plateaued(const VectorialFunc& f);
bool is_apn(const VectorialFunc& f);

/// Template over all 2^(2n) pairs (a,b): AB for n odd, Gold for n even.
Multiset classical_walsh_template(unsigned n);

/// Throws NotApn. F is translated to F(0)=0 before comparison.
bool has_classical_walsh_spectrum(const VectorialFunc& f);

/// D_{a,b}F(x) = F(x) + F(x+a) + F(x+b) + F(x+a+b).
/// Returns N_F(v;x) = #{(a,b) : D_{a,b}F(x) = v} indexed by x.
std::vector<std::uint64_t> second_order_counts(const VectorialFunc& f, std::uint32_t v);

/// N_F(v;x) for all v at a single x, indexed by v. Throws TooLarge for m > 24.
std::vector<std::uint64_t> second_order_profile(const VectorialFunc& f, std::uint32_t x);

/// Character-sum evaluation of N_F(v;x); slow cross-check.
std::uint64_t second_order_count_by_characters(const VectorialFunc& f, const WalshTable& w,
                                               std::uint32_t v, std::uint32_t x);

/// Number of weight-4 words in the dual of C_F from the fourth Walsh moment.
/// Throws NonIntegerResult if any division is inexact.
std::uint64_t a4_from_moments(const WalshTable& w);
std::uint64_t a4_from_moments(const VectorialFunc& f);

struct GroupRingCube {
  unsigned n = 0;
  unsigned m = 0;
  /// Coefficient of (x, y) in Gamma^3, stored for nonzero coefficients,
  /// sorted by (x, y).
  struct Entry {
    std::uint32_t x;
    std::uint32_t y;
    std::uint64_t count;
  };
  std::vector<Entry> entries;
  /// N_F(v;x) does not depend on x, so Gamma^3 = sum_v N(v) (Gamma + (0,v)).
  bool x_independent = false;
  /// Per-v coefficient when x_independent, indexed by v.
  std::vector<std::uint64_t> lambda;
  /// s used for the closed form (shared amplitude exponent), if any.
  std::optional<unsigned> s;
  /// Gamma^3 = 2^(n+s) Gamma + (2^(2n-m) - 2^(n+s-m)) G holds for every element.
  bool closed_form_holds = false;
  std::uint64_t gamma_coefficient = 0;  // 2^(n+s) + group coefficient
  std::uint64_t group_coefficient = 0;  // 2^(2n-m) - 2^(n+s-m)

  std::uint64_t coefficient(std::uint32_t x, std::uint32_t y) const;
  std::uint64_t total_mass() const;
};

/// Triple loop over (x1,x2,x3). Throws DimensionTooLarge for n > 8.
GroupRingCube group_ring_cube(const VectorialFunc& f);

/// Dual of a Boolean bent function. Throws NotBent.
VectorialFunc dual_bent(const VectorialFunc& f);

}  // namespace flatlab
