#pragma once

#include <nlohmann/json.hpp>

#include "flatlab/codes.hpp"
#include "flatlab/designs.hpp"
#include "flatlab/flats.hpp"
#include "flatlab/metric.hpp"
#include "flatlab/spectra.hpp"

namespace flatlab::report {

using nlohmann::json;

/// Sorted [value, multiplicity] pairs.
json multiset_json(const Multiset& ms);
json spectrum_json(const SpectrumReport& r);
/// Keys t, lambda, r, b plus points, k and t1..t3 (null when not a design,
/// absent when unchecked).
json design_json(const DesignReport& r);
json flat_family_json(const FlatFamily& fam, unsigned max_t = 3);
json weights_json(const WeightEnumerator& w);
json dual_distance_json(const DualDistance& d);
json am_original_json(const AmOriginalVerdict& v);
json am_extended_json(const AmExtendedVerdict& v);
json extend_json(const ExtendResult& r);
/// Lowercase hex truth table, as on the tt= line of a function file.
json truth_table_json(const VectorialFunc& f);

const char* to_string(ExtendVerdict v) noexcept;
const char* to_string(ExtendMode m) noexcept;

}  // namespace flatlab::report
