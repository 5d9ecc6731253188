#include "flatlab/report.hpp"

#include <sstream>

namespace flatlab::report {
namespace {

json optional_json(const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); }

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

json weighted_designs(const std::vector<std::pair<std::uint64_t, std::optional<std::uint64_t>>>& items) {
  json out = json::array();
  for (const auto& [w, lambda] : items) out.push_back({{"weight", w}, {"lambda", optional_json(lambda)}});
  return out;
}

}  // namespace

json multiset_json(const Multiset& ms) {
  json out = json::array();
  for (const auto& [value, mult] : ms) out.push_back(json::array({value, mult}));
  return out;
}

json spectrum_json(const SpectrumReport& r) {
  json profile = json::array();
  for (std::size_t b = 0; b < r.plateau_profile.size(); ++b) {
    const auto& s = r.plateau_profile[b];
    profile.push_back(json::array({b + 1, s ? json(*s) : json(nullptr)}));
  }
  return {
      {"n", r.n},
      {"m", r.m},
      {"walsh_multiset", multiset_json(r.walsh_multiset)},
      {"extended_walsh_multiset", multiset_json(r.extended_walsh_multiset)},
      {"diff_multiset", multiset_json(r.diff_multiset)},
      {"nonlinearity", r.nonlinearity},
      {"delta", r.delta},
      {"plateau_profile", profile},
      {"flags",
       {{"is_bent", r.flags.is_bent},
        {"is_plateaued", r.flags.is_plateaued},
        {"s_plateaued", r.flags.s_plateaued ? json(*r.flags.s_plateaued) : json(nullptr)},
        {"is_apn", r.flags.is_apn}}},
  };
}

json design_json(const DesignReport& r) {
  json out = {{"points", r.v}, {"k", r.k}, {"b", r.b}, {"t", r.t}, {"lambda", optional_json(r.lambda)},
              {"r", optional_json(r.r)}};
  for (std::size_t i = 0; i < r.verdicts.size(); ++i) out["t" + std::to_string(i + 1)] = optional_json(r.verdicts[i]);
  if (!r.unchecked.empty()) out["unchecked"] = r.unchecked;
  return out;
}

json flat_family_json(const FlatFamily& fam, unsigned max_t) {
  json nf = json::array();
  for (std::uint32_t v = 1; v < (std::uint32_t{1} << fam.m); ++v) {
    json entry = design_json(design_report(fam.nonvanishing(v), max_t));
    entry["v"] = v;
    nf.push_back(std::move(entry));
  }
  return {{"n", fam.n}, {"m", fam.m}, {"vf", design_json(design_report(fam.vf, max_t))}, {"nf", nf},
          {"total_blocks", fam.total_blocks()}, {"sqs_blocks", sqs_block_count(fam.n)}};
}

json weights_json(const WeightEnumerator& w) {
  json out = json::array();
  for (const auto& [wt, count] : w) out.push_back(json::array({wt, count}));
  return out;
}

json dual_distance_json(const DualDistance& d) { return {{"value", d.value}, {"lower_bound", d.lower_bound}}; }

json am_original_json(const AmOriginalVerdict& v) {
  return {{"t", v.t},
          {"d", v.d},
          {"d_dual", dual_distance_json(v.d_dual)},
          {"weights_in_range", v.weights_in_range},
          {"allowed", v.allowed},
          {"t_below_distances", v.t_below_distances},
          {"holds", v.holds}};
}

json am_extended_json(const AmExtendedVerdict& v) {
  return {{"t", v.t},
          {"exceptional", v.exceptional},
          {"t_below_distances", v.t_below_distances},
          {"exceptional_in_range", v.exceptional_in_range},
          {"primal", weighted_designs(v.primal)},
          {"dual", weighted_designs(v.dual)},
          {"holds", v.holds}};
}

json truth_table_json(const VectorialFunc& f) {
  json out = json::array();
  for (std::uint32_t x = 0; x < f.size(); ++x) out.push_back(hex(f(x)));
  return out;
}

json extend_json(const ExtendResult& r) {
  json out = {{"verdict", to_string(r.verdict)},
              {"mode", to_string(r.mode)},
              {"candidates_tested", r.candidates_tested},
              {"nyberg_bound", r.nyberg_bound},
              {"threshold", r.threshold}};
  if (r.covering_radius) out["rho"] = *r.covering_radius;
  if (r.rho_lower_bound) out["rho_lower_bound"] = *r.rho_lower_bound;
  out["witness"] = r.witness ? truth_table_json(*r.witness) : json(nullptr);
  return out;
}

const char* to_string(ExtendVerdict v) noexcept {
  switch (v) {
    case ExtendVerdict::Extendable: return "extendable";
    case ExtendVerdict::Lonely: return "lonely";
    case ExtendVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

const char* to_string(ExtendMode m) noexcept {
  switch (m) {
    case ExtendMode::Exhaustive: return "exhaustive";
    case ExtendMode::CoveringRadius: return "covering_radius";
    case ExtendMode::Family: return "family";
  }
  return "exhaustive";
}

}  // namespace flatlab::report
