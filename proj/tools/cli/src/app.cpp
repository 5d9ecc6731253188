#include "flatlab_cli/app.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <new>
#include <optional>
#include <sstream>

#include <flatlab/codes.hpp>
#include <flatlab/designs.hpp>
#include <flatlab/error.hpp>
#include <flatlab/field.hpp>
#include <flatlab/flats.hpp>
#include <flatlab/io.hpp>
#include <flatlab/metric.hpp>
#include <flatlab/parallel.hpp>
#include <flatlab/report.hpp>
#include <flatlab/spectra.hpp>

#include "flatlab_cli/envelope.hpp"
#include "flatlab_cli/terms.hpp"

namespace flatlab::cli {
namespace {

using nlohmann::json;

std::uint64_t parse_hex(const std::string& text, const char* what) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(text, &used, 16);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) fail(Errc::ParseError, std::string("bad hex ") + what + " '" + text + "'");
  return v;
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(item, &used, 10);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) fail(Errc::ParseError, "bad list entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

/// Bit y of a hex string read as one big little-endian number.
unsigned hex_bit(const std::string& hex, std::uint32_t y) {
  const std::size_t digit = y / 4;
  if (digit >= hex.size()) return 0;
  const char c = hex[hex.size() - 1 - digit];
  const std::uint64_t nibble = parse_hex(std::string(1, c), "digit");
  return static_cast<unsigned>((nibble >> (y % 4)) & 1U);
}

struct Loaded {
  std::string text;
  VectorialFunc f;
};

Loaded load(const std::string& path) {
  Loaded l;
  l.text = io::read_text_file(path);
  l.f = io::parse_function(l.text);
  return l;
}

int exit_code_for(Errc code) {
  switch (kind_of(code)) {
    case ErrorKind::Input: return kExitInput;
    case ErrorKind::Scale: return kExitScale;
    case ErrorKind::Internal: return kExitInternal;
  }
  return kExitInternal;
}

ExtendMode parse_mode(const std::string& s) {
  if (s == "exhaustive") return ExtendMode::Exhaustive;
  if (s == "covering_radius") return ExtendMode::CoveringRadius;
  if (s == "family") return ExtendMode::Family;
  fail(Errc::InvalidArgument, "unknown mode '" + s + "'");
}

json hex_words(const std::vector<Word>& words) {
  json out = json::array();
  for (Word w : words) {
    std::ostringstream os;
    os << std::hex << w;
    out.push_back(os.str());
  }
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"flatlab: spectra, flats, codes and metric properties of vectorial Boolean functions"};
  app.require_subcommand(1, 1);
  unsigned threads = 0;
  bool payload_only = false;
  app.add_option("--threads", threads, "Worker threads (default: FLATLAB_THREADS or 1)")
      ->check(CLI::Range(1U, 256U));
  app.add_flag("--payload-only", payload_only, "Print only the deterministic report payload");

  std::string file;
  auto* analyze_cmd = app.add_subcommand("analyze", "Walsh and differential spectra with classification");
  analyze_cmd->add_option("file", file, "Function file")->required();

  std::string flats_v;
  std::string export_path;
  unsigned max_t = 3;
  auto* flats_cmd = app.add_subcommand("flats", "Vanishing and nonvanishing flats with design verdicts");
  flats_cmd->add_option("file", file, "Function file")->required();
  flats_cmd->add_option("--v", flats_v, "Report one structure: 0 for VF, else NF_v (hex)");
  flats_cmd->add_option("--export", export_path, "Write the selected structure as an incidence file");
  flats_cmd->add_option("--max-t", max_t, "Largest t to verify")->check(CLI::Range(1U, 3U));

  bool weights = false;
  std::optional<std::uint64_t> support_w;
  bool dual = false;
  std::optional<unsigned> am_t;
  std::string except;
  auto* code_cmd = app.add_subcommand("code", "The code C_F: weights, support designs, Assmus-Mattson");
  code_cmd->add_option("file", file, "Function file")->required();
  auto* w_opt = code_cmd->add_flag("--weights", weights, "Weight enumerator and distances");
  auto* s_opt = code_cmd->add_option("--support-design", support_w, "Support design of weight w");
  code_cmd->add_flag("--dual", dual, "Use the dual code (w in {4, 6})")->needs(s_opt);
  code_cmd->add_option("--export", export_path, "Write the support design as an incidence file")->needs(s_opt);
  auto* am_opt = code_cmd->add_option("--am", am_t, "Assmus-Mattson hypothesis check for t");
  code_cmd->add_option("--except", except, "Exceptional weights (comma list): extended check")->needs(am_opt);
  w_opt->excludes(s_opt, am_opt);
  s_opt->excludes(am_opt);

  std::string mode = "exhaustive";
  ExtendOptions ext_opts;
  auto* extend_cmd = app.add_subcommand("extend", "Extendability of a bent function");
  extend_cmd->add_option("file", file, "Function file")->required();
  extend_cmd->add_option("--mode", mode, "exhaustive | covering_radius | family")
      ->check(CLI::IsMember({"exhaustive", "covering_radius", "family"}));
  extend_cmd->add_option("--seed", ext_opts.seed, "Family-mode seed");
  extend_cmd->add_option("--budget", ext_opts.budget, "Family-mode candidate budget");

  bool want_rho = false;
  bool want_complement = false;
  bool want_regular = false;
  SweepOptions sweep;
  auto* metric_cmd = app.add_subcommand("metric", "Covering radius and metric complement of C_F");
  metric_cmd->add_option("file", file, "Function file")->required();
  auto* rho_opt = metric_cmd->add_flag("--covering-radius", want_rho, "Covering radius of C_F");
  auto* comp_opt = metric_cmd->add_flag("--complement", want_complement, "Metric complement of C_F");
  auto* reg_opt = metric_cmd->add_flag("--regular", want_regular, "Metric regularity of C_F");
  metric_cmd->add_flag("--allow-long", sweep.allow_long, "Allow sweeps up to 2^24 words (slow)");
  rho_opt->excludes(comp_opt, reg_opt);
  comp_opt->excludes(reg_opt);

  std::string poly_hex;
  std::string terms_spec;
  std::optional<unsigned> mm_n;
  std::string pi_list;
  std::string g_hex = "0";
  std::string output;
  auto* gen_cmd = app.add_subcommand("gen", "Write a function file");
  auto* poly_opt = gen_cmd->add_option("--field-poly", poly_hex, "Defining polynomial (hex bitmask)");
  auto* terms_opt = gen_cmd->add_option("--terms", terms_spec, "Polynomial, e.g. \"x^3 + a^11*x^5\"");
  auto* mm_opt = gen_cmd->add_option("--mm", mm_n, "Maiorana-McFarland bent function on n variables");
  gen_cmd->add_option("--pi", pi_list, "Permutation of F2^(n/2) as a comma list")->needs(mm_opt);
  gen_cmd->add_option("--g", g_hex, "Truth table of g on F2^(n/2) (hex)")->needs(mm_opt);
  gen_cmd->add_option("-o,--output", output, "Output path (default: stdout)");
  poly_opt->needs(terms_opt);
  terms_opt->needs(poly_opt);
  mm_opt->excludes(poly_opt, terms_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  const char* missing = nullptr;
  if (*code_cmd && !weights && !support_w && !am_t) missing = "code needs one of --weights, --support-design, --am";
  if (*metric_cmd && !want_rho && !want_complement && !want_regular) {
    missing = "metric needs one of --covering-radius, --complement, --regular";
  }
  if (*gen_cmd && !mm_n && poly_hex.empty()) missing = "gen needs --field-poly with --terms, or --mm";
  if (missing) {
    err << "error: " << missing << '\n';
    return kExitInput;
  }
  if (threads) set_worker_count(threads);

  const auto start = std::chrono::steady_clock::now();
  auto emit = [&](const char* command, const std::string& input, json params, json payload) {
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (payload_only) out << payload.dump(2) << '\n';
    else out << make_envelope(command, input, std::move(params), std::move(payload), ms).dump(2) << '\n';
  };

  try {
    if (*analyze_cmd) {
      const auto in = load(file);
      const auto rep = analyze(in.f);
      json payload = report::spectrum_json(rep);
      payload["degree"] = degree(in.f);
      payload["a4"] = a4_from_moments(in.f);
      payload["flags"]["classical"] =
          rep.flags.is_apn && in.f.n() >= 3 ? json(has_classical_walsh_spectrum(in.f)) : json(nullptr);
      emit("analyze", in.text, {{"file", file}}, std::move(payload));
    } else if (*flats_cmd) {
      const auto in = load(file);
      json params = {{"file", file}, {"max_t", max_t}};
      if (!flats_v.empty()) {
        const std::uint64_t v = parse_hex(flats_v, "v");
        if (v > in.f.output_mask()) fail(Errc::InvalidArgument, "v exceeds 2^m - 1");
        params["v"] = v;
        const IncidenceStructure s = v == 0 ? vanishing_flats(in.f)
                                            : enumerate_flats(in.f).nonvanishing(static_cast<std::uint32_t>(v));
        if (!export_path.empty()) io::write_text_file(export_path, io::format_incidence(s));
        json payload = report::design_json(design_report(s, max_t));
        payload["v"] = v;
        emit("flats", in.text, std::move(params), std::move(payload));
      } else {
        const auto fam = enumerate_flats(in.f);
        json payload = report::flat_family_json(fam, max_t);
        payload["partition_ok"] = fam.total_blocks() == sqs_block_count(fam.n);
        emit("flats", in.text, std::move(params), std::move(payload));
      }
    } else if (*code_cmd) {
      const auto in = load(file);
      const CodeView code(in.f);
      json params = {{"file", file}};
      json payload;
      if (weights) {
        params["mode"] = "weights";
        payload = {{"length", code.length()},
                   {"dimension", code.dimension()},
                   {"weights", report::weights_json(weight_enumerator(code))},
                   {"min_distance", min_distance(code)}};
        try {
          payload["dual_min_distance"] = report::dual_distance_json(dual_min_distance(code));
        } catch (const Error& e) {
          if (e.code() != Errc::TooLarge) throw;
          payload["dual_min_distance"] = nullptr;
        }
      } else if (support_w) {
        params["mode"] = "support_design";
        params["weight"] = *support_w;
        params["side"] = dual ? "dual" : "primal";
        const auto s = support_design(code, *support_w, dual ? CodeSide::Dual : CodeSide::Primal);
        if (!export_path.empty()) io::write_text_file(export_path, io::format_incidence(s));
        payload = report::design_json(design_report(s, 2));
        payload["weight"] = *support_w;
        payload["side"] = dual ? "dual" : "primal";
      } else {
        params["mode"] = "am";
        params["t"] = *am_t;
        if (!except.empty()) {
          const auto s = parse_list(except);
          params["except"] = s;
          payload = report::am_extended_json(am_extended_check(code, *am_t, s));
        } else {
          payload = report::am_original_json(am_original_check(code, *am_t));
        }
      }
      emit("code", in.text, std::move(params), std::move(payload));
    } else if (*extend_cmd) {
      const auto in = load(file);
      json params = {{"file", file}, {"mode", mode}};
      if (mode == "family") {
        params["seed"] = ext_opts.seed;
        params["budget"] = ext_opts.budget;
      }
      emit("extend", in.text, std::move(params),
           report::extend_json(is_extendable(in.f, parse_mode(mode), ext_opts)));
    } else if (*metric_cmd) {
      const auto in = load(file);
      if (sweep.allow_long && (std::uint64_t{1} << in.f.n()) > kDefaultSweepLength) {
        err << "warning: sweeping 2^" << (1U << in.f.n()) << " words\n";
      }
      const WordSet code = WordSet::code(CodeView(in.f));
      json params = {{"file", file}, {"allow_long", sweep.allow_long}};
      json payload = {{"length", code.length()}, {"code_size", code.size()}};
      if (want_rho) {
        params["mode"] = "covering_radius";
        payload["rho"] = covering_radius(code, sweep);
      } else if (want_complement) {
        params["mode"] = "complement";
        const auto comp = metric_complement(code, sweep);
        payload["rho"] = covering_radius(code, sweep);
        payload["complement_size"] = comp.size();
        payload["members"] = hex_words(comp.members());
      } else {
        params["mode"] = "regular";
        payload["rho"] = covering_radius(code, sweep);
        payload["metrically_regular"] = is_metrically_regular(code, sweep);
      }
      emit("metric", in.text, std::move(params), std::move(payload));
    } else if (*gen_cmd) {
      VectorialFunc f;
      if (mm_n) {
        const unsigned n = *mm_n;
        if (n < 2 || n % 2 != 0 || n > VectorialFunc::kMaxInputs) {
          fail(Errc::BadParameters, "--mm needs an even n in [2, 16]");
        }
        const unsigned h = n / 2;
        const std::uint32_t half = std::uint32_t{1} << h;
        std::vector<std::uint32_t> pi(half);
        for (std::uint32_t i = 0; i < half; ++i) pi[i] = i;
        if (!pi_list.empty()) {
          const auto given = parse_list(pi_list);
          std::vector<bool> seen(half, false);
          if (given.size() != half) fail(Errc::BadParameters, "--pi needs 2^(n/2) entries");
          for (std::uint32_t i = 0; i < half; ++i) {
            if (given[i] >= half || seen[given[i]]) fail(Errc::BadParameters, "--pi is not a permutation");
            seen[given[i]] = true;
            pi[i] = static_cast<std::uint32_t>(given[i]);
          }
        }
        parse_hex(g_hex, "g");
        std::vector<std::uint32_t> table(std::size_t{1} << n);
        for (std::uint32_t z = 0; z < table.size(); ++z) {
          const std::uint32_t x = z & (half - 1);
          const std::uint32_t y = z >> h;
          table[z] = dot(x, pi[y]) ^ hex_bit(g_hex, y);
        }
        f = VectorialFunc(n, 1, std::move(table));
      } else if (!poly_hex.empty()) {
        const std::uint64_t poly = parse_hex(poly_hex, "polynomial");
        if (poly < 4 || poly >> 17) fail(Errc::DegreeMismatch, "polynomial degree must be 2..16");
        const auto degree_of = static_cast<unsigned>(std::bit_width(poly) - 1);
        const Field field(degree_of, static_cast<std::uint32_t>(poly));
        const auto terms = parse_terms(terms_spec);
        f = univariate_to_table(field, terms);
      } else {
        fail(Errc::InvalidArgument, "gen needs --field-poly with --terms, or --mm");
      }
      const std::string text = io::format_function(f);
      if (output.empty()) out << text;
      else io::write_text_file(output, text);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitScale;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace flatlab::cli
