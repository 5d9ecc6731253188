#include "flatlab/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "flatlab/error.hpp"

namespace flatlab::io {
namespace {

std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (!line.empty() && line.front() != '#') lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, int base, const char* what) {
  if (base == 16 && tok.size() > 2 && tok[0] == '0' && (tok[1] == 'x' || tok[1] == 'X')) {
    tok.remove_prefix(2);
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value, base);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
    fail(Errc::ParseError, std::string("malformed ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

/// Parses "key=value" tokens into the order given; every key is required.
std::vector<std::uint64_t> parse_header(std::string_view line, std::initializer_list<const char*> keys) {
  const auto toks = split_ws(line);
  std::vector<std::uint64_t> values;
  if (toks.size() != keys.size()) fail(Errc::ParseError, "header '" + std::string(line) + "' malformed");
  std::size_t i = 0;
  for (const char* key : keys) {
    const std::string prefix = std::string(key) + "=";
    if (toks[i].substr(0, prefix.size()) != prefix) {
      fail(Errc::ParseError, "expected '" + prefix + "' in header");
    }
    values.push_back(parse_uint(toks[i].substr(prefix.size()), 10, key));
    ++i;
  }
  return values;
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

}  // namespace

VectorialFunc parse_function(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.size() != 2) fail(Errc::ParseError, "function file needs a header line and a tt= line");
  const auto header = parse_header(lines[0], {"n", "m"});
  const std::uint64_t n = header[0];
  const std::uint64_t m = header[1];
  if (n < 1 || n > VectorialFunc::kMaxInputs || m < 1 || m > VectorialFunc::kMaxOutputs) {
    fail(Errc::ParseError, "dimensions out of range");
  }
  std::string_view body = lines[1];
  if (body.substr(0, 3) != "tt=") fail(Errc::ParseError, "second line must start with tt=");
  body.remove_prefix(3);
  const auto toks = split_ws(body);
  const std::size_t expected = std::size_t{1} << n;
  if (toks.size() != expected) {
    fail(Errc::ParseError, "tt= has " + std::to_string(toks.size()) + " values, expected " +
                               std::to_string(expected));
  }
  std::vector<std::uint32_t> table(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    const std::uint64_t v = parse_uint(toks[i], 16, "truth-table value");
    if (v >> m) fail(Errc::ParseError, "truth-table value exceeds 2^m");
    table[i] = static_cast<std::uint32_t>(v);
  }
  return VectorialFunc(static_cast<unsigned>(n), static_cast<unsigned>(m), std::move(table));
}

std::string format_function(const VectorialFunc& f) {
  std::string out = "n=" + std::to_string(f.n()) + " m=" + std::to_string(f.m()) + "\ntt=";
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (x) out += ' ';
    out += hex(f(x));
  }
  out += '\n';
  return out;
}

VectorialFunc read_function_file(const std::filesystem::path& path) {
  return parse_function(read_text_file(path));
}

void write_function_file(const std::filesystem::path& path, const VectorialFunc& f) {
  write_text_file(path, format_function(f));
}

IncidenceStructure parse_incidence(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) fail(Errc::ParseError, "incidence file is empty");
  const auto header = parse_header(lines[0], {"v", "k", "b"});
  const auto v = static_cast<std::uint32_t>(header[0]);
  const auto k = static_cast<unsigned>(header[1]);
  if (k < 1 || k > v) fail(Errc::ParseError, "block size out of range");
  if (lines.size() - 1 != header[2]) fail(Errc::ParseError, "block count does not match header");
  std::vector<std::uint32_t> flat;
  flat.reserve(header[2] * k);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto toks = split_ws(lines[i]);
    if (toks.size() != k) fail(Errc::ParseError, "block line has wrong size");
    for (auto t : toks) {
      const auto p = parse_uint(t, 10, "point");
      if (p >= v) fail(Errc::ParseError, "point index out of range");
      flat.push_back(static_cast<std::uint32_t>(p));
    }
  }
  IncidenceStructure s(v, k, std::move(flat));
  if (s.block_count() != header[2]) fail(Errc::ParseError, "repeated blocks in incidence file");
  return s;
}

std::string format_incidence(const IncidenceStructure& s) {
  std::ostringstream os;
  os << "v=" << s.points() << " k=" << s.block_size() << " b=" << s.block_count() << '\n';
  for (std::size_t i = 0; i < s.block_count(); ++i) {
    const auto b = s.block(i);
    for (std::size_t j = 0; j < b.size(); ++j) os << (j ? " " : "") << b[j];
    os << '\n';
  }
  return os.str();
}

WordCatalog parse_catalog(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) fail(Errc::ParseError, "catalog is empty");
  const auto toks = split_ws(lines[0]);
  if (toks.size() != 3 || toks[0].substr(0, 2) != "n=" || toks[1].substr(0, 10) != "predicate=" ||
      toks[2].substr(0, 6) != "count=") {
    fail(Errc::ParseError, "catalog header must be 'n=<int> predicate=<name> count=<int>'");
  }
  WordCatalog c;
  c.n = static_cast<unsigned>(parse_uint(toks[0].substr(2), 10, "n"));
  c.predicate = std::string(toks[1].substr(10));
  const auto count = parse_uint(toks[2].substr(6), 10, "count");
  if (lines.size() - 1 != count) fail(Errc::ParseError, "catalog count does not match entries");
  for (std::size_t i = 1; i < lines.size(); ++i) c.words.push_back(parse_uint(lines[i], 16, "word"));
  if (!std::is_sorted(c.words.begin(), c.words.end())) fail(Errc::ParseError, "catalog not sorted");
  return c;
}

std::string format_catalog(const WordCatalog& catalog) {
  std::string out = "n=" + std::to_string(catalog.n) + " predicate=" + catalog.predicate +
                    " count=" + std::to_string(catalog.words.size()) + "\n";
  for (auto w : catalog.words) out += hex(w) + "\n";
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::InvalidArgument, "cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace flatlab::io
