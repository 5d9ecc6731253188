#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "flatlab/func.hpp"
#include "flatlab/incidence.hpp"

namespace flatlab::io {

// Function file:
//   n=<int> m=<int>
//   tt=<2^n hex values separated by spaces, x = 0 .. 2^n-1>
// Blank lines and lines starting with '#' are ignored. Throws ParseError.
VectorialFunc parse_function(std::string_view text);
std::string format_function(const VectorialFunc& f);
VectorialFunc read_function_file(const std::filesystem::path& path);
void write_function_file(const std::filesystem::path& path, const VectorialFunc& f);

// Incidence file:
//   v=<points> k=<block size> b=<blocks>
//   one block per line, sorted space-separated point indices
IncidenceStructure parse_incidence(std::string_view text);
std::string format_incidence(const IncidenceStructure& s);

// Word catalog (bent catalog cache):
//   n=<int> predicate=<name> count=<int>
//   one hex truth table per line, sorted ascending
struct WordCatalog {
  unsigned n = 0;
  std::string predicate;
  std::vector<std::uint64_t> words;
};
WordCatalog parse_catalog(std::string_view text);
std::string format_catalog(const WordCatalog& catalog);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace flatlab::io
