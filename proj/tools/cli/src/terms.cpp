#include "flatlab_cli/terms.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include <flatlab/error.hpp>

namespace flatlab::cli {
namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

std::uint64_t number(std::string_view s, std::string_view term) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    fail(Errc::ParseError, "bad number in term '" + std::string(term) + "'");
  }
  return v;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

/// 'a' or 'a^k' -> k; '1' -> 0; '0' -> nullopt.
std::optional<std::uint32_t> coefficient(std::string_view s, std::string_view term) {
  if (s == "0") return std::nullopt;
  if (s == "1") return 0;
  if (s == "a") return 1;
  if (s.size() > 2 && s.substr(0, 2) == "a^") return static_cast<std::uint32_t>(number(s.substr(2), term));
  fail(Errc::ParseError, "bad coefficient in term '" + std::string(term) + "'");
}

std::uint64_t monomial(std::string_view s, std::string_view term) {
  if (s == "x") return 1;
  if (s.size() > 2 && s.substr(0, 2) == "x^") return number(s.substr(2), term);
  fail(Errc::ParseError, "bad monomial in term '" + std::string(term) + "'");
}

}  // namespace

std::vector<UnivariateTerm> parse_terms(std::string_view spec) {
  const std::string text = strip(spec);
  if (text.empty()) fail(Errc::ParseError, "empty polynomial");
  std::vector<UnivariateTerm> terms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('+', pos);
    if (end == std::string::npos) end = text.size();
    const std::string_view term(text.data() + pos, end - pos);
    if (term.empty()) fail(Errc::ParseError, "empty term in '" + text + "'");
    if (all_digits(term)) {
      terms.push_back(UnivariateTerm::monomial(number(term, term)));
    } else if (const auto star = term.find('*'); star != std::string_view::npos) {
      terms.push_back({coefficient(term.substr(0, star), term), monomial(term.substr(star + 1), term)});
    } else if (term.front() == 'x') {
      terms.push_back(UnivariateTerm::monomial(monomial(term, term)));
    } else {
      terms.push_back({coefficient(term, term), 0});
    }
    pos = end + 1;
  }
  return terms;
}

}  // namespace flatlab::cli
