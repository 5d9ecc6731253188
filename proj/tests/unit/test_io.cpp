#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include <flatlab/error.hpp>
#include <flatlab/flats.hpp>
#include <flatlab/io.hpp>

#include "fixtures.hpp"

using namespace flatlab;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

}  // namespace

TEST(FunctionFile, ParsesF4) {
  auto f = io::parse_function("# f4\nn=4 m=1\n\ntt=0 0 0 1 0 0 0 1 0 0 0 1 1 1 1 0\n");
  EXPECT_EQ(f, fixtures::f4());
}

TEST(FunctionFile, ExactFormat) {
  EXPECT_EQ(io::format_function(VectorialFunc(2, 4, {0, 1, 0xa, 0xf})), "n=2 m=4\ntt=0 1 a f\n");
}

TEST(FunctionFile, RoundTripRandom) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    auto f = VectorialFunc::random(1 + i % 8, 1 + i % 9, rng);
    ASSERT_EQ(io::parse_function(io::format_function(f)), f);
  }
}

TEST(FunctionFile, Rejections) {
  EXPECT_EQ(code_of([] { io::parse_function("n=2 m=1\ntt=0 1 1\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { io::parse_function("n=2 m=1\ntt=0 1 1 0 1\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { io::parse_function("n=2 m=1\ntt=0 1 2 0\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { io::parse_function("n=2\ntt=0 1 1 0\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { io::parse_function("n=2 m=1\n0 1 1 0\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { io::parse_function("n=2 m=1\ntt=0 1 g 0\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { io::parse_function(""); }), Errc::ParseError);
}

TEST(FunctionFile, DiskRoundTrip) {
  auto path = std::filesystem::temp_directory_path() / "flatlab_io_test.fn";
  io::write_function_file(path, fixtures::bent42());
  EXPECT_EQ(io::read_function_file(path), fixtures::bent42());
  std::filesystem::remove(path);
  EXPECT_EQ(code_of([&] { io::read_function_file(path); }), Errc::ParseError);
}

TEST(IncidenceFile, RoundTrip) {
  auto vf = vanishing_flats(fixtures::f4());
  auto text = io::format_incidence(vf);
  EXPECT_EQ(text.substr(0, text.find('\n')), "v=16 k=4 b=60");
  EXPECT_EQ(io::parse_incidence(text), vf);
}

TEST(IncidenceFile, Rejections) {
  EXPECT_EQ(code_of([] { io::parse_incidence("v=4 k=2 b=2\n0 1\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { io::parse_incidence("v=4 k=2 b=1\n0 4\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { io::parse_incidence("v=4 k=2 b=2\n0 1\n1 0\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { io::parse_incidence("v=4 k=2 b=1\n0 1 2\n"); }), Errc::ParseError);
}

TEST(CatalogFile, RoundTrip) {
  io::WordCatalog c{4, "bent", {0x0778, 0x1ee1, 0xfff0}};
  auto parsed = io::parse_catalog(io::format_catalog(c));
  EXPECT_EQ(parsed.n, 4U);
  EXPECT_EQ(parsed.predicate, "bent");
  EXPECT_EQ(parsed.words, c.words);
  EXPECT_EQ(code_of([] { io::parse_catalog("n=4 predicate=bent count=2\n1\n0\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { io::parse_catalog("n=4 predicate=bent count=3\n1\n2\n"); }), Errc::ParseError);
}
