#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "agb/io.hpp"

using agb::Errc;
namespace gf = agb::gf;
namespace io = agb::io;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const agb::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InternalInvariantViolation;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("agb_io_" + name)).string();
}

}  // namespace

TEST(Io, TableRoundTrip) {
  for (int q0 : {2, 3}) {
    const auto t = agb::hermitian_table(q0);
    const auto path = temp_path("table" + std::to_string(q0) + ".json");
    io::save_table(path, t);
    EXPECT_EQ(io::load_table(path), t);
    std::filesystem::remove(path);
  }
}

TEST(Io, TableErrors) {
  const auto good = io::to_json(agb::hermitian_table(2));
  EXPECT_EQ(error_of([&] { io::table_from_json(io::json::object()); }), Errc::SchemaError);
  auto bad_type = good;
  bad_type["n"] = "eight";
  EXPECT_EQ(error_of([&] { io::table_from_json(bad_type); }), Errc::SchemaError);
  auto no_functions = good;
  no_functions.erase("functions");
  EXPECT_EQ(error_of([&] { io::table_from_json(no_functions); }), Errc::SchemaError);
  auto swapped = good;
  std::swap(swapped["functions"][1], swapped["functions"][2]);
  EXPECT_EQ(error_of([&] { io::table_from_json(swapped); }), Errc::InvariantViolation);
  auto wrong_n = good;
  wrong_n["n"] = 7;
  EXPECT_EQ(error_of([&] { io::table_from_json(wrong_n); }), Errc::InvariantViolation);
  auto wrong_genus = good;
  wrong_genus["genus"] = 2;
  EXPECT_EQ(error_of([&] { io::table_from_json(wrong_genus); }), Errc::InvariantViolation);

  const auto path = temp_path("broken.json");
  std::ofstream(path) << "{ not json";
  EXPECT_EQ(error_of([&] { io::load_table(path); }), Errc::SchemaError);
  std::filesystem::remove(path);
  EXPECT_EQ(error_of([&] { io::load_table(temp_path("missing.json")); }), Errc::SchemaError);
}

TEST(Io, HandWrittenTable) {
  const auto j = io::json::parse(R"({
    "field": {"p": 2, "k": 2}, "n": 3, "genus": 0, "semigroup_generators": [1],
    "points": ["P1", "P2", "P3"],
    "functions": [{"pole_order": 0, "values": [1, 1, 1]},
                  {"pole_order": 1, "values": [0, 1, 2]},
                  {"pole_order": 2, "values": [0, 1, 3]}]})");
  const auto t = io::table_from_json(j);
  EXPECT_EQ(t.n(), 3);
  EXPECT_EQ(agb::empirical_hstar(t).members(), (std::vector<int>{0, 1, 2}));
}

TEST(Io, MatrixRoundTrip) {
  const auto f = gf::field(3, 2);
  const gf::FieldMatrix m(f, 2, 3, {0, 1, 8, 7, 2, 3});
  const auto j = io::to_json(m);
  EXPECT_EQ(j["p"], 3);
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(j["rows"], 2);
  EXPECT_EQ(j["cols"], 3);
  EXPECT_EQ(io::matrix_from_json(j), m);
  auto short_data = j;
  short_data["data"].erase(0);
  EXPECT_EQ(error_of([&] { io::matrix_from_json(short_data); }), Errc::SchemaError);
  auto big = j;
  big["data"][0] = 9;
  EXPECT_EQ(error_of([&] { io::matrix_from_json(big); }), Errc::InvariantViolation);
  auto bad_field = j;
  bad_field["p"] = 4;
  EXPECT_EQ(error_of([&] { io::matrix_from_json(bad_field); }), Errc::UnsupportedField);
}

TEST(Io, HStarFiles) {
  const auto s = agb::NumericalSemigroup::from_generators({2, 3});
  const auto a = io::hstar_from_json(s, io::json::parse(R"({"n": 8, "members": [0,2,3,4,5,6,7,9]})"));
  EXPECT_EQ(a.mode(), agb::HStarMode::Explicit);
  const auto b = io::hstar_from_json(s, io::json::parse(R"({"n": 8, "ell": [0,0,0,0,0,0,0,0,1,1]})"));
  EXPECT_EQ(b.mode(), agb::HStarMode::Abundance);
  EXPECT_EQ(a.members(), b.members());
  EXPECT_EQ(error_of([&] { io::hstar_from_json(s, io::json::parse(R"({"n": 8})")); }), Errc::SchemaError);
  EXPECT_EQ(error_of([&] { io::hstar_from_json(s, io::json::parse(R"({"members": [0]})")); }), Errc::SchemaError);
}
