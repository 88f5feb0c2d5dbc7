#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "agb/error.hpp"
#include "agb/evalcode.hpp"
#include "agb/gf.hpp"
#include "agb/hstar.hpp"

// JSON file formats:
//   matrix : {"p":int, "k":int, "rows":int, "cols":int, "data":[int,...]}
//   table  : {"field":{"p":int,"k":int}, "n":int, "genus":int,
//             "semigroup_generators":[int], "points":[label,...],
//             "functions":[{"pole_order":int, "values":[int,...]}, ...]}
//   H* in  : {"n":int, "members":[int,...]} or {"n":int, "ell":[int,...]}
namespace agb::io {

using nlohmann::json;

namespace detail {

template <typename T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(Errc::SchemaError, std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(Errc::SchemaError, std::string("bad value for \"") + key + "\": " + e.what());
  }
}

}  // namespace detail

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::SchemaError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(Errc::SchemaError, path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(Errc::SchemaError, "cannot write " + path);
  out << j.dump(2) << '\n';
}

inline json to_json(const gf::FieldMatrix& m) {
  return {{"p", m.field().characteristic()},
          {"k", m.field().degree()},
          {"rows", m.rows()},
          {"cols", m.cols()},
          {"data", m.data()}};
}

inline gf::FieldMatrix matrix_from_json(const json& j) {
  const auto f = gf::field(detail::get<int>(j, "p"), detail::get<int>(j, "k"));
  const auto rows = detail::get<std::size_t>(j, "rows");
  const auto cols = detail::get<std::size_t>(j, "cols");
  auto data = detail::get<std::vector<gf::Element>>(j, "data");
  if (data.size() != rows * cols) fail(Errc::SchemaError, "data length does not match rows*cols");
  return gf::FieldMatrix(f, rows, cols, std::move(data));
}

inline json to_json(const EvaluationTable& t) {
  json functions = json::array();
  for (const auto& f : t.functions()) functions.push_back({{"pole_order", f.pole_order}, {"values", f.values}});
  return {{"field", {{"p", t.field().characteristic()}, {"k", t.field().degree()}}},
          {"n", t.n()},
          {"genus", t.genus()},
          {"semigroup_generators", t.semigroup().generators()},
          {"points", t.points()},
          {"functions", functions}};
}

inline EvaluationTable table_from_json(const json& j) {
  const auto field_j = detail::get<json>(j, "field");
  const auto f = gf::field(detail::get<int>(field_j, "p"), detail::get<int>(field_j, "k"));
  const auto gens = detail::get<std::vector<int>>(j, "semigroup_generators");
  auto s = NumericalSemigroup::from_generators(gens);
  const auto n = detail::get<int>(j, "n");
  const auto genus = detail::get<int>(j, "genus");
  auto points = detail::get<std::vector<std::string>>(j, "points");
  if (static_cast<int>(points.size()) != n) fail(Errc::InvariantViolation, "n differs from the number of points");
  if (genus != s.genus()) fail(Errc::InvariantViolation, "genus differs from the semigroup's genus");
  std::vector<FunctionRow> rows;
  const auto functions = detail::get<json>(j, "functions");
  if (!functions.is_array()) fail(Errc::SchemaError, "\"functions\" must be an array");
  for (const auto& fj : functions)
    rows.push_back({detail::get<int>(fj, "pole_order"), detail::get<gf::Vector>(fj, "values")});
  return EvaluationTable(f, std::move(s), std::move(points), std::move(rows));
}

inline EvaluationTable load_table(const std::string& path) { return table_from_json(read_json_file(path)); }

inline void save_table(const std::string& path, const EvaluationTable& t) { write_json_file(path, to_json(t)); }

/// An H* description read from a file, in explicit or abundance form.
inline HStar hstar_from_json(const NumericalSemigroup& s, const json& j) {
  const auto n = detail::get<int>(j, "n");
  if (j.contains("members")) return HStar::from_explicit(s, n, detail::get<std::vector<int>>(j, "members"));
  if (j.contains("ell")) {
    const auto ell = detail::get<std::vector<int>>(j, "ell");
    return HStar::from_abundance(s, n, ell);
  }
  fail(Errc::SchemaError, "H* file needs \"members\" or \"ell\"");
}

}  // namespace agb::io
