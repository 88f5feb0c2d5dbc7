#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "agb/agb.hpp"
#include "agb/io.hpp"

// `agb` command-line frontend. Exit codes: 0 success, 1 domain error (error
// name on stderr), 2 usage error.
namespace agb::cli {

using nlohmann::json;

namespace detail {

inline std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

struct HStarArgs {
  std::vector<int> gens;
  int n = 0;
  std::string mode = "equiv-divisor";
  std::string file;

  void attach(CLI::App* sub) {
    sub->add_option("--gens", gens, "semigroup generators, comma separated")->delimiter(',')->required();
    sub->add_option("--n", n, "code length");
    sub->add_option("--mode", mode, "how H* is built")
        ->check(CLI::IsMember({"equiv-divisor", "isometry-dual", "explicit", "abundance"}));
    sub->add_option("--file", file, "JSON file with \"members\" or \"ell\" (explicit/abundance modes)");
  }

  HStar build() const {
    const auto s = NumericalSemigroup::from_generators(gens);
    if (mode == "explicit" || mode == "abundance") {
      if (file.empty()) throw CLI::RequiredError("--file (mode " + mode + ")");
      const auto j = io::read_json_file(file);
      if (mode == "explicit" && !j.contains("members")) fail(Errc::SchemaError, "explicit mode needs \"members\"");
      if (mode == "abundance" && !j.contains("ell")) fail(Errc::SchemaError, "abundance mode needs \"ell\"");
      return io::hstar_from_json(s, j);
    }
    if (n == 0) throw CLI::RequiredError("--n");
    return mode == "isometry-dual" ? HStar::from_isometry_dual(s, n) : HStar::from_equiv_divisor(s, n);
  }
};

inline json hstar_json(const HStar& hs) {
  return {{"n", hs.n()},
          {"mode", std::string(to_string(hs.mode()))},
          {"members", hs.members()},
          {"isometry_dual", hs.is_isometry_dual()},
          {"pi", hs.pi()}};
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Order-type bounds for one-point AG codes from Weierstrass semigroup data", "agb"};
  app.require_subcommand(1);
  bool as_json = false;

  // semigroup
  auto* sg = app.add_subcommand("semigroup", "gaps, genus, Frobenius number and elements");
  std::vector<int> sg_gens;
  int up_to = -1;
  sg->add_option("--gens", sg_gens, "generators, comma separated")->delimiter(',')->required();
  sg->add_option("--up-to", up_to, "list elements up to this bound (default: conductor)");
  sg->add_flag("--json", as_json);

  // hstar / bounds / ghw / improved share the H* options.
  detail::HStarArgs hs_args;
  auto* hsc = app.add_subcommand("hstar", "construct and validate H*");
  hs_args.attach(hsc);
  hsc->add_flag("--json", as_json);

  detail::HStarArgs b_args;
  auto* bc = app.add_subcommand("bounds", "per-index table of #Lambda*, d*, Goppa and d_ORD");
  b_args.attach(bc);
  bc->add_flag("--json", as_json);

  detail::HStarArgs g_args;
  int ghw_r = 1, ghw_i = 1;
  std::uint64_t node_cap = GhwOptions{}.node_cap;
  auto* gc = app.add_subcommand("ghw", "generalized Hamming weight bound d*_r(i)");
  g_args.attach(gc);
  gc->add_option("--r", ghw_r, "subcode dimension")->required();
  gc->add_option("--i", ghw_i, "code index")->required();
  gc->add_option("--node-cap", node_cap, "search node cap");
  gc->add_flag("--json", as_json);

  detail::HStarArgs i_args;
  int delta = 1;
  auto* ic = app.add_subcommand("improved", "improved code for a designed distance");
  i_args.attach(ic);
  ic->add_option("--delta", delta, "designed distance")->required();
  ic->add_flag("--json", as_json);

  // curve hermitian
  auto* cc = app.add_subcommand("curve", "built-in evaluation tables");
  cc->require_subcommand(1);
  auto* ch = cc->add_subcommand("hermitian", "Hermitian curve over GF(q0^2)");
  int c_q0 = 2;
  std::string emit_table, emit_matrix;
  int c_m = -1;
  ch->add_option("--q0", c_q0, "2 or 3")->required();
  ch->add_option("--emit-table", emit_table, "write the evaluation table as JSON");
  auto* m_opt = ch->add_option("--m", c_m, "pole-order bound of the code C(D, mQ)");
  ch->add_option("--emit-matrix", emit_matrix, "write the generator matrix of C(D, mQ) as JSON")->needs(m_opt);
  ch->add_flag("--json", as_json);

  // verify hermitian
  auto* vc = app.add_subcommand("verify", "cross-check bounds against brute force");
  vc->require_subcommand(1);
  auto* vh = vc->add_subcommand("hermitian", "Hermitian codes");
  int v_q0 = 2, v_max_dim = -1, v_ghw = 0;
  vh->add_option("--q0", v_q0, "2 or 3")->required();
  vh->add_option("--max-dim", v_max_dim, "largest dimension searched exhaustively");
  vh->add_option("--ghw", v_ghw, "check weight hierarchies for r = 1..R");
  vh->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (sg->parsed()) {
      const auto s = NumericalSemigroup::from_generators(sg_gens);
      const int bound = up_to < 0 ? s.conductor() : up_to;
      const auto elements = s.elements_up_to(bound);
      if (as_json) {
        out << json{{"generators", s.generators()},
                    {"genus", s.genus()},
                    {"gaps", s.gaps()},
                    {"frobenius", s.frobenius()},
                    {"symmetric", s.is_symmetric()},
                    {"elements", elements}}
                   .dump()
            << '\n';
      } else {
        out << "generators: " << detail::join(s.generators()) << '\n'
            << "genus: " << s.genus() << '\n'
            << "gaps: " << detail::join(s.gaps()) << '\n'
            << "frobenius: " << s.frobenius() << '\n'
            << "symmetric: " << (s.is_symmetric() ? "true" : "false") << '\n'
            << "elements: " << detail::join(elements) << '\n';
      }
    } else if (hsc->parsed()) {
      const HStar hs = hs_args.build();
      if (as_json) {
        out << detail::hstar_json(hs).dump() << '\n';
      } else {
        out << "n: " << hs.n() << '\n'
            << "mode: " << to_string(hs.mode()) << '\n'
            << "members: " << detail::join(hs.members()) << '\n'
            << "isometry_dual: " << (hs.is_isometry_dual() ? "true" : "false") << '\n'
            << "pi: " << hs.pi() << '\n';
      }
    } else if (bc->parsed()) {
      const HStar hs = b_args.build();
      const auto rows = bound_table(LambdaProfile(hs));
      if (as_json) {
        json arr = json::array();
        for (const auto& r : rows) {
          json row{{"i", r.i}, {"m_i", r.m}, {"lambda_count", r.lambda_count}, {"d_star", r.d_star}, {"goppa", r.goppa}};
          if (r.d_ord) row["d_ord"] = *r.d_ord;
          arr.push_back(row);
        }
        out << arr.dump() << '\n';
      } else {
        const bool ord = hs.is_isometry_dual();
        out << "i m_i lambda_count d_star goppa" << (ord ? " d_ord" : "") << '\n';
        for (const auto& r : rows) {
          out << r.i << ' ' << r.m << ' ' << r.lambda_count << ' ' << r.d_star << ' ' << r.goppa;
          if (r.d_ord) out << ' ' << *r.d_ord;
          out << '\n';
        }
      }
    } else if (gc->parsed()) {
      const HStar hs = g_args.build();
      const int bound = ghw_bound(hs, ghw_i, ghw_r, GhwOptions{node_cap});
      if (as_json)
        out << json{{"r", ghw_r}, {"i", ghw_i}, {"bound", bound}}.dump() << '\n';
      else
        out << "r: " << ghw_r << '\n' << "i: " << ghw_i << '\n' << "bound: " << bound << '\n';
    } else if (ic->parsed()) {
      const HStar hs = i_args.build();
      const auto p = improved_profile(hs, delta);
      if (as_json) {
        out << json{{"delta", p.delta}, {"dimension", p.dimension}, {"monotone", p.monotone}, {"indices", p.indices}}
                   .dump()
            << '\n';
      } else {
        out << "delta: " << p.delta << '\n'
            << "dimension: " << p.dimension << '\n'
            << "monotone: " << (p.monotone ? "true" : "false") << '\n'
            << "indices: " << detail::join(p.indices) << '\n';
      }
    } else if (ch->parsed()) {
      const auto table = hermitian_table(c_q0);
      if (!emit_table.empty()) io::save_table(emit_table, table);
      std::vector<int> poles;
      for (const auto& f : table.functions()) poles.push_back(f.pole_order);
      json summary{{"field", {{"p", table.field().characteristic()}, {"k", table.field().degree()}}},
                   {"n", table.n()},
                   {"genus", table.genus()},
                   {"semigroup_generators", table.semigroup().generators()},
                   {"pole_orders", poles}};
      if (c_m >= 0) {
        const auto c = code(table, c_m);
        if (!emit_matrix.empty()) io::write_json_file(emit_matrix, io::to_json(c.generator));
        summary["m"] = c.m;
        summary["dimension"] = c.dimension;
      }
      if (as_json) {
        out << summary.dump() << '\n';
      } else {
        out << "field: GF(" << table.field().q() << ")\n"
            << "n: " << table.n() << '\n'
            << "genus: " << table.genus() << '\n'
            << "semigroup_generators: " << detail::join(table.semigroup().generators()) << '\n'
            << "pole_orders: " << detail::join(poles) << '\n';
        if (c_m >= 0) out << "m: " << c_m << '\n' << "dimension: " << summary["dimension"].get<int>() << '\n';
      }
    } else if (vh->parsed()) {
      VerifyOptions opts;
      opts.max_dim = v_max_dim;
      opts.ghw_max_r = v_ghw;
      opts.budget = oracle::SearchBudget::from_env();
      const auto rep = verify_table(hermitian_table(v_q0), opts);
      if (as_json) {
        json arr = json::array();
        for (const auto& c : rep.checks) arr.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        out << json{{"checks", arr}, {"failures", rep.failures()}, {"skipped", rep.skipped}}.dump() << '\n';
      } else {
        for (const auto& c : rep.checks)
          out << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  " + c.detail) << '\n';
        out << rep.checks.size() - static_cast<std::size_t>(rep.failures()) << " passed, " << rep.failures()
            << " failed, " << rep.skipped << " skipped (budget)\n";
      }
      if (!rep.ok()) {
        err << to_string(Errc::InternalInvariantViolation) << ": " << rep.failures() << " checks failed\n";
        return 1;
      }
    }
  } catch (const CLI::RequiredError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace agb::cli
