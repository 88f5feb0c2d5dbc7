#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "agb/bounds.hpp"
#include "agb/error.hpp"
#include "agb/evalcode.hpp"
#include "agb/generic_bound.hpp"
#include "agb/gf.hpp"
#include "agb/hstar.hpp"
#include "agb/oracle.hpp"

// Cross-checks every semigroup-level bound against brute force on the codes of
// one evaluation table.
namespace agb {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct VerifyOptions {
  int max_dim = -1;      // largest code dimension searched exhaustively; -1 = n
  int ghw_max_r = 0;     // r = 1..ghw_max_r for weight hierarchies
  int ghw_max_dim = 5;   // largest dimension for weight hierarchies
  oracle::SearchBudget budget{};
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  int skipped = 0;  // checks not run because a budget was exceeded

  int failures() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
  }
  bool ok() const { return failures() == 0; }
};

inline VerifyReport verify_table(const EvaluationTable& table, const VerifyOptions& opts = {}) {
  VerifyReport rep;
  auto check = [&](std::string name, bool pass, std::string detail = {}) {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  const int n = table.n();
  const int max_dim = opts.max_dim < 0 ? n : std::min(opts.max_dim, n);

  const auto dims = measured_dimensions(table);
  const HStar hs = empirical_hstar(table);
  const LambdaProfile profile(hs);
  const auto& s = table.semigroup();
  {
    bool steps_ok = true;
    for (int m = 0; m < n; ++m) {
      const int step = dims[static_cast<std::size_t>(m)] - (m > 0 ? dims[static_cast<std::size_t>(m - 1)] : 0);
      if ((step == 1) != s.contains(m)) steps_ok = false;
    }
    check("dimension steps below n occur exactly at members of H", steps_ok);
  }
  check("dimension at n+2g-1 equals n", dims.back() == n, "dim=" + std::to_string(dims.back()));

  const CodeChain chain(chain_basis(table, hs));
  const WellBehaving wb(chain);
  {
    bool nu_ok = true;
    for (int i = 1; i <= n; ++i)
      if (chain.nu(chain.b(i)) != i) nu_ok = false;
    check("nu(ev(f_i)) = i on the chain basis", nu_ok);
    bool pairs_ok = true;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (hs.contains(hs.m(static_cast<std::size_t>(i)) + hs.m(static_cast<std::size_t>(j))) && !wb.contains(i, j))
          pairs_ok = false;
    check("pairs with m_i + m_j in H* are well-behaving", pairs_ok);
    bool lambda_ok = true;
    for (int i = 1; i <= n; ++i)
      if (static_cast<int>(wb.lambda(i).size()) < profile.count(i) || wb.bound(i) < profile.d_star(i))
        lambda_ok = false;
    check("#Lambda_i >= #Lambda*_i and generic bound >= d*", lambda_ok);
  }

  // Minimum distances, one search per distinct code.
  std::map<int, int> distance_by_dim;
  for (int m = 0; m <= table.top(); ++m) {
    const int k = dims[static_cast<std::size_t>(m)];
    if (k > max_dim) continue;
    if (!distance_by_dim.count(k)) {
      try {
        distance_by_dim[k] = oracle::min_distance(code(table, m).generator, opts.budget);
      } catch (const Error& e) {
        if (e.code() != Errc::BudgetExceeded) throw;
        ++rep.skipped;
        continue;
      }
    }
    const int d = distance_by_dim[k];
    const std::string tag = "m=" + std::to_string(m) + " k=" + std::to_string(k) + " d=" + std::to_string(d);
    check("d >= d*(k)  [" + tag + "]", d >= profile.d_star(k), "d*=" + std::to_string(profile.d_star(k)));
    check("d >= generic bound  [" + tag + "]", d >= wb.bound(k), "generic=" + std::to_string(wb.bound(k)));
    if (m < n) check("d >= n - m  [" + tag + "]", d >= n - m, "goppa=" + std::to_string(n - m));
  }

  // Weight hierarchies against d*_r.
  for (int k = 1; k <= std::min(opts.ghw_max_dim, max_dim); ++k) {
    const auto it = std::find(dims.begin(), dims.end(), k);
    if (it == dims.end()) continue;
    const int m = static_cast<int>(it - dims.begin());
    const auto g = code(table, m).generator;
    for (int r = 1; r <= std::min(opts.ghw_max_r, k); ++r) {
      int dr = 0;
      try {
        dr = oracle::weight_hierarchy(g, r, opts.budget);
      } catch (const Error& e) {
        if (e.code() != Errc::BudgetExceeded) throw;
        ++rep.skipped;
        continue;
      }
      const int bound = ghw_bound(profile, k, r);
      check("d_r >= d*_r  [k=" + std::to_string(k) + " r=" + std::to_string(r) + " d_r=" + std::to_string(dr) + "]",
            dr >= bound, "bound=" + std::to_string(bound));
      if (r == 1 && distance_by_dim.count(k))
        check("d_1 = min distance  [k=" + std::to_string(k) + "]", dr == distance_by_dim[k]);
    }
  }

  // Isometry witness and the adjusted basis.
  std::optional<gf::FieldMatrix> adjusted;
  std::optional<gf::Vector> witness;
  try {
    witness = oracle::find_isometry_vector(chain.basis());
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
    ++rep.skipped;
  }
  check("isometry witness exists iff n+2g-1 in H*", witness.has_value() == hs.is_isometry_dual(),
        witness ? "witness found" : "no witness");
  if (witness) {
    try {
      adjusted = biorthogonal_adjust(chain.basis(), *witness);
      check("biorthogonal adjustment pairings", true);
      check("adjusted basis keeps f_1", adjusted->row_vector(0) == chain.basis().row_vector(0));
    } catch (const Error& e) {
      check("biorthogonal adjustment pairings", false, e.what());
    }
  }

  // Improved codes: canonical and adjusted rows both reach the designed distance.
  for (int delta = 1; delta <= n; ++delta) {
    const auto sel = improved_profile(profile, delta);
    if (sel.dimension > max_dim) continue;
    std::vector<std::pair<std::string, gf::FieldMatrix>> variants{{"canonical", improved_generators(table, delta)}};
    if (adjusted) variants.emplace_back("adjusted", improved_generators(table, delta, adjusted));
    for (const auto& [label, g] : variants) {
      int d = 0;
      try {
        d = oracle::min_distance(g, opts.budget);
      } catch (const Error& e) {
        if (e.code() != Errc::BudgetExceeded) throw;
        ++rep.skipped;
        continue;
      }
      check("improved code d >= delta  [" + label + " delta=" + std::to_string(delta) +
                " k=" + std::to_string(sel.dimension) + " d=" + std::to_string(d) + "]",
            sel.dimension == 0 || d >= delta);
    }
    if (sel.monotone && sel.dimension > 0) {
      const int m = hs.m(static_cast<std::size_t>(sel.dimension));
      check("monotone improved code is C(D, " + std::to_string(m) + "Q)  [delta=" + std::to_string(delta) + "]",
            gf::same_row_space(improved_generators(table, delta), code(table, m).generator));
    }
  }
  return rep;
}

}  // namespace agb
