#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "agb/error.hpp"
#include "agb/gf.hpp"

// Exhaustive ground truth for small codes. Nothing here looks at semigroups;
// every answer comes from enumerating codewords or subspaces.
namespace agb::oracle {

struct SearchBudget {
  std::uint64_t max_codewords = std::uint64_t{1} << 26;
  std::uint64_t max_subspaces = 10'000'000;

  /// Defaults overridden by AGB_BUDGET_CODEWORDS / AGB_BUDGET_SUBSPACES.
  static SearchBudget from_env() {
    SearchBudget b;
    auto read = [](const char* name, std::uint64_t& out) {
      if (const char* v = std::getenv(name)) {
        char* end = nullptr;
        const auto parsed = std::strtoull(v, &end, 10);
        if (end == v || *end != '\0' || parsed == 0)
          fail(Errc::BudgetOutOfRange, std::string(name) + " must be a positive integer");
        out = parsed;
      }
    };
    read("AGB_BUDGET_CODEWORDS", b.max_codewords);
    read("AGB_BUDGET_SUBSPACES", b.max_subspaces);
    return b;
  }
};

namespace detail {

// q^e, saturating at UINT64_MAX.
inline std::uint64_t power_sat(std::uint64_t q, std::size_t e) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (out > UINT64_MAX / q) return UINT64_MAX;
    out *= q;
  }
  return out;
}

// Number of r-dimensional subspaces of F_q^k, saturating.
inline std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t k, std::size_t r) {
  if (r > k) return 0;
  long double num = 1.0L;
  for (std::size_t i = 0; i < r; ++i) {
    num *= (static_cast<long double>(power_sat(q, k - i)) - 1.0L) /
           (static_cast<long double>(power_sat(q, r - i)) - 1.0L);
  }
  if (num > 1.8e19L) return UINT64_MAX;
  return static_cast<std::uint64_t>(num + 0.5L);
}

// Walks all of F_q^len in modular q-ary Gray order: every step changes one
// digit by +1 (mod q, on the packed encodings). `visit(pos, old, new)` is
// called per step; the all-zero word is the implicit start.
template <typename Visit>
void gray_walk(std::uint32_t q, std::size_t len, Visit&& visit) {
  std::vector<std::uint32_t> counter(len, 0);
  std::vector<std::uint32_t> gray(len, 0);
  while (true) {
    std::size_t j = 0;
    while (j < len && counter[j] == q - 1) counter[j++] = 0;
    if (j == len) return;
    ++counter[j];
    const std::uint32_t old = gray[j];
    gray[j] = (gray[j] + 1) % q;
    visit(j, old, gray[j]);
  }
}

}  // namespace detail

/// Minimum weight of a nonzero codeword of the row space; 0 for the zero code.
///
/// Only messages whose last nonzero symbol is 1 are visited: scalar multiples
/// share a weight.
inline int min_distance(const gf::FieldMatrix& m, const SearchBudget& budget = {}) {
  const auto g = gf::row_basis(m);
  const auto& f = g.field();
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  if (k == 0) return 0;
  const std::uint64_t words = detail::power_sat(f.q(), k);
  if (words > budget.max_codewords)
    fail(Errc::BudgetExceeded, "q^k=" + (words == UINT64_MAX ? std::string("overflow") : std::to_string(words)) +
                                   " exceeds the codeword budget " + std::to_string(budget.max_codewords));

  int best = static_cast<int>(n);
  for (std::size_t lead = 0; lead < k && best > 1; ++lead) {
    gf::Vector word = g.row_vector(lead);
    best = std::min(best, gf::weight(word));
    detail::gray_walk(f.q(), lead, [&](std::size_t pos, gf::Element old, gf::Element now) {
      gf::axpy(f, f.sub(now, old), g.row(pos), word);
      best = std::min(best, gf::weight(word));
    });
  }
  return best;
}

/// d_r: the smallest support of an r-dimensional subcode. Subspaces are
/// enumerated once each through their reduced echelon generator over the
/// message space.
inline int weight_hierarchy(const gf::FieldMatrix& m, int r, const SearchBudget& budget = {}) {
  const auto g = gf::row_basis(m);
  const auto& f = g.field();
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  if (r < 1 || static_cast<std::size_t>(r) > k)
    fail(Errc::IndexOutOfRange, "r=" + std::to_string(r) + " outside 1.." + std::to_string(k));
  const auto ru = static_cast<std::size_t>(r);
  const std::uint64_t count = detail::gaussian_binomial(f.q(), k, ru);
  if (count > budget.max_subspaces)
    fail(Errc::BudgetExceeded, std::to_string(count) + " subspaces exceed the budget " +
                                   std::to_string(budget.max_subspaces));

  int best = static_cast<int>(n);
  std::vector<std::size_t> pivots(ru);
  for (std::size_t a = 0; a < ru; ++a) pivots[a] = a;

  auto support = [&](const std::vector<gf::Vector>& rows) {
    int s = 0;
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& row : rows)
        if (row[c] != 0) {
          ++s;
          break;
        }
    return s;
  };

  while (true) {
    // Free slots: (row a, column c) with c > pivots[a] and c not a pivot.
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    std::vector<char> is_pivot(k, 0);
    for (auto p : pivots) is_pivot[p] = 1;
    for (std::size_t a = 0; a < ru; ++a)
      for (std::size_t c = pivots[a] + 1; c < k; ++c)
        if (!is_pivot[c]) free_slots.emplace_back(a, c);

    std::vector<gf::Vector> rows;
    for (std::size_t a = 0; a < ru; ++a) rows.push_back(g.row_vector(pivots[a]));
    best = std::min(best, support(rows));
    detail::gray_walk(f.q(), free_slots.size(), [&](std::size_t slot, gf::Element old, gf::Element now) {
      auto [a, c] = free_slots[slot];
      gf::axpy(f, f.sub(now, old), g.row(c), rows[a]);
      best = std::min(best, support(rows));
    });

    // Next pivot combination in lexicographic order.
    std::size_t a = ru;
    while (a > 0 && pivots[a - 1] == k - ru + (a - 1)) --a;
    if (a == 0) break;
    ++pivots[a - 1];
    for (std::size_t b = a; b < ru; ++b) pivots[b] = pivots[b - 1] + 1;
  }
  return best;
}

/// Generator matrix of the dual code.
inline gf::FieldMatrix dual(const gf::FieldMatrix& m) { return gf::nullspace(m); }

namespace detail {

// x * C_i must be C_{n-i}^perp for every i.
inline bool verify_isometry(const gf::FieldMatrix& basis, const gf::Vector& x) {
  const auto& f = basis.field();
  const std::size_t n = basis.rows();
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<gf::Vector> scaled;
    for (std::size_t r = 0; r < i; ++r) scaled.push_back(gf::hadamard(f, x, basis.row(r)));
    std::vector<gf::Vector> lower;
    for (std::size_t r = 0; r < n - i; ++r) lower.push_back(basis.row_vector(r));
    const auto image = gf::FieldMatrix::from_rows(f, n, scaled);
    const auto perp = dual(gf::FieldMatrix::from_rows(f, n, lower));
    if (!gf::same_row_space(image, perp)) return false;
  }
  return true;
}

}  // namespace detail

/// Searches x in (F_q^*)^n with x * C_i = C_{n-i}^perp for all i, where C_i is
/// spanned by the first i basis rows. The conditions (x * b_a) . b_b = 0 for
/// a + b <= n are linear in x; the solution space is scanned for a vector with
/// no zero coordinate, up to `max_candidates` combinations.
inline std::optional<gf::Vector> find_isometry_vector(const gf::FieldMatrix& basis,
                                                      std::uint64_t max_candidates = 1'000'000) {
  const auto& f = basis.field();
  const std::size_t n = basis.rows();
  if (basis.cols() != n) fail(Errc::DimensionMismatch, "chain basis must be square");
  if (n > 32) fail(Errc::UnsupportedParameter, "isometry search is limited to n <= 32");

  std::vector<gf::Vector> constraints;
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = a; a + b <= n; ++b) constraints.push_back(gf::hadamard(f, basis.row(a - 1), basis.row(b - 1)));
  const auto solutions = constraints.empty() ? gf::FieldMatrix::identity(f, n)
                                             : gf::nullspace(gf::FieldMatrix::from_rows(f, n, constraints));
  const std::size_t d = solutions.rows();
  if (d == 0) return std::nullopt;
  const std::uint64_t total = detail::power_sat(f.q(), d);
  if (total > max_candidates)
    fail(Errc::BudgetExceeded, "solution space of dimension " + std::to_string(d) + " is too large to scan");

  std::optional<gf::Vector> found;
  // Projective scan: the last nonzero combination coefficient is 1.
  for (std::size_t lead = 0; lead < d && !found; ++lead) {
    gf::Vector x = solutions.row_vector(lead);
    auto check = [&] {
      if (!found && std::none_of(x.begin(), x.end(), [](gf::Element e) { return e == 0; })) found = x;
    };
    check();
    detail::gray_walk(f.q(), lead, [&](std::size_t pos, gf::Element old, gf::Element now) {
      gf::axpy(f, f.sub(now, old), solutions.row(pos), x);
      check();
    });
  }
  if (found && !detail::verify_isometry(basis, *found))
    fail(Errc::InternalInvariantViolation, "witness does not map C_i onto the dual of C_{n-i}");
  return found;
}

}  // namespace agb::oracle
