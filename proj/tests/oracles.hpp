#pragma once

// Test-only brute-force references. Each one recomputes a quantity from its
// definition with no shared code path beyond field arithmetic.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "agb/gf.hpp"
#include "agb/hstar.hpp"
#include "agb/semigroup.hpp"

namespace ref {

/// Membership of [0, limit] by dynamic programming over generators.
inline std::vector<char> sieve(const std::vector<int>& gens, int limit) {
  std::vector<char> in(static_cast<std::size_t>(limit + 1), 0);
  in[0] = 1;
  for (int m = 1; m <= limit; ++m)
    for (int g : gens)
      if (g <= m && in[static_cast<std::size_t>(m - g)]) {
        in[static_cast<std::size_t>(m)] = 1;
        break;
      }
  return in;
}

inline std::vector<int> gaps(const std::vector<int>& gens) {
  const int mx = *std::max_element(gens.begin(), gens.end());
  const auto in = sieve(gens, 2 * mx * mx + 2);
  std::vector<int> out;
  for (std::size_t m = 0; m < in.size(); ++m)
    if (!in[m]) out.push_back(static_cast<int>(m));
  return out;
}

/// (m_i + H) ∩ H* straight from the definition.
inline std::set<int> lambda_star(const agb::HStar& hs, int i) {
  const int mi = hs.m(static_cast<std::size_t>(i));
  std::set<int> out;
  for (int m : hs.members())
    if (hs.semigroup().contains(m - mi)) out.insert(m);
  return out;
}

inline std::vector<int> lambda_counts(const agb::HStar& hs) {
  std::vector<int> out;
  for (int i = 1; i <= hs.n(); ++i) out.push_back(static_cast<int>(ref::lambda_star(hs, i).size()));
  return out;
}

/// d*_r(i) over every r-subset of {1..i}.
inline int ghw_naive(const agb::HStar& hs, int i, int r) {
  std::vector<std::set<int>> sets;
  for (int j = 1; j <= i; ++j) sets.push_back(ref::lambda_star(hs, j));
  std::vector<char> pick(static_cast<std::size_t>(i), 0);
  std::fill(pick.end() - r, pick.end(), 1);
  int best = hs.n() + 1;
  do {
    std::set<int> u;
    for (int j = 0; j < i; ++j)
      if (pick[static_cast<std::size_t>(j)]) u.insert(sets[static_cast<std::size_t>(j)].begin(), sets[static_cast<std::size_t>(j)].end());
    best = std::min(best, static_cast<int>(u.size()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

/// Every codeword of the row space of `g`, including zero.
inline std::vector<agb::gf::Vector> all_codewords(const agb::gf::FieldMatrix& g) {
  const auto& f = g.field();
  std::vector<agb::gf::Vector> words{agb::gf::Vector(g.cols(), 0)};
  for (std::size_t r = 0; r < g.rows(); ++r) {
    std::vector<agb::gf::Vector> next;
    for (const auto& w : words)
      for (agb::gf::Element c = 0; c < f.q(); ++c) {
        auto v = w;
        agb::gf::axpy(f, c, g.row(r), v);
        next.push_back(std::move(v));
      }
    words = std::move(next);
  }
  return words;
}

inline int min_distance(const agb::gf::FieldMatrix& g) {
  int best = static_cast<int>(g.cols()) + 1;
  for (const auto& w : all_codewords(g)) {
    const int wt = agb::gf::weight(w);
    if (wt > 0) best = std::min(best, wt);
  }
  return best > static_cast<int>(g.cols()) ? 0 : best;
}

/// d_r by trying every r-tuple of codewords and keeping independent ones.
inline int weight_hierarchy(const agb::gf::FieldMatrix& g, int r) {
  const auto words = all_codewords(g);
  const std::size_t n = g.cols();
  int best = static_cast<int>(n) + 1;
  std::vector<std::size_t> idx(static_cast<std::size_t>(r));
  auto rec = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    if (depth == idx.size()) {
      std::vector<agb::gf::Vector> rows;
      for (auto k : idx) rows.push_back(words[k]);
      const auto m = agb::gf::FieldMatrix::from_rows(g.field(), n, rows);
      if (agb::gf::rank(m) != idx.size()) return;
      int s = 0;
      for (std::size_t c = 0; c < n; ++c)
        for (const auto& row : rows)
          if (row[c]) {
            ++s;
            break;
          }
      best = std::min(best, s);
      return;
    }
    for (std::size_t k = start; k < words.size(); ++k) {
      idx[depth] = k;
      self(self, depth + 1, k + 1);
    }
  };
  rec(rec, 0, 1);
  return best;
}

/// Every distinct semigroup generated by a subset of {lo..hi} with genus <= max_genus.
inline std::vector<agb::NumericalSemigroup> semigroup_family(int lo, int hi, int max_genus) {
  std::map<std::vector<int>, agb::NumericalSemigroup> seen;
  const int width = hi - lo + 1;
  for (std::uint32_t mask = 1; mask < (1u << width); ++mask) {
    std::vector<int> gens;
    int g = 0;
    for (int b = 0; b < width; ++b)
      if (mask & (1u << b)) {
        gens.push_back(lo + b);
        g = std::gcd(g, lo + b);
      }
    if (g != 1) continue;
    auto s = agb::NumericalSemigroup::from_generators(gens);
    if (s.genus() > max_genus) continue;
    seen.emplace(s.gaps(), std::move(s));
  }
  std::vector<agb::NumericalSemigroup> out;
  for (auto& [k, s] : seen) out.push_back(std::move(s));
  return out;
}

inline agb::gf::FieldMatrix random_matrix(const agb::gf::FiniteField& f, std::size_t rows, std::size_t cols,
                                          std::mt19937& rng) {
  std::uniform_int_distribution<agb::gf::Element> d(0, f.q() - 1);
  std::vector<agb::gf::Element> data(rows * cols);
  for (auto& x : data) x = d(rng);
  return agb::gf::FieldMatrix(f, rows, cols, std::move(data));
}

inline agb::gf::FieldMatrix random_invertible(const agb::gf::FiniteField& f, std::size_t n, std::mt19937& rng) {
  while (true) {
    auto m = random_matrix(f, n, n, rng);
    if (agb::gf::rank(m) == n) return m;
  }
}

}  // namespace ref
