#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agb/error.hpp"
#include "agb/hstar.hpp"
#include "agb/semigroup.hpp"

namespace agb {

namespace detail {

// Fixed-width bitset over [0, n+2g-1]; only what the union search needs.
class SmallBitset {
 public:
  SmallBitset() = default;
  explicit SmallBitset(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t pos) { words_[pos / 64] |= std::uint64_t{1} << (pos % 64); }

  SmallBitset& operator|=(const SmallBitset& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }

  int count() const noexcept {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace detail

/// The sets Λ*_i = (m_i + H) ∩ H*, materialized, for i = 1..n.
class LambdaProfile {
 public:
  explicit LambdaProfile(const HStar& hs) : hstar_(hs) {
    const auto n = static_cast<std::size_t>(hs.n());
    const auto& s = hs.semigroup();
    sets_.resize(n);
    counts_.resize(n);
    bits_.assign(n, detail::SmallBitset(static_cast<std::size_t>(hs.top() + 1)));
    for (std::size_t i = 0; i < n; ++i) {
      const int mi = hs.members()[i];
      for (std::size_t j = i; j < n; ++j) {
        const int m = hs.members()[j];
        if (s.contains(m - mi)) {
          sets_[i].push_back(m);
          bits_[i].set(static_cast<std::size_t>(m));
        }
      }
      counts_[i] = static_cast<int>(sets_[i].size());
    }
    running_min_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      running_min_[i] = i == 0 ? counts_[0] : std::min(running_min_[i - 1], counts_[i]);
  }

  const HStar& hstar() const noexcept { return hstar_; }
  int n() const noexcept { return hstar_.n(); }

  /// Λ*_i, 1-based.
  const std::vector<int>& set(int i) const { return sets_[index(i)]; }
  int count(int i) const { return counts_[index(i)]; }
  const std::vector<int>& counts() const noexcept { return counts_; }

  /// d*(i) = min{#Λ*_r : r <= i}.
  int d_star(int i) const { return running_min_[index(i)]; }
  const std::vector<int>& d_star_sequence() const noexcept { return running_min_; }

  const detail::SmallBitset& bits(int i) const { return bits_[index(i)]; }

 private:
  std::size_t index(int i) const {
    if (i < 1 || i > n())
      fail(Errc::IndexOutOfRange, "index " + std::to_string(i) + " outside 1.." + std::to_string(n()));
    return static_cast<std::size_t>(i - 1);
  }

  HStar hstar_;
  std::vector<std::vector<int>> sets_;
  std::vector<int> counts_;
  std::vector<int> running_min_;
  std::vector<detail::SmallBitset> bits_;
};

inline std::vector<int> lambda_star(const HStar& hs, int i) { return LambdaProfile(hs).set(i); }

inline LambdaProfile lambda_profile(const HStar& hs) { return LambdaProfile(hs); }

inline int d_star(const HStar& hs, int i) { return LambdaProfile(hs).d_star(i); }

/// A[h] = {t in H : h - t in H}.
inline std::vector<int> a_set(const NumericalSemigroup& s, int h) {
  if (!s.contains(h)) fail(Errc::NotAMember, std::to_string(h) + " is not in H");
  std::vector<int> out;
  for (int t = 0; t <= h; ++t)
    if (s.contains(t) && s.contains(h - t)) out.push_back(t);
  return out;
}

inline int a_count(const NumericalSemigroup& s, int h) { return static_cast<int>(a_set(s, h).size()); }

namespace detail {
inline void require_isometry_dual(const HStar& hs) {
  if (!hs.is_isometry_dual())
    fail(Errc::NotIsometryDual, "n+2g-1=" + std::to_string(hs.top()) + " is not in H*");
}
}  // namespace detail

/// Order bound via the reduction min{#A[m_{n-r+1}] : r <= i}.
inline int d_ord(const HStar& hs, int i) {
  detail::require_isometry_dual(hs);
  if (i < 1 || i > hs.n()) fail(Errc::IndexOutOfRange, "index " + std::to_string(i));
  int best = hs.n() + 1;
  for (int r = 1; r <= i; ++r)
    best = std::min(best, a_count(hs.semigroup(), hs.m(static_cast<std::size_t>(hs.n() - r + 1))));
  return best;
}

/// Order bound in its defining form min{#A[h] : h in H*, h >= n+2g-1-m_i}.
inline int d_ord_direct(const HStar& hs, int i) {
  detail::require_isometry_dual(hs);
  if (i < 1 || i > hs.n()) fail(Errc::IndexOutOfRange, "index " + std::to_string(i));
  const int threshold = hs.top() - hs.m(static_cast<std::size_t>(i));
  int best = hs.n() + 1;
  for (int h : hs.members())
    if (h >= threshold) best = std::min(best, a_count(hs.semigroup(), h));
  return best;
}

struct BoundRow {
  int i;
  int m;
  int lambda_count;
  int d_star;
  int goppa;  // n - m_i, unclamped
  std::optional<int> d_ord;
};

inline std::vector<BoundRow> bound_table(const LambdaProfile& profile) {
  const HStar& hs = profile.hstar();
  const bool iso = hs.is_isometry_dual();
  std::vector<BoundRow> rows;
  int ord = hs.n() + 1;
  for (int i = 1; i <= hs.n(); ++i) {
    BoundRow row{i, hs.m(static_cast<std::size_t>(i)), profile.count(i), profile.d_star(i),
                 hs.n() - hs.m(static_cast<std::size_t>(i)), std::nullopt};
    if (iso) {
      ord = std::min(ord, a_count(hs.semigroup(), hs.m(static_cast<std::size_t>(hs.n() - i + 1))));
      row.d_ord = ord;
    }
    rows.push_back(row);
  }
  return rows;
}

struct GoppaRow {
  int goppa;
  int dstar;
  bool equality;
};

/// Checks d*(i) >= n - m_i everywhere and equality whenever m_i < pi - l_g.
inline std::vector<GoppaRow> goppa_compare(const LambdaProfile& profile) {
  const HStar& hs = profile.hstar();
  const int cutoff = hs.pi() - hs.semigroup().frobenius();
  std::vector<GoppaRow> rows;
  for (int i = 1; i <= hs.n(); ++i) {
    const int mi = hs.m(static_cast<std::size_t>(i));
    GoppaRow row{hs.n() - mi, profile.d_star(i), false};
    row.equality = row.dstar == row.goppa;
    if (row.dstar < row.goppa)
      fail(Errc::InternalInvariantViolation, "d*(" + std::to_string(i) + ") below the Goppa value");
    if (mi < cutoff && !row.equality)
      fail(Errc::InternalInvariantViolation, "expected Goppa equality at i=" + std::to_string(i));
    rows.push_back(row);
  }
  return rows;
}

inline std::vector<GoppaRow> goppa_compare(const HStar& hs) { return goppa_compare(LambdaProfile(hs)); }

struct LSetCheck {
  std::vector<int> l_set;
  bool identity_holds;
};

/// L_i = m_i + gaps and the identity #Λ*_i = n - i + 1 - #(L_i ∩ H*).
inline LSetCheck l_set_check(const LambdaProfile& profile, int i) {
  const HStar& hs = profile.hstar();
  detail::require_isometry_dual(hs);
  const int count = profile.count(i);
  const int mi = hs.m(static_cast<std::size_t>(i));
  LSetCheck out;
  int hits = 0;
  for (int l : hs.semigroup().gaps()) {
    out.l_set.push_back(mi + l);
    if (hs.contains(mi + l)) ++hits;
  }
  out.identity_holds = count == hs.n() - i + 1 - hits;
  return out;
}

inline LSetCheck l_set_check(const HStar& hs, int i) { return l_set_check(LambdaProfile(hs), i); }

struct ImprovedProfile {
  int delta;
  std::vector<int> indices;  // 1-based i with #Λ*_i >= delta
  int dimension;
  bool monotone;
};

inline ImprovedProfile improved_profile(const LambdaProfile& profile, int delta) {
  if (delta < 1 || delta > profile.n())
    fail(Errc::DeltaOutOfRange, "delta=" + std::to_string(delta) + " outside 1.." + std::to_string(profile.n()));
  ImprovedProfile out{delta, {}, 0, true};
  for (int i = 1; i <= profile.n(); ++i)
    if (profile.count(i) >= delta) out.indices.push_back(i);
  out.dimension = static_cast<int>(out.indices.size());
  // Monotone iff the selected indices are exactly 1..dimension.
  for (int k = 0; k < out.dimension; ++k)
    if (out.indices[static_cast<std::size_t>(k)] != k + 1) out.monotone = false;
  return out;
}

inline ImprovedProfile improved_profile(const HStar& hs, int delta) {
  return improved_profile(LambdaProfile(hs), delta);
}

/// Dimension of the Feng-Rao improved code n - #{i : #A[m_i] < delta}.
inline int feng_rao_improved_dim(const HStar& hs, int delta) {
  detail::require_isometry_dual(hs);
  if (delta < 1 || delta > hs.n()) fail(Errc::DeltaOutOfRange, "delta=" + std::to_string(delta));
  int checks = 0;
  for (int m : hs.members())
    if (a_count(hs.semigroup(), m) < delta) ++checks;
  return hs.n() - checks;
}

struct GhwOptions {
  std::uint64_t node_cap = 10'000'000;
};

/// d*_r(i) = min over j_1 < ... < j_r <= i of #(Λ*_{j_1} ∪ ... ∪ Λ*_{j_r}).
///
/// Depth-first over increasing index tuples. A partial union already as large
/// as the incumbent is cut, since unions only grow. The incumbent starts at the
/// union of the last r sets, which are the smallest.
inline int ghw_bound(const LambdaProfile& profile, int i, int r, GhwOptions opts = {}) {
  if (i < 1 || i > profile.n() || r < 1 || r > i)
    fail(Errc::IndexOutOfRange, "need 1 <= r <= i <= n, got r=" + std::to_string(r) + " i=" + std::to_string(i));

  detail::SmallBitset seed = profile.bits(i - r + 1);
  for (int j = i - r + 2; j <= i; ++j) seed |= profile.bits(j);
  int best = seed.count();

  std::uint64_t nodes = 0;
  auto search = [&](auto&& self, int start, int depth, const detail::SmallBitset& acc) -> void {
    for (int j = start; j <= i - (r - depth) + 1; ++j) {
      if (++nodes > opts.node_cap)
        fail(Errc::EnumerationCapExceeded, "node cap " + std::to_string(opts.node_cap) + " exceeded");
      detail::SmallBitset next = acc;
      next |= profile.bits(j);
      const int size = next.count();
      if (size >= best) continue;
      if (depth + 1 == r)
        best = size;
      else
        self(self, j + 1, depth + 1, next);
    }
  };
  search(search, 1, 0, detail::SmallBitset(static_cast<std::size_t>(profile.hstar().top() + 1)));
  return best;
}

inline int ghw_bound(const HStar& hs, int i, int r, GhwOptions opts = {}) {
  return ghw_bound(LambdaProfile(hs), i, r, opts);
}

struct GhwEntry {
  int r;
  int i;
  int bound;
};

inline std::vector<GhwEntry> ghw_table(const LambdaProfile& profile, const std::vector<std::pair<int, int>>& pairs,
                                       GhwOptions opts = {}) {
  std::vector<GhwEntry> out;
  for (auto [r, i] : pairs) out.push_back({r, i, ghw_bound(profile, i, r, opts)});
  return out;
}

}  // namespace agb
