#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "agb/error.hpp"
#include "agb/semigroup.hpp"

namespace agb {

enum class HStarMode { Explicit, EquivDivisor, IsometryDual, Abundance, CodeChain };

constexpr std::string_view to_string(HStarMode mode) noexcept {
  switch (mode) {
    case HStarMode::Explicit: return "explicit";
    case HStarMode::EquivDivisor: return "equiv-divisor";
    case HStarMode::IsometryDual: return "isometry-dual";
    case HStarMode::Abundance: return "abundance";
    case HStarMode::CodeChain: return "code-chain";
  }
  return "unknown";
}

/// The n jump positions m_1 < ... < m_n of the chain C(D, mQ), m = 0..n+2g-1,
/// described purely in terms of the Weierstrass semigroup H.
///
/// Every constructor validates the full invariant set:
///   - n > 2g + 2 and exactly n members, all in H and in [0, n+2g-1];
///   - below n, membership coincides with H;
///   - a non-member m >= n of H forces m + h out for every h in H.
class HStar {
 public:
  /// m_0 = -1 stands for the zero code C_0.
  static constexpr int kSentinel = -1;

  static HStar from_explicit(const NumericalSemigroup& s, int n, std::vector<int> members) {
    require_length(s, n);
    std::sort(members.begin(), members.end());
    HStar hs(s, n, std::move(members), HStarMode::Explicit);
    hs.validate();
    return hs;
  }

  /// D ~ nQ: (H ∩ [0, n-1]) ∪ {n + l : l a gap}.
  static HStar from_equiv_divisor(const NumericalSemigroup& s, int n) {
    require_length(s, n);
    std::vector<int> members = s.elements_up_to(n - 1);
    for (int l : s.gaps()) members.push_back(n + l);
    HStar hs(s, n, std::move(members), HStarMode::EquivDivisor);
    hs.validate();
    return hs;
  }

  /// Isometry-dual chains: {m in H : n+2g-1-m in H}. The complement form
  /// [0, n+2g-1] minus {l_j} and {n+2g-1-l_j} is computed as well and must agree.
  static HStar from_isometry_dual(const NumericalSemigroup& s, int n) {
    require_length(s, n);
    const int top = n + 2 * s.genus() - 1;
    std::vector<int> members;
    for (int m = 0; m <= top; ++m)
      if (s.contains(m) && s.contains(top - m)) members.push_back(m);

    std::vector<char> excluded(static_cast<std::size_t>(top + 1), 0);
    for (int l : s.gaps()) {
      excluded[static_cast<std::size_t>(l)] = 1;
      excluded[static_cast<std::size_t>(top - l)] = 1;
    }
    std::vector<int> complement;
    for (int m = 0; m <= top; ++m)
      if (!excluded[static_cast<std::size_t>(m)]) complement.push_back(m);
    if (complement != members)
      fail(Errc::InternalInvariantViolation, "symmetric and complement descriptions of H* differ");

    HStar hs(s, n, std::move(members), HStarMode::IsometryDual);
    hs.validate();
    return hs;
  }

  /// From the abundances ell(m) = l(mQ - D), m = 0..n+2g-1 (ell(-1) = 0).
  static HStar from_abundance(const NumericalSemigroup& s, int n, std::span<const int> ell) {
    require_length(s, n);
    const int g = s.genus();
    const auto len = static_cast<std::size_t>(n + 2 * g);
    if (ell.size() != len)
      fail(Errc::MalformedAbundance,
           "expected " + std::to_string(len) + " values, got " + std::to_string(ell.size()));
    int prev = 0;
    for (std::size_t m = 0; m < len; ++m) {
      const int step = ell[m] - prev;
      if (step != 0 && step != 1)
        fail(Errc::MalformedAbundance, "increment " + std::to_string(step) + " at m=" + std::to_string(m));
      if (static_cast<int>(m) < n && ell[m] != 0)
        fail(Errc::MalformedAbundance, "nonzero abundance below n at m=" + std::to_string(m));
      prev = ell[m];
    }
    if (ell.back() != g)
      fail(Errc::MalformedAbundance, "abundance at n+2g-1 must equal the genus");

    std::vector<int> members;
    prev = 0;
    for (std::size_t m = 0; m < len; ++m) {
      if (s.contains(static_cast<int>(m)) && ell[m] == prev) members.push_back(static_cast<int>(m));
      prev = ell[m];
    }
    return validated_or(s, n, std::move(members), HStarMode::Abundance, Errc::ResultInvalid);
  }

  /// From measured dimensions dim C(D, mQ), m = 0..n+2g-1. n is the final
  /// dimension; the sequence length must then be n + 2g.
  static HStar from_dimension_chain(std::span<const int> dims, const NumericalSemigroup& s) {
    if (dims.empty()) fail(Errc::MalformedChain, "empty dimension sequence");
    const int n = dims.back();
    const int g = s.genus();
    if (dims.front() < 1) fail(Errc::MalformedChain, "dimension at m=0 must be at least 1");
    if (static_cast<long>(dims.size()) != static_cast<long>(n) + 2 * g)
      fail(Errc::MalformedChain, "chain of length " + std::to_string(dims.size()) + " does not end at n+2g-1 for n=" +
                                     std::to_string(n));
    std::vector<int> members;
    int prev = 0;
    for (std::size_t m = 0; m < dims.size(); ++m) {
      const int step = dims[m] - prev;
      if (step != 0 && step != 1)
        fail(Errc::MalformedChain, "dimension step " + std::to_string(step) + " at m=" + std::to_string(m));
      if (step == 1) members.push_back(static_cast<int>(m));
      prev = dims[m];
    }
    require_length(s, n);
    return validated_or(s, n, std::move(members), HStarMode::CodeChain, Errc::MalformedChain);
  }

  const NumericalSemigroup& semigroup() const noexcept { return semigroup_; }
  int n() const noexcept { return n_; }
  int genus() const noexcept { return semigroup_.genus(); }
  /// n + 2g - 1, the largest budget for which the chain can still grow.
  int top() const noexcept { return n_ + 2 * genus() - 1; }
  HStarMode mode() const noexcept { return mode_; }
  const std::vector<int>& members() const noexcept { return members_; }

  /// m_i for 0 <= i <= n, with m_0 = -1.
  int m(std::size_t i) const {
    if (i > members_.size()) fail(Errc::IndexOutOfRange, "index " + std::to_string(i) + " exceeds n");
    return i == 0 ? kSentinel : members_[i - 1];
  }

  bool contains(int m) const noexcept {
    return m >= 0 && m <= top() && flags_[static_cast<std::size_t>(m)] != 0;
  }

  /// dim C(D, mQ) = #{members <= m}.
  int dimension_at(int m) const noexcept {
    return static_cast<int>(std::upper_bound(members_.begin(), members_.end(), m) - members_.begin());
  }

  bool is_isometry_dual() const noexcept { return contains(top()); }

  /// Smallest element of H outside H*.
  int pi() const noexcept {
    for (int m = 0;; ++m)
      if (semigroup_.contains(m) && !contains(m)) return m;
  }

 private:
  HStar(const NumericalSemigroup& s, int n, std::vector<int> members, HStarMode mode)
      : semigroup_(s), n_(n), members_(std::move(members)), mode_(mode) {}

  static void require_length(const NumericalSemigroup& s, int n) {
    if (n <= 2 * s.genus() + 2)
      fail(Errc::LengthTooSmall,
           "n=" + std::to_string(n) + " must exceed 2g+2=" + std::to_string(2 * s.genus() + 2));
  }

  static HStar validated_or(const NumericalSemigroup& s, int n, std::vector<int> members, HStarMode mode,
                            Errc wrap) {
    HStar hs(s, n, std::move(members), mode);
    try {
      hs.validate();
    } catch (const Error& e) {
      fail(wrap, e.what());
    }
    return hs;
  }

  void validate() {
    const int top_m = top();
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
      fail(Errc::WrongCardinality, "duplicate members");
    if (static_cast<int>(members_.size()) != n_)
      fail(Errc::WrongCardinality,
           "expected " + std::to_string(n_) + " members, got " + std::to_string(members_.size()));
    for (int m : members_) {
      if (m < 0 || m > top_m)
        fail(Errc::NotSubsetOfH, std::to_string(m) + " lies outside [0, n+2g-1]");
      if (!semigroup_.contains(m)) fail(Errc::NotSubsetOfH, std::to_string(m) + " is a gap");
    }
    flags_.assign(static_cast<std::size_t>(top_m + 1), 0);
    for (int m : members_) flags_[static_cast<std::size_t>(m)] = 1;
    for (int m = 0; m < n_; ++m)
      if (contains(m) != semigroup_.contains(m))
        fail(Errc::LowRangeMismatch, "membership of " + std::to_string(m) + " differs from H");
    for (int m = n_; m <= top_m; ++m) {
      if (contains(m) || !semigroup_.contains(m)) continue;
      for (int t = m + 1; t <= top_m; ++t)
        if (contains(t) && semigroup_.contains(t - m))
          fail(Errc::ClosureViolation,
               std::to_string(m) + " is excluded but " + std::to_string(t) + " = " + std::to_string(m) + " + " +
                   std::to_string(t - m) + " is a member");
    }
  }

  NumericalSemigroup semigroup_;
  int n_;
  std::vector<int> members_;
  HStarMode mode_;
  std::vector<char> flags_;
};

}  // namespace agb
