#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "agb/error.hpp"

namespace agb {

/// A numerical semigroup H = <generators>, i.e. a cofinite submonoid of the
/// nonnegative integers. Membership below the conductor is stored as a table;
/// everything at or above the conductor is a member.
class NumericalSemigroup {
 public:
  static NumericalSemigroup from_generators(std::span<const int> gens) {
    if (gens.empty()) fail(Errc::EmptyGenerators, "at least one generator is required");
    std::vector<int> sorted(gens.begin(), gens.end());
    for (int g : sorted)
      if (g < 1) fail(Errc::InvalidGenerator, "generator " + std::to_string(g) + " is not positive");
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    int d = 0;
    for (int g : sorted) d = std::gcd(d, g);
    if (d != 1) fail(Errc::GcdNotOne, "gcd of generators is " + std::to_string(d));
    return NumericalSemigroup(std::move(sorted));
  }

  static NumericalSemigroup from_generators(std::initializer_list<int> gens) {
    return from_generators(std::span<const int>(gens.begin(), gens.size()));
  }

  const std::vector<int>& generators() const noexcept { return generators_; }
  const std::vector<int>& gaps() const noexcept { return gaps_; }
  int genus() const noexcept { return static_cast<int>(gaps_.size()); }
  /// Largest gap, or -1 for the whole of N0.
  int frobenius() const noexcept { return gaps_.empty() ? -1 : gaps_.back(); }
  int conductor() const noexcept { return frobenius() + 1; }
  /// Smallest nonzero element.
  int multiplicity() const noexcept { return generators_.front(); }

  bool contains(int m) const noexcept {
    if (m < 0) return false;
    if (m >= conductor()) return true;
    return below_conductor_[static_cast<std::size_t>(m)] != 0;
  }

  bool is_gap(int m) const noexcept { return m > 0 && !contains(m); }

  /// h_i with 1-based index, h_1 = 0.
  int nth_element(std::size_t i) const {
    if (i == 0) fail(Errc::IndexOutOfRange, "element index is 1-based");
    const std::size_t small = small_elements_.size();
    if (i <= small) return small_elements_[i - 1];
    return conductor() + static_cast<int>(i - 1 - small);
  }

  /// Number of members in [0, m].
  int count_up_to(int m) const noexcept {
    if (m < 0) return 0;
    auto gaps_le = std::upper_bound(gaps_.begin(), gaps_.end(), m) - gaps_.begin();
    return m + 1 - static_cast<int>(gaps_le);
  }

  // l_g = 2g - 1; N0 (frobenius -1, genus 0) counts as symmetric.
  bool is_symmetric() const noexcept { return frobenius() == 2 * genus() - 1; }

  std::vector<int> elements_up_to(int bound) const {
    std::vector<int> out;
    for (int m = 0; m <= bound; ++m)
      if (contains(m)) out.push_back(m);
    return out;
  }

  /// Generators that are not a sum of two nonzero members.
  std::vector<int> minimal_generators() const {
    std::vector<int> out;
    for (int g : generators_) {
      bool reducible = false;
      for (int a = 1; a <= g / 2 && !reducible; ++a) reducible = contains(a) && contains(g - a);
      if (!reducible) out.push_back(g);
    }
    return out;
  }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.gaps_ == b.gaps_;
  }

 private:
  explicit NumericalSemigroup(std::vector<int> gens) : generators_(std::move(gens)) { sieve(); }

  // Extend a membership table until multiplicity() consecutive members
  // appear; from there on adding the smallest generator covers everything.
  void sieve() {
    const int run_needed = generators_.front();
    std::vector<char> member{1};
    int run = 1;
    int run_start = 0;
    for (int m = 1; run < run_needed; ++m) {
      bool in = false;
      for (int g : generators_) {
        if (g > m) break;
        if (member[static_cast<std::size_t>(m - g)]) {
          in = true;
          break;
        }
      }
      member.push_back(in ? 1 : 0);
      if (in) {
        if (run == 0) run_start = m;
        ++run;
      } else {
        run = 0;
      }
    }
    for (int m = 0; m < run_start; ++m)
      if (!member[static_cast<std::size_t>(m)]) gaps_.push_back(m);
    below_conductor_.assign(member.begin(), member.begin() + conductor());
    for (int m = 0; m < conductor(); ++m)
      if (below_conductor_[static_cast<std::size_t>(m)]) small_elements_.push_back(m);
  }

  std::vector<int> generators_;
  std::vector<int> gaps_;
  std::vector<char> below_conductor_;
  std::vector<int> small_elements_;
};

}  // namespace agb
