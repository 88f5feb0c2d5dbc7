#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "agb/error.hpp"
#include "agb/gf.hpp"

namespace agb {

/// A basis b_1..b_n of F_q^n and the nested codes C_i = <b_1..b_i>.
///
/// nu(v) = min{i : v in C_i} is read off the coordinates of v in the basis,
/// obtained through the inverse basis matrix.
class CodeChain {
 public:
  explicit CodeChain(gf::FieldMatrix basis) : basis_(std::move(basis)), inverse_(basis_.field(), 0, 0) {
    if (basis_.rows() != basis_.cols()) fail(Errc::DimensionMismatch, "chain basis must be square");
    inverse_ = gf::inverse(basis_);
  }

  const gf::FiniteField& field() const noexcept { return basis_.field(); }
  int n() const noexcept { return static_cast<int>(basis_.rows()); }
  const gf::FieldMatrix& basis() const noexcept { return basis_; }
  /// b_i, 1-based.
  std::span<const gf::Element> b(int i) const { return basis_.row(static_cast<std::size_t>(i - 1)); }

  /// c with v = sum c_i b_i.
  gf::Vector coordinates(std::span<const gf::Element> v) const {
    if (static_cast<int>(v.size()) != n()) fail(Errc::DimensionMismatch, "vector length differs from n");
    gf::Vector c(v.size(), 0);
    for (std::size_t k = 0; k < v.size(); ++k) gf::axpy(field(), v[k], inverse_.row(k), c);
    return c;
  }

  int nu(std::span<const gf::Element> v) const {
    const auto c = coordinates(v);
    for (std::size_t i = c.size(); i > 0; --i)
      if (c[i - 1] != 0) return static_cast<int>(i);
    return 0;
  }

 private:
  gf::FieldMatrix basis_;
  gf::FieldMatrix inverse_;
};

/// All well-behaving pairs of a chain, from the table nu(b_i * b_j).
///
/// (i, j) is well-behaving when b_i * b_j != 0 and nu(b_r * b_s) < nu(b_i * b_j)
/// for every (r, s) != (i, j) with r <= i and s <= j.
class WellBehaving {
 public:
  explicit WellBehaving(const CodeChain& chain) : n_(chain.n()) {
    const auto n = static_cast<std::size_t>(n_);
    nu_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        const int v = chain.nu(gf::hadamard(chain.field(), chain.b(static_cast<int>(i + 1)),
                                            chain.b(static_cast<int>(j + 1))));
        nu_[i * n + j] = v;
        nu_[j * n + i] = v;
      }
    // prefix[i][j] = max nu over the dominated box [0..i] x [0..j].
    std::vector<int> prefix(n * n, 0);
    flags_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const int up = i > 0 ? prefix[(i - 1) * n + j] : -1;
        const int left = j > 0 ? prefix[i * n + j - 1] : -1;
        const int below = std::max(up, left);
        const int here = nu_[i * n + j];
        flags_[i * n + j] = here > 0 && here > below;
        prefix[i * n + j] = std::max(below, here);
      }
  }

  int n() const noexcept { return n_; }

  bool contains(int i, int j) const { return flags_[idx(i, j)] != 0; }
  int nu_product(int i, int j) const { return nu_[idx(i, j)]; }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j)
        if (contains(i, j)) out.emplace_back(i, j);
    return out;
  }

  /// Λ_i = {j : (b_i, b_j) well-behaving}.
  std::vector<int> lambda(int i) const {
    check(i);
    std::vector<int> out;
    for (int j = 1; j <= n_; ++j)
      if (contains(i, j)) out.push_back(j);
    return out;
  }

  /// min{#Λ_r : r <= i}, a lower bound on d(C_i).
  int bound(int i) const {
    check(i);
    int best = n_ + 1;
    for (int r = 1; r <= i; ++r) best = std::min(best, static_cast<int>(lambda(r).size()));
    return best;
  }

 private:
  void check(int i) const {
    if (i < 1 || i > n_) fail(Errc::IndexOutOfRange, "index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
  }
  std::size_t idx(int i, int j) const {
    check(i);
    check(j);
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1);
  }

  int n_;
  std::vector<int> nu_;
  std::vector<char> flags_;
};

inline WellBehaving well_behaving(const CodeChain& chain) { return WellBehaving(chain); }

inline std::vector<int> generic_lambda(const CodeChain& chain, int i) { return WellBehaving(chain).lambda(i); }

inline int generic_bound(const CodeChain& chain, int i) { return WellBehaving(chain).bound(i); }

/// A basis of span(vectors) whose nu values are pairwise distinct.
///
/// Elimination on chain coordinates, pivoting on the highest nonzero index.
inline std::vector<gf::Vector> triangular_basis(const CodeChain& chain, const std::vector<gf::Vector>& vectors) {
  const auto& f = chain.field();
  std::vector<gf::Vector> coords;
  for (const auto& v : vectors) coords.push_back(chain.coordinates(v));

  auto lead = [](const gf::Vector& c) {
    for (std::size_t i = c.size(); i > 0; --i)
      if (c[i - 1] != 0) return static_cast<int>(i);
    return 0;
  };

  std::vector<gf::Vector> done;
  while (!coords.empty()) {
    auto top = std::max_element(coords.begin(), coords.end(),
                                [&](const gf::Vector& a, const gf::Vector& b) { return lead(a) < lead(b); });
    gf::Vector pivot = std::move(*top);
    coords.erase(top);
    const int p = lead(pivot);
    if (p == 0) fail(Errc::DependentInput, "input vectors are linearly dependent");
    const gf::Element pivot_inv = f.inv(pivot[static_cast<std::size_t>(p - 1)]);
    for (auto& c : coords)
      if (lead(c) == p) gf::axpy(f, f.neg(f.mul(c[static_cast<std::size_t>(p - 1)], pivot_inv)), pivot, c);
    done.push_back(std::move(pivot));
  }

  std::vector<gf::Vector> out;
  for (const auto& c : done) {
    gf::Vector v(static_cast<std::size_t>(chain.n()), 0);
    for (int i = 1; i <= chain.n(); ++i) gf::axpy(f, c[static_cast<std::size_t>(i - 1)], chain.b(i), v);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace agb
