#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "agb/bounds.hpp"
#include "agb/error.hpp"
#include "agb/gf.hpp"
#include "agb/hstar.hpp"
#include "agb/semigroup.hpp"

namespace agb {

/// ev(f) for one function f of pole order h at Q.
struct FunctionRow {
  int pole_order;
  gf::Vector values;

  friend bool operator==(const FunctionRow&, const FunctionRow&) = default;
};

/// Evaluations of a pole-order basis of L((n+2g-1)Q) at the n points of D.
///
/// Invariants (checked on construction): one row per element of
/// H ∩ [0, n+2g-1] in increasing pole order, each of length n with entries in
/// the field, and the row of pole order 0 is all ones.
class EvaluationTable {
 public:
  EvaluationTable(gf::FiniteField field, NumericalSemigroup semigroup, std::vector<std::string> points,
                  std::vector<FunctionRow> functions)
      : field_(std::move(field)),
        semigroup_(std::move(semigroup)),
        points_(std::move(points)),
        functions_(std::move(functions)) {
    validate();
  }

  const gf::FiniteField& field() const noexcept { return field_; }
  const NumericalSemigroup& semigroup() const noexcept { return semigroup_; }
  int n() const noexcept { return static_cast<int>(points_.size()); }
  int genus() const noexcept { return semigroup_.genus(); }
  int top() const noexcept { return n() + 2 * genus() - 1; }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::vector<FunctionRow>& functions() const noexcept { return functions_; }

  const FunctionRow& row_for_pole(int h) const {
    auto it = std::find_if(functions_.begin(), functions_.end(), [h](const FunctionRow& r) { return r.pole_order == h; });
    if (it == functions_.end()) fail(Errc::NotAMember, "no function of pole order " + std::to_string(h));
    return *it;
  }

  /// Restriction to the points not listed in `drop`; functions beyond the new
  /// n+2g-1 are discarded.
  EvaluationTable punctured(const std::vector<std::size_t>& drop) const {
    std::set<std::size_t> dropped(drop.begin(), drop.end());
    std::vector<std::string> pts;
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < points_.size(); ++j)
      if (!dropped.count(j)) {
        keep.push_back(j);
        pts.push_back(points_[j]);
      }
    const int new_top = static_cast<int>(keep.size()) + 2 * genus() - 1;
    std::vector<FunctionRow> rows;
    for (const auto& f : functions_) {
      if (f.pole_order > new_top) break;
      FunctionRow r{f.pole_order, {}};
      for (auto j : keep) r.values.push_back(f.values[j]);
      rows.push_back(std::move(r));
    }
    return EvaluationTable(field_, semigroup_, std::move(pts), std::move(rows));
  }

  friend bool operator==(const EvaluationTable& a, const EvaluationTable& b) {
    return a.field_ == b.field_ && a.semigroup_ == b.semigroup_ && a.points_ == b.points_ &&
           a.functions_ == b.functions_;
  }

 private:
  void validate() const {
    if (points_.empty()) fail(Errc::InvariantViolation, "table has no points");
    const std::vector<int> expected = semigroup_.elements_up_to(top());
    if (functions_.size() != expected.size())
      fail(Errc::InvariantViolation, "expected " + std::to_string(expected.size()) + " function rows, got " +
                                         std::to_string(functions_.size()));
    for (std::size_t r = 0; r < functions_.size(); ++r) {
      const auto& f = functions_[r];
      if (r > 0 && f.pole_order <= functions_[r - 1].pole_order)
        fail(Errc::InvariantViolation, "pole orders are not strictly increasing");
      if (f.pole_order != expected[r])
        fail(Errc::InvariantViolation, "pole orders must be exactly H ∩ [0, n+2g-1]; found " +
                                           std::to_string(f.pole_order) + " where " + std::to_string(expected[r]) +
                                           " was expected");
      if (static_cast<int>(f.values.size()) != n())
        fail(Errc::InvariantViolation, "row of pole order " + std::to_string(f.pole_order) + " has wrong length");
      for (auto v : f.values)
        if (v >= field_.q()) fail(Errc::InvariantViolation, "value outside the field");
    }
    for (auto v : functions_.front().values)
      if (v != 1) fail(Errc::InvariantViolation, "row of pole order 0 must be all ones");
  }

  gf::FiniteField field_;
  NumericalSemigroup semigroup_;
  std::vector<std::string> points_;
  std::vector<FunctionRow> functions_;
};

/// Hermitian curve y^q0 + y = x^(q0+1) over GF(q0^2), D = all q0^3 affine
/// points, Q the point at infinity. Functions are the monomials x^a y^b with
/// b < q0, pole order a*q0 + b*(q0+1).
inline EvaluationTable hermitian_table(int q0) {
  if (q0 != 2 && q0 != 3) fail(Errc::UnsupportedParameter, "q0 must be 2 or 3");
  const auto f = gf::field(q0, 2);
  const auto q = f.q();
  const auto e0 = static_cast<std::uint64_t>(q0);

  std::vector<std::pair<gf::Element, gf::Element>> pts;
  for (gf::Element x = 0; x < q; ++x)
    for (gf::Element y = 0; y < q; ++y)
      if (f.add(f.pow(y, e0), y) == f.pow(x, e0 + 1)) pts.emplace_back(x, y);

  auto s = NumericalSemigroup::from_generators({q0, q0 + 1});
  const int n = static_cast<int>(pts.size());
  const int top = n + 2 * s.genus() - 1;

  std::vector<std::string> labels;
  for (auto [x, y] : pts) labels.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");

  std::vector<FunctionRow> rows;
  for (int h : s.elements_up_to(top)) {
    const int b = h % q0;
    const int a = (h - b * (q0 + 1)) / q0;
    FunctionRow row{h, {}};
    for (auto [x, y] : pts)
      row.values.push_back(f.mul(f.pow(x, static_cast<std::uint64_t>(a)), f.pow(y, static_cast<std::uint64_t>(b))));
    rows.push_back(std::move(row));
  }
  return EvaluationTable(f, s, std::move(labels), std::move(rows));
}

/// C(D, mQ): generator rows are all functions of pole order <= m.
struct OnePointCode {
  int m;
  gf::FieldMatrix generator;
  int dimension;
};

inline OnePointCode code(const EvaluationTable& table, int m) {
  if (m < 0 || m > table.top())
    fail(Errc::BudgetOutOfRange, "m=" + std::to_string(m) + " outside 0.." + std::to_string(table.top()));
  std::vector<gf::Vector> rows;
  for (const auto& f : table.functions())
    if (f.pole_order <= m) rows.push_back(f.values);
  auto g = gf::FieldMatrix::from_rows(table.field(), static_cast<std::size_t>(table.n()), rows);
  const int dim = static_cast<int>(gf::rank(g));
  return {m, std::move(g), dim};
}

/// dim C(D, mQ) for m = 0..n+2g-1.
inline std::vector<int> measured_dimensions(const EvaluationTable& table) {
  std::vector<int> dims;
  for (int m = 0; m <= table.top(); ++m) dims.push_back(code(table, m).dimension);
  return dims;
}

inline HStar empirical_hstar(const EvaluationTable& table) {
  const auto dims = measured_dimensions(table);
  return HStar::from_dimension_chain(dims, table.semigroup());
}

/// Rows ev(f_1), ..., ev(f_n) with v(f_i) = m_i: a basis of F_q^n adapted to the chain.
inline gf::FieldMatrix chain_basis(const EvaluationTable& table, const HStar& hs) {
  std::vector<gf::Vector> rows;
  for (int m : hs.members()) rows.push_back(table.row_for_pole(m).values);
  return gf::FieldMatrix::from_rows(table.field(), static_cast<std::size_t>(table.n()), rows);
}

/// Generators of the improved code: rows i with #Λ*_i >= delta, taken from
/// `adjusted` when given, else from the canonical chain basis.
inline gf::FieldMatrix improved_generators(const EvaluationTable& table, int delta,
                                           const std::optional<gf::FieldMatrix>& adjusted = std::nullopt) {
  const HStar hs = empirical_hstar(table);
  const LambdaProfile profile(hs);
  const auto sel = improved_profile(profile, delta);
  const gf::FieldMatrix basis = adjusted ? *adjusted : chain_basis(table, hs);
  if (basis.rows() != static_cast<std::size_t>(hs.n()))
    fail(Errc::DimensionMismatch, "adjusted basis must have n rows");
  std::vector<gf::Vector> rows;
  for (int i : sel.indices) rows.push_back(basis.row_vector(static_cast<std::size_t>(i - 1)));
  return gf::FieldMatrix::from_rows(table.field(), static_cast<std::size_t>(table.n()), rows);
}

/// Replaces ev(f_i) by ev(f_i') so that (x * ev(f_i')) . ev(f_j) is nonzero
/// exactly when j = n - i + 1. Built inductively: f_1' = f_1 and
///   f_{s+1}' = f_{s+1} - sum_{i<=s} a_i / ((x * ev(f_i')) . ev(f_{n+1-i})) f_i'
/// with a_i = (x * ev(f_{s+1})) . ev(f_{n+1-i}).
inline gf::FieldMatrix biorthogonal_adjust(const gf::FieldMatrix& basis, const gf::Vector& x) {
  const auto& f = basis.field();
  const std::size_t n = basis.rows();
  if (x.size() != n || basis.cols() != n) fail(Errc::DimensionMismatch, "witness and basis sizes differ");
  for (auto v : x)
    if (v == 0 || v >= f.q()) fail(Errc::NotIsometryDual, "witness must lie in (F_q^*)^n");

  auto pairing = [&](std::span<const gf::Element> u, std::size_t j) {
    return gf::dot(f, gf::hadamard(f, x, u), basis.row(j));
  };

  gf::FieldMatrix adjusted(f, n, n);
  for (std::size_t s = 0; s < n; ++s) {
    gf::Vector next = basis.row_vector(s);
    for (std::size_t i = 0; i < s; ++i) {
      const std::size_t partner = n - 1 - i;
      const gf::Element denom = pairing(adjusted.row(i), partner);
      if (denom == 0) fail(Errc::ZeroPivot, "vanishing pairing at i=" + std::to_string(i + 1));
      const gf::Element a = pairing(basis.row(s), partner);
      gf::axpy(f, f.neg(f.div(a, denom)), adjusted.row(i), next);
    }
    std::copy(next.begin(), next.end(), adjusted.row(s).begin());
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool nonzero = pairing(adjusted.row(i), j) != 0;
      if (j == n - 1 - i && !nonzero) fail(Errc::ZeroPivot, "vanishing pairing at i=" + std::to_string(i + 1));
      if (j != n - 1 - i && nonzero)
        fail(Errc::NotIsometryDual,
             "pairing (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") does not vanish");
    }
  return adjusted;
}

inline gf::FieldMatrix biorthogonal_adjust(const EvaluationTable& table, const gf::Vector& x) {
  const HStar hs = empirical_hstar(table);
  if (!hs.is_isometry_dual()) fail(Errc::NotIsometryDual, "n+2g-1 is not in the measured H*");
  return biorthogonal_adjust(chain_basis(table, hs), x);
}

}  // namespace agb
