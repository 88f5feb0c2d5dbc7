#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "agb/error.hpp"

namespace agb::gf {

using Element = std::uint32_t;
using Vector = std::vector<Element>;

namespace detail {

// Polynomials over GF(p) as coefficient vectors, lowest degree first.
using Poly = std::vector<int>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int lead_inv = [&] {
    for (int x = 1; x < p; ++x)
      if (x * m.back() % p == 1) return x;
    return 1;
  }();
  while (a.size() >= m.size()) {
    const int factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t j = 0; j < m.size(); ++j) a[shift + j] = ((a[shift + j] - factor * m[j]) % p + p) % p;
    trim(a);
  }
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  trim(out);
  return out;
}

inline Poly decode(std::uint32_t x, int p, int k) {
  Poly out(static_cast<std::size_t>(k), 0);
  for (int j = 0; j < k; ++j) {
    out[static_cast<std::size_t>(j)] = static_cast<int>(x % static_cast<std::uint32_t>(p));
    x /= static_cast<std::uint32_t>(p);
  }
  trim(out);
  return out;
}

inline std::uint32_t encode(const Poly& a, int p) {
  std::uint32_t x = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) x = x * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(*it);
  return x;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    std::uint32_t count = 1;
    for (int j = 0; j < d; ++j) count *= static_cast<std::uint32_t>(p);
    for (std::uint32_t low = 0; low < count; ++low) {
      Poly divisor(static_cast<std::size_t>(d + 1), 0);
      std::uint32_t x = low;
      for (int j = 0; j < d; ++j) {
        divisor[static_cast<std::size_t>(j)] = static_cast<int>(x % static_cast<std::uint32_t>(p));
        x /= static_cast<std::uint32_t>(p);
      }
      divisor[static_cast<std::size_t>(d)] = 1;
      if (poly_mod(f, divisor, p).empty()) return false;
    }
  }
  return true;
}

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline Poly pinned_modulus(int p, int k) {
  if (p == 2 && k == 2) return {1, 1, 1};
  if (p == 2 && k == 3) return {1, 1, 0, 1};
  if (p == 3 && k == 2) return {1, 0, 1};
  if (p == 2 && k == 4) return {1, 1, 0, 0, 1};
  if (k == 1) return {0, 1};
  // Otherwise the monic irreducible with the smallest packed lower coefficients.
  std::uint32_t count = 1;
  for (int j = 0; j < k; ++j) count *= static_cast<std::uint32_t>(p);
  for (std::uint32_t low = 0; low < count; ++low) {
    Poly f(static_cast<std::size_t>(k + 1), 0);
    std::uint32_t x = low;
    for (int j = 0; j < k; ++j) {
      f[static_cast<std::size_t>(j)] = static_cast<int>(x % static_cast<std::uint32_t>(p));
      x /= static_cast<std::uint32_t>(p);
    }
    f[static_cast<std::size_t>(k)] = 1;
    if (is_irreducible(f, p)) return f;
  }
  return {};
}

inline std::uint32_t add_digits(std::uint32_t a, std::uint32_t b, int p, int k) noexcept {
  if (p == 2) return a ^ b;
  const auto up = static_cast<std::uint32_t>(p);
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (int j = 0; j < k; ++j) {
    out += ((a % up + b % up) % up) * scale;
    a /= up;
    b /= up;
    scale *= up;
  }
  return out;
}

struct Tables {
  int p = 0;
  int k = 0;
  std::uint32_t q = 0;
  Poly modulus;
  Element generator = 1;
  std::vector<Element> exp;  // length 2(q-1), exp[i] = generator^i
  std::vector<std::uint32_t> log;
  std::vector<Element> neg;
  std::vector<std::uint16_t> add;  // q*q table when q <= 256, else empty
};

}  // namespace detail

/// GF(p^k) for p in {2,3,5,7,11,13}, k <= 4. Elements are packed coefficient
/// integers in [0, q): x = sum c_j p^j for the residue class sum c_j t^j.
class FiniteField {
 public:
  static FiniteField make(int p, int k) {
    static constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13};
    if (std::find(std::begin(kPrimes), std::end(kPrimes), p) == std::end(kPrimes) || !detail::is_prime(p))
      fail(Errc::UnsupportedField, "characteristic " + std::to_string(p) + " is not a supported prime");
    if (k < 1 || k > 4) fail(Errc::UnsupportedField, "extension degree " + std::to_string(k) + " outside 1..4");
    std::uint64_t q = 1;
    for (int j = 0; j < k; ++j) q *= static_cast<std::uint64_t>(p);
    if (q > 65536) fail(Errc::UnsupportedField, "field order above 2^16");

    auto t = std::make_shared<detail::Tables>();
    t->p = p;
    t->k = k;
    t->q = static_cast<std::uint32_t>(q);
    t->modulus = detail::pinned_modulus(p, k);
    if (!detail::is_irreducible(t->modulus, p)) fail(Errc::UnsupportedField, "pinned modulus is reducible");

    auto slow_mul = [&](Element a, Element b) {
      return detail::encode(detail::poly_mod(detail::poly_mul(detail::decode(a, p, k), detail::decode(b, p, k), p),
                                             t->modulus, p),
                            p);
    };
    const std::uint32_t order = t->q - 1;
    for (Element cand = 1; cand < t->q; ++cand) {
      std::uint32_t ord = 1;
      Element x = cand;
      while (x != 1) {
        x = slow_mul(x, cand);
        ++ord;
      }
      if (ord == order) {
        t->generator = cand;
        break;
      }
    }
    t->exp.resize(2 * static_cast<std::size_t>(order) + 1);
    t->log.assign(t->q, 0);
    Element x = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
      t->exp[i] = x;
      t->log[x] = i;
      x = slow_mul(x, t->generator);
    }
    for (std::uint32_t i = order; i < t->exp.size(); ++i) t->exp[i] = t->exp[i - order];

    t->neg.resize(t->q);
    for (Element a = 0; a < t->q; ++a) {
      auto c = detail::decode(a, p, k);
      for (auto& v : c) v = (p - v) % p;
      t->neg[a] = detail::encode(c, p);
    }
    if (t->q <= 256) {
      t->add.resize(static_cast<std::size_t>(t->q) * t->q);
      for (Element a = 0; a < t->q; ++a)
        for (Element b = 0; b < t->q; ++b)
          t->add[a * t->q + b] = static_cast<std::uint16_t>(detail::add_digits(a, b, p, k));
    }
    return FiniteField(std::move(t));
  }

  int characteristic() const noexcept { return t_->p; }
  int degree() const noexcept { return t_->k; }
  std::uint32_t q() const noexcept { return t_->q; }
  /// Modulus coefficients, lowest degree first, monic.
  const std::vector<int>& modulus() const noexcept { return t_->modulus; }
  /// The primitive element used for the log tables.
  Element generator() const noexcept { return t_->generator; }

  Element add(Element a, Element b) const noexcept {
    if (!t_->add.empty()) return t_->add[a * t_->q + b];
    return detail::add_digits(a, b, t_->p, t_->k);
  }
  Element neg(Element a) const noexcept { return t_->neg[a]; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
  Element mul(Element a, Element b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return t_->exp[t_->log[a] + t_->log[b]];
  }
  Element inv(Element a) const {
    if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
    return t_->exp[(q() - 1 - t_->log[a]) % (q() - 1)];
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return t_->exp[(static_cast<std::uint64_t>(t_->log[a]) * (e % (q() - 1))) % (q() - 1)];
  }

  friend bool operator==(const FiniteField& a, const FiniteField& b) noexcept {
    return a.t_->p == b.t_->p && a.t_->k == b.t_->k;
  }

 private:
  explicit FiniteField(std::shared_ptr<const detail::Tables> t) : t_(std::move(t)) {}

  std::shared_ptr<const detail::Tables> t_;
};

inline FiniteField field(int p, int k) { return FiniteField::make(p, k); }

// ---- vectors ----

inline Element dot(const FiniteField& f, std::span<const Element> a, std::span<const Element> b) {
  Element acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

/// Component-wise product a * b.
inline Vector hadamard(const FiniteField& f, std::span<const Element> a, std::span<const Element> b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], b[i]);
  return out;
}

/// y += c * x
inline void axpy(const FiniteField& f, Element c, std::span<const Element> x, std::span<Element> y) {
  if (c == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = f.add(y[i], f.mul(c, x[i]));
}

inline int weight(std::span<const Element> v) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [](Element e) { return e != 0; }));
}

// ---- matrices ----

class FieldMatrix {
 public:
  FieldMatrix(FiniteField f, std::size_t rows, std::size_t cols)
      : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  FieldMatrix(FiniteField f, std::size_t rows, std::size_t cols, std::vector<Element> data)
      : field_(std::move(f)), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) fail(Errc::DimensionMismatch, "matrix data size does not match shape");
    for (Element e : data_)
      if (e >= field_.q()) fail(Errc::InvariantViolation, "entry " + std::to_string(e) + " outside the field");
  }

  static FieldMatrix from_rows(FiniteField f, std::size_t cols, const std::vector<Vector>& rows) {
    FieldMatrix m(std::move(f), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) fail(Errc::DimensionMismatch, "row length mismatch");
      std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
  }

  static FieldMatrix identity(FiniteField f, std::size_t n) {
    FieldMatrix m(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  const FiniteField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Element>& data() const noexcept { return data_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }

  FieldMatrix transpose() const {
    FieldMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FiniteField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

struct RrefResult {
  FieldMatrix matrix;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Pivot columns are taken left to right; the pivot
/// row is the topmost remaining row with a nonzero entry in that column.
inline RrefResult rref(FieldMatrix m) {
  const FiniteField& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t pr = lead;
    while (pr < m.rows() && m(pr, c) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != lead)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(lead, j));
    const Element s = f.inv(m(lead, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(lead, j) = f.mul(m(lead, j), s);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c) == 0) continue;
      axpy(f, f.neg(m(r, c)), m.row(lead), m.row(r));
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(m), pivots.size(), std::move(pivots)};
}

inline std::size_t rank(const FieldMatrix& m) { return rref(m).rank; }

/// The nonzero rows of the RREF: a canonical basis of the row space.
inline FieldMatrix row_basis(const FieldMatrix& m) {
  auto r = rref(m);
  FieldMatrix out(m.field(), r.rank, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) std::copy(r.matrix.row(i).begin(), r.matrix.row(i).end(), out.row(i).begin());
  return out;
}

inline bool same_row_space(const FieldMatrix& a, const FieldMatrix& b) { return row_basis(a) == row_basis(b); }

/// Basis of {v : M v^T = 0}, one vector per free column.
inline FieldMatrix nullspace(const FieldMatrix& m) {
  const FiniteField& f = m.field();
  auto r = rref(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto c : r.pivots) is_pivot[c] = 1;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.matrix(i, free));
    basis.push_back(std::move(v));
  }
  return FieldMatrix::from_rows(f, m.cols(), basis);
}

inline FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows()) fail(Errc::DimensionMismatch, "matrix product shape mismatch");
  const FiniteField& f = a.field();
  FieldMatrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) axpy(f, a(i, k), b.row(k), out.row(i));
  return out;
}

/// Inverse of a square matrix, or DependentInput when singular.
inline FieldMatrix inverse(const FieldMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) fail(Errc::DimensionMismatch, "inverse of a non-square matrix");
  FieldMatrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(m.row(i).begin(), m.row(i).end(), aug.row(i).begin());
    aug(i, n + i) = 1;
  }
  auto r = rref(std::move(aug));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) fail(Errc::DependentInput, "matrix is singular");
  FieldMatrix out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    std::copy(r.matrix.row(i).begin() + static_cast<std::ptrdiff_t>(n), r.matrix.row(i).end(), out.row(i).begin());
  return out;
}

}  // namespace agb::gf
