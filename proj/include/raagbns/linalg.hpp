#pragma once

// Exact linear algebra over Q: dense rational matrices, reduced row-echelon
// forms, and subspaces stored in canonical (RREF) form.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raagbns/error.hpp"

namespace raagbns {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
inline Rational parse_rational(std::string_view token) {
  std::string text(token);
  if (text.empty() || text.find_first_not_of("+-/0123456789") != std::string::npos) {
    throw InputError("malformed rational '" + text + "'");
  }
  if (text.front() == '+') text.erase(0, 1);
  Rational value;
  if (value.set_str(text, 10) != 0) throw InputError("malformed rational '" + std::string(token) + "'");
  if (value.get_den() == 0) throw InputError("zero denominator in '" + std::string(token) + "'");
  value.canonicalize();
  return value;
}

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string format_rational(const Rational& value) { return value.get_str(10); }

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static QMatrix from_rows(std::size_t cols, const std::vector<std::vector<Rational>>& rows) {
    QMatrix m(0, cols);
    for (const auto& row : rows) m.append_row(row);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Rational> values) {
    if (values.size() != cols_) throw InputError("row length does not match column count");
    entries_.insert(entries_.end(), values.begin(), values.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  void truncate_rows(std::size_t n) {
    rows_ = std::min(rows_, n);
    entries_.resize(rows_ * cols_);
  }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return sgn(x) == 0; });
  }

  [[nodiscard]] QMatrix transposed() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

inline QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
  QMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& lhs = a(i, k);
      if (sgn(lhs) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += lhs * b(k, j);
    }
  return out;
}

/// Parses the test literal format: one row per line, whitespace-separated
/// "p/q" tokens. Blank lines are ignored; all rows must share a length.
inline QMatrix parse_matrix_literal(std::string_view text) {
  std::istringstream lines{std::string(text)};
  std::vector<std::vector<Rational>> rows;
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream tokens(line);
    std::vector<Rational> row;
    std::string token;
    while (tokens >> token) row.push_back(parse_rational(token));
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) throw InputError("ragged matrix literal");
    rows.push_back(std::move(row));
  }
  return QMatrix::from_rows(rows.empty() ? 0 : rows.front().size(), rows);
}

struct RrefResult {
  QMatrix matrix;  // zero rows removed
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
inline RrefResult rref(QMatrix m) {
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    if (m(r, c) != 1) {
      const Rational inv = 1 / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= factor * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.truncate_rows(r);
  out.matrix = std::move(m);
  out.rank = r;
  return out;
}

/// Rank via forward elimination only.
inline std::size_t rank(QMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (sgn(m(i, c)) == 0) continue;
      const Rational factor = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= factor * m(r, j);
    }
    ++r;
  }
  return r;
}

/// Column-sparse rational matrix; each column holds (row, value) pairs with
/// strictly increasing rows and no explicit zeros.
class SparseMatrix {
 public:
  using Column = std::vector<std::pair<std::size_t, Rational>>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  static SparseMatrix from_dense(const QMatrix& m) {
    SparseMatrix out(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (std::size_t r = 0; r < m.rows(); ++r)
        if (sgn(m(r, c)) != 0) out.columns_[c].emplace_back(r, m(r, c));
    return out;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return columns_.size(); }
  [[nodiscard]] const Column& column(std::size_t c) const { return columns_[c]; }

  /// Adds `value` at (r, c); entries may arrive in any order.
  void add(std::size_t r, std::size_t c, const Rational& value) {
    if (r >= rows_ || c >= columns_.size()) throw InputError("sparse entry out of range");
    if (sgn(value) == 0) return;
    auto& col = columns_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t row) { return e.first < row; });
    if (it != col.end() && it->first == r) {
      it->second += value;
      if (sgn(it->second) == 0) col.erase(it);
    } else {
      col.emplace(it, r, value);
    }
  }

  [[nodiscard]] Rational at(std::size_t r, std::size_t c) const {
    const auto& col = columns_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t row) { return e.first < row; });
    return it != col.end() && it->first == r ? it->second : Rational(0);
  }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
  }

  [[nodiscard]] QMatrix to_dense() const {
    QMatrix m(rows_, cols());
    for (std::size_t c = 0; c < cols(); ++c)
      for (const auto& [r, v] : columns_[c]) m(r, c) = v;
    return m;
  }

  /// M x for a dense vector x of length cols().
  [[nodiscard]] std::vector<Rational> apply(std::span<const Rational> x) const {
    if (x.size() != cols()) throw InputError("vector length does not match column count");
    std::vector<Rational> out(rows_);
    for (std::size_t c = 0; c < cols(); ++c) {
      if (sgn(x[c]) == 0) continue;
      for (const auto& [r, v] : columns_[c]) out[r] += v * x[c];
    }
    return out;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
    SparseMatrix out(a.rows(), b.cols());
    std::vector<Rational> acc(a.rows());
    std::vector<std::size_t> touched;
    std::vector<bool> mark(a.rows(), false);
    for (std::size_t c = 0; c < b.cols(); ++c) {
      for (const auto& [k, bv] : b.columns_[c])
        for (const auto& [r, av] : a.columns_[k]) {
          if (!mark[r]) {
            mark[r] = true;
            touched.push_back(r);
          }
          acc[r] += av * bv;
        }
      std::sort(touched.begin(), touched.end());
      for (std::size_t r : touched) {
        if (sgn(acc[r]) != 0) out.columns_[c].emplace_back(r, acc[r]);
        acc[r] = 0;
        mark[r] = false;
      }
      touched.clear();
    }
    return out;
  }

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

/// Rank by column reduction keyed on each column's lowest nonzero row.
inline std::size_t rank(const SparseMatrix& m) {
  std::vector<SparseMatrix::Column> pivot_of(m.rows());
  std::vector<bool> has_pivot(m.rows(), false);
  std::size_t r = 0;
  SparseMatrix::Column scratch;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    SparseMatrix::Column col = m.column(c);
    while (!col.empty() && has_pivot[col.back().first]) {
      const auto& piv = pivot_of[col.back().first];
      const Rational factor = col.back().second / piv.back().second;
      scratch.clear();
      auto x = col.begin();
      auto y = piv.begin();
      while (x != col.end() || y != piv.end()) {
        if (y == piv.end() || (x != col.end() && x->first < y->first)) {
          scratch.push_back(*x++);
        } else if (x == col.end() || y->first < x->first) {
          scratch.emplace_back(y->first, -factor * y->second);
          ++y;
        } else {
          Rational v = x->second - factor * y->second;
          if (sgn(v) != 0) scratch.emplace_back(x->first, std::move(v));
          ++x;
          ++y;
        }
      }
      col.swap(scratch);
    }
    if (col.empty()) continue;
    has_pivot[col.back().first] = true;
    pivot_of[col.back().first] = std::move(col);
    ++r;
  }
  return r;
}

/// A linear subspace of Q^n. The basis is kept in RREF with zero rows
/// removed, so equal subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

  /// Row space of `rows`.
  static Subspace span(std::size_t ambient_dim, QMatrix rows) {
    if (rows.cols() != ambient_dim) throw InputError("spanning rows do not match ambient dimension");
    auto reduced = rref(std::move(rows));
    Subspace s(ambient_dim);
    s.basis_ = std::move(reduced.matrix);
    s.pivots_ = std::move(reduced.pivots);
    return s;
  }

  static Subspace span(std::size_t ambient_dim, const std::vector<std::vector<Rational>>& rows) {
    return span(ambient_dim, QMatrix::from_rows(ambient_dim, rows));
  }

  static Subspace full(std::size_t n) { return span(n, QMatrix::identity(n)); }

  /// Span of the given standard basis vectors.
  static Subspace coordinate(std::size_t ambient_dim, std::span<const std::size_t> axes) {
    QMatrix rows(0, ambient_dim);
    std::vector<std::size_t> sorted(axes.begin(), axes.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Rational> row(ambient_dim);
    for (std::size_t axis : sorted) {
      if (axis >= ambient_dim) throw InputError("coordinate axis out of range");
      std::fill(row.begin(), row.end(), Rational(0));
      row[axis] = 1;
      rows.append_row(row);
    }
    return span(ambient_dim, std::move(rows));
  }

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
  [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
  [[nodiscard]] bool is_zero() const { return basis_.rows() == 0; }
  [[nodiscard]] const QMatrix& basis() const { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Coordinates of `v` in the RREF basis. Only meaningful when contains(v).
  [[nodiscard]] std::vector<Rational> coordinates(std::span<const Rational> v) const {
    std::vector<Rational> out;
    out.reserve(pivots_.size());
    for (std::size_t p : pivots_) out.push_back(v[p]);
    return out;
  }

  [[nodiscard]] bool contains(std::span<const Rational> v) const {
    if (v.size() != ambient_dim_) throw InputError("vector does not match ambient dimension");
    std::vector<Rational> residual(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const Rational coeff = residual[pivots_[i]];
      if (sgn(coeff) == 0) continue;
      for (std::size_t c = 0; c < ambient_dim_; ++c)
        if (sgn(basis_(i, c)) != 0) residual[c] -= coeff * basis_(i, c);
    }
    return std::all_of(residual.begin(), residual.end(), [](const Rational& x) { return sgn(x) == 0; });
  }

  /// The linear constraints cutting this subspace out (rows c with c.v = 0).
  [[nodiscard]] QMatrix annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  QMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {x : m x = 0} as a subspace of Q^cols.
inline Subspace kernel_basis(const QMatrix& m) {
  const auto reduced = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : reduced.pivots) is_pivot[p] = true;
  QMatrix rows(0, m.cols());
  std::vector<Rational> v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < reduced.pivots.size(); ++i) v[reduced.pivots[i]] = -reduced.matrix(i, free);
    rows.append_row(v);
  }
  return Subspace::span(m.cols(), std::move(rows));
}

inline QMatrix Subspace::annihilator() const { return kernel_basis(basis_).basis(); }

inline Subspace span_sum(std::size_t ambient_dim, std::span<const Subspace> subspaces) {
  QMatrix rows(0, ambient_dim);
  for (const auto& s : subspaces) {
    if (s.ambient_dim() != ambient_dim) throw InputError("span_sum: mismatched ambient dimensions");
    for (std::size_t r = 0; r < s.dim(); ++r) rows.append_row(s.basis().row(r));
  }
  return Subspace::span(ambient_dim, std::move(rows));
}

/// Intersection of two subspaces: the vectors c.B of `a` (B its basis)
/// satisfying the constraints of `b`.
inline Subspace intersect_pair(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("intersect: mismatched ambient dimensions");
  if (a.is_zero() || b.is_zero()) return Subspace(a.ambient_dim());
  const QMatrix constraints = b.annihilator();
  if (constraints.rows() == 0) return a;
  // constraints * a.basis()^T, a (#constraints x dim a) system in the coefficients c.
  const QMatrix system = constraints * a.basis().transposed();
  const Subspace coeffs = kernel_basis(system);
  return Subspace::span(a.ambient_dim(), coeffs.basis() * a.basis());
}

/// Intersection via the kernel of the stacked constraint systems.
inline Subspace intersect(std::span<const Subspace> subspaces) {
  if (subspaces.empty()) throw InputError("intersect: empty list");
  const std::size_t n = subspaces.front().ambient_dim();
  QMatrix stacked(0, n);
  for (const auto& s : subspaces) {
    if (s.ambient_dim() != n) throw InputError("intersect: mismatched ambient dimensions");
    const QMatrix constraints = s.annihilator();
    for (std::size_t r = 0; r < constraints.rows(); ++r) stacked.append_row(constraints.row(r));
  }
  return kernel_basis(stacked);
}

inline bool subspace_leq(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("subspace_leq: mismatched ambient dimensions");
  if (a.dim() > b.dim()) return false;
  for (std::size_t r = 0; r < a.dim(); ++r)
    if (!b.contains(a.basis().row(r))) return false;
  return true;
}

}  // namespace raagbns
