#pragma once

#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "hensel/scalar.hpp"

namespace hensel {

/// Column-major sparse matrix with integer row/column labels.
///
/// Zero entries are never stored, so two matrices are equal iff their entry
/// maps are equal.
template <Scalar S>
class SparseMatrix {
 public:
  using Column = std::map<Integer, S>;

  void set(Integer row, Integer col, const S& v) {
    if (v == ScalarTraits<S>::zero()) {
      auto it = cols_.find(col);
      if (it != cols_.end()) {
        it->second.erase(row);
        if (it->second.empty()) cols_.erase(it);
      }
      return;
    }
    cols_[col][row] = v;
  }

  void add_to(Integer row, Integer col, const S& v) {
    S cur = get(row, col);
    set(row, col, S(cur + v));
  }

  S get(Integer row, Integer col) const {
    auto it = cols_.find(col);
    if (it == cols_.end()) return ScalarTraits<S>::zero();
    auto jt = it->second.find(row);
    return jt == it->second.end() ? ScalarTraits<S>::zero() : jt->second;
  }

  /// Entries of column `col`; empty when the column is zero.
  const Column& column(Integer col) const {
    static const Column empty;
    auto it = cols_.find(col);
    return it == cols_.end() ? empty : it->second;
  }

  const std::map<Integer, Column>& columns() const { return cols_; }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& [c, col] : cols_) n += col.size();
    return n;
  }

  bool empty() const { return cols_.empty(); }

  SparseMatrix operator*(const SparseMatrix& rhs) const {
    SparseMatrix out;
    for (const auto& [c, col] : rhs.cols_) {
      for (const auto& [k, b] : col) {
        auto it = cols_.find(k);
        if (it == cols_.end()) continue;
        for (const auto& [r, a] : it->second) out.add_to(r, c, S(a * b));
      }
    }
    return out;
  }

  SparseMatrix operator+(const SparseMatrix& rhs) const {
    SparseMatrix out = *this;
    for (const auto& [c, col] : rhs.cols_)
      for (const auto& [r, v] : col) out.add_to(r, c, v);
    return out;
  }

  SparseMatrix operator-(const SparseMatrix& rhs) const { return *this + rhs.scaled(S(-ScalarTraits<S>::one())); }

  SparseMatrix scaled(const S& k) const {
    SparseMatrix out;
    for (const auto& [c, col] : cols_)
      for (const auto& [r, v] : col) out.set(r, c, S(v * k));
    return out;
  }

  /// Conjugate transpose.
  SparseMatrix adjoint() const {
    SparseMatrix out;
    for (const auto& [c, col] : cols_) {
      for (const auto& [r, v] : col) {
        if constexpr (std::is_same_v<S, Complex>) {
          out.set(c, r, std::conj(v));
        } else {
          out.set(c, r, v);
        }
      }
    }
    return out;
  }

  /// Restriction to the given columns.
  SparseMatrix restrict_columns(const std::set<Integer>& keep) const {
    SparseMatrix out;
    for (const auto& [c, col] : cols_)
      if (keep.contains(c)) out.cols_[c] = col;
    return out;
  }

  /// Restriction to the given rows.
  SparseMatrix restrict_rows(const std::set<Integer>& keep) const {
    SparseMatrix out;
    for (const auto& [c, col] : cols_)
      for (const auto& [r, v] : col)
        if (keep.contains(r)) out.set(r, c, v);
    return out;
  }

  static SparseMatrix identity(const std::vector<Integer>& labels) {
    SparseMatrix out;
    for (Integer l : labels) out.set(l, l, ScalarTraits<S>::one());
    return out;
  }

  /// True if each row and each column holds at most one entry; the operator
  /// norm of such a matrix is max |entry|.
  bool is_monomial() const {
    std::set<Integer> rows;
    for (const auto& [c, col] : cols_) {
      if (col.size() > 1) return false;
      if (!rows.insert(col.begin()->first).second) return false;
    }
    return true;
  }

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::map<Integer, Column> cols_;
};

/// Exact rank by sparse Gaussian elimination over Q.
Integer rank(const SparseMatrix<Rational>& a);

/// max |entry|, exact. Equals the operator norm for monomial matrices.
Rational max_abs_entry(const SparseMatrix<Rational>& a);

/// Largest singular value by power iteration on A^T A in double precision.
/// A lower estimate that converges to the norm of the finite matrix.
double estimate_norm(const SparseMatrix<Rational>& a, int iterations = 500);
double estimate_norm(const SparseMatrix<Complex>& a, int iterations = 500);

/// max |a_ij - b_ij| over the union of supports.
double max_abs_difference(const SparseMatrix<Complex>& a, const SparseMatrix<Complex>& b);

template <ExactScalar S>
SparseMatrix<Complex> to_complex(const SparseMatrix<S>& a) {
  SparseMatrix<Complex> out;
  for (const auto& [c, col] : a.columns())
    for (const auto& [r, v] : col) out.set(r, c, to_complex(v));
  return out;
}

}  // namespace hensel
