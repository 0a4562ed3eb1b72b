#pragma once

#include <optional>
#include <vector>

#include "superrep/field.hpp"

namespace superrep {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(const Field& f, int n) { return Vec(n, Scalar::zero(f)); }

inline bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw validation_error("vector dimension mismatch");
  Vec r = a;
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

inline Vec scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) { return add(a, scale(Scalar::of_long(a.empty() ? Field::Q() : a[0].field(), -1), b)); }

// Dense matrix over one exact field. Column vectors act on the right:
// (M v)_i = sum_j M(i,j) v_j.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0), f_(Field::Q()) {}
  Matrix(const Field& f, int rows, int cols)
      : rows_(rows), cols_(cols), f_(f), e_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {}

  static Matrix identity(const Field& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
  }
  static Matrix from_columns(const Field& f, int n, const std::vector<Vec>& cols) {
    Matrix m(f, n, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
      if (static_cast<int>(cols[j].size()) != n) throw validation_error("column size mismatch");
      for (int i = 0; i < n; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return f_; }

  Scalar& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
      if (e_[i] != o.e_[i]) return false;
    return true;
  }

  Matrix operator+(const Matrix& o) const {
    require_shape(o.rows_, o.cols_);
    Matrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    require_shape(o.rows_, o.cols_);
    Matrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw validation_error("matrix product shape mismatch");
    Matrix r(f_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        if (at(i, k).is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
      }
    return r;
  }
  Vec apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw validation_error("matrix apply dimension mismatch");
    Vec r = zero_vec(f_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
  }
  Matrix transposed() const {
    Matrix r(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }
  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  // Reduced row echelon form, first nonzero pivot in column order. Returns
  // the pivot column list; the transformation is deterministic.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int pr = -1;
      for (int i = r; i < rows_; ++i)
        if (!at(i, c).is_zero()) {
          pr = i;
          break;
        }
      if (pr < 0) continue;
      if (pr != r)
        for (int j = 0; j < cols_; ++j) std::swap(at(pr, j), at(r, j));
      Scalar inv = at(r, c).inverse();
      for (int j = c; j < cols_; ++j) at(r, j) *= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r || at(i, c).is_zero()) continue;
        Scalar f = at(i, c);
        for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    Matrix m = *this;
    return static_cast<int>(m.rref().size());
  }

  // Basis of the right null space; size is cols - rank.
  std::vector<Vec> kernel_basis() const {
    Matrix m = *this;
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      Vec v = zero_vec(f_, cols_);
      v[c] = Scalar::one(f_);
      for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), c);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Any particular solution of M x = rhs, or nullopt if inconsistent.
  std::optional<Vec> solve(const Vec& rhs) const {
    if (static_cast<int>(rhs.size()) != rows_) throw validation_error("solve: rhs dimension mismatch");
    Matrix aug(f_, rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_) = rhs[i];
    }
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    Vec x = zero_vec(f_, cols_);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
    return x;
  }

  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Matrix aug(f_, rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = Scalar::one(f_);
    }
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_ || pivots.back() != rows_ - 1) return std::nullopt;
    Matrix inv(f_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
  }

 private:
  void require_shape(int r, int c) const {
    if (rows_ != r || cols_ != c) throw validation_error("matrix shape mismatch");
  }
  int rows_, cols_;
  Field f_;
  std::vector<Scalar> e_;
};

// Subspace of K^n kept in reduced echelon form. Insertion order independent,
// deterministic canonical basis. Used for ideals, radicals and corners.
class RowSpace {
 public:
  RowSpace(const Field& f, int n) : f_(f), n_(n) {}

  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return n_; }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Reduce v against the current basis (returns the residual).
  Vec reduce(const Vec& v) const {
    Vec r = v;
    for (size_t i = 0; i < rows_.size(); ++i) {
      const Scalar& c = r[pivots_[i]];
      if (!c.is_zero()) {
        Scalar f = c;
        for (int j = 0; j < n_; ++j) r[j] -= f * rows_[i][j];
      }
    }
    return r;
  }

  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

  // Insert v; returns true if the space grew.
  bool add(const Vec& v) {
    if (static_cast<int>(v.size()) != n_) throw validation_error("RowSpace: dimension mismatch");
    Vec r = reduce(v);
    int p = -1;
    for (int j = 0; j < n_; ++j)
      if (!r[j].is_zero()) {
        p = j;
        break;
      }
    if (p < 0) return false;
    Scalar inv = r[p].inverse();
    for (int j = 0; j < n_; ++j) r[j] *= inv;
    // Back-eliminate to keep reduced form, then insert sorted by pivot.
    for (size_t i = 0; i < rows_.size(); ++i) {
      Scalar c = rows_[i][p];
      if (!c.is_zero())
        for (int j = 0; j < n_; ++j) rows_[i][j] -= c * r[j];
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(r));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
  }

 private:
  Field f_;
  int n_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

}  // namespace superrep
