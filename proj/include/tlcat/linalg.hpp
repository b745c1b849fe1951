#pragma once

#include <optional>
#include <vector>

#include "tlcat/scalars.hpp"

namespace tlcat {

// Dense matrix over the cyclotomic field; exact fraction-full Gaussian
// elimination only, sized for the small hom spaces this project meets.
class Mat {
 public:
  Mat(const CycField& field, int rows, int cols)
      : field_(&field), rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * cols, field.zero()) {}

  static Mat identity(const CycField& field, int n) {
    Mat m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const CycField& field() const { return *field_; }

  CycNum& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const CycNum& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matmul shape mismatch");
    Mat r(*field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int l = 0; l < cols_; ++l) {
        const CycNum& x = at(i, l);
        if (x.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) {
          if (o.at(l, j).is_zero()) continue;
          r.at(i, j) += x * o.at(l, j);
        }
      }
    }
    return r;
  }

  Mat operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matadd shape mismatch");
    Mat r(*field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }

  Mat operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matsub shape mismatch");
    Mat r(*field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }

  Mat scaled(const CycNum& c) const {
    Mat r(*field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
  }

  Mat transpose() const {
    Mat r(*field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  int rank() const {
    Mat m = *this;
    int r = 0;
    for (int col = 0; col < cols_ && r < rows_; ++col) {
      int pivot = -1;
      for (int i = r; i < rows_; ++i) {
        if (!m.at(i, col).is_zero()) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) continue;
      m.swap_rows(pivot, r);
      CycNum inv = m.at(r, col).inv();
      for (int i = r + 1; i < rows_; ++i) {
        if (m.at(i, col).is_zero()) continue;
        CycNum factor = m.at(i, col) * inv;
        for (int j = col; j < cols_; ++j)
          m.at(i, j) -= factor * m.at(r, j);
      }
      ++r;
    }
    return r;
  }

  // Two-sided inverse; nullopt when not square or singular.
  std::optional<Mat> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Mat m = *this;
    Mat inv = identity(*field_, rows_);
    for (int col = 0; col < cols_; ++col) {
      int pivot = -1;
      for (int i = col; i < rows_; ++i) {
        if (!m.at(i, col).is_zero()) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return std::nullopt;
      m.swap_rows(pivot, col);
      inv.swap_rows(pivot, col);
      CycNum p = m.at(col, col).inv();
      for (int j = 0; j < cols_; ++j) {
        m.at(col, j) *= p;
        inv.at(col, j) *= p;
      }
      for (int i = 0; i < rows_; ++i) {
        if (i == col || m.at(i, col).is_zero()) continue;
        CycNum factor = m.at(i, col);
        for (int j = 0; j < cols_; ++j) {
          m.at(i, j) -= factor * m.at(col, j);
          inv.at(i, j) -= factor * inv.at(col, j);
        }
      }
    }
    return inv;
  }

  // Solves (*this) * X = rhs exactly; nullopt when inconsistent. When the
  // system is underdetermined the free variables are set to zero.
  std::optional<Mat> solve(const Mat& rhs) const {
    if (rhs.rows_ != rows_) throw std::invalid_argument("solve shape mismatch");
    Mat m = *this;
    Mat b = rhs;
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < cols_ && r < rows_; ++col) {
      int pivot = -1;
      for (int i = r; i < rows_; ++i) {
        if (!m.at(i, col).is_zero()) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) continue;
      m.swap_rows(pivot, r);
      b.swap_rows(pivot, r);
      CycNum p = m.at(r, col).inv();
      for (int j = 0; j < cols_; ++j) m.at(r, j) *= p;
      for (int j = 0; j < b.cols_; ++j) b.at(r, j) *= p;
      for (int i = 0; i < rows_; ++i) {
        if (i == r || m.at(i, col).is_zero()) continue;
        CycNum factor = m.at(i, col);
        for (int j = 0; j < cols_; ++j) m.at(i, j) -= factor * m.at(r, j);
        for (int j = 0; j < b.cols_; ++j) b.at(i, j) -= factor * b.at(r, j);
      }
      pivot_col.push_back(col);
      ++r;
    }
    for (int i = r; i < rows_; ++i) {
      for (int j = 0; j < b.cols_; ++j) {
        if (!b.at(i, j).is_zero()) return std::nullopt;
      }
    }
    Mat x(*field_, cols_, b.cols_);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < b.cols_; ++j) x.at(pivot_col[i], j) = b.at(i, j);
    }
    return x;
  }

 private:
  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }

  const CycField* field_;
  int rows_, cols_;
  std::vector<CycNum> a_;
};

}  // namespace tlcat
