#include "taucat/mat.hpp"

#include <sstream>
#include <stdexcept>

namespace taucat {

Scalar scalar_from_string(const std::string& s) {
  // Accept "p", "p/q", and decimal-free signs. mpq_class throws on garbage.
  mpq_class q(s);
  q.canonicalize();
  return q;
}

std::string scalar_to_string(const Scalar& s) {
  mpq_class q = s;
  q.canonicalize();
  return q.get_str();
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

bool Mat::is_identity() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Mat Mat::operator+(const Mat& o) const {
  assert(r_ == o.r_ && c_ == o.c_);
  Mat m(r_, c_);
  for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  assert(r_ == o.r_ && c_ == o.c_);
  Mat m(r_, c_);
  for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] - o.e_[k];
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  assert(c_ == o.r_);
  Mat m(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Scalar& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.c_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b != 0) m.at(i, j) += a * b;
      }
    }
  return m;
}

Mat Mat::operator*(const Scalar& s) const {
  Mat m(r_, c_);
  for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] * s;
  return m;
}

Mat Mat::transpose() const {
  Mat m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Mat Mat::hstack(const Mat& o) const {
  assert(r_ == o.r_);
  Mat m(r_, c_ + o.c_);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) m.at(i, j) = at(i, j);
    for (int j = 0; j < o.c_; ++j) m.at(i, c_ + j) = o.at(i, j);
  }
  return m;
}

Mat Mat::vstack(const Mat& o) const {
  assert(c_ == o.c_);
  Mat m(r_ + o.r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(i, j) = at(i, j);
  for (int i = 0; i < o.r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(r_ + i, j) = o.at(i, j);
  return m;
}

Mat Mat::submatrix(int i0, int j0, int nrows, int ncols) const {
  assert(i0 >= 0 && j0 >= 0 && i0 + nrows <= r_ && j0 + ncols <= c_);
  Mat m(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) m.at(i, j) = at(i0 + i, j0 + j);
  return m;
}

Mat Mat::kron(const Mat& o) const {
  Mat m(r_ * o.r_, c_ * o.c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) {
      const Scalar& a = at(i, j);
      if (a == 0) continue;
      for (int p = 0; p < o.r_; ++p)
        for (int q = 0; q < o.c_; ++q)
          if (o.at(p, q) != 0) m.at(i * o.r_ + p, j * o.c_ + q) = a * o.at(p, q);
    }
  return m;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < c_; ++j) {
      if (j) os << " ";
      os << at(i, j).get_str();
    }
  }
  os << "]";
  return os.str();
}

Rref rref(const Mat& m) {
  Mat a = m;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < a.rows(); ++i)
      if (a.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
    Scalar inv = Scalar(1) / a.at(row, col);
    for (int j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row) continue;
      if (a.at(i, col) == 0) continue;
      Scalar f = a.at(i, col);
      for (int j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

int rank(const Mat& m) { return int(rref(m).pivots.size()); }

Mat kernel_basis(const Mat& m) {
  Rref r = rref(m);
  std::vector<int> free_cols;
  {
    size_t p = 0;
    for (int j = 0; j < m.cols(); ++j) {
      if (p < r.pivots.size() && r.pivots[p] == j)
        ++p;
      else
        free_cols.push_back(j);
    }
  }
  Mat k(m.cols(), int(free_cols.size()));
  for (size_t f = 0; f < free_cols.size(); ++f) {
    int fc = free_cols[f];
    k.at(fc, int(f)) = 1;
    for (size_t p = 0; p < r.pivots.size(); ++p) {
      // pivot row p has leading 1 in column pivots[p]
      k.at(r.pivots[p], int(f)) = -r.mat.at(int(p), fc);
    }
  }
  return k;
}

SolveResult solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::runtime_error("shape mismatch");
  Mat aug = a.hstack(b);
  Rref r = rref(aug);
  // Inconsistent iff some pivot lands in the b-block.
  for (int p : r.pivots)
    if (p >= a.cols()) return {false, Mat()};
  Mat x(a.cols(), b.cols());
  for (size_t p = 0; p < r.pivots.size(); ++p) {
    int pc = r.pivots[p];
    for (int j = 0; j < b.cols(); ++j) x.at(pc, j) = r.mat.at(int(p), a.cols() + j);
  }
  return {true, std::move(x)};
}

SolveResult inverse(const Mat& a) {
  if (a.rows() != a.cols()) return {false, Mat()};
  SolveResult s = solve(a, Mat::identity(a.rows()));
  if (!s.ok) return s;
  if (!(a * s.x).is_identity()) return {false, Mat()};
  return s;
}

Mat column_space_basis(const Mat& m) {
  Rref r = rref(m);
  Mat b(m.rows(), int(r.pivots.size()));
  for (size_t p = 0; p < r.pivots.size(); ++p)
    for (int i = 0; i < m.rows(); ++i) b.at(i, int(p)) = m.at(i, r.pivots[p]);
  return b;
}

bool in_column_space(const Mat& basis, const Mat& v) {
  return solve(basis, v).ok;
}

Mat intersect_column_spaces(const Mat& a, const Mat& b) {
  // span(a) ∩ span(b) via kernel of [a | -b].
  assert(a.rows() == b.rows());
  Mat k = kernel_basis(a.hstack(b * Scalar(-1)));
  Mat coeffs = k.submatrix(0, 0, a.cols(), k.cols());
  return column_space_basis(a * coeffs);
}

}  // namespace taucat
