#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace taucat {

// Exact rational scalar. GMP keeps mpq_class canonical (reduced, positive
// denominator) after every arithmetic op, which is exactly the invariant we
// need.
using Scalar = mpq_class;

Scalar scalar_from_string(const std::string& s);
std::string scalar_to_string(const Scalar& s);

// Dense rational matrix, row-major. 0xN and Nx0 shapes are legal and show up
// constantly (empty vertex spaces), so nothing here may assume positivity.
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int rows, int cols) : r_(rows), c_(cols), e_(size_t(rows) * cols) {
    assert(rows >= 0 && cols >= 0);
  }

  static Mat identity(int n);
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }

  int rows() const { return r_; }
  int cols() const { return c_; }

  Scalar& at(int i, int j) {
    assert(i >= 0 && i < r_ && j >= 0 && j < c_);
    return e_[size_t(i) * c_ + j];
  }
  const Scalar& at(int i, int j) const {
    assert(i >= 0 && i < r_ && j >= 0 && j < c_);
    return e_[size_t(i) * c_ + j];
  }

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && e_ == o.e_; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator*(const Scalar& s) const;
  Mat transpose() const;

  // Stack o to the right / below.
  Mat hstack(const Mat& o) const;
  Mat vstack(const Mat& o) const;
  Mat submatrix(int i0, int j0, int nrows, int ncols) const;

  // Kronecker product: block (i,j) of the result is at(i,j) * o.
  Mat kron(const Mat& o) const;

  std::string to_string() const;

 private:
  int r_, c_;
  std::vector<Scalar> e_;
};

// Reduced row echelon form together with the pivot column indices.
struct Rref {
  Mat mat;
  std::vector<int> pivots;
};

Rref rref(const Mat& m);
int rank(const Mat& m);

// Basis of the right null space, as columns of one matrix (cols = nullity).
Mat kernel_basis(const Mat& m);

// Solve a * x = b columnwise; nullopt-style via the `ok` flag (kept as a pair
// so callers can branch without exceptions).
struct SolveResult {
  bool ok = false;
  Mat x;
};
SolveResult solve(const Mat& a, const Mat& b);

// Inverse, if square and invertible.
SolveResult inverse(const Mat& a);

// Column-span utilities used for subspace arithmetic all over the project:
// a "subspace" is any matrix whose column span is meant.
Mat column_space_basis(const Mat& m);          // basis as columns (rref of transpose trick)
bool in_column_space(const Mat& basis, const Mat& v);
Mat intersect_column_spaces(const Mat& a, const Mat& b);

}  // namespace taucat
