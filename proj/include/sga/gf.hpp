#pragma once
// Exact dense linear algebra over a prime field GF(p), p odd.

#include <cstdint>
#include <string>
#include <vector>

namespace sga {

int gf_inv(int a, int p);
bool is_odd_prime(int p);

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, int p);
  static Mat identity(int n, int p);
  static Mat scalar(int n, int value, int p);

  int rows() const { return r_; }
  int cols() const { return c_; }
  int field() const { return p_; }
  int at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }
  void set(int i, int j, int v);
  void add_to(int i, int j, int v);

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(int s) const;
  Mat transposed() const;
  bool operator==(const Mat& o) const = default;

  bool is_zero() const;
  int rank() const;
  // Inverse; throws std::domain_error if singular.
  Mat inverse() const;
  // Basis of {v : A v = 0} as columns of the returned matrix (cols = nullity).
  Mat nullspace() const;
  // Copies `block` into this matrix with its top-left corner at (r0, c0).
  void put(int r0, int c0, const Mat& block);
  Mat block(int r0, int c0, int rows, int cols) const;
  std::string str() const;

 private:
  int r_ = 0, c_ = 0, p_ = 5;
  std::vector<int> a_;
};

// Row reduction in place; returns the pivot columns.
std::vector<int> row_reduce(Mat& m);

// Jordan block with `s` on the diagonal and ones on the subdiagonal.
Mat jordan_block(int m, int s, int p);

// Builds a matrix from a sparse-ish list of linear equations on n unknowns.
class LinearSystem {
 public:
  LinearSystem(int unknowns, int p) : n_(unknowns), p_(p) {}
  int unknowns() const { return n_; }
  // Adds the equation sum coeff[k] * x[idx[k]] = 0.
  void add(const std::vector<std::pair<int, int>>& terms);
  int solution_dim() const;
  Mat solutions() const;  // columns span the solution space
  size_t equations() const { return rows_.size(); }

 private:
  Mat to_matrix() const;
  int n_, p_;
  std::vector<std::vector<std::pair<int, int>>> rows_;
};

}  // namespace sga
