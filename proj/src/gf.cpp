#include "sga/gf.hpp"

#include <sstream>
#include <stdexcept>

namespace sga {

namespace {
int norm(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}
}  // namespace

int gf_inv(int a, int p) {
  a = norm(a, p);
  if (a == 0) throw std::domain_error("inverse of zero in GF(p)");
  long long result = 1, base = a;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<int>(result);
}

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

Mat::Mat(int rows, int cols, int p) : r_(rows), c_(cols), p_(p), a_(static_cast<size_t>(rows) * cols, 0) {}

Mat Mat::identity(int n, int p) { return scalar(n, 1, p); }

Mat Mat::scalar(int n, int value, int p) {
  Mat m(n, n, p);
  for (int i = 0; i < n; ++i) m.set(i, i, value);
  return m;
}

void Mat::set(int i, int j, int v) { a_[static_cast<size_t>(i) * c_ + j] = norm(v, p_); }

void Mat::add_to(int i, int j, int v) { set(i, j, at(i, j) + v); }

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix product: dimension mismatch");
  Mat out(r_, o.c_, p_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      int v = at(i, k);
      if (!v) continue;
      for (int j = 0; j < o.c_; ++j)
        out.a_[static_cast<size_t>(i) * o.c_ + j] =
            static_cast<int>((out.a_[static_cast<size_t>(i) * o.c_ + j] + 1LL * v * o.at(k, j)) % p_);
    }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix sum: dimension mismatch");
  Mat out(*this);
  for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = (a_[k] + o.a_[k]) % p_;
  return out;
}

Mat Mat::operator-(const Mat& o) const { return *this + o.scaled(-1); }

Mat Mat::scaled(int s) const {
  Mat out(*this);
  for (auto& v : out.a_) v = norm(1LL * v * s, p_);
  return out;
}

Mat Mat::transposed() const {
  Mat out(c_, r_, p_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) out.set(j, i, at(i, j));
  return out;
}

bool Mat::is_zero() const {
  for (int v : a_)
    if (v) return false;
  return true;
}

std::vector<int> row_reduce(Mat& m) {
  const int p = m.field();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols(); ++j) {
        int t = m.at(row, j);
        m.set(row, j, m.at(piv, j));
        m.set(piv, j, t);
      }
    int inv = gf_inv(m.at(row, col), p);
    for (int j = col; j < m.cols(); ++j) m.set(row, j, 1LL * m.at(row, j) * inv % p);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || !m.at(i, col)) continue;
      int f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.set(i, j, m.at(i, j) - 1LL * f * m.at(row, j) % p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int Mat::rank() const {
  Mat m(*this);
  return static_cast<int>(row_reduce(m).size());
}

Mat Mat::inverse() const {
  if (r_ != c_) throw std::domain_error("inverse of non-square matrix");
  Mat aug(r_, 2 * r_, p_);
  aug.put(0, 0, *this);
  aug.put(0, r_, identity(r_, p_));
  auto piv = row_reduce(aug);
  if (static_cast<int>(piv.size()) < r_ || (r_ > 0 && piv[r_ - 1] >= r_))
    throw std::domain_error("singular matrix");
  return aug.block(0, r_, r_, r_);
}

Mat Mat::nullspace() const {
  Mat m(*this);
  auto piv = row_reduce(m);
  std::vector<bool> is_pivot(c_, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < c_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat basis(c_, static_cast<int>(free_cols.size()), p_);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int f = free_cols[k];
    basis.set(f, static_cast<int>(k), 1);
    for (size_t r = 0; r < piv.size(); ++r) basis.set(piv[r], static_cast<int>(k), -m.at(static_cast<int>(r), f));
  }
  return basis;
}

void Mat::put(int r0, int c0, const Mat& b) {
  for (int i = 0; i < b.r_; ++i)
    for (int j = 0; j < b.c_; ++j) set(r0 + i, c0 + j, b.at(i, j));
}

Mat Mat::block(int r0, int c0, int rows, int cols) const {
  Mat out(rows, cols, p_);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.set(i, j, at(r0 + i, c0 + j));
  return out;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < r_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (int j = 0; j < c_; ++j) {
      if (j) os << ',';
      int v = at(i, j);
      os << (v > p_ / 2 ? v - p_ : v);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Mat jordan_block(int m, int s, int p) {
  Mat j = Mat::scalar(m, s, p);
  for (int i = 1; i < m; ++i) j.set(i, i - 1, 1);
  return j;
}

void LinearSystem::add(const std::vector<std::pair<int, int>>& terms) {
  std::vector<std::pair<int, int>> row;
  for (auto [idx, c] : terms) {
    int v = norm(c, p_);
    if (v) row.emplace_back(idx, v);
  }
  if (!row.empty()) rows_.push_back(std::move(row));
}

Mat LinearSystem::to_matrix() const {
  Mat m(static_cast<int>(rows_.size()), n_, p_);
  for (size_t i = 0; i < rows_.size(); ++i)
    for (auto [idx, c] : rows_[i]) m.add_to(static_cast<int>(i), idx, c);
  return m;
}

int LinearSystem::solution_dim() const { return n_ - to_matrix().rank(); }

Mat LinearSystem::solutions() const { return to_matrix().nullspace(); }

}  // namespace sga
