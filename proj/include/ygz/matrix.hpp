#ifndef YGZ_MATRIX_HPP
#define YGZ_MATRIX_HPP

// Dense exact matrices over the rationals, matrix-valued polynomials,
// Lagrange interpolation and minimal-polynomial machinery.

#include <stdexcept>
#include <utility>
#include <vector>

#include "ygz/poly.hpp"
#include "ygz/rational.hpp"

namespace ygz {

struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ShapeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DuplicateNode : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rat(0)) {}
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Mat& p, const Mat& q) {
    return p.rows_ == q.rows_ && p.cols_ == q.cols_ && p.a_ == q.a_;
  }
  friend bool operator!=(const Mat& p, const Mat& q) { return !(p == q); }

  friend Mat operator+(const Mat& p, const Mat& q) {
    p.check_same_shape(q);
    Mat r = p;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += q.a_[i];
    return r;
  }
  friend Mat operator-(const Mat& p, const Mat& q) {
    p.check_same_shape(q);
    Mat r = p;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= q.a_[i];
    return r;
  }
  friend Mat operator*(const Rat& c, const Mat& p) {
    Mat r = p;
    for (auto& x : r.a_) x *= c;
    return r;
  }
  friend Mat operator*(const Mat& p, const Mat& q) {
    if (p.cols_ != q.rows_) throw ShapeMismatch("matrix product shape");
    Mat r(p.rows_, q.cols_);
    for (int i = 0; i < p.rows_; ++i)
      for (int k = 0; k < p.cols_; ++k) {
        const Rat& pik = p.at(i, k);
        if (pik == 0) continue;
        for (int j = 0; j < q.cols_; ++j) {
          const Rat& qkj = q.at(k, j);
          if (qkj != 0) r.at(i, j) += pik * qkj;
        }
      }
    return r;
  }
  Mat operator-() const { return Rat(-1) * *this; }

  // Kronecker product; the left factor is the most significant index.
  friend Mat kron(const Mat& p, const Mat& q) {
    Mat r(p.rows_ * q.rows_, p.cols_ * q.cols_);
    for (int i = 0; i < p.rows_; ++i)
      for (int j = 0; j < p.cols_; ++j) {
        if (p.at(i, j) == 0) continue;
        for (int k = 0; k < q.rows_; ++k)
          for (int l = 0; l < q.cols_; ++l)
            r.at(i * q.rows_ + k, j * q.cols_ + l) = p.at(i, j) * q.at(k, l);
      }
    return r;
  }

  Mat submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    Mat r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) r.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return r;
  }

  Mat apply(const std::vector<Rat>& v) const;  // matrix * column vector

 private:
  void check_same_shape(const Mat& q) const {
    if (rows_ != q.rows_ || cols_ != q.cols_) throw ShapeMismatch("matrix shape");
  }
  int rows_, cols_;
  std::vector<Rat> a_;
};

inline Mat Mat::apply(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw ShapeMismatch("vector length");
  Mat r(rows_, 1);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r.at(i, 0) += at(i, j) * v[j];
  return r;
}

namespace detail {
// Pivot heuristic: any nonzero entry is correct; prefer small numerator and
// denominator to limit intermediate bit growth.
inline std::size_t rat_size(const Rat& x) {
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}
}  // namespace detail

// Exact Gauss-Jordan inverse.  Throws SingularMatrix if rank deficient.
inline Mat mat_inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("inverse of non-square matrix");
  int n = m.rows();
  Mat a = m;
  Mat inv = Mat::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    std::size_t best = 0;
    for (int r = col; r < n; ++r) {
      if (a.at(r, col) == 0) continue;
      std::size_t sz = detail::rat_size(a.at(r, col));
      if (pivot < 0 || sz < best) {
        pivot = r;
        best = sz;
      }
    }
    if (pivot < 0) throw SingularMatrix("matrix is singular");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Rat d = Rat(1) / a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) *= d;
      inv.at(col, j) *= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col) == 0) continue;
      Rat f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

// Basis of the right kernel, one column vector per basis element.
inline std::vector<std::vector<Rat>> mat_kernel(const Mat& m) {
  int rows = m.rows(), cols = m.cols();
  Mat a = m;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    std::size_t best = 0;
    for (int i = r; i < rows; ++i) {
      if (a.at(i, c) == 0) continue;
      std::size_t sz = detail::rat_size(a.at(i, c));
      if (p < 0 || sz < best) {
        p = i;
        best = sz;
      }
    }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < cols; ++j) std::swap(a.at(p, j), a.at(r, j));
    Rat d = Rat(1) / a.at(r, c);
    for (int j = 0; j < cols; ++j) a.at(r, j) *= d;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (int j = 0; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -a.at(static_cast<int>(k), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline int mat_rank(const Mat& m) {
  return m.cols() - static_cast<int>(mat_kernel(m).size());
}

// Polynomial with matrix coefficients, lowest degree first, trimmed.
class MatrixPoly {
 public:
  MatrixPoly() = default;
  explicit MatrixPoly(std::vector<Mat> coeffs) : c_(std::move(coeffs)) {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i].rows() != c_[0].rows() || c_[i].cols() != c_[0].cols())
        throw ShapeMismatch("matrix polynomial coefficient shapes");
    trim();
  }

  const std::vector<Mat>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Mat coeff(int k, int rows, int cols) const {
    if (k >= 0 && k < static_cast<int>(c_.size())) return c_[k];
    return Mat(rows, cols);
  }

  Mat operator()(const Rat& x) const {
    if (c_.empty()) throw ShapeMismatch("evaluation of shapeless zero matrix polynomial");
    Mat acc(c_[0].rows(), c_[0].cols());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = x * acc + *it;
    return acc;
  }
  Mat eval_or(const Rat& x, int rows, int cols) const {
    return c_.empty() ? Mat(rows, cols) : (*this)(x);
  }

  Poly entry(int i, int j) const {
    std::vector<Rat> e(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) e[k] = c_[k].at(i, j);
    return Poly(std::move(e));
  }

  friend bool operator==(const MatrixPoly& p, const MatrixPoly& q) { return p.c_ == q.c_; }
  friend bool operator!=(const MatrixPoly& p, const MatrixPoly& q) { return !(p == q); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Mat> c_;
};

// Unique MatrixPoly of degree <= degree_bound through degree_bound+1 nodes.
inline MatrixPoly lagrange_interpolate(const std::vector<std::pair<Rat, Mat>>& points,
                                       int degree_bound) {
  if (static_cast<int>(points.size()) != degree_bound + 1)
    throw ShapeMismatch("need degree_bound + 1 interpolation points");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first) throw DuplicateNode("repeated interpolation node");
  int rows = points[0].second.rows(), cols = points[0].second.cols();
  for (const auto& p : points)
    if (p.second.rows() != rows || p.second.cols() != cols)
      throw ShapeMismatch("interpolation value shapes");
  std::vector<Mat> acc(points.size(), Mat(rows, cols));
  for (std::size_t i = 0; i < points.size(); ++i) {
    Poly basis = Poly::one();
    Rat denom(1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * Poly({-points[j].first, Rat(1)});
      denom *= points[i].first - points[j].first;
    }
    Rat inv = Rat(1) / denom;
    for (int k = 0; k <= basis.degree(); ++k) {
      Rat w = inv * basis.coeff(k);
      if (w != 0) acc[k] = acc[k] + w * points[i].second;
    }
  }
  return MatrixPoly(std::move(acc));
}

// Monic annihilating polynomial of least degree, via the Krylov sequence of
// powers inside End(V) with incremental elimination.
inline Poly minimal_polynomial(const Mat& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("minimal polynomial of non-square matrix");
  int n = m.rows();
  std::size_t dim = static_cast<std::size_t>(n) * n;
  // Echelon rows spanning {vec(I), vec(m), ...}, plus their coordinates in
  // terms of the original powers.
  std::vector<std::vector<Rat>> ech;       // reduced vectors
  std::vector<std::size_t> lead;           // leading index of each reduced vector
  std::vector<std::vector<Rat>> coords;    // expression in power basis
  Mat power = Mat::identity(n);
  for (int k = 0;; ++k) {
    std::vector<Rat> v(dim);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(i) * n + j] = power.at(i, j);
    std::vector<Rat> co(static_cast<std::size_t>(k) + 1, Rat(0));
    co[k] = 1;
    // reduce v against the echelon rows
    for (std::size_t r = 0; r < ech.size(); ++r) {
      if (v[lead[r]] == 0) continue;
      Rat f = v[lead[r]];
      for (std::size_t i = 0; i < dim; ++i) v[i] -= f * ech[r][i];
      for (std::size_t i = 0; i < coords[r].size(); ++i) co[i] -= f * coords[r][i];
    }
    std::size_t l = 0;
    while (l < dim && v[l] == 0) ++l;
    if (l == dim) {
      // v reduced to zero: sum co_i m^i = 0 with co_k = 1, the minimal relation
      return Poly(std::move(co));
    }
    Rat inv = Rat(1) / v[l];
    for (auto& x : v) x *= inv;
    for (auto& x : co) x *= inv;
    ech.push_back(std::move(v));
    lead.push_back(l);
    coords.push_back(std::move(co));
    power = power * m;
  }
}

}  // namespace ygz

#endif  // YGZ_MATRIX_HPP
