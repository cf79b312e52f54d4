#include "algequiv/linalg.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "algequiv/errors.hpp"

namespace algequiv {

namespace {

void require_same_field(const Mat& a, const Mat& b) {
  if (a.field() != b.field()) throw FieldMismatch();
}

std::string shape(const Mat& a) { return std::to_string(a.rows()) + "x" + std::to_string(a.cols()); }

std::size_t checked_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > static_cast<std::size_t>(-1) / base) throw CapExceeded("matrix dimension overflow");
    r *= base;
  }
  return r;
}

// Row echelon form in place (no back substitution). Returns the pivot
// columns and the determinant sign/scale bookkeeping through `det_out`.
std::vector<std::size_t> echelon(Mat& m, Scalar* det_out) {
  const FieldSpec& f = m.field();
  Scalar det = Scalar::one(f);
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
      det = -det;
    }
    det *= m(row, col);
    const Scalar pinv = m(row, col).inv();
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      const Scalar factor = -(m(r, col) * pinv);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c).add_product(factor, m(row, c));
    }
    pivots.push_back(col);
    ++row;
  }
  if (det_out != nullptr) *det_out = pivots.size() == m.rows() ? det : Scalar::zero(f);
  return pivots;
}

}  // namespace

Mat::Mat(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

Mat::Mat(const FieldSpec& field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw DimensionMismatch("expected " + std::to_string(rows * cols) + " entries, got " +
                            std::to_string(entries_.size()));
  for (const Scalar& s : entries_)
    if (s.field() != field_) throw FieldMismatch();
}

Mat Mat::identity(const FieldSpec& field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Mat Mat::from_ints(const FieldSpec& field, std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Scalar> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged initializer");
    for (long long v : row) entries.push_back(Scalar::from_int(field, v));
  }
  return Mat(field, r, c, std::move(entries));
}

Mat Mat::diagonal(std::span<const Scalar> diag) {
  if (diag.empty()) throw DimensionMismatch("empty diagonal");
  Mat m(diag.front().field(), diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i].field() != m.field()) throw FieldMismatch();
    m(i, i) = diag[i];
  }
  return m;
}

Mat Mat::slice(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw DimensionMismatch("slice out of range of " + shape(*this));
  Mat out(field_, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

bool Mat::is_zero() const {
  for (const Scalar& s : entries_)
    if (!s.is_zero()) return false;
  return true;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw DimensionMismatch("cannot multiply " + shape(a) + " by " + shape(b));
  Mat out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Scalar& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j).add_product(x, b(l, j));
    }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("cannot add " + shape(a) + " and " + shape(b));
  Mat out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

Mat operator-(const Mat& a, const Mat& b) { return a + (-b); }

Mat operator-(const Mat& a) {
  Mat out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = -a(i, j);
  return out;
}

Mat operator*(const Scalar& s, const Mat& a) {
  if (s.field() != a.field()) throw FieldMismatch();
  Mat out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= s;
  return out;
}

Mat transpose(const Mat& a) {
  Mat out(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Mat kron(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  Mat out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          out(i * b.rows() + i2, j * b.cols() + j2) = x * b(i2, j2);
    }
  return out;
}

Mat kron_pow(const Mat& a, std::size_t k) {
  Mat out = Mat::identity(a.field(), 1);
  for (std::size_t i = 0; i < k; ++i) out = kron(out, a);
  return out;
}

Mat mul_kron_pow(const Mat& x, const Mat& factor, std::size_t n) {
  require_same_field(x, factor);
  const std::size_t p = factor.rows();
  const std::size_t q = factor.cols();
  if (x.cols() != checked_pow(p, n))
    throw DimensionMismatch("cannot multiply " + shape(x) + " by a " + std::to_string(n) + "-fold power of " +
                            shape(factor));
  Mat cur = x;
  // At step t the column index decomposes as (left, slot, right) with
  // left in q^t (already transformed) and right in p^(n-t-1).
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t left = checked_pow(q, t);
    const std::size_t right = checked_pow(p, n - t - 1);
    Mat next(x.field(), x.rows(), left * q * right);
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t a = 0; a < left; ++a)
        for (std::size_t i = 0; i < p; ++i)
          for (std::size_t b = 0; b < right; ++b) {
            const Scalar& v = cur(r, (a * p + i) * right + b);
            if (v.is_zero()) continue;
            for (std::size_t j = 0; j < q; ++j) next(r, (a * q + j) * right + b).add_product(v, factor(i, j));
          }
    cur = std::move(next);
  }
  return cur;
}

Mat inverse(const Mat& a) {
  if (!a.is_square()) throw DimensionMismatch("cannot invert " + shape(a));
  const std::size_t n = a.rows();
  const FieldSpec& f = a.field();
  Mat m = a;
  Mat inv = Mat::identity(f, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) throw SingularMatrix();
    if (piv != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(piv, c), m(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    const Scalar pinv = m(col, col).inv();
    for (std::size_t c = 0; c < n; ++c) {
      m(col, c) *= pinv;
      inv(col, c) *= pinv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      const Scalar factor = -m(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c).add_product(factor, m(col, c));
        inv(r, c).add_product(factor, inv(col, c));
      }
    }
  }
  return inv;
}

Scalar det(const Mat& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of non-square " + shape(a));
  Mat m = a;
  Scalar d;
  echelon(m, &d);
  return d;
}

std::size_t rank(const Mat& a) {
  Mat m = a;
  return echelon(m, nullptr).size();
}

bool is_symmetric(const Mat& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (!(a(i, j) == a(j, i))) return false;
  return true;
}

bool is_diagonal(const Mat& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j && !a(i, j).is_zero()) return false;
  return true;
}

Congruence congruence_diagonalize(const Mat& s) {
  if (!is_symmetric(s)) throw NotSymmetric();
  const std::size_t n = s.rows();
  const FieldSpec& f = s.field();
  Mat m = s;
  // Accumulated column operations: E^t S E = D, so Q = E^-1.
  Mat e = Mat::identity(f, n);

  // Column op col_dst += c * col_src on m and e, paired row op on m.
  auto combine = [&](std::size_t dst, std::size_t src, const Scalar& c) {
    for (std::size_t r = 0; r < n; ++r) {
      m(r, dst).add_product(c, m(r, src));
      e(r, dst).add_product(c, e(r, src));
    }
    for (std::size_t col = 0; col < n; ++col) m(dst, col).add_product(c, m(src, col));
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i).is_zero()) {
      std::size_t j = i + 1;
      while (j < n && m(i, j).is_zero()) ++j;
      if (j == n) continue;
      combine(i, j, Scalar::one(f));
      if (m(i, i).is_zero()) {
        // S_jj + 2 S_ij vanished; undo and subtract, leaving S_jj - 2 S_ij != 0.
        combine(i, j, -Scalar::from_int(f, 2));
      }
    }
    const Scalar pinv = m(i, i).inv();
    for (std::size_t r = i + 1; r < n; ++r) {
      if (m(r, i).is_zero()) continue;
      combine(r, i, -(m(r, i) * pinv));
    }
  }
  if (!is_diagonal(m)) throw InternalInconsistency("congruence elimination left off-diagonal entries");
  return {inverse(e), std::move(m)};
}

}  // namespace algequiv
