#include "algequiv/msc.hpp"

#include <utility>

#include "algequiv/errors.hpp"

namespace algequiv {

namespace {

std::size_t dim_from_shape(const Mat& mat) {
  const std::size_t m = mat.rows();
  if (m == 0 || mat.cols() != m * m)
    throw DimensionMismatch("structure constants must be m x m^2, got " + std::to_string(mat.rows()) + "x" +
                            std::to_string(mat.cols()));
  return m;
}

std::size_t capped_power(std::size_t m, std::size_t k, std::size_t cap) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n > cap / m) throw CapExceeded(std::to_string(m) + "^" + std::to_string(k) + " exceeds cap " + std::to_string(cap));
    n *= m;
  }
  if (n > cap) throw CapExceeded(std::to_string(m) + "^" + std::to_string(k) + " exceeds cap " + std::to_string(cap));
  return n;
}

// Tr(x y) without forming the product.
Scalar trace_of_product(const Mat& x, const Mat& y) {
  Scalar t = Scalar::zero(x.field());
  for (std::size_t a = 0; a < x.rows(); ++a)
    for (std::size_t b = 0; b < x.cols(); ++b) t.add_product(x(a, b), y(b, a));
  return t;
}

void require_blocks(const Mat& x, std::size_t m) {
  if (m == 0 || x.rows() % m != 0 || x.cols() % m != 0)
    throw DimensionMismatch("matrix is not partitioned into " + std::to_string(m) + "x" + std::to_string(m) +
                            " blocks");
}

}  // namespace

Msc::Msc(Mat mat) : m_(dim_from_shape(mat)), mat_(std::move(mat)) {}

Msc Msc::zero(const FieldSpec& field, std::size_t m) { return Msc(Mat(field, m, m * m)); }

Msc Msc::from_blocks(std::span<const Mat> blocks) {
  const std::size_t m = blocks.size();
  if (m == 0) throw DimensionMismatch("no blocks");
  Mat mat(blocks.front().field(), m, m * m);
  for (std::size_t j = 0; j < m; ++j) {
    const Mat& b = blocks[j];
    if (b.rows() != m || b.cols() != m) throw DimensionMismatch("block is not m x m");
    if (b.field() != mat.field()) throw FieldMismatch();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) mat(i, j * m + k) = b(i, k);
  }
  return Msc(std::move(mat));
}

Msc act(const Mat& g, const Msc& a) {
  if (g.rows() != a.dim() || g.cols() != a.dim())
    throw DimensionMismatch("basis change must be " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()));
  const Mat ginv = inverse(g);
  return Msc(mul_kron_pow(g * a.matrix(), ginv, 2));
}

bool maps_to(const Mat& g, const Msc& a, const Msc& b) {
  if (a.dim() != b.dim() || g.rows() != a.dim() || g.cols() != a.dim())
    throw DimensionMismatch("dimension mismatch in maps_to");
  return g * a.matrix() == mul_kron_pow(b.matrix(), g, 2);
}

std::vector<Mat> blocks(const Msc& a) {
  const std::size_t m = a.dim();
  std::vector<Mat> out;
  out.reserve(m);
  for (std::size_t j = 0; j < m; ++j) out.push_back(a.matrix().slice(0, j * m, m, m));
  return out;
}

Mat multiply(const Msc& a, const Mat& u, const Mat& v) {
  const std::size_t m = a.dim();
  if (u.rows() != m || u.cols() != 1 || v.rows() != m || v.cols() != 1)
    throw DimensionMismatch("operands must be " + std::to_string(m) + "x1 columns");
  return a.matrix() * kron(u, v);
}

Mat tr1(const Mat& x) {
  const std::size_t m = dim_from_shape(x);
  Mat out(x.field(), 1, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i) out(0, k) += x(i, i * m + k);
  return out;
}

Mat tr2(const Mat& x) {
  const std::size_t m = dim_from_shape(x);
  Mat out(x.field(), 1, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i) out(0, j) += x(i, j * m + i);
  return out;
}

Mat block_transpose(const Mat& x, std::size_t m) {
  require_blocks(x, m);
  const std::size_t br = x.rows() / m;
  const std::size_t bc = x.cols() / m;
  Mat out(x.field(), bc * m, br * m);
  for (std::size_t i = 0; i < br; ++i)
    for (std::size_t j = 0; j < bc; ++j)
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) out(j * m + a, i * m + b) = x(i * m + a, j * m + b);
  return out;
}

Mat block_kron(const Mat& x, const Mat& y, std::size_t m) {
  require_blocks(x, m);
  require_blocks(y, m);
  const std::size_t xr = x.rows() / m, xc = x.cols() / m;
  const std::size_t yr = y.rows() / m, yc = y.cols() / m;
  Mat out(x.field(), xr * yr * m, xc * yc * m);
  for (std::size_t i = 0; i < xr; ++i)
    for (std::size_t j = 0; j < xc; ++j) {
      const Mat xb = x.slice(i * m, j * m, m, m);
      for (std::size_t i2 = 0; i2 < yr; ++i2)
        for (std::size_t j2 = 0; j2 < yc; ++j2) {
          const Mat prod = xb * y.slice(i2 * m, j2 * m, m, m);
          const std::size_t r0 = (i * yr + i2) * m;
          const std::size_t c0 = (j * yc + j2) * m;
          for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) out(r0 + a, c0 + b) = prod(a, b);
        }
    }
  return out;
}

Mat block_kron_pow(const Mat& x, std::size_t k, std::size_t m) {
  require_blocks(x, m);
  Mat out = Mat::identity(x.field(), m);
  for (std::size_t i = 0; i < k; ++i) out = block_kron(out, x, m);
  return out;
}

Mat block_trace(const Mat& x, std::size_t m) {
  require_blocks(x, m);
  Mat out(x.field(), x.rows() / m, x.cols() / m);
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      for (std::size_t a = 0; a < m; ++a) out(i, j) += x(i * m + a, j * m + a);
  return out;
}

std::vector<Mat> block_tensor_pow_row(const Msc& a, std::size_t k, std::size_t max_blocks) {
  const std::size_t m = a.dim();
  capped_power(m, k, max_blocks);
  const std::vector<Mat> base = blocks(a);
  std::vector<Mat> row{Mat::identity(a.field(), m)};
  for (std::size_t level = 0; level < k; ++level) {
    std::vector<Mat> next;
    next.reserve(row.size() * m);
    for (const Mat& prefix : row)
      for (const Mat& b : base) next.push_back(prefix * b);
    row = std::move(next);
  }
  return row;
}

TraceForm ttr_form(const Msc& a, std::size_t k, std::size_t cap) {
  if (k == 0) throw DimensionMismatch("trace form level must be at least 1");
  const std::vector<Mat> row = block_tensor_pow_row(a, k, cap);
  const std::size_t n = row.size();
  Mat t(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      t(i, j) = trace_of_product(row[i], row[j]);
      if (j != i) t(j, i) = t(i, j);
    }
  return {k, std::move(t)};
}

Mat gram_power_trace(const Msc& a, std::size_t k, std::size_t cap) {
  if (k == 0) throw DimensionMismatch("trace form level must be at least 1");
  const std::size_t m = a.dim();
  capped_power(m, k, cap);
  const Mat gram = block_transpose(a.matrix(), m) * a.matrix();
  return block_trace(block_kron_pow(gram, k, m), m);
}

}  // namespace algequiv
