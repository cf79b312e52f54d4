#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "algequiv/linalg.hpp"

namespace algequiv {

/// Matrix of structure constants of an m-dimensional algebra in a fixed basis.
///
/// The m x m^2 matrix holds A^i_{jk} (e_j * e_k = sum_i A^i_{jk} e_i) at row i,
/// column j*m + k (zero-based), so that u * v = A (u (x) v) for coordinate
/// columns u, v. Block j is the m x m window of columns j*m .. j*m+m-1, i.e.
/// (A_j)_{ik} = A^i_{jk}.
class Msc {
 public:
  /// Throws DimensionMismatch unless `mat` is m x m^2 with m >= 1.
  explicit Msc(Mat mat);

  static Msc zero(const FieldSpec& field, std::size_t m);
  /// Reassembles (A_1, ..., A_m); all blocks must be m x m.
  static Msc from_blocks(std::span<const Mat> blocks);

  std::size_t dim() const noexcept { return m_; }
  const Mat& matrix() const noexcept { return mat_; }
  const FieldSpec& field() const noexcept { return mat_.field(); }

  /// A^i_{jk}, zero-based.
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const { return mat_(i, j * m_ + k); }

  friend bool operator==(const Msc& a, const Msc& b) { return a.mat_ == b.mat_; }

 private:
  std::size_t m_;
  Mat mat_;
};

/// tau(g, A) = g A (g^-1 (x) g^-1): the same algebra in the basis changed by g.
/// Throws SingularMatrix or DimensionMismatch.
Msc act(const Mat& g, const Msc& a);

/// True iff act(g, a) == b, checked as g A == B (g (x) g) without inverting g.
bool maps_to(const Mat& g, const Msc& a, const Msc& b);

std::vector<Mat> blocks(const Msc& a);

/// Product of two elements given as coordinate columns (m x 1).
Mat multiply(const Msc& a, const Mat& u, const Mat& v);

// Trace rows of an m x m^2 matrix read with the structure-constant index
// convention: tr1_k = sum_i X^i_{ik}, tr2_j = sum_i X^i_{ji}. Both 1 x m.
Mat tr1(const Mat& x);
Mat tr2(const Mat& x);
inline Mat tr1(const Msc& a) { return tr1(a.matrix()); }
inline Mat tr2(const Msc& a) { return tr2(a.matrix()); }

// Block-matrix operations "over Mat(m,F)". A block matrix is an ordinary Mat
// whose dimensions are multiples of m; block products are ordinary products.

/// Transposes the block layout; the blocks themselves are left as they are.
Mat block_transpose(const Mat& x, std::size_t m);
/// Block ((i,i'),(j,j')) = X_ij * Y_i'j' (matrix product, X's block first).
Mat block_kron(const Mat& x, const Mat& y, std::size_t m);
Mat block_kron_pow(const Mat& x, std::size_t k, std::size_t m);
/// Entry (i,j) = Tr(X_ij).
Mat block_trace(const Mat& x, std::size_t m);

/// The m^k blocks A_{i1} A_{i2} ... A_{ik}, multi-indices in lexicographic
/// order (leftmost most significant). Throws CapExceeded past `max_blocks`.
std::vector<Mat> block_tensor_pow_row(const Msc& a, std::size_t k, std::size_t max_blocks = 1024);

/// Symmetric covariant trace form of level k.
struct TraceForm {
  std::size_t k;
  Mat mat;
};

inline constexpr std::size_t kDefaultTraceFormCap = 1024;

// T_k(A) = Tr~((A^{(x)k})^t A^{(x)k}) with the overline (block) operations:
// entry (I, J) = Tr(A_{i1}...A_{ik} A_{j1}...A_{jk}). Symmetric for every k
// and transforms as T_k(tau(g,A)) = ((g^-1)^{(x)k})^t T_k(A) (g^-1)^{(x)k}.
// T_1 entry (i, j) = Tr(A_i A_j). Throws CapExceeded when m^k > cap.
TraceForm ttr_form(const Msc& a, std::size_t k, std::size_t cap = kDefaultTraceFormCap);

// Tr~((A^t A)^{(x)k}): entry (I, J) = Tr((A_{i1}A_{j1})...(A_{ik}A_{jk})).
// Covariant like ttr_form and equal to it at k = 1, but not symmetric in
// general from k = 3 at m = 2 and k = 2 at m = 3.
Mat gram_power_trace(const Msc& a, std::size_t k, std::size_t cap = kDefaultTraceFormCap);

}  // namespace algequiv
