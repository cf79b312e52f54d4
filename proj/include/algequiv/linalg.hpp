#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "algequiv/field.hpp"

namespace algequiv {

/// Dense row-major matrix over a single field.
class Mat {
 public:
  /// rows x cols zero matrix.
  Mat(const FieldSpec& field, std::size_t rows, std::size_t cols);
  /// Takes ownership of row-major entries; all must lie in `field`.
  Mat(const FieldSpec& field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Mat identity(const FieldSpec& field, std::size_t n);
  static Mat from_ints(const FieldSpec& field, std::initializer_list<std::initializer_list<long long>> rows);
  static Mat diagonal(std::span<const Scalar> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldSpec& field() const noexcept { return field_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Scalar> entries() const noexcept { return entries_; }
  std::span<const Scalar> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  /// Copy of the rows x cols window starting at (r0, c0).
  Mat slice(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

  bool is_zero() const;

  friend bool operator==(const Mat& a, const Mat& b);

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator-(const Mat& a);
Mat operator*(const Scalar& s, const Mat& a);

Mat transpose(const Mat& a);

/// Block layout a11*B, a12*B, ...; row (i*p'+i'), column (j*q'+j').
Mat kron(const Mat& a, const Mat& b);

/// a (x) a (x) ... (x) a with k factors; k = 0 gives the 1x1 identity.
Mat kron_pow(const Mat& a, std::size_t k);

/// x * factor^{(x)n} computed one tensor slot at a time, without
/// materializing the Kronecker power. Equal to x * kron_pow(factor, n).
Mat mul_kron_pow(const Mat& x, const Mat& factor, std::size_t n);

/// Throws SingularMatrix when `a` is not invertible.
Mat inverse(const Mat& a);
Scalar det(const Mat& a);
std::size_t rank(const Mat& a);

bool is_symmetric(const Mat& a);
bool is_diagonal(const Mat& a);

struct Congruence {
  Mat q;  // nonsingular
  Mat d;  // diagonal, (Q^-1)^t S Q^-1
};

// Symmetric Gaussian elimination with pivots taken in index order. A zero
// pivot S_ii is repaired by adding (or, if that cancels, subtracting)
// row/column j into i for the smallest j > i with S_ij != 0; rows with no
// such j stay as zero diagonal entries. If S is already diagonal, Q = I.
// Throws NotSymmetric.
Congruence congruence_diagonalize(const Mat& s);

std::ostream& operator<<(std::ostream& os, const Mat& m);

}  // namespace algequiv
