#pragma once

// Shared test fixtures: named algebras, samplers, and reference
// implementations that recompute library results by a different route
// (explicit index sums, materialized Kronecker powers).

#include <cstddef>
#include <vector>

#include "algequiv/errors.hpp"
#include "algequiv/frame.hpp"
#include "algequiv/linalg.hpp"
#include "algequiv/msc.hpp"
#include "algequiv/normalize.hpp"
#include "algequiv/oracle.hpp"

namespace algequiv::testing {

/// F + F: e1 e1 = e1, e2 e2 = e2, mixed products zero.
inline Msc direct_sum(const FieldSpec& f) {
  return Msc(Mat::from_ints(f, {{1, 0, 0, 0}, {0, 0, 0, 1}}));
}

/// F[x]/(x^2): e1 is the unit, e2 e2 = 0.
inline Msc dual_numbers(const FieldSpec& f) {
  return Msc(Mat::from_ints(f, {{1, 0, 0, 0}, {0, 1, 1, 0}}));
}

inline Mat random_mat(std::size_t rows, std::size_t cols, const FieldSpec& f, Rng& rng, long long bound = 4) {
  std::vector<Scalar> e;
  for (std::size_t i = 0; i < rows * cols; ++i) e.push_back(rng.element(f, bound));
  return Mat(f, rows, cols, std::move(e));
}

inline Mat random_symmetric(std::size_t n, const FieldSpec& f, Rng& rng, long long bound = 4) {
  Mat s(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) s(i, j) = s(j, i) = rng.element(f, bound);
  return s;
}

inline Msc random_v0_algebra(std::size_t m, const FieldSpec& f, Rng& rng, long long bound = 3) {
  for (;;) {
    Msc a = random_algebra(m, f, rng, bound);
    if (in_v0(a)) return a;
  }
}

/// Random algebra in V0 whose greedy frame exists within default_kmax(m).
inline Msc random_framed_algebra(std::size_t m, const FieldSpec& f, Rng& rng, long long bound = 3) {
  for (;;) {
    Msc a = random_v0_algebra(m, f, rng, bound);
    try {
      build_frame(normalize(a).abar, default_kmax(m));
      return a;
    } catch (const FrameDeficient&) {
    }
  }
}

/// B^i_{jk} = sum g_{ia} A^a_{bc} h_{bj} h_{ck} with h = g^-1.
inline Msc reference_act(const Mat& g, const Msc& a) {
  const std::size_t m = a.dim();
  const Mat h = inverse(g);
  Mat out(a.field(), m, m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        Scalar acc = Scalar::zero(a.field());
        for (std::size_t x = 0; x < m; ++x)
          for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c) acc += g(i, x) * a.constant(x, b, c) * h(b, j) * h(c, k);
        out(i, j * m + k) = acc;
      }
  return Msc(std::move(out));
}

/// Tr(A_i A_j) = sum_{a,b} A^a_{ib} A^b_{ja}.
inline Mat reference_t1(const Msc& a) {
  const std::size_t m = a.dim();
  Mat t(a.field(), m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) t(i, j) += a.constant(x, i, y) * a.constant(y, j, x);
  return t;
}

/// Trace form of level k from explicit products of the blocks.
inline Mat reference_trace_form(const Msc& a, std::size_t k) {
  const std::size_t m = a.dim();
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) n *= m;
  const std::vector<Mat> b = blocks(a);
  auto word = [&](std::size_t index) {
    std::vector<std::size_t> digits(k);
    for (std::size_t d = k; d-- > 0;) {
      digits[d] = index % m;
      index /= m;
    }
    return digits;
  };
  Mat t(a.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Mat prod = Mat::identity(a.field(), m);
      for (std::size_t d : word(r)) prod = prod * b[d];
      for (std::size_t d : word(c)) prod = prod * b[d];
      for (std::size_t i = 0; i < m; ++i) t(r, c) += prod(i, i);
    }
  return t;
}

/// Covariant row with every Kronecker power materialized.
inline Mat reference_covariant_matrix(const Msc& a, std::size_t k) {
  const Mat t1 = reference_t1(a);
  const Mat c = inverse(t1);
  Mat pi = Mat::identity(a.field(), a.dim());
  for (std::size_t l = 0; l < k; ++l) pi = pi * kron_pow(a.matrix(), std::size_t{1} << l);
  return pi * kron_pow(c, std::size_t{1} << k) * transpose(pi) * t1 * a.matrix();
}

}  // namespace algequiv::testing
