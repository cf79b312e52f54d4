#include <doctest.h>

#include "support/fixtures.hpp"

using namespace algequiv;
using namespace algequiv::testing;

namespace {

const FieldSpec kQ = FieldSpec::rational();
const FieldSpec kF5 = FieldSpec::prime(5);

Mat col(const FieldSpec& f, std::initializer_list<long long> v) {
  Mat c(f, v.size(), 1);
  std::size_t i = 0;
  for (long long x : v) c(i++, 0) = Scalar::from_int(f, x);
  return c;
}

// (g A_1 g^-1, ..., g A_m g^-1) as one block row.
Mat conjugated_row(const Mat& g, const Msc& a) {
  const Mat ginv = inverse(g);
  std::vector<Mat> conj;
  for (const Mat& b : blocks(a)) conj.push_back(g * b * ginv);
  return Msc::from_blocks(conj).matrix();
}

}  // namespace

TEST_CASE("structure constant shape") {
  CHECK_THROWS_AS(Msc(Mat(kQ, 2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(Msc(Mat(kQ, 0, 0)), DimensionMismatch);
  CHECK(Msc(Mat(kQ, 3, 9)).dim() == 3);
}

TEST_CASE("blocks of named algebras") {
  const auto fs = blocks(direct_sum(kQ));
  CHECK(fs[0] == Mat::from_ints(kQ, {{1, 0}, {0, 0}}));
  CHECK(fs[1] == Mat::from_ints(kQ, {{0, 0}, {0, 1}}));

  const auto dn = blocks(dual_numbers(kQ));
  CHECK(dn[0] == Mat::identity(kQ, 2));
  CHECK(dn[1] == Mat::from_ints(kQ, {{0, 0}, {1, 0}}));

  for (const Mat& b : blocks(Msc::zero(kQ, 3))) CHECK(b.is_zero());

  Rng rng(1);
  const Msc a = random_algebra(3, kQ, rng, 5);
  CHECK(Msc::from_blocks(blocks(a)) == a);
}

TEST_CASE("multiplication through the structure constants") {
  const Msc dn = dual_numbers(kQ);
  CHECK(multiply(dn, col(kQ, {1, 0}), col(kQ, {0, 1})) == col(kQ, {0, 1}));
  CHECK(multiply(dn, col(kQ, {0, 1}), col(kQ, {0, 1})) == col(kQ, {0, 0}));
  CHECK(multiply(dn, col(kQ, {2, 3}), col(kQ, {1, 1})) == col(kQ, {2, 5}));  // (2+3x)(1+x) = 2+5x
  CHECK_THROWS_AS(multiply(dn, col(kQ, {1, 0, 0}), col(kQ, {1, 0})), DimensionMismatch);

  Rng rng(2);
  for (const FieldSpec f : {kQ, kF5}) {
    for (int i = 0; i < 40; ++i) {
      const Msc a = random_algebra(3, f, rng, 4);
      const Mat g = random_gl(3, f, rng, 3);
      const Mat u = random_mat(3, 1, f, rng), v = random_mat(3, 1, f, rng);
      CHECK(multiply(act(g, a), g * u, g * v) == g * multiply(a, u, v));
    }
  }
}

TEST_CASE("basis change action") {
  Rng rng(3);
  const Msc a = random_algebra(2, kQ, rng, 5);
  CHECK(act(Mat::identity(kQ, 2), a) == a);

  // m = 1: t c t^-2 = c / t.
  const Msc one(Mat::from_ints(kQ, {{6}}));
  CHECK(act(Mat::from_ints(kQ, {{4}}), one).matrix() == Mat(kQ, 1, 1, {Scalar::parse(kQ, "3/2")}));

  CHECK_THROWS_AS(act(Mat::from_ints(kQ, {{1, 1}, {1, 1}}), a), SingularMatrix);
  CHECK_THROWS_AS(act(Mat::identity(kQ, 3), a), DimensionMismatch);

  for (const FieldSpec f : {kQ, kF5}) {
    for (std::size_t m : {2U, 3U}) {
      for (int i = 0; i < 20; ++i) {
        const Msc x = random_algebra(m, f, rng, 4);
        const Mat g = random_gl(m, f, rng, 3), h = random_gl(m, f, rng, 3);
        CHECK(act(g, act(h, x)) == act(g * h, x));
        CHECK(act(g, x) == reference_act(g, x));
        CHECK(maps_to(g, x, act(g, x)));
        // Block form: B = (g A_1 g^-1, ..., g A_m g^-1)(g^-1 (x) I).
        CHECK(act(g, x).matrix() == conjugated_row(g, x) * kron(inverse(g), Mat::identity(f, m)));
      }
    }
  }
}

TEST_CASE("trace rows") {
  CHECK(tr1(direct_sum(kQ)) == Mat::from_ints(kQ, {{1, 1}}));
  CHECK(tr2(direct_sum(kQ)) == Mat::from_ints(kQ, {{1, 1}}));
  CHECK(tr1(Msc::zero(kQ, 3)).is_zero());
  CHECK(tr2(Msc::zero(kQ, 3)).is_zero());
  // Dual numbers: tr2_j = Tr(A_j) = (2, 0); tr1_k = sum_i A^i_{ik} = (1 + 1, 0).
  CHECK(tr2(dual_numbers(kQ)) == Mat::from_ints(kQ, {{2, 0}}));
  CHECK(tr1(dual_numbers(kQ)) == Mat::from_ints(kQ, {{2, 0}}));

  Rng rng(4);
  for (const FieldSpec f : {kQ, kF5}) {
    for (int i = 0; i < 40; ++i) {
      const Msc a = random_algebra(3, f, rng, 4);
      const Mat g = random_gl(3, f, rng, 3);
      CHECK(tr1(act(g, a)) == tr1(a) * inverse(g));
      CHECK(tr2(act(g, a)) == tr2(a) * inverse(g));
    }
  }
}

TEST_CASE("block tensor power row") {
  Rng rng(5);
  const Msc a = random_algebra(2, kQ, rng, 5);
  const auto b = blocks(a);
  CHECK(block_tensor_pow_row(a, 1) == b);
  const auto row2 = block_tensor_pow_row(a, 2);
  REQUIRE(row2.size() == 4);
  CHECK(row2[0] == b[0] * b[0]);
  CHECK(row2[1] == b[0] * b[1]);
  CHECK(row2[2] == b[1] * b[0]);
  CHECK(row2[3] == b[1] * b[1]);
  CHECK(block_tensor_pow_row(a, 3)[6] == b[1] * b[1] * b[0]);

  const auto fs = block_tensor_pow_row(direct_sum(kQ), 2);
  const auto fsb = blocks(direct_sum(kQ));
  CHECK(fs[0] == fsb[0]);
  CHECK(fs[1].is_zero());
  CHECK(fs[2].is_zero());
  CHECK(fs[3] == fsb[1]);

  // Overline power agrees with the block Kronecker power of the row.
  const Mat as_row = Msc::from_blocks(block_tensor_pow_row(a, 1)).matrix();
  const Mat pow2 = block_kron_pow(as_row, 2, 2);
  for (std::size_t i = 0; i < 4; ++i) CHECK(pow2.slice(0, 2 * i, 2, 2) == row2[i]);

  CHECK_THROWS_AS(block_tensor_pow_row(a, 11), CapExceeded);
}

TEST_CASE("trace forms of named algebras") {
  CHECK(ttr_form(direct_sum(kQ), 1).mat == Mat::identity(kQ, 2));
  CHECK(ttr_form(dual_numbers(kQ), 1).mat == Mat::from_ints(kQ, {{2, 0}, {0, 0}}));
  CHECK(ttr_form(Msc::zero(kQ, 2), 2).mat.is_zero());
  CHECK(ttr_form(direct_sum(kQ), 2).k == 2);
  CHECK_THROWS_AS(ttr_form(direct_sum(kQ), 0), DimensionMismatch);
  CHECK_THROWS_AS(ttr_form(random_algebra(3, kQ, RngSpec{1, 2}), 7), CapExceeded);
  CHECK_THROWS_AS(ttr_form(random_algebra(2, kQ, RngSpec{1, 2}), 3, 4), CapExceeded);
}

TEST_CASE("trace form: symmetry, covariance, explicit-product reference") {
  Rng rng(6);
  for (const FieldSpec f : {kQ, kF5}) {
    for (std::size_t m : {2U, 3U}) {
      const std::size_t kmax = m == 2 ? 3 : 2;
      for (int i = 0; i < 6; ++i) {
        const Msc a = random_algebra(m, f, rng, 3);
        const Mat g = random_gl(m, f, rng, 3);
        const Mat ginv = inverse(g);
        CHECK(ttr_form(a, 1).mat == reference_t1(a));
        for (std::size_t k = 1; k <= kmax; ++k) {
          const Mat t = ttr_form(a, k).mat;
          const Mat gk = kron_pow(ginv, k);
          CHECK(is_symmetric(t));
          CHECK(t == reference_trace_form(a, k));
          CHECK(ttr_form(act(g, a), k).mat == transpose(gk) * t * gk);
        }
      }
    }
  }
}

TEST_CASE("power-of-gram trace form is covariant but not symmetric in general") {
  Rng rng(7);
  bool asymmetric_m3 = false;
  bool asymmetric_m2 = false;
  for (int i = 0; i < 10; ++i) {
    for (std::size_t m : {2U, 3U}) {
      const std::size_t k = m == 2 ? 3 : 2;
      const Msc a = random_algebra(m, kQ, rng, 3);
      const Mat g = random_gl(m, kQ, rng, 3);
      const Mat gk = kron_pow(inverse(g), k);
      const Mat t = gram_power_trace(a, k);
      CHECK(gram_power_trace(act(g, a), k) == transpose(gk) * t * gk);
      CHECK(gram_power_trace(a, 1) == ttr_form(a, 1).mat);
      if (!is_symmetric(t)) (m == 2 ? asymmetric_m2 : asymmetric_m3) = true;
    }
    const Msc a2 = random_algebra(2, kQ, rng, 3);
    CHECK(is_symmetric(gram_power_trace(a2, 2)));
  }
  CHECK(asymmetric_m2);
  CHECK(asymmetric_m3);
}

TEST_CASE("auxiliary block identities") {
  Rng rng(8);
  for (const FieldSpec f : {kQ, kF5}) {
    for (int i = 0; i < 20; ++i) {
      const std::size_t m = 2 + rng.below(2);
      const Mat id = Mat::identity(f, m);
      const Mat c = random_mat(1 + rng.below(3), 1 + rng.below(3), f, rng);
      const Mat d = random_mat(1 + rng.below(3), 1 + rng.below(3), f, rng);
      CHECK(block_kron(kron(c, id), kron(d, id), m) == kron(kron(c, d), id));

      const std::size_t p = 1 + rng.below(3), q = 1 + rng.below(3);
      const Mat blk = random_mat(p * m, q * m, f, rng);
      const Mat left = random_mat(1 + rng.below(3), p, f, rng);
      const Mat right = random_mat(q, 1 + rng.below(3), f, rng);
      CHECK(block_trace(kron(left, id) * blk * kron(right, id), m) == left * block_trace(blk, m) * right);
    }
  }
}

TEST_CASE("overline power of a transformed algebra") {
  // B^{(x)k} = (g A_i g^-1)^{(x)k} ((g^-1)^{(x)k} (x) I).
  Rng rng(9);
  for (int i = 0; i < 10; ++i) {
    const Msc a = random_algebra(2, kQ, rng, 3);
    const Mat g = random_gl(2, kQ, rng, 3);
    const Mat id = Mat::identity(kQ, 2);
    for (std::size_t k = 1; k <= 3; ++k) {
      const Mat lhs = block_kron_pow(act(g, a).matrix(), k, 2);
      const Mat rhs = block_kron_pow(conjugated_row(g, a), k, 2) * kron(kron_pow(inverse(g), k), id);
      CHECK(lhs == rhs);
    }
  }
}
