#include <doctest.h>

#include "support/fixtures.hpp"

using namespace algequiv;
using namespace algequiv::testing;

namespace {
const FieldSpec kQ = FieldSpec::rational();
const FieldSpec kF5 = FieldSpec::prime(5);
}  // namespace

TEST_CASE("level zero rows are the trace rows of T1^-1 T1 A") {
  Rng rng(21);
  for (const FieldSpec f : {kQ, kF5}) {
    for (int i = 0; i < 10; ++i) {
      const Msc a = random_v0_algebra(3, f, rng);
      CHECK(covariant_matrix(a, 0) == a.matrix());
      CHECK(covariant_row(a, 1, 0) == tr1(a));
      CHECK(covariant_row(a, 2, 0) == tr2(a));
    }
  }
}

TEST_CASE("direct sum has a rank one frame") {
  const Msc fs = direct_sum(kQ);
  for (std::size_t k = 0; k <= 3; ++k) {
    CHECK(covariant_row(fs, 1, k) == Mat::from_ints(kQ, {{1, 1}}));
    CHECK(covariant_row(fs, 2, k) == Mat::from_ints(kQ, {{1, 1}}));
  }
  try {
    build_frame(fs, 3);
    FAIL("expected FrameDeficient");
  } catch (const FrameDeficient& e) {
    CHECK(e.achieved_rank() == 1);
  }
  CHECK_THROWS_AS(build_frame(dual_numbers(kQ), 3), NotInV0);
  CHECK_THROWS_AS(covariant_row(fs, 3, 0), DimensionMismatch);
}

TEST_CASE("row matrix agrees with materialized Kronecker powers") {
  Rng rng(22);
  for (const FieldSpec f : {kQ, kF5}) {
    for (int i = 0; i < 8; ++i) {
      const Msc a2 = random_v0_algebra(2, f, rng);
      for (std::size_t k = 0; k <= 2; ++k) CHECK(covariant_matrix(a2, k) == reference_covariant_matrix(a2, k));
      const Msc a3 = random_v0_algebra(3, f, rng);
      for (std::size_t k = 0; k <= 1; ++k) CHECK(covariant_matrix(a3, k) == reference_covariant_matrix(a3, k));
    }
  }
}

TEST_CASE("rows are covariant") {
  Rng rng(23);
  for (const FieldSpec f : {kQ, kF5}) {
    for (int i = 0; i < 8; ++i) {
      const std::size_t m = 2 + rng.below(2);
      const Msc a = random_v0_algebra(m, f, rng);
      const Mat g = random_gl(m, f, rng, 3);
      const Mat ginv = inverse(g);
      const Msc b = act(g, a);
      for (std::size_t k = 0; k <= (m == 2 ? 3U : 2U); ++k)
        for (int t : {1, 2}) CHECK(covariant_row(b, t, k) == covariant_row(a, t, k) * ginv);
    }
  }
}

TEST_CASE("frames are covariant and deterministic") {
  Rng rng(24);
  for (const FieldSpec f : {kQ, kF5}) {
    for (std::size_t m : {2U, 3U}) {
      for (int i = 0; i < 8; ++i) {
        const Msc a = random_framed_algebra(m, f, rng);
        const Mat g = random_gl(m, f, rng, 3);
        const NormalizedAlgebra na = normalize(a);
        const NormalizedAlgebra nb = normalize(act(g, a));
        const Mat g0 = nb.q * g * inverse(na.q);
        CHECK(nb.abar == act(g0, na.abar));

        const Frame fa = build_frame(na.abar, default_kmax(m));
        const Frame fb = build_frame(nb.abar, default_kmax(m));
        CHECK(fa.provenance == fb.provenance);
        CHECK(fb.p == fa.p * inverse(g0));
        CHECK(rank(fa.p) == m);

        const Frame again = build_frame(na.abar, default_kmax(m));
        CHECK(again.p == fa.p);
        CHECK(again.provenance == fa.provenance);

        const auto at = frame_at(na.abar, fa.provenance);
        REQUIRE(at.has_value());
        CHECK(at->p == fa.p);
      }
    }
  }
}

TEST_CASE("frame_at rejects dependent rows") {
  const std::vector<RowTag> same{{1, 0}, {2, 0}};
  CHECK_FALSE(frame_at(direct_sum(kQ), same).has_value());
  CHECK_FALSE(frame_at(direct_sum(kQ), std::vector<RowTag>{{1, 0}}).has_value());
}

TEST_CASE("row cap") {
  Rng rng25(25), rng26(26);
  CHECK(default_kmax(2) == 3);
  CHECK(default_kmax(3) == 2);
  CHECK(default_kmax(5) == 2);
  const Msc a = random_v0_algebra(2, kQ, rng25);
  CHECK_THROWS_AS(covariant_matrix(a, 3, 100), CapExceeded);
  CHECK_NOTHROW(covariant_matrix(a, 2, 16));
  CHECK_THROWS_AS(covariant_matrix(Msc::zero(kQ, 3), 0), NotInV0);
  // F + F + F never reaches rank 3, so the scan runs into the cap at level 3.
  const Msc triple(Mat::from_ints(kQ, {{1, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 1}}));
  CHECK_THROWS_AS(build_frame(triple, 2, 1000), FrameDeficient);
  CHECK_THROWS_AS(build_frame(triple, 3, 1000), CapExceeded);
  CHECK_NOTHROW(build_frame(random_framed_algebra(3, kQ, rng26), 3, 1000));
}
