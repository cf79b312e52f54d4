#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "algequiv/linalg.hpp"
#include "algequiv/msc.hpp"

namespace algequiv {

struct RngSpec {
  std::uint64_t seed = 0;
  long long entry_bound = 5;  // rational entries are integers in [-bound, bound]
};

/// Deterministic stream: mt19937_64 with an explicit unbiased reduction, so
/// the sequence is identical on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [-bound, bound].
  long long symmetric(long long bound);
  /// Uniform field element: a residue over F_p, an integer in [-bound, bound] over Q.
  Scalar element(const FieldSpec& f, long long bound);

 private:
  std::mt19937_64 engine_;
};

Msc random_algebra(std::size_t m, const FieldSpec& f, Rng& rng, long long entry_bound);
Msc random_algebra(std::size_t m, const FieldSpec& f, const RngSpec& spec);

/// Rejection-sampled nonsingular m x m matrix.
Mat random_gl(std::size_t m, const FieldSpec& f, Rng& rng, long long entry_bound);
Mat random_gl(std::size_t m, const FieldSpec& f, const RngSpec& spec);

/// |GL(m, p)|, or nullopt if it overflows 64 bits.
std::optional<std::uint64_t> gl_order(std::size_t m, std::uint32_t p);

inline constexpr std::uint64_t kDefaultGlCap = 1'000'000;

/// First g with act(g, a) == b: the identity is tried first, then all
/// nonsingular matrices in lexicographic order of their row-major entries.
/// Throws WrongField over Q, CapExceeded when |GL(m,p)| > cap.
std::optional<Mat> brute_force_equivalent(const Msc& a, const Msc& b, std::uint64_t cap = kDefaultGlCap);

}  // namespace algequiv
