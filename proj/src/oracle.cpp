#include "algequiv/oracle.hpp"

#include <limits>
#include <vector>

#include "algequiv/errors.hpp"

namespace algequiv {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw DimensionMismatch("empty sampling range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

long long Rng::symmetric(long long bound) {
  if (bound <= 0) return 0;
  return static_cast<long long>(below(2 * static_cast<std::uint64_t>(bound) + 1)) - bound;
}

Scalar Rng::element(const FieldSpec& f, long long bound) {
  if (f.is_prime()) return Scalar::from_int(f, static_cast<long long>(below(f.modulus())));
  return Scalar::from_int(f, symmetric(bound));
}

Msc random_algebra(std::size_t m, const FieldSpec& f, Rng& rng, long long entry_bound) {
  std::vector<Scalar> entries;
  entries.reserve(m * m * m);
  for (std::size_t i = 0; i < m * m * m; ++i)
    entries.push_back(f.is_prime() && entry_bound == 0 ? Scalar::zero(f) : rng.element(f, entry_bound));
  return Msc(Mat(f, m, m * m, std::move(entries)));
}

Msc random_algebra(std::size_t m, const FieldSpec& f, const RngSpec& spec) {
  Rng rng(spec.seed);
  return random_algebra(m, f, rng, spec.entry_bound);
}

Mat random_gl(std::size_t m, const FieldSpec& f, Rng& rng, long long entry_bound) {
  if (f.is_rational() && entry_bound <= 0) throw DimensionMismatch("entry bound must be positive for random_gl");
  for (;;) {
    std::vector<Scalar> entries;
    entries.reserve(m * m);
    for (std::size_t i = 0; i < m * m; ++i) entries.push_back(rng.element(f, entry_bound));
    Mat g(f, m, m, std::move(entries));
    if (!det(g).is_zero()) return g;
  }
}

Mat random_gl(std::size_t m, const FieldSpec& f, const RngSpec& spec) {
  Rng rng(spec.seed);
  return random_gl(m, f, rng, spec.entry_bound);
}

std::optional<std::uint64_t> gl_order(std::size_t m, std::uint32_t p) {
  // prod_{i<m} (p^m - p^i)
  unsigned __int128 pm = 1;
  for (std::size_t i = 0; i < m; ++i) {
    pm *= p;
    if (pm > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  unsigned __int128 order = 1;
  unsigned __int128 pi = 1;
  for (std::size_t i = 0; i < m; ++i) {
    order *= pm - pi;
    if (order > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    pi *= p;
  }
  return static_cast<std::uint64_t>(order);
}

std::optional<Mat> brute_force_equivalent(const Msc& a, const Msc& b, std::uint64_t cap) {
  if (a.dim() != b.dim()) throw DimensionMismatch("algebras have different dimensions");
  if (a.field() != b.field()) throw FieldMismatch();
  const FieldSpec& f = a.field();
  if (!f.is_prime()) throw WrongField("exhaustive search needs a prime field");
  const std::size_t m = a.dim();
  const auto order = gl_order(m, f.modulus());
  if (!order || *order > cap)
    throw CapExceeded("|GL(" + std::to_string(m) + "," + std::to_string(f.modulus()) + ")| exceeds cap " +
                      std::to_string(cap));

  const Mat id = Mat::identity(f, m);
  if (maps_to(id, a, b)) return id;

  const std::uint32_t p = f.modulus();
  std::vector<std::uint32_t> digits(m * m, 0);
  for (;;) {
    std::vector<Scalar> entries;
    entries.reserve(m * m);
    for (std::uint32_t d : digits) entries.push_back(Scalar::from_int(f, d));
    Mat g(f, m, m, std::move(entries));
    if (!(g == id) && !det(g).is_zero() && maps_to(g, a, b)) return g;

    // Next matrix in lexicographic order (last entry least significant).
    std::size_t pos = digits.size();
    while (pos > 0 && digits[pos - 1] == p - 1) digits[--pos] = 0;
    if (pos == 0) return std::nullopt;
    ++digits[pos - 1];
  }
}

}  // namespace algequiv
