#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace algequiv {

/// Describes the base field: the rationals or F_p for an odd prime p < 2^32.
class FieldSpec {
 public:
  enum class Kind { Rational, Prime };

  static FieldSpec rational() noexcept { return FieldSpec(Kind::Rational, 0); }

  /// Throws InvalidField unless p is an odd prime below 2^32.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::Rational; }
  bool is_prime() const noexcept { return kind_ == Kind::Prime; }
  std::uint32_t modulus() const noexcept { return p_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_odd_prime(std::uint64_t p) noexcept;

/// An exact element of a FieldSpec. Rationals are kept in lowest terms with a
/// positive denominator; residues are kept in 0..p-1. Both forms are
/// canonical, so equality is structural.
class Scalar {
 public:
  Scalar() : rep_(mpq_class(0)) {}

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_int(const FieldSpec& f, long long v);
  static Scalar from_rational(mpq_class q);
  static Scalar from_residue(const FieldSpec& f, const mpz_class& v);

  /// "n" or "n/d" (optional leading '-') for rationals; an integer for F_p,
  /// reduced to its canonical residue. Throws ParseError.
  static Scalar parse(const FieldSpec& f, std::string_view text);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Sign of a rational value; throws WrongField for residues.
  int sign() const;
  const mpq_class& rational() const;
  std::uint32_t residue() const;

  Scalar inv() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);
  Scalar& operator/=(const Scalar& b);

  /// *this += a * b without a temporary Scalar.
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  explicit Scalar(Residue r) : rep_(r) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}

  Residue& residue_of(const Scalar& b);

  std::variant<mpq_class, Residue> rep_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace algequiv
