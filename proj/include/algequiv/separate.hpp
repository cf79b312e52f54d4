#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "algequiv/frame.hpp"
#include "algequiv/linalg.hpp"
#include "algequiv/msc.hpp"
#include "algequiv/normalize.hpp"

namespace algequiv {

/// Separating invariants of an algebra in V0 with a covariant frame:
/// J1 = act(P, Abar) and J2 = (P^-1)^t D P^-1.
struct InvariantPair {
  Msc j1;
  Mat j2;
  std::vector<RowTag> provenance;

  friend bool operator==(const InvariantPair&, const InvariantPair&) = default;
};

/// Everything computed on the way to the invariants.
struct Analysis {
  NormalizedAlgebra normalized;
  Frame frame;
  InvariantPair invariants;
};

InvariantPair invariants_from(const NormalizedAlgebra& n, const Frame& frame);

/// Throws NotInV0 or FrameDeficient.
Analysis analyze(const Msc& a, std::size_t k_max);
InvariantPair invariants(const Msc& a, std::size_t k_max);

enum class OutOfScopeReason { NotInV0, FrameDeficient, ProvenanceMismatch };

std::string to_string(OutOfScopeReason r);

struct Equivalent {
  Mat witness;  // act(witness, A) == B, verified
};

struct NotEquivalent {
  std::string invariant;  // "J1" or "J2"
  std::size_t row;
  std::size_t col;
  Scalar a_value;
  Scalar b_value;
};

struct OutOfScope {
  OutOfScopeReason reason;
  std::string side;  // "A", "B" or "A,B"
  std::string detail;
};

using Verdict = std::variant<Equivalent, NotEquivalent, OutOfScope>;

// Decides whether B = act(g, A) for some g. Equivalent is returned only
// after act(g, A) == B and g0^t D_B g0 == D_A have been checked exactly.
// When the greedy frames pick different rows, the rows of one side's
// provenance are evaluated on the other; OutOfScope{ProvenanceMismatch} if
// neither choice is nonsingular on both. Throws DimensionMismatch or
// FieldMismatch for incompatible inputs and InternalInconsistency if the
// invariants agree but the witness fails.
Verdict compare(const Msc& a, const Msc& b, std::size_t k_max);

struct Signature {
  std::size_t positive;
  std::size_t negative;
  std::size_t zero;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Class of a nonzero field element modulo squares.
///
/// Over Q the representative is an integer with the square factors found by
/// trial division removed; equality is decided exactly (the product of the
/// two representatives is a perfect square), so it does not depend on the
/// representative being fully reduced. Over F_p the class is the
/// quadratic-residue bit.
class SquareClass {
 public:
  static SquareClass of(const Scalar& nonzero);

  bool is_rational() const noexcept { return rational_; }
  const mpz_class& representative() const noexcept { return rep_; }
  /// True when the representative is known to be the squarefree part.
  bool reduced() const noexcept { return reduced_; }
  bool is_square() const;

  std::string to_string() const;

  friend bool operator==(const SquareClass& a, const SquareClass& b);

 private:
  bool rational_ = true;
  mpz_class rep_ = 1;
  bool reduced_ = true;
  bool residue_square_ = true;
  std::uint32_t modulus_ = 0;
};

struct RoughInvariants {
  std::size_t k;
  std::size_t rank;
  std::optional<Signature> signature;  // rational field only
  SquareClass disc_class;              // product of the nonzero diagonal entries

  friend bool operator==(const RoughInvariants&, const RoughInvariants&) = default;
};

/// Congruence invariants of the quadratic form T_k(a). Throws CapExceeded.
RoughInvariants rough_invariants(const Msc& a, std::size_t k, std::size_t cap = kDefaultTraceFormCap);

enum class RoughVerdict { DefinitelyNotEquivalent, PossiblyEquivalent };

/// Compares the rough invariants at every level 1..k.
RoughVerdict rough_compare(const Msc& a, const Msc& b, std::size_t k, std::size_t cap = kDefaultTraceFormCap);

}  // namespace algequiv
