#pragma once

#include "algequiv/linalg.hpp"
#include "algequiv/msc.hpp"

namespace algequiv {

/// Normalized representative of an algebra in V0.
///
/// `q` congruence-diagonalizes T1(original): (Q^-1)^t T1 Q^-1 = D, and
/// `abar` = act(q, original), so T1(abar) = D. D is diagonal and nonsingular.
struct NormalizedAlgebra {
  Msc original;
  Msc abar;
  Mat q;
  Mat d;
};

/// V0 membership: T1(a) = ttr_form(a, 1) has full rank.
bool in_v0(const Msc& a);

/// Throws NotInV0 when T1(a) is singular.
NormalizedAlgebra normalize(const Msc& a);

}  // namespace algequiv
