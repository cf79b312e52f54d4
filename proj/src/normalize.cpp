#include "algequiv/normalize.hpp"

#include <utility>

#include "algequiv/errors.hpp"

namespace algequiv {

bool in_v0(const Msc& a) { return rank(ttr_form(a, 1).mat) == a.dim(); }

NormalizedAlgebra normalize(const Msc& a) {
  const Mat t1 = ttr_form(a, 1).mat;
  if (rank(t1) != a.dim()) throw NotInV0();
  Congruence c = congruence_diagonalize(t1);
  Msc abar = act(c.q, a);
  return {a, std::move(abar), std::move(c.q), std::move(c.d)};
}

}  // namespace algequiv
