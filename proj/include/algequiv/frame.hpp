#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "algequiv/linalg.hpp"
#include "algequiv/msc.hpp"

namespace algequiv {

/// Identifies the covariant row r_{trace,level}.
struct RowTag {
  int trace;          // 1 or 2
  std::size_t level;  // k

  friend bool operator==(const RowTag&, const RowTag&) = default;
};

/// Nonsingular m x m matrix P whose row r is covariant_row(abar, provenance[r]).
struct Frame {
  Mat p;
  std::vector<RowTag> provenance;
};

/// Cap on m^(2^k), the size of the largest Kronecker power in a row.
inline constexpr std::size_t kDefaultRowCap = 6561;

/// 3 for m = 2 (and m = 1), 2 for m >= 3.
std::size_t default_kmax(std::size_t m);

/// The m x m^2 matrix Pi_k C^{(x)2^k} Pi_k^t T1 A, with C = T1^-1 and
/// Pi_k = A^{(x)1} A^{(x)2} A^{(x)4} ... A^{(x)2^(k-1)} (Pi_0 = I). Its two
/// trace rows are the covariant rows of level k. Throws NotInV0, CapExceeded.
Mat covariant_matrix(const Msc& a, std::size_t k, std::size_t cap = kDefaultRowCap);

/// r_{i,k}(A), a 1 x m row with r(act(g, A)) = r(A) g^-1 for every nonsingular g.
Mat covariant_row(const Msc& a, int trace, std::size_t k, std::size_t cap = kDefaultRowCap);

/// Greedy scan (k=0,i=1), (k=0,i=2), (k=1,i=1), ... keeping each row that
/// raises the rank. Throws FrameDeficient when k_max is exhausted first.
Frame build_frame(const Msc& abar, std::size_t k_max, std::size_t cap = kDefaultRowCap);

/// The rows named by `provenance`, or nullopt if they are linearly dependent.
std::optional<Frame> frame_at(const Msc& abar, std::span<const RowTag> provenance,
                              std::size_t cap = kDefaultRowCap);

}  // namespace algequiv
