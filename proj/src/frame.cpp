#include "algequiv/frame.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "algequiv/errors.hpp"

namespace algequiv {

namespace {

void check_row_cap(std::size_t m, std::size_t k, std::size_t cap) {
  // m^(2^k) <= cap, evaluated without overflow.
  std::size_t size = 1;
  const std::size_t exponent = std::size_t{1} << std::min<std::size_t>(k, 20);
  for (std::size_t i = 0; i < exponent; ++i) {
    if (size > cap / m)
      throw CapExceeded("covariant row level " + std::to_string(k) + " needs " + std::to_string(m) + "^" +
                        std::to_string(exponent) + " > " + std::to_string(cap));
    size *= m;
  }
}

Mat covariant_matrix_with(const Msc& a, const Mat& t1, const Mat& c, std::size_t k, std::size_t cap) {
  check_row_cap(a.dim(), k, cap);
  Mat pi = Mat::identity(a.field(), a.dim());
  for (std::size_t l = 0; l < k; ++l) pi = mul_kron_pow(pi, a.matrix(), std::size_t{1} << l);
  const Mat weighted = mul_kron_pow(pi, c, std::size_t{1} << k);
  return weighted * transpose(pi) * t1 * a.matrix();
}

Mat trace_row(const Mat& x, int trace) {
  if (trace == 1) return tr1(x);
  if (trace == 2) return tr2(x);
  throw DimensionMismatch("trace index must be 1 or 2");
}

Mat stack(const std::vector<Mat>& rows, const FieldSpec& f, std::size_t m) {
  Mat out(f, rows.size(), m);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m; ++c) out(r, c) = rows[r](0, c);
  return out;
}

struct TraceData {
  Mat t1;
  Mat c;
};

TraceData trace_data(const Msc& a) {
  Mat t1 = ttr_form(a, 1).mat;
  if (rank(t1) != a.dim()) throw NotInV0();
  Mat c = inverse(t1);
  return {std::move(t1), std::move(c)};
}

}  // namespace

std::size_t default_kmax(std::size_t m) { return m >= 3 ? 2 : 3; }

Mat covariant_matrix(const Msc& a, std::size_t k, std::size_t cap) {
  const TraceData td = trace_data(a);
  return covariant_matrix_with(a, td.t1, td.c, k, cap);
}

Mat covariant_row(const Msc& a, int trace, std::size_t k, std::size_t cap) {
  return trace_row(covariant_matrix(a, k, cap), trace);
}

Frame build_frame(const Msc& abar, std::size_t k_max, std::size_t cap) {
  const std::size_t m = abar.dim();
  const TraceData td = trace_data(abar);
  std::vector<Mat> rows;
  std::vector<RowTag> tags;
  for (std::size_t k = 0; k <= k_max && rows.size() < m; ++k) {
    const Mat w = covariant_matrix_with(abar, td.t1, td.c, k, cap);
    for (int trace : {1, 2}) {
      if (rows.size() == m) break;
      rows.push_back(trace_row(w, trace));
      if (rank(stack(rows, abar.field(), m)) == rows.size()) {
        tags.push_back({trace, k});
      } else {
        rows.pop_back();
      }
    }
  }
  if (rows.size() < m) throw FrameDeficient(rows.size());
  return {stack(rows, abar.field(), m), std::move(tags)};
}

std::optional<Frame> frame_at(const Msc& abar, std::span<const RowTag> provenance, std::size_t cap) {
  const std::size_t m = abar.dim();
  if (provenance.size() != m) return std::nullopt;
  const TraceData td = trace_data(abar);
  std::map<std::size_t, Mat> by_level;
  std::vector<Mat> rows;
  for (const RowTag& tag : provenance) {
    auto it = by_level.find(tag.level);
    if (it == by_level.end())
      it = by_level.emplace(tag.level, covariant_matrix_with(abar, td.t1, td.c, tag.level, cap)).first;
    rows.push_back(trace_row(it->second, tag.trace));
  }
  Mat p = stack(rows, abar.field(), m);
  if (rank(p) != m) return std::nullopt;
  return Frame{std::move(p), {provenance.begin(), provenance.end()}};
}

}  // namespace algequiv
