#include "algequiv/separate.hpp"

#include <sstream>
#include <utility>

#include "algequiv/errors.hpp"

namespace algequiv {

namespace {

constexpr unsigned long kTrialDivisionBound = 65536;

std::optional<NotEquivalent> first_difference(const std::string& name, const Mat& a, const Mat& b) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!(a(r, c) == b(r, c))) return NotEquivalent{name, r, c, a(r, c), b(r, c)};
  return std::nullopt;
}

std::string describe(const std::vector<RowTag>& tags) {
  std::string s;
  for (const RowTag& t : tags) {
    if (!s.empty()) s += ' ';
    s += "(" + std::to_string(t.trace) + "," + std::to_string(t.level) + ")";
  }
  return s;
}

}  // namespace

InvariantPair invariants_from(const NormalizedAlgebra& n, const Frame& frame) {
  const Mat pinv = inverse(frame.p);
  return {act(frame.p, n.abar), transpose(pinv) * n.d * pinv, frame.provenance};
}

Analysis analyze(const Msc& a, std::size_t k_max) {
  NormalizedAlgebra n = normalize(a);
  Frame frame = build_frame(n.abar, k_max);
  InvariantPair inv = invariants_from(n, frame);
  return {std::move(n), std::move(frame), std::move(inv)};
}

InvariantPair invariants(const Msc& a, std::size_t k_max) { return analyze(a, k_max).invariants; }

std::string to_string(OutOfScopeReason r) {
  switch (r) {
    case OutOfScopeReason::NotInV0:
      return "NotInV0";
    case OutOfScopeReason::FrameDeficient:
      return "FrameDeficient";
    case OutOfScopeReason::ProvenanceMismatch:
      return "ProvenanceMismatch";
  }
  return "Unknown";
}

Verdict compare(const Msc& a, const Msc& b, std::size_t k_max) {
  if (a.dim() != b.dim()) throw DimensionMismatch("algebras have different dimensions");
  if (a.field() != b.field()) throw FieldMismatch();

  std::vector<std::string> not_in_v0;
  if (!in_v0(a)) not_in_v0.push_back("A");
  if (!in_v0(b)) not_in_v0.push_back("B");
  if (!not_in_v0.empty()) {
    const std::string side = not_in_v0.size() == 2 ? "A,B" : not_in_v0.front();
    return OutOfScope{OutOfScopeReason::NotInV0, side, "T1 is singular"};
  }
  const NormalizedAlgebra na = normalize(a);
  const NormalizedAlgebra nb = normalize(b);

  std::optional<Frame> fa;
  std::optional<Frame> fb;
  std::string deficient;
  std::string detail;
  try {
    fa = build_frame(na.abar, k_max);
  } catch (const FrameDeficient& e) {
    deficient = "A";
    detail = "A: rank " + std::to_string(e.achieved_rank());
  }
  try {
    fb = build_frame(nb.abar, k_max);
  } catch (const FrameDeficient& e) {
    deficient += deficient.empty() ? "B" : ",B";
    detail += (detail.empty() ? "" : "; ") + std::string("B: rank ") + std::to_string(e.achieved_rank());
  }
  if (!deficient.empty()) return OutOfScope{OutOfScopeReason::FrameDeficient, deficient, detail};

  if (fa->provenance != fb->provenance) {
    if (auto shared = frame_at(nb.abar, fa->provenance)) {
      fb = std::move(shared);
    } else if (auto shared_b = frame_at(na.abar, fb->provenance)) {
      fa = std::move(shared_b);
    } else {
      return OutOfScope{OutOfScopeReason::ProvenanceMismatch, "A,B",
                        "A: " + describe(fa->provenance) + "; B: " + describe(fb->provenance)};
    }
  }

  const InvariantPair ia = invariants_from(na, *fa);
  const InvariantPair ib = invariants_from(nb, *fb);
  if (auto diff = first_difference("J1", ia.j1.matrix(), ib.j1.matrix())) return *diff;
  if (auto diff = first_difference("J2", ia.j2, ib.j2)) return *diff;

  const Mat g0 = inverse(fb->p) * fa->p;
  const Mat g = inverse(nb.q) * g0 * na.q;
  const bool acts = maps_to(g, a, b);
  const bool congruent = transpose(g0) * nb.d * g0 == na.d;
  if (!acts || !congruent) {
    std::ostringstream os;
    os << "invariants agree but witness fails (act ok: " << acts << ", D congruence ok: " << congruent
       << "); A=" << a.matrix() << " B=" << b.matrix() << " Q_A=" << na.q << " Q_B=" << nb.q << " P_A=" << fa->p
       << " P_B=" << fb->p << " g=" << g;
    throw InternalInconsistency(os.str());
  }
  return Equivalent{g};
}

SquareClass SquareClass::of(const Scalar& nonzero) {
  if (nonzero.is_zero()) throw DivisionByZero();
  SquareClass c;
  if (!nonzero.field().is_rational()) {
    const std::uint32_t p = nonzero.field().modulus();
    c.rational_ = false;
    c.modulus_ = p;
    // Euler's criterion.
    mpz_class r;
    const mpz_class base = nonzero.residue();
    mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), (p - 1) / 2, mpz_class(p).get_mpz_t());
    c.residue_square_ = r == 1;
    return c;
  }
  const mpq_class& q = nonzero.rational();
  // n/d and n*d differ by the square d^2.
  mpz_class v = q.get_num() * q.get_den();
  const int sign = sgn(v);
  v = abs(v);
  mpz_class kept = 1;
  for (unsigned long p = 2; p <= kTrialDivisionBound && mpz_cmp_ui(v.get_mpz_t(), p * p) >= 0; ++p) {
    if (!mpz_divisible_ui_p(v.get_mpz_t(), p)) continue;
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
      mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
      ++exponent;
    }
    if (exponent % 2 == 1) kept *= p;
  }
  if (mpz_perfect_square_p(v.get_mpz_t())) v = 1;
  // A cofactor with no factor up to the bound and below bound^2 is prime.
  const mpz_class bound = kTrialDivisionBound;
  c.reduced_ = v == 1 || v < bound * bound || mpz_probab_prime_p(v.get_mpz_t(), 30) > 0;
  c.rep_ = sign * kept * v;
  return c;
}

bool SquareClass::is_square() const {
  if (!rational_) return residue_square_;
  return sgn(rep_) > 0 && mpz_perfect_square_p(rep_.get_mpz_t());
}

std::string SquareClass::to_string() const {
  if (!rational_) return residue_square_ ? "square" : "nonsquare";
  return rep_.get_str(10);
}

bool operator==(const SquareClass& a, const SquareClass& b) {
  if (a.rational_ != b.rational_) return false;
  if (!a.rational_) return a.modulus_ == b.modulus_ && a.residue_square_ == b.residue_square_;
  if (sgn(a.rep_) != sgn(b.rep_)) return false;
  const mpz_class prod = a.rep_ * b.rep_;
  return mpz_perfect_square_p(prod.get_mpz_t()) != 0;
}

RoughInvariants rough_invariants(const Msc& a, std::size_t k, std::size_t cap) {
  const TraceForm t = ttr_form(a, k, cap);
  const Congruence c = congruence_diagonalize(t.mat);
  const FieldSpec& f = a.field();
  RoughInvariants out{k, 0, std::nullopt, SquareClass::of(Scalar::one(f))};
  Scalar product = Scalar::one(f);
  Signature sig{0, 0, 0};
  for (std::size_t i = 0; i < c.d.rows(); ++i) {
    const Scalar& x = c.d(i, i);
    if (x.is_zero()) {
      ++sig.zero;
      continue;
    }
    ++out.rank;
    product *= x;
    if (f.is_rational()) ++(x.sign() > 0 ? sig.positive : sig.negative);
  }
  if (f.is_rational()) out.signature = sig;
  out.disc_class = SquareClass::of(product);
  return out;
}

RoughVerdict rough_compare(const Msc& a, const Msc& b, std::size_t k, std::size_t cap) {
  if (a.dim() != b.dim()) throw DimensionMismatch("algebras have different dimensions");
  if (a.field() != b.field()) throw FieldMismatch();
  for (std::size_t level = 1; level <= k; ++level)
    if (!(rough_invariants(a, level, cap) == rough_invariants(b, level, cap)))
      return RoughVerdict::DefinitelyNotEquivalent;
  return RoughVerdict::PossiblyEquivalent;
}

}  // namespace algequiv
