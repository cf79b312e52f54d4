#include "algequiv/field.hpp"

#include <limits>
#include <ostream>

#include "algequiv/errors.hpp"

namespace algequiv {

namespace {

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t e, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1U;
  }
  return result;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

bool is_odd_prime(std::uint64_t p) noexcept {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > std::numeric_limits<std::uint32_t>::max())
    throw InvalidField("prime modulus must be below 2^32");
  if (!is_odd_prime(p))
    throw InvalidField("field modulus " + std::to_string(p) + " is not an odd prime");
  return FieldSpec(Kind::Prime, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::zero(const FieldSpec& f) { return from_int(f, 0); }

Scalar Scalar::one(const FieldSpec& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldSpec& f, long long v) {
  if (f.is_rational()) return Scalar(mpq_class(mpz_class(std::to_string(v))));
  long long r = v % static_cast<long long>(f.modulus());
  if (r < 0) r += f.modulus();
  return Scalar(Residue{static_cast<std::uint32_t>(r), f.modulus()});
}

Scalar Scalar::from_rational(mpq_class q) {
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::from_residue(const FieldSpec& f, const mpz_class& v) {
  if (!f.is_prime()) throw WrongField("residue requested for a non-prime field");
  mpz_class r = v % f.modulus();
  if (r < 0) r += f.modulus();
  return Scalar(Residue{static_cast<std::uint32_t>(r.get_ui()), f.modulus()});
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw ParseError("malformed scalar '" + std::string(text) + "'");

  mpz_class n(std::string(num), 10);
  if (negative) n = -n;
  if (f.is_prime()) {
    if (slash != std::string_view::npos)
      throw ParseError("prime-field scalar must be an integer: '" + std::string(text) + "'");
    return from_residue(f, n);
  }
  mpz_class d = 1;
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return from_rational(mpq_class(n, d));
}

FieldSpec Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return FieldSpec(FieldSpec::Kind::Prime, r->modulus);
  return FieldSpec::rational();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value == 0;
  return sgn(std::get<mpq_class>(rep_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value == 1;
  return std::get<mpq_class>(rep_) == 1;
}

int Scalar::sign() const {
  if (std::holds_alternative<Residue>(rep_)) throw WrongField("sign is undefined over a prime field");
  return sgn(std::get<mpq_class>(rep_));
}

const mpq_class& Scalar::rational() const {
  if (std::holds_alternative<Residue>(rep_)) throw WrongField("scalar is a residue, not a rational");
  return std::get<mpq_class>(rep_);
}

std::uint32_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value;
  throw WrongField("scalar is a rational, not a residue");
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (const auto* r = std::get_if<Residue>(&rep_))
    return Scalar(Residue{pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus});
  mpq_class q;
  mpq_inv(q.get_mpq_t(), std::get<mpq_class>(rep_).get_mpq_t());
  return Scalar(std::move(q));
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&rep_))
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  return Scalar(mpq_class(-std::get<mpq_class>(rep_)));
}

Scalar::Residue& Scalar::residue_of(const Scalar& b) {
  auto* a = std::get_if<Residue>(&rep_);
  const auto* r = std::get_if<Residue>(&b.rep_);
  if (a == nullptr || r == nullptr || a->modulus != r->modulus) throw FieldMismatch();
  return *a;
}

Scalar& Scalar::operator+=(const Scalar& b) {
  if (auto* q = std::get_if<mpq_class>(&rep_)) {
    const auto* bq = std::get_if<mpq_class>(&b.rep_);
    if (bq == nullptr) throw FieldMismatch();
    *q += *bq;
    return *this;
  }
  Residue& a = residue_of(b);
  const std::uint32_t v = std::get<Residue>(b.rep_).value;
  a.value = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.value) + v) % a.modulus);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
  if (auto* q = std::get_if<mpq_class>(&rep_)) {
    const auto* bq = std::get_if<mpq_class>(&b.rep_);
    if (bq == nullptr) throw FieldMismatch();
    *q -= *bq;
    return *this;
  }
  Residue& a = residue_of(b);
  const std::uint32_t v = std::get<Residue>(b.rep_).value;
  a.value = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.value) + a.modulus - v) % a.modulus);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& b) {
  if (auto* q = std::get_if<mpq_class>(&rep_)) {
    const auto* bq = std::get_if<mpq_class>(&b.rep_);
    if (bq == nullptr) throw FieldMismatch();
    *q *= *bq;
    return *this;
  }
  Residue& a = residue_of(b);
  a.value = mul_mod(a.value, std::get<Residue>(b.rep_).value, a.modulus);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& b) {
  if (field() != b.field()) throw FieldMismatch();
  return *this *= b.inv();
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (auto* q = std::get_if<mpq_class>(&rep_)) {
    const auto* aq = std::get_if<mpq_class>(&a.rep_);
    const auto* bq = std::get_if<mpq_class>(&b.rep_);
    if (aq == nullptr || bq == nullptr) throw FieldMismatch();
    if (sgn(*aq) == 0 || sgn(*bq) == 0) return;
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), aq->get_mpq_t(), bq->get_mpq_t());
    mpq_add(q->get_mpq_t(), q->get_mpq_t(), tmp.get_mpq_t());
    return;
  }
  Residue& acc = residue_of(a);
  const auto* ra = std::get_if<Residue>(&a.rep_);
  const auto* rb = std::get_if<Residue>(&b.rep_);
  if (rb == nullptr || rb->modulus != acc.modulus) throw FieldMismatch();
  const std::uint64_t prod = static_cast<std::uint64_t>(ra->value) * rb->value % acc.modulus;
  acc.value = static_cast<std::uint32_t>((acc.value + prod) % acc.modulus);
}

bool operator==(const Scalar& a, const Scalar& b) { return a.rep_ == b.rep_; }

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return std::to_string(r->value);
  return std::get<mpq_class>(rep_).get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace algequiv
