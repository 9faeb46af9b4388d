#include "maxgenus/field.hpp"

#include <cctype>

#include "maxgenus/errors.hpp"

namespace maxgenus {

bool FieldElement::is_zero() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2)
    if (n % q == 0) return false;
  return true;
}

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw FieldMismatch();
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31))
    throw InvalidField("modulus " + std::to_string(p) + " must be below 2^31");
  if (!is_prime(p)) throw InvalidField("modulus " + std::to_string(p) + " is not prime");
  return Field(static_cast<std::uint32_t>(p));
}

FieldElement Field::zero() const { return from_int(0); }
FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(std::int64_t v) const {
  if (p_ == 0) return FieldElement(mpq_class(mpz_class(static_cast<long>(v))));
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return FieldElement(static_cast<std::uint32_t>(r));
}

FieldElement Field::from_integer(const mpz_class& v) const {
  if (p_ == 0) return FieldElement(mpq_class(v));
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  return FieldElement(static_cast<std::uint32_t>(r.get_ui()));
}

FieldElement Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (p_ == 0) {
    if (den == 0) throw DivisionByZero();
    mpq_class q(num, den);
    q.canonicalize();
    return FieldElement(std::move(q));
  }
  return div(from_integer(num), from_integer(den));
}

FieldElement Field::from_residue(std::uint32_t r) const { return FieldElement(r % p_); }

std::uint32_t Field::residue(const FieldElement& a) const { return std::get<std::uint32_t>(a.value_); }

const mpq_class& Field::rational(const FieldElement& a) const { return std::get<mpq_class>(a.value_); }

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  if (p_ == 0) return FieldElement(mpq_class(rational(a) + rational(b)));
  std::uint64_t s = std::uint64_t{residue(a)} + residue(b);
  return FieldElement(static_cast<std::uint32_t>(s >= p_ ? s - p_ : s));
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  if (p_ == 0) return FieldElement(mpq_class(rational(a) - rational(b)));
  std::uint64_t s = std::uint64_t{residue(a)} + p_ - residue(b);
  return FieldElement(static_cast<std::uint32_t>(s >= p_ ? s - p_ : s));
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  if (p_ == 0) return FieldElement(mpq_class(rational(a) * rational(b)));
  return FieldElement(static_cast<std::uint32_t>(std::uint64_t{residue(a)} * residue(b) % p_));
}

FieldElement Field::neg(const FieldElement& a) const {
  if (p_ == 0) return FieldElement(mpq_class(-rational(a)));
  std::uint32_t r = residue(a);
  return FieldElement(r == 0 ? 0u : p_ - r);
}

FieldElement Field::inv(const FieldElement& a) const {
  if (a.is_zero()) throw DivisionByZero();
  if (p_ == 0) return FieldElement(mpq_class(1 / rational(a)));
  // extended Euclid on (r, p)
  std::int64_t t0 = 0, t1 = 1;
  std::int64_t r0 = p_, r1 = residue(a);
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t0 < 0) t0 += p_;
  return FieldElement(static_cast<std::uint32_t>(t0));
}

FieldElement Field::div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }

bool Field::is_one(const FieldElement& a) const {
  if (p_ == 0) return rational(a) == 1;
  return residue(a) == 1;
}

std::string Field::to_string(const FieldElement& a) const {
  if (p_ == 0) return rational(a).get_str();
  return std::to_string(residue(a));
}

FieldElement Field::parse(std::string_view text) const {
  std::string s(text);
  auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    std::size_t i = 0;
    if (i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) throw ParseError("malformed integer '" + part + "'");
    for (std::size_t j = i; j < part.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(part[j])))
        throw ParseError("malformed integer '" + part + "'");
    return mpz_class(part[0] == '+' ? part.substr(1) : part, 10);
  };
  if (slash == std::string::npos) return from_integer(parse_int(s));
  return from_fraction(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::string Field::name() const { return p_ == 0 ? std::string("QQ") : "ZZ/" + std::to_string(p_); }

}  // namespace maxgenus
