#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace maxgenus {

class Field;

// An element of a prime field F_p or of Q.  The representation is canonical:
// a residue in [0, p) or a reduced fraction with positive denominator.
// Elements do not know their field; arithmetic goes through Field.
class FieldElement {
 public:
  FieldElement() = default;

  bool is_zero() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_;
  }

 private:
  friend class Field;
  explicit FieldElement(std::uint32_t r) : value_(r) {}
  explicit FieldElement(mpq_class q) : value_(std::move(q)) {}

  std::variant<std::uint32_t, mpq_class> value_{std::uint32_t{0}};
};

// Descriptor of the coefficient field: F_p for a prime p < 2^31, or Q.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  // Throws InvalidField when p is not a prime below 2^31.
  static Field prime(std::uint64_t p);
  static Field rationals() { return Field(0); }

  bool is_prime_field() const { return p_ != 0; }
  bool is_rational() const { return p_ == 0; }
  // 0 for Q.
  std::uint32_t characteristic() const { return p_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_integer(const mpz_class& v) const;
  // Throws DivisionByZero when den maps to zero.
  FieldElement from_fraction(const mpz_class& num, const mpz_class& den) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  // Throws DivisionByZero on zero input.
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;

  bool is_one(const FieldElement& a) const;

  // Raw views; the caller must know which kind of field this is.
  std::uint32_t residue(const FieldElement& a) const;
  const mpq_class& rational(const FieldElement& a) const;
  FieldElement from_residue(std::uint32_t r) const;

  // Residues print as non-negative integers, rationals as "n" or "n/d".
  std::string to_string(const FieldElement& a) const;
  // Accepts "[-]n" or "[-]n/d".
  FieldElement parse(std::string_view text) const;

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

// Throws FieldMismatch unless a == b.
void require_same_field(const Field& a, const Field& b);

}  // namespace maxgenus
