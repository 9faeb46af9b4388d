#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxgenus/field.hpp"
#include "maxgenus/monomial.hpp"

namespace maxgenus {

struct Term {
  Monomial mono;
  FieldElement coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial with exact coefficients.  Terms are kept sorted in
// decreasing graded lexicographic order with no zero coefficients, so two
// equal polynomials have identical term vectors and identical text.
class Polynomial {
 public:
  Polynomial(Field field, Ring ring) : field_(field), ring_(ring) {}

  static Polynomial from_terms(Field field, Ring ring, std::vector<Term> terms);
  static Polynomial monomial(Field field, Ring ring, const Monomial& mono, FieldElement c);
  static Polynomial monomial(Field field, Ring ring, const Monomial& mono) {
    return monomial(field, ring, mono, field.one());
  }
  static Polynomial constant(Field field, Ring ring, FieldElement c) {
    return monomial(field, ring, Monomial{}, std::move(c));
  }

  const Field& field() const { return field_; }
  Ring ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  FieldElement coefficient(const Monomial& mono) const;
  // Largest standard degree of a term; -1 for zero.
  int degree() const;
  // Smallest standard degree of a term; -1 for zero.
  int low_degree() const;

  bool is_homogeneous(int degree) const;
  bool is_wt_homogeneous(int weight) const;
  bool is_wtinf_homogeneous(int weight) const;
  // Common WT weight, if every term has the same one.
  std::optional<int> wt_weight() const;

  // Drop every term in (x, y)^r.
  Polynomial truncated_xy(int r) const;
  // Drop every term divisible by y^r.
  Polynomial truncated_y(int r) const;
  // Keep only terms whose exponent in `slot` lies in [lo, hi].
  Polynomial filtered_exponent(int slot, int lo, int hi) const;
  // Exact division by a monomial; nullopt if some term is not divisible.
  std::optional<Polynomial> divided_by(const Monomial& mono) const;

  Polynomial operator-() const;
  Polynomial scaled(const FieldElement& c) const;
  Polynomial times(const Monomial& mono) const;
  Polynomial times(const Monomial& mono, const FieldElement& c) const;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.field_ == g.field_ && f.ring_ == g.ring_ && f.terms_ == g.terms_;
  }

  std::string to_string() const;

 private:
  friend Polynomial mul_mod_xy_power(const Polynomial& f, const Polynomial& g, int r);

  Field field_;
  Ring ring_;
  std::vector<Term> terms_;
};

// Throws AmbientMismatch / FieldMismatch when the operands disagree.
void require_compatible(const Polynomial& f, const Polynomial& g);

// f * g with every monomial in (x, y)^r deleted.
Polynomial mul_mod_xy_power(const Polynomial& f, const Polynomial& g, int r);

// Text grammar:
//   poly := term (('+'|'-') term)*
//   term := [coeff] ['*'] [monomial]
//   monomial := var ['^' exp] ('*' var ['^' exp])*
// Coefficients are integers (reduced mod p over F_p) or fractions n/d.  When
// `ring` is empty it is inferred from the variable letters.
Polynomial parse_polynomial(std::string_view text, const Field& field, std::optional<Ring> ring = std::nullopt);

}  // namespace maxgenus
