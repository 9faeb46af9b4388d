#pragma once

#include <string>
#include <vector>

#include "maxgenus/field.hpp"

namespace maxgenus {

// Univariate polynomial in a free parameter t.  Trailing zeros are stripped,
// so the zero polynomial has no coefficients.
class TParamPoly {
 public:
  explicit TParamPoly(Field field) : field_(field) {}
  TParamPoly(Field field, std::vector<FieldElement> coefficients);

  static TParamPoly constant(Field field, FieldElement c);
  // c * t^k
  static TParamPoly monomial(Field field, FieldElement c, int k);

  const Field& field() const { return field_; }
  const std::vector<FieldElement>& coefficients() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  FieldElement coefficient(int k) const;

  FieldElement evaluate(const FieldElement& t) const;
  std::string to_string(const std::string& var = "t") const;

  friend TParamPoly operator+(const TParamPoly& f, const TParamPoly& g);
  friend TParamPoly operator-(const TParamPoly& f, const TParamPoly& g);
  friend TParamPoly operator*(const TParamPoly& f, const TParamPoly& g);
  TParamPoly operator-() const;
  TParamPoly scaled(const FieldElement& c) const;

  friend bool operator==(const TParamPoly& f, const TParamPoly& g) {
    return f.field_ == g.field_ && f.coeffs_ == g.coeffs_;
  }

 private:
  void normalize();

  Field field_;
  std::vector<FieldElement> coeffs_;
};

TParamPoly tpoly_mul(const TParamPoly& f, const TParamPoly& g);

}  // namespace maxgenus
