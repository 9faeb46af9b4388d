#include "maxgenus/tparam_poly.hpp"

#include <algorithm>

namespace maxgenus {

TParamPoly::TParamPoly(Field field, std::vector<FieldElement> coefficients)
    : field_(field), coeffs_(std::move(coefficients)) {
  normalize();
}

TParamPoly TParamPoly::constant(Field field, FieldElement c) { return TParamPoly(field, {std::move(c)}); }

TParamPoly TParamPoly::monomial(Field field, FieldElement c, int k) {
  std::vector<FieldElement> v(static_cast<std::size_t>(k) + 1, field.zero());
  v.back() = std::move(c);
  return TParamPoly(field, std::move(v));
}

void TParamPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement TParamPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return field_.zero();
  return coeffs_[static_cast<std::size_t>(k)];
}

FieldElement TParamPoly::evaluate(const FieldElement& t) const {
  FieldElement acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, t), *it);
  return acc;
}

std::string TParamPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    bool unit = field_.is_one(coeffs_[k]);
    if (k == 0 || !unit) out += field_.to_string(coeffs_[k]);
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

TParamPoly operator+(const TParamPoly& f, const TParamPoly& g) {
  require_same_field(f.field_, g.field_);
  const Field& k = f.field_;
  std::vector<FieldElement> out(std::max(f.coeffs_.size(), g.coeffs_.size()), k.zero());
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) out[i] = f.coeffs_[i];
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) out[i] = k.add(out[i], g.coeffs_[i]);
  return TParamPoly(k, std::move(out));
}

TParamPoly TParamPoly::operator-() const {
  std::vector<FieldElement> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(field_.neg(c));
  return TParamPoly(field_, std::move(out));
}

TParamPoly operator-(const TParamPoly& f, const TParamPoly& g) { return f + (-g); }

TParamPoly operator*(const TParamPoly& f, const TParamPoly& g) {
  require_same_field(f.field_, g.field_);
  const Field& k = f.field_;
  if (f.is_zero() || g.is_zero()) return TParamPoly(k);
  std::vector<FieldElement> out(f.coeffs_.size() + g.coeffs_.size() - 1, k.zero());
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
      out[i + j] = k.add(out[i + j], k.mul(f.coeffs_[i], g.coeffs_[j]));
  return TParamPoly(k, std::move(out));
}

TParamPoly TParamPoly::scaled(const FieldElement& c) const {
  std::vector<FieldElement> out;
  out.reserve(coeffs_.size());
  for (const auto& x : coeffs_) out.push_back(field_.mul(x, c));
  return TParamPoly(field_, std::move(out));
}

TParamPoly tpoly_mul(const TParamPoly& f, const TParamPoly& g) { return f * g; }

}  // namespace maxgenus
