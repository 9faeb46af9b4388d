#include "maxgenus/monomial.hpp"

#include <algorithm>

#include "maxgenus/errors.hpp"
#include "maxgenus/params.hpp"

namespace maxgenus {

int num_vars(Ring ring) { return ring == Ring::XYZW ? 4 : 3; }

char var_name(Ring ring, int slot) {
  switch (ring) {
    case Ring::XYZ:
      return "xyz"[slot];
    case Ring::XYW:
      return "xyw"[slot];
    case Ring::XYZW:
      return "XYZW"[slot];
  }
  return '?';
}

std::string ring_name(Ring ring) {
  switch (ring) {
    case Ring::XYZ:
      return "k[x,y,z]";
    case Ring::XYW:
      return "k[x,y,w]";
    case Ring::XYZW:
      return "k[X,Y,Z,W]";
  }
  return "?";
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < 4; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q;
  for (std::size_t i = 0; i < 4; ++i) q.exp[i] = static_cast<std::uint16_t>(other.exp[i] - exp[i]);
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l;
  for (std::size_t i = 0; i < 4; ++i) l.exp[i] = std::max(exp[i], other.exp[i]);
  return l;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < 4; ++i)
    if (exp[i] != 0 && other.exp[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial p;
  for (std::size_t i = 0; i < 4; ++i) p.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
  return p;
}

std::string to_string(const Monomial& m, Ring ring) {
  std::string out;
  for (int i = 0; i < num_vars(ring); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(ring, i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

ParamSet ParamSet::from_m(int m, std::optional<int> a) {
  if (m < 2) throw DomainError("m must be at least 2, got " + std::to_string(m));
  if (a && *a < 0) throw DomainError("shift a must be non-negative, got " + std::to_string(*a));
  return ParamSet{m, 3 * m - 1, 3 * m - 2, a};
}

int ParamSet::shift() const {
  if (!a) throw DomainError("no shift a was given");
  return *a;
}

int ParamSet::e() const { return shift() + m - 1; }

}  // namespace maxgenus
