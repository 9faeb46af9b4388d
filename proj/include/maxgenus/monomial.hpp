#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace maxgenus {

// Ambient ring of a polynomial.  Variables are positional: slots 0 and 1 are
// always x and y (X and Y); slot 2 is z, w or Z; slot 3 is W.
enum class Ring : std::uint8_t { XYZ, XYW, XYZW };

int num_vars(Ring ring);
char var_name(Ring ring, int slot);
std::string ring_name(Ring ring);

struct Monomial {
  std::array<std::uint16_t, 4> exp{};

  constexpr Monomial() = default;
  constexpr Monomial(int e0, int e1, int e2, int e3 = 0)
      : exp{static_cast<std::uint16_t>(e0), static_cast<std::uint16_t>(e1), static_cast<std::uint16_t>(e2),
            static_cast<std::uint16_t>(e3)} {}

  constexpr int operator[](int i) const { return exp[static_cast<std::size_t>(i)]; }

  constexpr int degree() const { return exp[0] + exp[1] + exp[2] + exp[3]; }
  // Order with respect to the ideal (x, y).
  constexpr int xy_degree() const { return exp[0] + exp[1]; }

  constexpr std::uint64_t key() const {
    return std::uint64_t{exp[0]} << 48 | std::uint64_t{exp[1]} << 32 | std::uint64_t{exp[2]} << 16 | exp[3];
  }

  bool divides(const Monomial& other) const;
  // Requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
  // Plain lexicographic comparison of exponent vectors.
  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

// WT(x, y, z) = (1, 2, 3) on k[x,y,z].
constexpr int wt_weight(const Monomial& m) { return m[0] + 2 * m[1] + 3 * m[2]; }
// WT_inf(x, y, w) = (2, 1, 3) on k[x,y,w].
constexpr int wtinf_weight(const Monomial& m) { return 2 * m[0] + m[1] + 3 * m[2]; }

// Graded lexicographic comparison with slot 0 > slot 1 > slot 2 > slot 3.
constexpr std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a <=> b;
}

struct GrlexGreater {
  constexpr bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return std::hash<std::uint64_t>{}(m.key()); }
};

std::string to_string(const Monomial& m, Ring ring);

}  // namespace maxgenus
