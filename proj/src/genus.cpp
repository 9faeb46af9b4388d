#include "maxgenus/genus.hpp"

#include "maxgenus/errors.hpp"

namespace maxgenus {

std::int64_t binom(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < r) return 0;
  if (r > n - r) r = n - r;
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

std::int64_t max_genus_bound(std::int64_t d, std::int64_t s) {
  if (s < 1 || d < s)
    throw DomainError("P(d,s) needs d >= s >= 1, got d=" + std::to_string(d) + " s=" + std::to_string(s));
  if (d <= 2 * s) return (s - 1) * d + 1 - binom(s + 2, 3);
  return binom(d - s, 2) - binom(s - 1, 3);
}

std::int64_t primitive_genus(std::int64_t d, std::int64_t e) {
  if (d < 2) throw DomainError("primitive_genus needs d >= 2");
  return -(e * d * (d - 1) / 2 + (d - 1));
}

mpq_class hilbert_poly_F(std::int64_t d, std::int64_t e, std::int64_t n) {
  mpq_class out(mpz_class(static_cast<long>(3 * (n - e) - (2 * d - 1))), mpz_class(3));
  out.canonicalize();
  out *= mpz_class(static_cast<long>(binom(d, 2)));
  out.canonicalize();
  return out;
}

std::int64_t n0(std::int64_t d, std::int64_t a) {
  if (d % 3 != 2 || d < 5) throw DomainError("n0 needs d = 2 mod 3, got d=" + std::to_string(d));
  if (a < 0) throw DomainError("n0 needs a >= 0");
  return a + d - 1;
}

Assembly conjectureA_assembly(std::int64_t d) {
  if (d < 5) throw DomainError("conjectureA_assembly needs d >= 5");
  Assembly out;
  out.d = d;
  auto primitive = [](std::int64_t deg, std::int64_t e) { return Component{"primitive", deg, e, primitive_genus(deg, e)}; };
  switch (d % 3) {
    case 2:
      out.components = {primitive(d, (d - 2) / 3)};
      break;
    case 0:
      out.components = {Component{"line", 1, 0, 0}, primitive(d - 1, d / 3)};
      break;
    default:
      out.components = {Component{"double line", 2, d - 2, primitive_genus(2, d - 2)}, primitive(d - 2, (d + 2) / 3)};
      break;
  }
  out.genus = out.components.front().genus;
  for (std::size_t i = 1; i < out.components.size(); ++i) out.genus = union_genus(out.genus, out.components[i].genus, 0);
  out.bound = max_genus_bound(d, d);
  return out;
}

std::int64_t biliaison_genus(std::int64_t gY, std::int64_t degY, std::int64_t t) {
  if (t < 1) throw DomainError("biliaison_genus needs t >= 1");
  return gY + (t - 1) * (t - 2) / 2 + degY - 1;
}

std::int64_t union_genus(std::int64_t pX, std::int64_t pY, std::int64_t meet_length) {
  if (meet_length < 0) throw DomainError("meet length must be >= 0");
  return pX + pY + meet_length - 1;
}

std::int64_t line_extension_genus(std::int64_t d, std::int64_t s) {
  return union_genus(max_genus_bound(d - 1, s), 0, s);
}

std::int64_t plane_extension_genus(std::int64_t d, std::int64_t s) {
  std::int64_t k = d - s;
  return union_genus(binom(k - 1, 2), max_genus_bound(s, s), k * s - k * (k - 1) / 2);
}

std::int64_t plane_union_genus(std::int64_t s, std::int64_t k) {
  std::int64_t meet = (s - 1) - (k - s) * (k - s + 1) / 2;
  return union_genus(k * (k - 1) / 2, max_genus_bound(s - 1, s - 1), meet);
}

std::vector<BoundRow> bounds_table(std::int64_t s_min, std::int64_t s_max, std::int64_t d_max) {
  if (s_min < 1) throw DomainError("s must be >= 1");
  std::vector<BoundRow> rows;
  for (std::int64_t s = s_min; s <= s_max; ++s)
    for (std::int64_t d = s; d <= d_max; ++d) rows.push_back({d, s, max_genus_bound(d, s)});
  return rows;
}

std::string bounds_csv(const std::vector<BoundRow>& rows) {
  std::string out = "d,s,P\n";
  for (const auto& r : rows)
    out += std::to_string(r.d) + "," + std::to_string(r.s) + "," + std::to_string(r.bound) + "\n";
  return out;
}

}  // namespace maxgenus
