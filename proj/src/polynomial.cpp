#include "maxgenus/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_map>

#include "maxgenus/errors.hpp"

namespace maxgenus {

namespace {

using Accumulator = std::unordered_map<Monomial, FieldElement, MonomialHash>;

void accumulate(Accumulator& acc, const Field& k, const Monomial& mono, const FieldElement& c) {
  auto [it, inserted] = acc.try_emplace(mono, c);
  if (!inserted) it->second = k.add(it->second, c);
}

std::vector<Term> drain(Accumulator& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [mono, c] : acc)
    if (!c.is_zero()) out.push_back(Term{mono, std::move(c)});
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return GrlexGreater{}(a.mono, b.mono); });
  return out;
}

}  // namespace

void require_compatible(const Polynomial& f, const Polynomial& g) {
  if (f.ring() != g.ring())
    throw AmbientMismatch("ambient rings differ: " + ring_name(f.ring()) + " vs " + ring_name(g.ring()));
  require_same_field(f.field(), g.field());
}

Polynomial Polynomial::from_terms(Field field, Ring ring, std::vector<Term> terms) {
  Accumulator acc;
  for (auto& t : terms) accumulate(acc, field, t.mono, t.coeff);
  Polynomial p(field, ring);
  p.terms_ = drain(acc);
  return p;
}

Polynomial Polynomial::monomial(Field field, Ring ring, const Monomial& mono, FieldElement c) {
  Polynomial p(field, ring);
  if (!c.is_zero()) p.terms_.push_back(Term{mono, std::move(c)});
  return p;
}

FieldElement Polynomial::coefficient(const Monomial& mono) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                             [](const Term& t, const Monomial& m) { return GrlexGreater{}(t.mono, m); });
  if (it != terms_.end() && it->mono == mono) return it->coeff;
  return field_.zero();
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

int Polynomial::low_degree() const { return terms_.empty() ? -1 : terms_.back().mono.degree(); }

bool Polynomial::is_homogeneous(int deg) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono.degree() == deg; });
}

bool Polynomial::is_wt_homogeneous(int weight) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return maxgenus::wt_weight(t.mono) == weight; });
}

bool Polynomial::is_wtinf_homogeneous(int weight) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return wtinf_weight(t.mono) == weight; });
}

std::optional<int> Polynomial::wt_weight() const {
  if (terms_.empty()) return std::nullopt;
  int w = maxgenus::wt_weight(terms_.front().mono);
  if (!is_wt_homogeneous(w)) return std::nullopt;
  return w;
}

Polynomial Polynomial::truncated_xy(int r) const {
  Polynomial p(field_, ring_);
  for (const auto& t : terms_)
    if (t.mono.xy_degree() < r) p.terms_.push_back(t);
  return p;
}

Polynomial Polynomial::truncated_y(int r) const {
  Polynomial p(field_, ring_);
  for (const auto& t : terms_)
    if (t.mono[1] < r) p.terms_.push_back(t);
  return p;
}

Polynomial Polynomial::filtered_exponent(int slot, int lo, int hi) const {
  Polynomial p(field_, ring_);
  for (const auto& t : terms_)
    if (t.mono[slot] >= lo && t.mono[slot] <= hi) p.terms_.push_back(t);
  return p;
}

std::optional<Polynomial> Polynomial::divided_by(const Monomial& mono) const {
  Polynomial p(field_, ring_);
  for (const auto& t : terms_) {
    if (!mono.divides(t.mono)) return std::nullopt;
    p.terms_.push_back(Term{mono.quotient_of(t.mono), t.coeff});
  }
  // dividing by a monomial preserves the grlex order
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(field_, ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.mono, field_.neg(t.coeff)});
  return p;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  Polynomial p(field_, ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.mono, field_.mul(t.coeff, c)});
  return p;
}

Polynomial Polynomial::times(const Monomial& mono) const {
  Polynomial p(field_, ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.mono * mono, t.coeff});
  return p;
}

Polynomial Polynomial::times(const Monomial& mono, const FieldElement& c) const { return times(mono).scaled(c); }

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  require_compatible(f, g);
  const Field& k = f.field_;
  Polynomial out(k, f.ring_);
  out.terms_.reserve(f.terms_.size() + g.terms_.size());
  auto a = f.terms_.begin();
  auto b = g.terms_.begin();
  while (a != f.terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end() || (a != f.terms_.end() && GrlexGreater{}(a->mono, b->mono))) {
      out.terms_.push_back(*a++);
    } else if (a == f.terms_.end() || GrlexGreater{}(b->mono, a->mono)) {
      out.terms_.push_back(*b++);
    } else {
      FieldElement c = k.add(a->coeff, b->coeff);
      if (!c.is_zero()) out.terms_.push_back(Term{a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  return out;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

Polynomial mul_mod_xy_power(const Polynomial& f, const Polynomial& g, int r) {
  require_compatible(f, g);
  const Field& k = f.field_;
  Accumulator acc;
  for (const auto& a : f.terms_) {
    if (a.mono.xy_degree() >= r) continue;
    for (const auto& b : g.terms_) {
      if (a.mono.xy_degree() + b.mono.xy_degree() >= r) continue;
      accumulate(acc, k, a.mono * b.mono, k.mul(a.coeff, b.coeff));
    }
  }
  Polynomial out(k, f.ring_);
  out.terms_ = drain(acc);
  return out;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  return mul_mod_xy_power(f, g, std::numeric_limits<int>::max());
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = field_.to_string(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    bool is_const = t.mono == Monomial{};
    if (is_const) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += maxgenus::to_string(t.mono, ring_);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Field& field, std::optional<Ring> ring)
      : text_(text), field_(field), ring_(ring ? *ring : infer_ring(text)) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip_ws();
    }
    terms.push_back(term(negative));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = get();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      skip_ws();
      terms.push_back(term(c == '-'));
    }
    return Polynomial::from_terms(field_, ring_, std::move(terms));
  }

 private:
  static Ring infer_ring(std::string_view text) {
    bool upper = false, z = false, w = false, lower = false;
    for (char c : text) {
      if (c == 'X' || c == 'Y' || c == 'Z' || c == 'W') upper = true;
      if (c == 'x' || c == 'y') lower = true;
      if (c == 'z') z = true;
      if (c == 'w') w = true;
    }
    if (upper && (lower || z || w)) throw ParseError("cannot mix upper- and lower-case variables");
    if (z && w) throw ParseError("cannot mix z and w");
    if (upper) return Ring::XYZW;
    return w ? Ring::XYW : Ring::XYZ;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string digits() {
    std::string s;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += get();
    return s;
  }

  int slot_of(char c) const {
    for (int i = 0; i < num_vars(ring_); ++i)
      if (var_name(ring_, i) == c) return i;
    return -1;
  }

  bool at_var() const { return !at_end() && slot_of(peek()) >= 0; }

  Term term(bool negative) {
    FieldElement coeff = field_.one();
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      skip_ws();
      if (peek() == '/') {
        get();
        skip_ws();
        std::string den = digits();
        if (den.empty()) fail("expected denominator");
        coeff = field_.from_fraction(mpz_class(num), mpz_class(den));
      } else {
        coeff = field_.from_integer(mpz_class(num));
      }
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
        if (!at_var()) fail("expected variable after '*'");
      }
    }
    Monomial mono;
    bool have_mono = false;
    while (at_var()) {
      int slot = slot_of(get());
      skip_ws();
      int e = 1;
      if (peek() == '^') {
        get();
        skip_ws();
        std::string ds = digits();
        if (ds.empty()) fail("expected exponent");
        e = std::stoi(ds);
      }
      mono.exp[static_cast<std::size_t>(slot)] = static_cast<std::uint16_t>(mono[slot] + e);
      have_mono = true;
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
        if (!at_var()) fail("expected variable after '*'");
      }
    }
    if (!have_coeff && !have_mono) fail("expected a term");
    if (!at_end() && peek() != '+' && peek() != '-') fail("unexpected character");
    if (negative) coeff = field_.neg(coeff);
    return Term{mono, coeff};
  }

  std::string_view text_;
  Field field_;
  Ring ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Field& field, std::optional<Ring> ring) {
  return Parser(text, field, ring).run();
}

}  // namespace maxgenus
