#include "maxgenus/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "maxgenus/errors.hpp"
#include "maxgenus/graded_basis.hpp"

namespace maxgenus {

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (kind == TermOrderKind::GradedLex) {
    for (int slot : precedence)
      if (auto c = a[slot] <=> b[slot]; c != 0) return c;
    return std::strong_ordering::equal;
  }
  // reverse lex: the smaller exponent in the least significant variable wins
  for (auto it = precedence.rbegin(); it != precedence.rend(); ++it)
    if (auto c = a[*it] <=> b[*it]; c != 0) return b[*it] <=> a[*it];
  return std::strong_ordering::equal;
}

std::string TermOrder::name() const { return kind == TermOrderKind::GradedLex ? "grlex" : "grevlex"; }

Monomial leading_monomial(const Polynomial& f, const TermOrder& order) {
  if (f.is_zero()) throw DomainError("zero polynomial has no leading monomial");
  const Monomial* best = &f.terms().front().mono;
  for (const auto& t : f.terms())
    if (order.greater(t.mono, *best)) best = &t.mono;
  return *best;
}

std::vector<Polynomial> xy_power_generators(const Field& field, int ell) {
  std::vector<Polynomial> out;
  for (int b = 0; b <= ell; ++b) out.push_back(Polynomial::monomial(field, Ring::XYZ, Monomial(ell - b, b, 0)));
  return out;
}

std::vector<Monomial> GroebnerBasis::leads() const {
  std::vector<Monomial> out;
  for (const auto& p : generators) out.push_back(leading_monomial(p, order));
  return out;
}

namespace {

// Terms sorted decreasingly in the active term order.
struct OrderedPoly {
  std::vector<Term> terms;
  int weight = 0;

  const Monomial& lead() const { return terms.front().mono; }
};

struct Greater {
  const TermOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

OrderedPoly to_ordered(const Polynomial& f, const TermOrder& order) {
  OrderedPoly p;
  p.terms = f.terms();
  std::sort(p.terms.begin(), p.terms.end(), [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  if (!p.terms.empty()) p.weight = wt_weight(p.terms.front().mono);
  return p;
}

Polynomial to_polynomial(const OrderedPoly& p, const Field& field) {
  return Polynomial::from_terms(field, Ring::XYZ, p.terms);
}

void make_monic(OrderedPoly& p, const Field& k) {
  if (p.terms.empty() || k.is_one(p.terms.front().coeff)) return;
  FieldElement inv = k.inv(p.terms.front().coeff);
  for (auto& t : p.terms) t.coeff = k.mul(t.coeff, inv);
}

class Reducer {
 public:
  Reducer(const TermOrder& order, const Field& field) : order_(order), field_(field) {}

  // Reduces `f` completely against the monic polynomials in `by`.
  OrderedPoly reduce(std::vector<Term> terms, const std::vector<const OrderedPoly*>& by, int weight) const {
    std::map<Monomial, FieldElement, Greater> work(Greater{&order_});
    for (auto& t : terms) {
      auto [it, inserted] = work.try_emplace(t.mono, t.coeff);
      if (!inserted) it->second = field_.add(it->second, t.coeff);
    }
    OrderedPoly out;
    out.weight = weight;
    while (!work.empty()) {
      auto it = work.begin();
      if (it->second.is_zero()) {
        work.erase(it);
        continue;
      }
      const OrderedPoly* r = find_divisor(it->first, by);
      if (r == nullptr) {
        out.terms.push_back(Term{it->first, std::move(it->second)});
        work.erase(it);
        continue;
      }
      const Monomial q = r->lead().quotient_of(it->first);
      const FieldElement c = it->second;
      work.erase(it);
      for (std::size_t i = 1; i < r->terms.size(); ++i) {
        Monomial mono = r->terms[i].mono * q;
        FieldElement delta = field_.neg(field_.mul(c, r->terms[i].coeff));
        auto [jt, inserted] = work.try_emplace(mono, delta);
        if (!inserted) {
          jt->second = field_.add(jt->second, delta);
          if (jt->second.is_zero()) work.erase(jt);
        }
      }
    }
    return out;
  }

 private:
  static const OrderedPoly* find_divisor(const Monomial& mono, const std::vector<const OrderedPoly*>& by) {
    for (const OrderedPoly* p : by)
      if (p->lead().divides(mono)) return p;
    return nullptr;
  }

  const TermOrder& order_;
  const Field& field_;
};

struct Pair {
  int weight;
  Monomial lcm;
  std::size_t i, j;
};

class Buchberger {
 public:
  Buchberger(const TermOrder& order, const Field& field, int cap, const Deadline& deadline)
      : order_(order), field_(field), cap_(cap), deadline_(deadline), reducer_(order, field) {}

  void add_generator(const Polynomial& f) {
    if (f.is_zero()) return;
    auto w = f.wt_weight();
    if (!w) throw PreconditionError("generator " + f.to_string() + " is not WT-homogeneous");
    OrderedPoly p = to_ordered(f, order_);
    p = reducer_.reduce(std::move(p.terms), active(), *w);
    if (p.terms.empty()) return;
    make_monic(p, field_);
    update(std::move(p));
  }

  void run() {
    while (!pairs_.empty()) {
      deadline_.check();
      auto it = pairs_.begin();
      Pair pair = *it;
      pairs_.erase(it);
      OrderedPoly h = reducer_.reduce(s_polynomial(pair), active(), pair.weight);
      if (h.terms.empty()) continue;
      make_monic(h, field_);
      update(std::move(h));
    }
  }

  // Minimal basis with fully reduced tails.
  std::vector<OrderedPoly> reduced_basis() const {
    std::vector<const OrderedPoly*> act = active();
    std::vector<OrderedPoly> out;
    for (std::size_t k = 0; k < act.size(); ++k) {
      std::vector<const OrderedPoly*> others;
      for (std::size_t l = 0; l < act.size(); ++l)
        if (l != k) others.push_back(act[l]);
      OrderedPoly p;
      p.weight = act[k]->weight;
      p.terms.push_back(act[k]->terms.front());
      std::vector<Term> tail(act[k]->terms.begin() + 1, act[k]->terms.end());
      OrderedPoly rest = reducer_.reduce(std::move(tail), others, p.weight);
      p.terms.insert(p.terms.end(), rest.terms.begin(), rest.terms.end());
      out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(),
              [&](const OrderedPoly& a, const OrderedPoly& b) { return order_.greater(b.lead(), a.lead()); });
    return out;
  }

 private:
  struct PairLess {
    const TermOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.weight != b.weight) return a.weight < b.weight;
      if (auto c = order->compare(a.lcm, b.lcm); c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    }
  };

  std::vector<const OrderedPoly*> active() const {
    std::vector<const OrderedPoly*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(&polys_[k]);
    return out;
  }

  std::vector<Term> s_polynomial(const Pair& pair) const {
    const OrderedPoly& f = polys_[pair.i];
    const OrderedPoly& g = polys_[pair.j];
    const Monomial qf = f.lead().quotient_of(pair.lcm);
    const Monomial qg = g.lead().quotient_of(pair.lcm);
    std::vector<Term> out;
    out.reserve(f.terms.size() + g.terms.size());
    for (std::size_t k = 1; k < f.terms.size(); ++k) out.push_back(Term{f.terms[k].mono * qf, f.terms[k].coeff});
    for (std::size_t k = 1; k < g.terms.size(); ++k)
      out.push_back(Term{g.terms[k].mono * qg, field_.neg(g.terms[k].coeff)});
    return out;
  }

  // Gebauer-Moeller installation of a new basis element.
  void update(OrderedPoly h) {
    const std::size_t hi = polys_.size();
    const Monomial hl = h.lead();

    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) {
        Monomial l = hl.lcm(polys_[k].lead());
        candidates.push_back(Pair{wt_weight(l), l, k, hi});
      }

    // criterion M: drop (h,g1) if another (h,g2) has a strictly dividing lcm,
    // or an equal lcm appearing earlier
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      bool drop = false;
      for (std::size_t b = 0; b < candidates.size() && !drop; ++b) {
        if (a == b) continue;
        const Monomial& la = candidates[a].lcm;
        const Monomial& lb = candidates[b].lcm;
        if (lb.divides(la) && (!(lb == la) || b < a)) drop = true;
      }
      if (!drop) kept.push_back(candidates[a]);
    }
    // criterion F/product: coprime leads reduce to zero
    std::vector<Pair> fresh;
    for (const auto& p : kept)
      if (!polys_[p.i].lead().coprime(hl)) fresh.push_back(p);

    // criterion B on old pairs
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial& l = it->lcm;
      if (hl.divides(l) && !(hl.lcm(polys_[it->i].lead()) == l) && !(hl.lcm(polys_[it->j].lead()) == l))
        it = pairs_.erase(it);
      else
        ++it;
    }

    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k] && hl.divides(polys_[k].lead())) active_[k] = false;

    polys_.push_back(std::move(h));
    active_.push_back(true);
    for (const auto& p : fresh)
      if (p.weight <= cap_) pairs_.insert(p);
  }

  const TermOrder& order_;
  const Field& field_;
  int cap_;
  const Deadline& deadline_;
  Reducer reducer_;
  std::vector<OrderedPoly> polys_;
  std::vector<bool> active_;
  std::set<Pair, PairLess> pairs_{PairLess{&order_}};
};

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const TermOrder& order) {
  const Field& k = f.field();
  std::vector<OrderedPoly> monic;
  monic.reserve(basis.size());
  for (const auto& b : basis) {
    require_compatible(f, b);
    if (b.is_zero()) continue;
    OrderedPoly p = to_ordered(b, order);
    make_monic(p, k);
    monic.push_back(std::move(p));
  }
  std::vector<const OrderedPoly*> by;
  for (const auto& p : monic) by.push_back(&p);
  OrderedPoly r = Reducer(order, k).reduce(f.terms(), by, 0);
  return to_polynomial(r, k);
}

GroebnerBasis buchberger_truncated(const std::vector<Polynomial>& gens, const TermOrder& order, int weight_cap,
                                   const Deadline& deadline) {
  if (gens.empty()) return GroebnerBasis{{}, order, weight_cap};
  const Field& k = gens.front().field();
  for (const auto& g : gens) {
    if (g.ring() != Ring::XYZ) throw AmbientMismatch("buchberger_truncated works in k[x,y,z]");
    require_same_field(k, g.field());
    if (!g.is_zero() && !g.wt_weight()) throw PreconditionError("generator " + g.to_string() + " is not WT-homogeneous");
  }
  std::vector<Polynomial> sorted = gens;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.wt_weight().value_or(0) < b.wt_weight().value_or(0);
  });
  Buchberger bb(order, k, weight_cap, deadline);
  for (const auto& g : sorted) bb.add_generator(g);
  bb.run();
  GroebnerBasis out{{}, order, weight_cap};
  for (const auto& p : bb.reduced_basis()) out.generators.push_back(to_polynomial(p, k));
  return out;
}

InitialIdealVerdict initial_ideal_verdict(const Polynomial& g, const ParamSet& params, const TermOrder& order,
                                          const Deadline& deadline) {
  require_weight_3m(g, params);
  auto gens = xy_power_generators(g.field(), params.ell);
  gens.push_back(g);
  GroebnerBasis gb = buchberger_truncated(gens, order, params.weight_cap(), deadline);
  InitialIdealVerdict v;
  v.basis_size = gb.generators.size();
  for (const auto& lead : gb.leads()) {
    ++v.leads_by_degree[lead.degree()];
    if (lead.degree() <= params.ell - 1) v.low_degree_leads.push_back(lead);
  }
  v.good = v.low_degree_leads.empty();
  return v;
}

}  // namespace maxgenus
