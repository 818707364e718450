#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "twodet/order.hpp"
#include "twodet/polynomial.hpp"

namespace twodet {

struct Ideal {
  RingPtr ring;
  Field field;
  std::vector<Polynomial> gens;

  static Ideal of(RingPtr ring, Field f, std::vector<Polynomial> gens) {
    std::vector<Polynomial> keep;
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      require(g.ring().get() == ring.get(), Errc::input, "generator over the wrong ring");
      keep.push_back(std::move(g));
    }
    return Ideal{std::move(ring), f, std::move(keep)};
  }
};

struct SPairRecord {
  enum class Outcome { coprime, chain, zero, nonzero, capped };
  int i = 0, j = 0;
  Monomial lcm;
  Outcome outcome = Outcome::zero;
  std::vector<int> reducers;
};

inline const char* outcome_name(SPairRecord::Outcome o) {
  switch (o) {
    case SPairRecord::Outcome::coprime: return "skipped-coprime";
    case SPairRecord::Outcome::chain: return "skipped-chain";
    case SPairRecord::Outcome::zero: return "zero";
    case SPairRecord::Outcome::nonzero: return "nonzero";
    case SPairRecord::Outcome::capped: return "capped";
  }
  return "?";
}

struct GroebnerBasis {
  std::vector<Polynomial> polys;  // reduced: monic, pairwise non-divisible LMs
  bool verified = false;          // every S-pair considered (no cap skips)
  bool capped = false;
  int degree_cap = -1;
};

namespace detail {

// term list sorted descending under a fixed order; the engine's working form
struct OP {
  std::vector<Term> t;
  bool empty() const { return t.empty(); }
};

inline OP to_op(const Polynomial& p, const MonomialOrder& ord) {
  OP f;
  f.t = p.terms();
  std::sort(f.t.begin(), f.t.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  return f;
}

inline Polynomial from_op(const RingPtr& ring, Field field, const OP& f) {
  return Polynomial::of_terms(ring, field, f.t);
}

// f + c * m * g, merged; requires both inputs sorted under ord
inline OP axpy(const OP& f, const Scalar& c, const Monomial& m, const OP& g,
               const MonomialOrder& ord) {
  OP r;
  r.t.reserve(f.t.size() + g.t.size());
  size_t i = 0, j = 0;
  while (i < f.t.size() || j < g.t.size()) {
    if (j == g.t.size()) { r.t.push_back(f.t[i++]); continue; }
    Monomial gm = g.t[j].mono * m;
    if (i == f.t.size()) {
      Scalar s = g.t[j].coeff * c;
      if (!s.is_zero()) r.t.push_back({std::move(gm), std::move(s)});
      ++j;
      continue;
    }
    auto cmp = ord.compare(f.t[i].mono, gm);
    if (cmp == std::strong_ordering::greater) {
      r.t.push_back(f.t[i++]);
    } else if (cmp == std::strong_ordering::less) {
      Scalar s = g.t[j].coeff * c;
      if (!s.is_zero()) r.t.push_back({std::move(gm), std::move(s)});
      ++j;
    } else {
      Scalar s = f.t[i].coeff + g.t[j].coeff * c;
      if (!s.is_zero()) r.t.push_back({f.t[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  return r;
}

struct GBElem {
  OP poly;     // monic
  Monomial lm;
};

// full normal form against a list of monic elements
inline OP reduce_full(OP w, const std::vector<GBElem>& basis, const MonomialOrder& ord,
                      std::vector<int>* reducers = nullptr) {
  OP rem;
  while (!w.empty()) {
    const Term& lt = w.t.front();
    int hit = -1;
    for (size_t k = 0; k < basis.size(); ++k) {
      if (basis[k].lm.divides(lt.mono)) { hit = static_cast<int>(k); break; }
    }
    if (hit < 0) {
      rem.t.push_back(lt);
      w.t.erase(w.t.begin());
      continue;
    }
    if (reducers) reducers->push_back(hit);
    Monomial q = lt.mono / basis[hit].lm;
    w = axpy(w, -lt.coeff, q, basis[hit].poly, ord);
  }
  return rem;
}

inline OP make_monic(OP f) {
  if (f.empty()) return f;
  Scalar inv = f.t.front().coeff.inv();
  for (auto& t : f.t) t.coeff = t.coeff * inv;
  return f;
}

inline OP spoly(const GBElem& a, const GBElem& b, const MonomialOrder& ord) {
  Monomial l = Monomial::lcm(a.lm, b.lm);
  Field f = a.poly.t.front().coeff.field();
  OP s = axpy(OP{}, Scalar::one(f), l / a.lm, a.poly, ord);
  return axpy(s, -Scalar::one(f), l / b.lm, b.poly, ord);
}

}  // namespace detail

// Division with remainder: no monomial of the result is divisible by any
// LM(g); f - result lies in (G).
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                              const MonomialOrder& ord, std::vector<int>* reducers = nullptr) {
  require(f.ring().get() == ord.ring().get(), Errc::input, "normal_form: ring mismatch");
  std::vector<detail::GBElem> basis;
  for (auto& g : G) {
    if (g.is_zero()) continue;
    require(g.ring().get() == ord.ring().get(), Errc::input, "normal_form: ring mismatch");
    detail::OP op = detail::make_monic(detail::to_op(g, ord));
    Monomial lm = op.t.front().mono;
    basis.push_back({std::move(op), std::move(lm)});
  }
  detail::OP r = detail::reduce_full(detail::to_op(f, ord), basis, ord, reducers);
  return detail::from_op(f.ring(), f.field(), r);
}

// Division with quotient tracking, for the checked-mode invariant
// f = sum q_k g_k + r with LM(q_k g_k) <= LM(f).
inline Polynomial normal_form_with_quotients(const Polynomial& f,
                                             const std::vector<Polynomial>& G,
                                             const MonomialOrder& ord,
                                             std::vector<Polynomial>& quotients) {
  Field fd = f.field();
  quotients.assign(G.size(), Polynomial::zero(f.ring(), fd));
  std::vector<detail::GBElem> basis;
  std::vector<Scalar> lead;
  for (auto& g : G) {
    detail::OP op = detail::to_op(g, ord);
    require(!op.empty(), Errc::input, "zero divisor polynomial");
    lead.push_back(op.t.front().coeff);
    Monomial lm = op.t.front().mono;
    basis.push_back({detail::make_monic(std::move(op)), std::move(lm)});
  }
  detail::OP w = detail::to_op(f, ord);
  detail::OP rem;
  while (!w.empty()) {
    const Term lt = w.t.front();
    int hit = -1;
    for (size_t k = 0; k < basis.size(); ++k)
      if (basis[k].lm.divides(lt.mono)) { hit = static_cast<int>(k); break; }
    if (hit < 0) {
      rem.t.push_back(lt);
      w.t.erase(w.t.begin());
      continue;
    }
    Monomial q = lt.mono / basis[hit].lm;
    Scalar qc = lt.coeff / lead[hit];
    quotients[hit] = quotients[hit] + Polynomial::term(f.ring(), q, qc);
    w = detail::axpy(w, -lt.coeff, q, basis[hit].poly, ord);
  }
  return detail::from_op(f.ring(), fd, rem);
}

namespace detail {

struct PairKey {
  int deg;
  Monomial lcm;
  int i, j;
  bool operator<(const PairKey& o) const {
    if (deg != o.deg) return deg < o.deg;
    auto c = Monomial::cmp(lcm, o.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

}  // namespace detail

// Buchberger with normal selection (lcm degree, then structural lcm order),
// the coprime-LM criterion and the chain criterion. Reproducible: no
// randomness, deterministic pair order, reduced output.
inline GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord,
                                std::optional<int> degree_cap = std::nullopt,
                                std::vector<SPairRecord>* log = nullptr) {
  GroebnerBasis out;
  out.degree_cap = degree_cap.value_or(-1);
  std::vector<detail::GBElem> basis;
  std::set<detail::PairKey> queue;
  std::unordered_set<uint64_t> pending;
  auto key_of = [](int i, int j) {
    return (static_cast<uint64_t>(i) << 32) | static_cast<uint32_t>(j);
  };

  auto push_elem = [&](detail::OP op) {
    int h = static_cast<int>(basis.size());
    Monomial lm = op.t.front().mono;
    for (int i = 0; i < h; ++i) {
      Monomial l = Monomial::lcm(basis[i].lm, lm);
      queue.insert({l.degree(), l, i, h});
      pending.insert(key_of(i, h));
    }
    basis.push_back({std::move(op), std::move(lm)});
  };

  // seed with the reductions of the input generators
  std::vector<Polynomial> gens = ideal.gens;
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
  });
  for (auto& g : gens) {
    detail::OP red = detail::reduce_full(detail::to_op(g, ord), basis, ord);
    if (!red.empty()) push_elem(detail::make_monic(std::move(red)));
  }

  bool capped = false;
  while (!queue.empty()) {
    detail::PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    pending.erase(key_of(pk.i, pk.j));
    SPairRecord rec;
    rec.i = pk.i;
    rec.j = pk.j;
    rec.lcm = pk.lcm;

    if (degree_cap && pk.deg > *degree_cap) {
      capped = true;
      // a capped pair was never treated, so it must not license chain skips
      pending.insert(key_of(pk.i, pk.j));
      rec.outcome = SPairRecord::Outcome::capped;
      if (log) log->push_back(std::move(rec));
      continue;
    }
    if (Monomial::coprime(basis[pk.i].lm, basis[pk.j].lm)) {
      rec.outcome = SPairRecord::Outcome::coprime;
      if (log) log->push_back(std::move(rec));
      continue;
    }
    // chain criterion: some LM_k divides the lcm and both companion pairs
    // were already handled
    bool chain = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !chain; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!basis[k].lm.divides(pk.lcm)) continue;
      uint64_t ik = key_of(std::min(pk.i, k), std::max(pk.i, k));
      uint64_t jk = key_of(std::min(pk.j, k), std::max(pk.j, k));
      if (!pending.count(ik) && !pending.count(jk)) chain = true;
    }
    if (chain) {
      rec.outcome = SPairRecord::Outcome::chain;
      if (log) log->push_back(std::move(rec));
      continue;
    }

    detail::OP s = detail::spoly(basis[pk.i], basis[pk.j], ord);
    detail::OP red = detail::reduce_full(std::move(s), basis, ord,
                                         log ? &rec.reducers : nullptr);
    if (red.empty()) {
      rec.outcome = SPairRecord::Outcome::zero;
    } else {
      rec.outcome = SPairRecord::Outcome::nonzero;
      push_elem(detail::make_monic(std::move(red)));
    }
    if (log) log->push_back(std::move(rec));
  }

  // interreduce to the reduced basis
  std::vector<detail::OP> kept;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (basis[j].lm.divides(basis[i].lm) && !(basis[i].lm == basis[j].lm && j > i))
        redundant = true;
    }
    if (!redundant) kept.push_back(basis[i].poly);
  }
  std::vector<detail::GBElem> final_basis;
  for (auto& op : kept) final_basis.push_back({op, op.t.front().mono});
  std::vector<Polynomial> result;
  for (size_t i = 0; i < final_basis.size(); ++i) {
    std::vector<detail::GBElem> others;
    for (size_t j = 0; j < final_basis.size(); ++j)
      if (j != i) others.push_back(final_basis[j]);
    detail::OP tail = detail::reduce_full(final_basis[i].poly, others, ord);
    if (!tail.empty())
      result.push_back(detail::from_op(ideal.ring, ideal.field, detail::make_monic(tail)));
  }
  std::sort(result.begin(), result.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
  });
  out.polys = std::move(result);
  out.capped = capped;
  out.verified = !capped;
  return out;
}

struct GBCertificate {
  bool ok = false;
  std::vector<SPairRecord> log;
  std::pair<int, int> failing{-1, -1};
  Polynomial witness;  // nonzero normal form of the failing S-pair
  int total_pairs = 0, skipped_coprime = 0, reduced_to_zero = 0;
};

// Buchberger criterion on a given family: yes iff every S-pair with
// non-coprime leading monomials has normal form 0 modulo the family.
inline GBCertificate is_groebner(const std::vector<Polynomial>& G, const MonomialOrder& ord) {
  require(!G.empty(), Errc::input, "is_groebner needs a nonempty family");
  GBCertificate cert;
  std::vector<detail::GBElem> basis;
  for (auto& g : G) {
    require(!g.is_zero(), Errc::input, "zero polynomial in family");
    detail::OP op = detail::make_monic(detail::to_op(g, ord));
    Monomial lm = op.t.front().mono;
    basis.push_back({std::move(op), std::move(lm)});
  }
  int n = static_cast<int>(basis.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      SPairRecord rec;
      rec.i = i;
      rec.j = j;
      rec.lcm = Monomial::lcm(basis[i].lm, basis[j].lm);
      ++cert.total_pairs;
      if (Monomial::coprime(basis[i].lm, basis[j].lm)) {
        rec.outcome = SPairRecord::Outcome::coprime;
        ++cert.skipped_coprime;
        cert.log.push_back(std::move(rec));
        continue;
      }
      detail::OP s = detail::spoly(basis[i], basis[j], ord);
      detail::OP r = detail::reduce_full(std::move(s), basis, ord, &rec.reducers);
      if (!r.empty()) {
        rec.outcome = SPairRecord::Outcome::nonzero;
        cert.log.push_back(std::move(rec));
        cert.ok = false;
        cert.failing = {i, j};
        cert.witness = detail::from_op(G.front().ring(), G.front().field(), r);
        return cert;
      }
      rec.outcome = SPairRecord::Outcome::zero;
      ++cert.reduced_to_zero;
      cert.log.push_back(std::move(rec));
    }
  }
  cert.ok = true;
  return cert;
}

inline bool in_ideal(const Polynomial& f, const GroebnerBasis& gb, const MonomialOrder& ord) {
  return normal_form(f, gb.polys, ord).is_zero();
}

// generators of I intersected with the subring avoiding the killed variables;
// the GB property restricts, so the survivors form a GB under the inner order
inline std::pair<Ideal, GroebnerBasis> eliminate(const Ideal& ideal,
                                                 const std::vector<int>& kill,
                                                 const MonomialOrder& inner,
                                                 std::optional<int> degree_cap = std::nullopt) {
  MonomialOrder elim = MonomialOrder::elimination(kill, inner);
  GroebnerBasis gb = buchberger(ideal, elim, degree_cap);
  if (gb.capped) fail(Errc::cap_exceeded, "elimination hit the degree cap");
  std::vector<bool> killed(ideal.ring->size(), false);
  for (int v : kill) killed[v] = true;
  GroebnerBasis contraction;
  contraction.verified = gb.verified;
  for (auto& p : gb.polys) {
    bool uses = false;
    for (auto& t : p.terms())
      for (auto& [v, e] : t.mono.exponents())
        if (killed[v]) { uses = true; break; }
    if (!uses) contraction.polys.push_back(p);
  }
  Ideal out = Ideal::of(ideal.ring, ideal.field, contraction.polys);
  return {std::move(out), std::move(contraction)};
}

// minimal generating set of the monomial ideal spanned by the given monomials
inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return Monomial::cmp(a, b) == std::strong_ordering::less;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> keep;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool divisible = false;
    for (size_t j = 0; j < gens.size() && !divisible; ++j)
      if (i != j && gens[j].divides(gens[i]) && !(gens[i] == gens[j] && j > i))
        divisible = true;
    if (!divisible) keep.push_back(gens[i]);
  }
  return keep;
}

inline std::vector<Monomial> initial_ideal(const GroebnerBasis& gb, const MonomialOrder& ord) {
  std::vector<Monomial> lms;
  for (auto& p : gb.polys) lms.push_back(p.leading_monomial(ord));
  return minimalize_monomials(std::move(lms));
}

inline bool monomial_ideals_equal(std::vector<Monomial> a, std::vector<Monomial> b) {
  a = minimalize_monomials(std::move(a));
  b = minimalize_monomials(std::move(b));
  return a == b;
}

// two-sided membership test for ideal equality
inline bool ideals_equal(const Ideal& a, const Ideal& b, const MonomialOrder& ord) {
  GroebnerBasis ga = buchberger(a, ord);
  GroebnerBasis gb = buchberger(b, ord);
  for (auto& f : a.gens)
    if (!in_ideal(f, gb, ord)) return false;
  for (auto& f : b.gens)
    if (!in_ideal(f, ga, ord)) return false;
  return true;
}

// I cap J via the one-parameter trick: eliminate w from w*I + (1-w)*J
inline Ideal ideal_intersection(const Ideal& I, const Ideal& J, std::optional<int> cap = std::nullopt) {
  require(I.ring.get() == J.ring.get(), Errc::input, "intersection needs a common ring");
  const Ring& r = *I.ring;
  std::vector<Variable> vars = r.vars();
  vars.push_back({"w_aux", VarRole::Generic, 0, 0});
  RingPtr ext = (r.has_blowup_roles())
                    ? std::make_shared<Ring>(std::move(vars), r.d(), r.e())
                    : make_ring(std::move(vars));
  int w = ext->index_of("w_aux");
  Field f = I.field;
  Polynomial wp = Polynomial::variable(ext, w, f);
  Polynomial one_minus_w = Polynomial::constant(ext, Scalar::one(f)) - wp;
  std::vector<Polynomial> gens;
  for (auto& g : I.gens) gens.push_back(wp * g.rename(ext));
  for (auto& g : J.gens) gens.push_back(one_minus_w * g.rename(ext));
  MonomialOrder inner = MonomialOrder::grevlex(ext);
  auto [contracted, gbase] = eliminate(Ideal::of(ext, f, std::move(gens)), {w}, inner, cap);
  std::vector<Polynomial> back;
  for (auto& g : contracted.gens) back.push_back(g.rename(I.ring));
  return Ideal::of(I.ring, f, std::move(back));
}

}  // namespace twodet
