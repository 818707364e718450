#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "twodet/groebner.hpp"
#include "twodet/hilbert.hpp"
#include "twodet/order.hpp"
#include "twodet/pencil.hpp"

namespace twodet {

// Presentation data for the blowup algebras of the most special ideal of
// type (1^d; e): the 2 x (c+1) matrix with y-columns then a shifted x-block
// ending in a zero entry, its minors, and the T-variable presentation ring.
class BlowupPresentation {
public:
  BlowupPresentation(int d, int e, Field field)
      : d_(d), e_(e), field_(field), ring_(blowup_ring(d, e, /*with_tau=*/true)) {
    require(d >= 0 && e >= 0 && d + e >= 3, Errc::input, "need d+e >= 3");
  }

  int d() const { return d_; }
  int e() const { return e_; }
  int c() const { return d_ + e_ - 1; }
  Field field() const { return field_; }
  const RingPtr& ring() const { return ring_; }

  // matrix entry in row i (1 or 2), column j (1..c+1)
  Polynomial ell(int i, int j) const {
    require(i >= 1 && i <= 2 && j >= 1 && j <= c() + 1, Errc::input, "entry out of range");
    if (j <= d_) return var(ring_->y_var(i, j));
    int h = j - d_;
    if (i == 1) return var(ring_->x_var(h));
    return h < e_ ? var(ring_->x_var(h + 1)) : Polynomial::zero(ring_, field_);
  }

  Polynomial t(int a, int b) const { return var(ring_->t_var(a, b)); }

  Polynomial minor(int a, int b) const {
    require(1 <= a && a < b && b <= c() + 1, Errc::input, "minor indices out of range");
    return ell(1, a) * ell(2, b) - ell(2, a) * ell(1, b);
  }

  LinearMatrix2 matrix() const {
    LinearMatrix2 m;
    m.ring = ring_;
    m.field = field_;
    for (int j = 1; j <= c() + 1; ++j) {
      m.rows[0].push_back(ell(1, j));
      m.rows[1].push_back(ell(2, j));
    }
    return m;
  }

  MonomialOrder order() const { return MonomialOrder::composite(ring_); }

private:
  Polynomial var(int k) const { return Polynomial::variable(ring_, k, field_); }

  int d_, e_;
  Field field_;
  RingPtr ring_;
};

enum class RelFamily { UEN, LEN, PLU, LAP };

inline const char* family_name(RelFamily f) {
  switch (f) {
    case RelFamily::UEN: return "UEN";
    case RelFamily::LEN: return "LEN";
    case RelFamily::PLU: return "PLU";
    case RelFamily::LAP: return "LAP";
  }
  return "?";
}

struct RelationId {
  RelFamily family;
  std::array<int, 4> idx{0, 0, 0, 0};  // 3-sets use the first three slots
  int arity() const { return family == RelFamily::UEN || family == RelFamily::LEN ? 3 : 4; }

  std::string str() const {
    std::string s = family_name(family);
    s += "_{";
    for (int i = 0; i < arity(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    return s + "}";
  }
};

inline void validate_id(const RelationId& id, int d, int e) {
  int c1 = d + e;
  int n = id.arity();
  for (int i = 0; i < n; ++i)
    require(id.idx[i] >= 1 && id.idx[i] <= c1, Errc::input, "relation index out of range");
  for (int i = 0; i + 1 < n; ++i)
    require(id.idx[i] < id.idx[i + 1], Errc::input, "relation indices must increase");
  if (id.family == RelFamily::LAP) {
    require(e >= 4, Errc::input, "Laplace relations need e >= 4");
    require(id.idx[0] >= d + 1, Errc::input, "Laplace indices must avoid the y-columns");
  }
}

// the four displayed relation families
inline Polynomial relation(const BlowupPresentation& p, const RelationId& id) {
  validate_id(id, p.d(), p.e());
  auto [a, b, g, dd] = id.idx;
  switch (id.family) {
    case RelFamily::UEN:
      return p.ell(1, a) * p.t(b, g) - p.ell(1, b) * p.t(a, g) + p.ell(1, g) * p.t(a, b);
    case RelFamily::LEN:
      return p.ell(2, a) * p.t(b, g) - p.ell(2, b) * p.t(a, g) + p.ell(2, g) * p.t(a, b);
    case RelFamily::PLU:
      return p.t(a, b) * p.t(g, dd) - p.t(a, g) * p.t(b, dd) + p.t(a, dd) * p.t(b, g);
    case RelFamily::LAP:
      if (dd <= p.c())
        return p.t(a, b) * p.t(g + 1, dd + 1) - p.t(a, g) * p.t(b + 1, dd + 1) +
               p.t(a, dd) * p.t(b + 1, g + 1) + p.t(b, g) * p.t(a + 1, dd + 1) -
               p.t(b, dd) * p.t(a + 1, g + 1) + p.t(g, dd) * p.t(a + 1, b + 1);
      return p.t(a, dd) * p.t(b + 1, g + 1) - p.t(b, dd) * p.t(a + 1, g + 1) +
             p.t(g, dd) * p.t(a + 1, b + 1);
  }
  fail(Errc::internal, "unreachable");
}

// closed-form leading monomials under the composite order
inline Monomial expected_lm(const BlowupPresentation& p, const RelationId& id) {
  validate_id(id, p.d(), p.e());
  const Ring& r = *p.ring();
  auto [a, b, g, dd] = id.idx;
  int d = p.d();
  switch (id.family) {
    case RelFamily::UEN:
      if (b >= d + 2) return Monomial::var(r.x_var(g - d)) * Monomial::var(r.t_var(a, b));
      if (b == d + 1) return Monomial::var(r.x_var(1)) * Monomial::var(r.t_var(a, g));
      return Monomial::var(r.y_var(1, b)) * Monomial::var(r.t_var(a, g));
    case RelFamily::LEN:
      if (a <= d) return Monomial::var(r.y_var(2, a)) * Monomial::var(r.t_var(b, g));
      return Monomial::var(r.x_var(a + 1 - d)) * Monomial::var(r.t_var(b, g));
    case RelFamily::PLU:
      return Monomial::var(r.t_var(a, g)) * Monomial::var(r.t_var(b, dd));
    case RelFamily::LAP:
      return Monomial::var(r.t_var(a + 1, b + 1)) * Monomial::var(r.t_var(g, dd));
  }
  fail(Errc::internal, "unreachable");
}

inline std::vector<RelationId> relation_ids(const BlowupPresentation& p,
                                            std::optional<RelFamily> only = std::nullopt) {
  int c1 = p.c() + 1, d = p.d();
  std::vector<RelationId> ids;
  auto want = [&](RelFamily f) { return !only || *only == f; };
  if (want(RelFamily::UEN) || want(RelFamily::LEN)) {
    for (int a = 1; a <= c1; ++a)
      for (int b = a + 1; b <= c1; ++b)
        for (int g = b + 1; g <= c1; ++g) {
          if (want(RelFamily::UEN)) ids.push_back({RelFamily::UEN, {a, b, g, 0}});
          if (want(RelFamily::LEN)) ids.push_back({RelFamily::LEN, {a, b, g, 0}});
        }
  }
  if (want(RelFamily::PLU)) {
    for (int a = 1; a <= c1; ++a)
      for (int b = a + 1; b <= c1; ++b)
        for (int g = b + 1; g <= c1; ++g)
          for (int dd = g + 1; dd <= c1; ++dd) ids.push_back({RelFamily::PLU, {a, b, g, dd}});
  }
  if (want(RelFamily::LAP) && p.e() >= 4) {
    for (int a = d + 1; a <= c1; ++a)
      for (int b = a + 1; b <= c1; ++b)
        for (int g = b + 1; g <= c1; ++g)
          for (int dd = g + 1; dd <= c1; ++dd) ids.push_back({RelFamily::LAP, {a, b, g, dd}});
  }
  return ids;
}

struct RelationSet {
  std::vector<RelationId> ids;
  std::vector<Polynomial> polys;
  std::vector<Monomial> lms;  // verified == expected
  int count(RelFamily f) const {
    int n = 0;
    for (auto& id : ids)
      if (id.family == f) ++n;
    return n;
  }
};

// all families, with the computed leading monomial checked against the
// closed form; a mismatch signals an order-implementation bug and aborts
inline RelationSet all_relations(const BlowupPresentation& p,
                                 std::optional<RelFamily> only = std::nullopt) {
  MonomialOrder ord = p.order();
  RelationSet out;
  out.ids = relation_ids(p, only);
  for (auto& id : out.ids) {
    Polynomial rel = relation(p, id);
    Monomial lm = rel.leading_monomial(ord);
    Monomial want = expected_lm(p, id);
    require(lm == want, Errc::internal,
            "leading monomial of " + id.str() + " deviates from the closed form");
    out.polys.push_back(std::move(rel));
    out.lms.push_back(std::move(lm));
  }
  return out;
}

// bidegree with deg(y)=deg(x)=(1,0), deg(T)=(0,1); tau never occurs in relations
inline std::pair<int, int> bidegree(const Ring& r, const Monomial& m) {
  int s = 0, t = 0;
  for (auto& [v, e] : m.exponents()) {
    switch (r.var(v).role) {
      case VarRole::Y1:
      case VarRole::Y2:
      case VarRole::X: s += e; break;
      case VarRole::T: t += e; break;
      default: fail(Errc::input, "bidegree undefined on " + r.var(v).name);
    }
  }
  return {s, t};
}

struct MdegHomogeneityReport {
  struct Entry {
    RelationId id;
    bool homogeneous;
    // for an inhomogeneous relation: two monomials with different images
    Monomial witness_a, witness_b;
  };
  std::vector<Entry> entries;
  bool family_homogeneous(RelFamily f) const {
    for (auto& e : entries)
      if (e.id.family == f && !e.homogeneous) return false;
    return true;
  }
  std::optional<Entry> witness_for(RelFamily f) const {
    for (auto& e : entries)
      if (e.id.family == f && !e.homogeneous) return e;
    return std::nullopt;
  }
};

inline MdegHomogeneityReport mdeg1_homogeneity(const BlowupPresentation& p) {
  MdegHomogeneityReport rep;
  for (auto& id : relation_ids(p)) {
    Polynomial rel = relation(p, id);
    MdegHomogeneityReport::Entry entry{id, true, {}, {}};
    const auto& terms = rel.terms();
    Multidegree first = mdeg1(*p.ring(), terms.front().mono);
    for (size_t k = 1; k < terms.size(); ++k) {
      if (mdeg1(*p.ring(), terms[k].mono) != first) {
        entry.homogeneous = false;
        entry.witness_a = terms.front().mono;
        entry.witness_b = terms[k].mono;
        break;
      }
    }
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

struct MembershipReport {
  bool all_zero = true;
  std::vector<std::pair<RelationId, Polynomial>> failures;  // nonzero images
};

// every relation must vanish under T -> minor (fiber) and T -> minor * tau
// (Rees); a nonzero image is returned as a witness
inline MembershipReport kernel_membership(const BlowupPresentation& p) {
  MembershipReport rep;
  RingPtr ring = p.ring();
  Polynomial tau = Polynomial::variable(ring, ring->tau_var(), p.field());
  std::map<int, Polynomial> fiber_sub, rees_sub;
  for (int a = 1; a <= p.c() + 1; ++a)
    for (int b = a + 1; b <= p.c() + 1; ++b) {
      Polynomial mn = p.minor(a, b);
      fiber_sub.emplace(ring->t_var(a, b), mn);
      rees_sub.emplace(ring->t_var(a, b), mn * tau);
    }
  for (auto& id : relation_ids(p)) {
    Polynomial rel = relation(p, id);
    Polynomial fimg = rel.substitute(fiber_sub, ring);
    Polynomial rimg = rel.substitute(rees_sub, ring);
    if (!fimg.is_zero()) {
      rep.all_zero = false;
      rep.failures.push_back({id, std::move(fimg)});
    }
    if (!rimg.is_zero()) {
      rep.all_zero = false;
      rep.failures.push_back({id, std::move(rimg)});
    }
  }
  return rep;
}

// The Eagon-Northcott second-syzygy identity over four columns: with the
// displayed sign conventions for the two families the true identity is
//   sum_i (-1)^{i-1} l_{1,s_i} LEN_{s \ s_i}  +  sum_i (-1)^{i-1} l_{2,s_i} UEN_{s \ s_i} = 0.
inline bool second_syzygy_check(const BlowupPresentation& p, std::array<int, 4> sigma) {
  std::sort(sigma.begin(), sigma.end());
  for (int i = 0; i < 4; ++i) {
    require(sigma[i] >= 1 && sigma[i] <= p.c() + 1, Errc::input, "column out of range");
    if (i) require(sigma[i] > sigma[i - 1], Errc::input, "columns must be distinct");
  }
  Polynomial acc = Polynomial::zero(p.ring(), p.field());
  for (int i = 0; i < 4; ++i) {
    std::array<int, 4> rest{0, 0, 0, 0};
    int k = 0;
    for (int j = 0; j < 4; ++j)
      if (j != i) rest[k++] = sigma[j];
    RelationId len{RelFamily::LEN, rest};
    RelationId uen{RelFamily::UEN, rest};
    Polynomial term =
        p.ell(1, sigma[i]) * relation(p, len) + p.ell(2, sigma[i]) * relation(p, uen);
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  return acc.is_zero();
}

// ---- kernels by elimination ----------------------------------------------

inline std::vector<int> xy_variables(const Ring& r) {
  std::vector<int> kill;
  for (int k = 0; k < r.size(); ++k) {
    VarRole role = r.var(k).role;
    if (role == VarRole::Y1 || role == VarRole::Y2 || role == VarRole::X) kill.push_back(k);
  }
  return kill;
}

// ker pi_F as the contraction of (T_ab - Delta_ab) to the T-subring; the
// returned generators are a reduced GB under the composite order restricted
inline std::pair<Ideal, GroebnerBasis> fiber_kernel_oracle(const BlowupPresentation& p,
                                                           bool allow_large = false,
                                                           std::optional<int> cap = std::nullopt) {
  require(allow_large || p.c() <= 5, Errc::cap_exceeded,
          "fiber oracle beyond c=5 needs allow_large");
  RingPtr ring = p.ring();
  std::vector<Polynomial> gens;
  for (int a = 1; a <= p.c() + 1; ++a)
    for (int b = a + 1; b <= p.c() + 1; ++b) gens.push_back(p.t(a, b) - p.minor(a, b));
  std::vector<int> kill = xy_variables(*ring);
  kill.push_back(ring->tau_var());
  return eliminate(Ideal::of(ring, p.field(), std::move(gens)), kill, p.order(), cap);
}

// ker pi_R: eliminate tau from (T_ab - Delta_ab * tau)
inline std::pair<Ideal, GroebnerBasis> rees_kernel_oracle(const BlowupPresentation& p,
                                                          bool allow_large = false,
                                                          std::optional<int> cap = std::nullopt) {
  require(allow_large || p.c() <= 4, Errc::cap_exceeded,
          "Rees oracle beyond c=4 needs allow_large");
  RingPtr ring = p.ring();
  Polynomial tau = Polynomial::variable(ring, ring->tau_var(), p.field());
  std::vector<Polynomial> gens;
  for (int a = 1; a <= p.c() + 1; ++a)
    for (int b = a + 1; b <= p.c() + 1; ++b) gens.push_back(p.t(a, b) - p.minor(a, b) * tau);
  return eliminate(Ideal::of(ring, p.field(), std::move(gens)), {ring->tau_var()}, p.order(),
                   cap);
}

struct TheoremCertificate {
  int d = 0, e = 0;
  bool fiber = true;          // false = Rees
  bool family_is_gb = false;  // Buchberger criterion on the stated family
  GBCertificate gb;
  int family_size = 0;
  bool oracle_ran = false;
  bool lm_ideal_match = false;   // LM ideal of family == initial ideal of oracle kernel
  bool ideal_match = false;      // two-sided membership
  bool ok() const { return family_is_gb && (!oracle_ran || (lm_ideal_match && ideal_match)); }
};

// The squarefree-quadratic GB claim for the special fiber ring: PLU and LAP
// form a GB of ker pi_F under the composite order. Oracle comparison is
// optional (desk scale).
inline TheoremCertificate verify_fiber_theorem(const BlowupPresentation& p,
                                               bool with_oracle = false) {
  TheoremCertificate cert;
  cert.d = p.d();
  cert.e = p.e();
  cert.fiber = true;
  MonomialOrder ord = p.order();
  RelationSet plu = all_relations(p, RelFamily::PLU);
  RelationSet lap = all_relations(p, RelFamily::LAP);
  std::vector<Polynomial> family = plu.polys;
  family.insert(family.end(), lap.polys.begin(), lap.polys.end());
  cert.family_size = static_cast<int>(family.size());
  if (family.empty()) {
    cert.family_is_gb = true;  // nothing to check; the kernel must then be zero
  } else {
    cert.gb = is_groebner(family, ord);
    cert.family_is_gb = cert.gb.ok;
  }
  if (with_oracle) {
    cert.oracle_ran = true;
    auto [kernel, gb] = fiber_kernel_oracle(p);
    if (family.empty()) {
      cert.lm_ideal_match = cert.ideal_match = kernel.gens.empty();
    } else {
      std::vector<Monomial> family_lms = plu.lms;
      family_lms.insert(family_lms.end(), lap.lms.begin(), lap.lms.end());
      cert.lm_ideal_match = monomial_ideals_equal(family_lms, initial_ideal(gb, ord));
      GroebnerBasis fam_gb = buchberger(Ideal::of(p.ring(), p.field(), family), ord);
      bool two_sided = true;
      for (auto& g : kernel.gens)
        if (!in_ideal(g, fam_gb, ord)) two_sided = false;
      for (auto& g : family)
        if (!in_ideal(g, gb, ord)) two_sided = false;
      cert.ideal_match = two_sided;
    }
  }
  return cert;
}

// The Rees analogue: all four families form a GB of ker pi_R.
inline TheoremCertificate verify_rees_theorem(const BlowupPresentation& p,
                                              bool with_oracle = false) {
  TheoremCertificate cert;
  cert.d = p.d();
  cert.e = p.e();
  cert.fiber = false;
  MonomialOrder ord = p.order();
  RelationSet rels = all_relations(p);
  cert.family_size = static_cast<int>(rels.polys.size());
  if (rels.polys.empty()) {
    cert.family_is_gb = true;
  } else {
    cert.gb = is_groebner(rels.polys, ord);
    cert.family_is_gb = cert.gb.ok;
  }
  if (with_oracle) {
    cert.oracle_ran = true;
    auto [kernel, gb] = rees_kernel_oracle(p);
    if (rels.polys.empty()) {
      cert.lm_ideal_match = cert.ideal_match = kernel.gens.empty();
    } else {
      cert.lm_ideal_match = monomial_ideals_equal(rels.lms, initial_ideal(gb, ord));
      GroebnerBasis fam_gb = buchberger(Ideal::of(p.ring(), p.field(), rels.polys), ord);
      bool two_sided = true;
      for (auto& g : kernel.gens)
        if (!in_ideal(g, fam_gb, ord)) two_sided = false;
      for (auto& g : rels.polys)
        if (!in_ideal(g, gb, ord)) two_sided = false;
      cert.ideal_match = two_sided;
    }
  }
  return cert;
}

}  // namespace twodet
