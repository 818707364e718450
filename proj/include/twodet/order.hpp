#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "twodet/monomial.hpp"
#include "twodet/ring.hpp"

namespace twodet {

// Multidegree in N^{c+1} over basis e_1..e_{c+1}.
using Multidegree = std::vector<int>;

namespace detail {

// images used by the column multigradings; -1 marks "no image"
struct MdegTable {
  // for every variable: up to two basis indices (0-based), or none
  std::vector<std::pair<int, int>> img;  // (-1,-1) = zero image
  int dim = 0;
};

inline MdegTable mdeg1_table(const Ring& r) {
  MdegTable t;
  t.dim = r.c() + 1;
  t.img.assign(r.size(), {-1, -1});
  for (int k = 0; k < r.size(); ++k) {
    const Variable& v = r.var(k);
    switch (v.role) {
      case VarRole::T: t.img[k] = {v.i - 1, v.j - 1}; break;
      case VarRole::Y1: t.img[k] = {v.i - 1, -1}; break;
      case VarRole::Y2: t.img[k] = {-1, -1}; break;
      case VarRole::X: t.img[k] = {v.i + r.d() - 1, -1}; break;
      default: break;  // tau/param/generic contribute nothing inside the order
    }
  }
  return t;
}

inline MdegTable mdeg2_table(const Ring& r) {
  MdegTable t;
  t.dim = r.c() + 1;
  t.img.assign(r.size(), {-1, -1});
  for (int k = 0; k < r.size(); ++k) {
    const Variable& v = r.var(k);
    if (v.role == VarRole::T) t.img[k] = {v.i - 1, -1};
  }
  return t;
}

inline Multidegree apply_mdeg(const MdegTable& t, const Monomial& m) {
  Multidegree md(t.dim, 0);
  for (auto& [v, e] : m.exponents()) {
    auto [a, b] = t.img[v];
    if (a >= 0) md[a] += e;
    if (b >= 0) md[b] += e;
  }
  return md;
}

// graded reverse-lex on N^dim with the given ranking (basis indices, highest
// first): higher total degree wins; on ties the lowest-ranked coordinate
// where the vectors differ decides, deficit winning
inline std::strong_ordering grevlex_vec(const Multidegree& u, const Multidegree& v,
                                        const std::vector<int>& ranking) {
  int du = 0, dv = 0;
  for (int i : ranking) du += u[i], dv += v[i];
  if (du != dv) return du < dv ? std::strong_ordering::less : std::strong_ordering::greater;
  for (auto it = ranking.rbegin(); it != ranking.rend(); ++it) {
    if (u[*it] != v[*it])
      return u[*it] > v[*it] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace detail

// Strict public form of the two column multigradings; rejects variables
// without a defined image.
inline Multidegree mdeg1(const Ring& r, const Monomial& m) {
  require(r.has_blowup_roles(), Errc::input, "mdeg1 needs a ring with blowup roles");
  for (auto& [v, e] : m.exponents()) {
    VarRole role = r.var(v).role;
    require(role == VarRole::T || role == VarRole::Y1 || role == VarRole::Y2 ||
                role == VarRole::X,
            Errc::input, "mdeg1 undefined on variable " + r.var(v).name);
  }
  return detail::apply_mdeg(detail::mdeg1_table(r), m);
}

inline Multidegree mdeg2(const Ring& r, const Monomial& m) {
  require(r.has_blowup_roles(), Errc::input, "mdeg2 needs a ring with blowup roles");
  for (auto& [v, e] : m.exponents()) {
    VarRole role = r.var(v).role;
    require(role == VarRole::T || role == VarRole::Y1 || role == VarRole::Y2 ||
                role == VarRole::X,
            Errc::input, "mdeg2 undefined on variable " + r.var(v).name);
  }
  return detail::apply_mdeg(detail::mdeg2_table(r), m);
}

// A monomial order is a product of layers; each layer refines the ties of the
// previous ones. Lex layers on a full ranking are total, so every order built
// below is a strict total multiplicative order with 1 minimal.
class MonomialOrder {
  struct LexLayer { std::vector<int> ranking; };                 // var ids, highest first
  struct GrevVarsLayer { std::vector<int> ranking; };            // grevlex on listed vars
  struct MdegLayer { detail::MdegTable table; std::vector<int> ranking; };

  struct Layer {
    enum Kind { Lex, GrevVars, Mdeg } kind;
    std::vector<int> ranking;
    detail::MdegTable table;
  };

public:
  enum class Kind { Lex, GrevLex, Composite, Elimination };

  static MonomialOrder lex(RingPtr ring, std::vector<int> ranking = {}) {
    MonomialOrder o(std::move(ring), Kind::Lex);
    o.layers_.push_back({Layer::Lex, o.full_ranking(ranking), {}});
    return o;
  }

  static MonomialOrder grevlex(RingPtr ring, std::vector<int> ranking = {}) {
    MonomialOrder o(std::move(ring), Kind::GrevLex);
    o.layers_.push_back({Layer::GrevVars, o.full_ranking(ranking), {}});
    // grevlex with a full ranking is total on its own; no extra layer needed
    return o;
  }

  // the composite order: (1) lex on the y2 block, (2) grevlex of mdeg1 with
  // e_{c+1} > ... > e_1, (3) grevlex of mdeg2 with e_1 > ... > e_{c+1},
  // (4) lex with y2 > y1 > x1 > T (by (a,b)) > x2 > ... > xe
  static MonomialOrder composite(RingPtr ring) {
    require(ring->has_blowup_roles(), Errc::input,
            "composite order needs a ring with blowup roles");
    MonomialOrder o(ring, Kind::Composite);
    const Ring& r = *ring;
    int d = r.d(), e = r.e(), c1 = r.c() + 1;

    std::vector<int> y2rank;
    for (int j = 1; j <= d; ++j) y2rank.push_back(r.y_var(2, j));
    o.layers_.push_back({Layer::Lex, std::move(y2rank), {}});

    std::vector<int> high_to_low, low_to_high;
    for (int i = c1 - 1; i >= 0; --i) high_to_low.push_back(i);
    for (int i = 0; i < c1; ++i) low_to_high.push_back(i);
    o.layers_.push_back({Layer::Mdeg, high_to_low, detail::mdeg1_table(r)});
    o.layers_.push_back({Layer::Mdeg, low_to_high, detail::mdeg2_table(r)});

    std::vector<int> final_rank;
    for (int j = 1; j <= d; ++j) final_rank.push_back(r.y_var(2, j));
    for (int j = 1; j <= d; ++j) final_rank.push_back(r.y_var(1, j));
    if (e >= 1) final_rank.push_back(r.x_var(1));
    for (int a = 1; a <= c1; ++a)
      for (int b = a + 1; b <= c1; ++b) final_rank.push_back(r.t_var(a, b));
    for (int h = 2; h <= e; ++h) final_rank.push_back(r.x_var(h));
    // tau / param never occur in compared monomials with different exponents
    // at this depth; list them last so the order stays total on the full ring
    if (r.has_tau()) final_rank.push_back(r.tau_var());
    for (int k = 0; k < r.size(); ++k)
      if (r.var(k).role == VarRole::Param || r.var(k).role == VarRole::Generic)
        final_rank.push_back(k);
    o.layers_.push_back({Layer::Lex, std::move(final_rank), {}});
    return o;
  }

  // block order: the killed variables are compared first (grevlex among
  // them), so any monomial involving a killed variable beats any that avoids
  // them; ties fall through to the inner order
  static MonomialOrder elimination(std::vector<int> killed, const MonomialOrder& inner) {
    MonomialOrder o(inner.ring_, Kind::Elimination);
    o.killed_ = killed;
    o.layers_.push_back({Layer::GrevVars, std::move(killed), {}});
    for (auto& l : inner.layers_) o.layers_.push_back(l);
    o.inner_kind_ = inner.kind_;
    return o;
  }

  std::strong_ordering compare(const Monomial& u, const Monomial& v) const {
    for (const auto& layer : layers_) {
      std::strong_ordering c = std::strong_ordering::equal;
      switch (layer.kind) {
        case Layer::Lex:
          c = lex_cmp(u, v, layer.ranking);
          break;
        case Layer::GrevVars:
          c = grev_vars_cmp(u, v, layer.ranking);
          break;
        case Layer::Mdeg: {
          Multidegree mu = detail::apply_mdeg(layer.table, u);
          Multidegree mv = detail::apply_mdeg(layer.table, v);
          c = detail::grevlex_vec(mu, mv, layer.ranking);
          break;
        }
      }
      if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& u, const Monomial& v) const {
    return compare(u, v) == std::strong_ordering::less;
  }
  bool greater(const Monomial& u, const Monomial& v) const {
    return compare(u, v) == std::strong_ordering::greater;
  }

  const RingPtr& ring() const { return ring_; }
  Kind kind() const { return kind_; }
  const std::vector<int>& killed() const { return killed_; }

  std::string descriptor() const {
    switch (kind_) {
      case Kind::Lex: return "lex";
      case Kind::GrevLex: return "grevlex";
      case Kind::Composite:
        return "composite(d=" + std::to_string(ring_->d()) + ",e=" + std::to_string(ring_->e()) + ")";
      case Kind::Elimination: {
        std::string s = "eliminate{";
        for (size_t i = 0; i < killed_.size(); ++i)
          s += (i ? "," : "") + ring_->var(killed_[i]).name;
        return s + "}";
      }
    }
    return "?";
  }

private:
  MonomialOrder(RingPtr ring, Kind k) : ring_(std::move(ring)), kind_(k) {}

  std::vector<int> full_ranking(std::vector<int> ranking) const {
    if (ranking.empty())
      for (int k = 0; k < ring_->size(); ++k) ranking.push_back(k);
    return ranking;
  }

  static std::strong_ordering lex_cmp(const Monomial& u, const Monomial& v,
                                      const std::vector<int>& ranking) {
    for (int var : ranking) {
      int a = u.exponent(var), b = v.exponent(var);
      if (a != b) return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  static std::strong_ordering grev_vars_cmp(const Monomial& u, const Monomial& v,
                                            const std::vector<int>& ranking) {
    int du = 0, dv = 0;
    for (int var : ranking) du += u.exponent(var), dv += v.exponent(var);
    if (du != dv) return du < dv ? std::strong_ordering::less : std::strong_ordering::greater;
    for (auto it = ranking.rbegin(); it != ranking.rend(); ++it) {
      int a = u.exponent(*it), b = v.exponent(*it);
      if (a != b) return a > b ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  RingPtr ring_;
  Kind kind_;
  Kind inner_kind_ = Kind::Lex;
  std::vector<int> killed_;
  std::vector<Layer> layers_;
};

}  // namespace twodet
