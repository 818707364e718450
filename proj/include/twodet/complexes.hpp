#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "twodet/blowup.hpp"
#include "twodet/hilbert.hpp"
#include "twodet/homology.hpp"

namespace twodet {

// Flag simplicial complex: faces are the subsets containing no forbidden
// pair. Vertices carry their presentation-ring names; interval vertices
// additionally carry their column pair.
struct SimplicialComplex {
  enum class Kind { generic, initial_fiber, initial_rees };
  Kind kind = Kind::generic;
  int d = 0, e = 0;

  std::vector<std::string> vertex_names;
  std::vector<std::pair<int, int>> intervals;    // (a,b) for T-vertices, (0,0) otherwise
  std::vector<std::pair<int, int>> forbidden;    // non-edges, i < j
  std::vector<std::vector<int>> facets;          // sorted; list sorted lexicographically

  int nverts() const { return static_cast<int>(vertex_names.size()); }

  int vertex(const std::string& name) const {
    for (int i = 0; i < nverts(); ++i)
      if (vertex_names[i] == name) return i;
    fail(Errc::input, "unknown vertex: " + name);
  }

  bool is_face(const std::vector<int>& verts) const {
    std::set<std::pair<int, int>> bad(forbidden.begin(), forbidden.end());
    for (size_t i = 0; i < verts.size(); ++i)
      for (size_t j = i + 1; j < verts.size(); ++j) {
        int a = std::min(verts[i], verts[j]), b = std::max(verts[i], verts[j]);
        if (bad.count({a, b})) return false;
      }
    return true;
  }

  bool pure() const {
    for (auto& f : facets)
      if (f.size() != facets.front().size()) return false;
    return true;
  }

  FaceSet face_set() const { return FaceSet::from_facets(nverts(), facets); }
};

namespace detail {

// deterministic maximal-clique enumeration (Bron-Kerbosch with pivoting) on
// the compatibility graph
class CliqueEnum {
public:
  CliqueEnum(int n, const std::vector<std::pair<int, int>>& nonedges) : n_(n) {
    adj_.assign(n, std::vector<bool>(n, true));
    for (int i = 0; i < n; ++i) adj_[i][i] = false;
    for (auto& [a, b] : nonedges) {
      adj_[a][b] = false;
      adj_[b][a] = false;
    }
  }

  std::vector<std::vector<int>> run() {
    std::vector<int> R, P(n_), X;
    for (int i = 0; i < n_; ++i) P[i] = i;
    expand(R, P, X);
    std::sort(out_.begin(), out_.end());
    return out_;
  }

private:
  void expand(std::vector<int>& R, std::vector<int> P, std::vector<int> X) {
    if (P.empty() && X.empty()) {
      std::vector<int> f = R;
      std::sort(f.begin(), f.end());
      out_.push_back(std::move(f));
      return;
    }
    // pivot: vertex of P u X with most neighbors in P (first on ties)
    int pivot = -1, best = -1;
    for (int u : P) {
      int deg = 0;
      for (int v : P)
        if (adj_[u][v]) ++deg;
      if (deg > best) { best = deg; pivot = u; }
    }
    for (int u : X) {
      int deg = 0;
      for (int v : P)
        if (adj_[u][v]) ++deg;
      if (deg > best) { best = deg; pivot = u; }
    }
    std::vector<int> candidates;
    for (int v : P)
      if (pivot < 0 || !adj_[pivot][v]) candidates.push_back(v);
    for (int v : candidates) {
      std::vector<int> P2, X2;
      for (int w : P)
        if (adj_[v][w]) P2.push_back(w);
      for (int w : X)
        if (adj_[v][w]) X2.push_back(w);
      R.push_back(v);
      expand(R, P2, X2);
      R.pop_back();
      P.erase(std::find(P.begin(), P.end(), v));
      X.push_back(v);
    }
  }

  int n_;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::vector<int>> out_;
};

}  // namespace detail

// The initial complex of the special fiber ring: interval vertices (a,b),
// faces = non-crossing families with no two disjoint intervals inside the
// x-block. Vertices are ordered by interval length, then lexicographically.
inline SimplicialComplex build_delta_F(int d, int e) {
  require(d >= 0 && e >= 0 && d + e >= 3, Errc::input, "need d+e >= 3");
  SimplicialComplex K;
  K.kind = SimplicialComplex::Kind::initial_fiber;
  K.d = d;
  K.e = e;
  int c1 = d + e;
  for (int len = 1; len <= c1 - 1; ++len)
    for (int a = 1; a + len <= c1; ++a) {
      K.vertex_names.push_back(t_name(a, a + len));
      K.intervals.push_back({a, a + len});
    }
  auto crossing = [](std::pair<int, int> u, std::pair<int, int> v) {
    if (u.first > v.first) std::swap(u, v);
    return u.first < v.first && v.first < u.second && u.second < v.second;
  };
  auto disjoint_in_x = [&](std::pair<int, int> u, std::pair<int, int> v) {
    if (u.first > v.first || (u.first == v.first && u.second > v.second)) std::swap(u, v);
    return u.first >= d + 2 && u.second <= v.first && v.second <= c1;
  };
  for (int i = 0; i < K.nverts(); ++i)
    for (int j = i + 1; j < K.nverts(); ++j)
      if (crossing(K.intervals[i], K.intervals[j]) ||
          disjoint_in_x(K.intervals[i], K.intervals[j]))
        K.forbidden.push_back({i, j});
  K.facets = detail::CliqueEnum(K.nverts(), K.forbidden).run();
  return K;
}

// The initial complex of the Rees algebra: all presentation variables as
// vertices, forbidden pairs = supports of the closed-form leading monomials
// of the four relation families.
inline SimplicialComplex build_delta_R(int d, int e) {
  BlowupPresentation p(d, e, kDefaultOracleField);
  SimplicialComplex K;
  K.kind = SimplicialComplex::Kind::initial_rees;
  K.d = d;
  K.e = e;
  const Ring& r = *p.ring();
  std::vector<int> var_of;  // ring var id per vertex
  for (int j = 1; j <= d; ++j) {
    K.vertex_names.push_back("y1_" + std::to_string(j));
    K.intervals.push_back({0, 0});
    var_of.push_back(r.y_var(1, j));
  }
  for (int j = 1; j <= d; ++j) {
    K.vertex_names.push_back("y2_" + std::to_string(j));
    K.intervals.push_back({0, 0});
    var_of.push_back(r.y_var(2, j));
  }
  for (int h = 1; h <= e; ++h) {
    K.vertex_names.push_back("x" + std::to_string(h));
    K.intervals.push_back({0, 0});
    var_of.push_back(r.x_var(h));
  }
  int c1 = d + e;
  for (int len = 1; len <= c1 - 1; ++len)
    for (int a = 1; a + len <= c1; ++a) {
      K.vertex_names.push_back(t_name(a, a + len));
      K.intervals.push_back({a, a + len});
      var_of.push_back(r.t_var(a, a + len));
    }
  std::vector<int> vertex_of(r.size(), -1);
  for (int i = 0; i < K.nverts(); ++i) vertex_of[var_of[i]] = i;

  std::set<std::pair<int, int>> bad;
  for (auto& id : relation_ids(p)) {
    Monomial lm = expected_lm(p, id);
    require(lm.is_squarefree() && lm.exponents().size() == 2, Errc::internal,
            "leading monomial is not a squarefree quadric");
    int u = vertex_of[lm.exponents()[0].first];
    int v = vertex_of[lm.exponents()[1].first];
    bad.insert({std::min(u, v), std::max(u, v)});
  }
  K.forbidden.assign(bad.begin(), bad.end());
  K.facets = detail::CliqueEnum(K.nverts(), K.forbidden).run();
  return K;
}

// Independent facet engine for the fiber complex: the binary-tree families
// of the facet descriptions. Interval trees are rooted at (1,c+1); two-child
// nodes split at an interior point; with the x-block present, one-child
// steps shrink an endpoint and the leaves are the unit intervals of the
// y-block plus exactly one unit interval in the x-block.
inline std::vector<std::vector<int>> delta_F_facets_by_trees(const SimplicialComplex& K) {
  require(K.kind == SimplicialComplex::Kind::initial_fiber, Errc::input,
          "tree engine applies to the fiber complex");
  int d = K.d, e = K.e, c1 = K.d + K.e;
  std::map<std::pair<int, int>, int> vid;
  for (int i = 0; i < K.nverts(); ++i) vid[K.intervals[i]] = i;

  std::set<std::vector<int>> out;
  using IntervalSet = std::vector<std::pair<int, int>>;

  if (e <= 3) {
    // full binary trees: all unit intervals are leaves
    std::function<std::vector<IntervalSet>(int, int)> gen = [&](int a, int b) {
      std::vector<IntervalSet> res;
      if (b == a + 1) {
        res.push_back({{a, b}});
        return res;
      }
      for (int g = a + 1; g < b; ++g)
        for (auto& L : gen(a, g))
          for (auto& R : gen(g, b)) {
            IntervalSet s{{a, b}};
            s.insert(s.end(), L.begin(), L.end());
            s.insert(s.end(), R.begin(), R.end());
            res.push_back(std::move(s));
          }
      return res;
    };
    for (auto& s : gen(1, c1)) {
      std::vector<int> f;
      for (auto& iv : s) f.push_back(vid.at(iv));
      std::sort(f.begin(), f.end());
      out.insert(std::move(f));
    }
  } else {
    // leaves: (1,2)..(d+1,d+2) and one (l,l+1) with l >= d+2
    for (int l = d + 2; l <= c1 - 1; ++l) {
      std::vector<int> leaves;
      for (int i = 1; i <= d + 1; ++i) leaves.push_back(i);
      leaves.push_back(l);
      std::function<std::vector<IntervalSet>(int, int, std::vector<int>)> gen =
          [&](int a, int b, std::vector<int> need) {
            std::vector<IntervalSet> res;
            if (b == a + 1) {
              if (need.size() == 1 && need[0] == a) res.push_back({{a, b}});
              return res;
            }
            // two children
            for (int g = a + 1; g < b; ++g) {
              std::vector<int> lo, hi;
              for (int t : need) (t + 1 <= g ? lo : hi).push_back(t);
              if (lo.empty() || hi.empty()) continue;
              for (auto& L : gen(a, g, lo))
                for (auto& R : gen(g, b, hi)) {
                  IntervalSet s{{a, b}};
                  s.insert(s.end(), L.begin(), L.end());
                  s.insert(s.end(), R.begin(), R.end());
                  res.push_back(std::move(s));
                }
            }
            // one child, shrinking an endpoint
            if (std::find(need.begin(), need.end(), a) == need.end())
              for (auto& L : gen(a + 1, b, need)) {
                IntervalSet s{{a, b}};
                s.insert(s.end(), L.begin(), L.end());
                res.push_back(std::move(s));
              }
            if (std::find(need.begin(), need.end(), b - 1) == need.end())
              for (auto& L : gen(a, b - 1, need)) {
                IntervalSet s{{a, b}};
                s.insert(s.end(), L.begin(), L.end());
                res.push_back(std::move(s));
              }
            return res;
          };
      for (auto& s : gen(1, c1, leaves)) {
        std::vector<int> f;
        for (auto& iv : s) f.push_back(vid.at(iv));
        std::sort(f.begin(), f.end());
        out.insert(std::move(f));
      }
    }
  }
  return {out.begin(), out.end()};
}

enum class WhichComplex { F, R };

// printed closed forms for the facet counts
inline long count_formula(WhichComplex which, int d, int e) {
  int c = d + e - 1;
  if (which == WhichComplex::F) {
    require(d >= 0 && e >= 0 && d + e >= 3, Errc::input, "need d+e >= 3");
    if (e <= 3) return binomial(2 * c - 2, c - 1) - binomial(2 * c - 2, c);
    long sum = 0;
    for (int h = 1; h <= c - d - 1; ++h) sum += binomial(c + d, h + d);
    return sum - static_cast<long>(c - d - 1) * binomial(c + d, d);
  }
  require(d == 1 && e >= 4, Errc::input, "Rees facet formula needs d=1, e>=4");
  return (1L << (e + 2)) - static_cast<long>(e + 1) * (e + 1) - 3;
}

// facets by both engines, which must agree (fiber complexes only)
inline std::vector<std::vector<int>> facets_cross_checked(const SimplicialComplex& K) {
  if (K.kind == SimplicialComplex::Kind::initial_fiber) {
    auto trees = delta_F_facets_by_trees(K);
    require(trees == K.facets, Errc::certificate,
            "facet engines disagree on the fiber complex");
  }
  return K.facets;
}

// f = (f_{-1}, f_0, ..., f_{dim}); needs face enumeration
inline std::vector<long> f_vector(const SimplicialComplex& K) {
  FaceSet fs = K.face_set();
  int top = fs.max_face_size();
  std::vector<long> f(top + 1, 0);
  for (uint64_t face : fs.faces) ++f[__builtin_popcountll(face)];
  return f;
}

// Hilbert data of the Stanley-Reisner ring from the f-vector:
// numerator = sum_i f_{i-1} t^i (1-t)^{n-i} over (1-t)^n
inline HilbertData sr_hilbert(const SimplicialComplex& K) {
  std::vector<long> f = f_vector(K);
  int n = K.nverts();
  std::vector<mpz_class> num;
  for (size_t i = 0; i < f.size(); ++i) {
    // f[i] * t^i * (1-t)^{n-i}
    std::vector<mpz_class> term{mpz_class(f[i])};
    for (int k = 0; k < n - static_cast<int>(i); ++k) term = detail::zp_mul_one_minus_tk(term, 1);
    term = detail::zp_shift(term, static_cast<int>(i));
    num = detail::zp_add(num, term);
  }
  return hilbert_from_numerator(std::move(num), n);
}

// link of a face, computed inside the flag structure: the induced complex on
// the common compatible vertices
inline SimplicialComplex link(const SimplicialComplex& K, const std::vector<int>& face) {
  require(K.is_face(face), Errc::input, "link of a non-face");
  std::set<int> in_face(face.begin(), face.end());
  std::set<std::pair<int, int>> bad(K.forbidden.begin(), K.forbidden.end());
  auto compatible = [&](int u, int v) {
    return !bad.count({std::min(u, v), std::max(u, v)});
  };
  std::vector<int> keep;
  for (int v = 0; v < K.nverts(); ++v) {
    if (in_face.count(v)) continue;
    bool ok = true;
    for (int u : face)
      if (!compatible(u, v)) { ok = false; break; }
    if (ok) keep.push_back(v);
  }
  SimplicialComplex L;
  L.kind = SimplicialComplex::Kind::generic;
  std::vector<int> new_id(K.nverts(), -1);
  for (size_t i = 0; i < keep.size(); ++i) {
    new_id[keep[i]] = static_cast<int>(i);
    L.vertex_names.push_back(K.vertex_names[keep[i]]);
    L.intervals.push_back(K.intervals[keep[i]]);
  }
  for (auto& [a, b] : K.forbidden)
    if (new_id[a] >= 0 && new_id[b] >= 0) L.forbidden.push_back({new_id[a], new_id[b]});
  L.facets = detail::CliqueEnum(L.nverts(), L.forbidden).run();
  return L;
}

// The link identification between the d=0 and d=1 initial complexes: the
// shifted-index copy of the d=0 complex, with x1 and T[2,e+1] exchanged for
// y1 and T[1,2], is the link of {x1, T[2,e+1]} in the d=1 Rees complex. In
// the T-only fiber complexes the role of x1 is played by the root interval
// T[1,e+1] (unconstrained there, so it must join the face), giving
// link at {T[1,e+1], T[2,e+1]}.
inline bool verify_link_iso(int e) {
  require(e >= 3, Errc::input, "need e >= 3");
  auto check = [&](bool rees) {
    SimplicialComplex K0 = rees ? build_delta_R(0, e) : build_delta_F(0, e);
    SimplicialComplex K1 = rees ? build_delta_R(1, e) : build_delta_F(1, e);
    std::vector<int> face;
    face.push_back(rees ? K1.vertex("x1") : K1.vertex(t_name(1, e + 1)));
    face.push_back(K1.vertex(t_name(2, e + 1)));
    SimplicialComplex L = link(K1, face);
    // map a K0 vertex to the matching link vertex
    auto image = [&](int v0) -> int {
      const std::string& name = K0.vertex_names[v0];
      auto iv = K0.intervals[v0];
      std::string target;
      if (iv.first > 0) {
        int a = iv.first + 1, b = iv.second + 1;  // shift column indices
        target = (a == 2 && b == e + 1) ? t_name(1, 2) : t_name(a, b);
      } else {
        target = name == "x1" ? "y1_1" : name;
      }
      return L.vertex(target);
    };
    std::set<std::vector<int>> mapped;
    for (auto& f : K0.facets) {
      std::vector<int> g;
      for (int v : f) g.push_back(image(v));
      std::sort(g.begin(), g.end());
      mapped.insert(std::move(g));
    }
    std::set<std::vector<int>> lf(L.facets.begin(), L.facets.end());
    return mapped == lf;
  };
  return check(true) && check(false);
}

}  // namespace twodet
