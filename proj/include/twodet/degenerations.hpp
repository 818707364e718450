#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twodet/hilbert.hpp"
#include "twodet/kronecker.hpp"
#include "twodet/pencil.hpp"
#include "twodet/primary.hpp"

namespace twodet {

using Partition = std::vector<int>;  // weakly decreasing positive parts

inline Partition sorted_partition(Partition p) {
  for (int v : p) require(v > 0, Errc::input, "partition parts must be positive");
  std::sort(p.rbegin(), p.rend());
  return p;
}

inline int partition_sum(const Partition& p) {
  int s = 0;
  for (int v : p) s += v;
  return s;
}

inline std::string partition_str(const Partition& p) {
  if (p.empty()) return "∅";
  std::string s;
  for (size_t i = 0; i < p.size();) {
    size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (!s.empty()) s += ",";
    s += std::to_string(p[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

// a KW stratum of H_{c,d}: d scroll parts and Jordan parts summing to c+1
struct Stratum {
  int c = 0, d = 0;
  Partition lambda, mu;

  static Stratum of(int c, int d, Partition lambda, Partition mu) {
    Stratum s{c, d, sorted_partition(std::move(lambda)), sorted_partition(std::move(mu))};
    require(static_cast<int>(s.lambda.size()) == d, Errc::input,
            "stratum needs exactly d scroll parts");
    require(partition_sum(s.lambda) + partition_sum(s.mu) == c + 1, Errc::input,
            "stratum parts must sum to c+1");
    return s;
  }

  std::string label() const { return "(" + partition_str(lambda) + ";" + partition_str(mu) + ")"; }
  bool operator==(const Stratum&) const = default;
  bool operator<(const Stratum& o) const {
    return std::tie(lambda, mu) < std::tie(o.lambda, o.mu);
  }
};

namespace detail {

inline void partitions_into(int total, int parts, int maxpart, Partition& acc,
                            std::vector<Partition>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(acc);
    return;
  }
  for (int first = std::min(total - parts + 1, maxpart); first >= 1; --first) {
    acc.push_back(first);
    partitions_into(total - first, parts - 1, first, acc, out);
    acc.pop_back();
  }
}

inline std::vector<Partition> partitions_exact(int total, int parts) {
  std::vector<Partition> out;
  Partition acc;
  if (parts >= 0 && total >= parts) partitions_into(total, parts, total, acc, out);
  return out;
}

inline std::vector<Partition> partitions_all(int total) {
  std::vector<Partition> out;
  if (total == 0) {
    out.push_back({});
    return out;
  }
  for (int parts = 1; parts <= total; ++parts) {
    auto batch = partitions_exact(total, parts);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

}  // namespace detail

// all strata of H_{c,d}, in a fixed deterministic order: generic (large
// scroll weight) first
inline std::vector<Stratum> strata(int c, int d) {
  require(c >= 2 && d >= 0 && d <= c + 1, Errc::input, "H_{c,d} needs 0 <= d <= c+1, c >= 2");
  std::vector<Stratum> out;
  for (int sl = c + 1; sl >= d; --sl) {
    if (d == 0 && sl > 0) continue;
    for (auto& lam : detail::partitions_exact(sl, d))
      for (auto& mu : detail::partitions_all(c + 1 - sl)) out.push_back(Stratum::of(c, d, lam, mu));
  }
  std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
    int sa = partition_sum(a.lambda), sb = partition_sum(b.lambda);
    if (sa != sb) return sa > sb;
    return std::tie(a.lambda, a.mu) > std::tie(b.lambda, b.mu);
  });
  return out;
}

// peel one column off a scroll part: (lambda; mu) -> (lambda'; mu, 1)
inline Stratum move_peel(const Stratum& s, int j) {
  require(j >= 1 && j <= static_cast<int>(s.lambda.size()), Errc::input, "bad scroll index");
  require(s.lambda[j - 1] > 1, Errc::input, "peel needs a scroll part > 1");
  Partition lam = s.lambda;
  lam[j - 1] -= 1;
  Partition mu = s.mu;
  mu.push_back(1);
  return Stratum::of(s.c, s.d, std::move(lam), std::move(mu));
}

// merge two Jordan parts
inline Stratum move_merge(const Stratum& s, int h, int k) {
  int m = static_cast<int>(s.mu.size());
  require(h != k && h >= 1 && k >= 1 && h <= m && k <= m, Errc::input, "bad Jordan indices");
  Partition mu;
  for (int i = 0; i < m; ++i)
    if (i != h - 1 && i != k - 1) mu.push_back(s.mu[i]);
  mu.push_back(s.mu[h - 1] + s.mu[k - 1]);
  return Stratum::of(s.c, s.d, s.lambda, std::move(mu));
}

// tail-sum dominance: a is at least as balanced as b
inline bool more_balanced(const Partition& a, const Partition& b) {
  require(a.size() == b.size(), Errc::input, "partitions must have equal length");
  require(partition_sum(a) == partition_sum(b), Errc::input, "partitions must have equal sum");
  int ta = 0, tb = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    ta += a[i];
    tb += b[i];
    if (ta < tb) return false;
  }
  return true;
}

inline bool harris_leq(const Partition& a, const Partition& b) { return more_balanced(a, b); }

namespace detail {

// does mu2 refine mu1, i.e. can mu2's parts be grouped with block sums mu1?
inline bool refines(std::vector<int> mu2, std::vector<int> mu1) {
  if (partition_sum(mu2) != partition_sum(mu1)) return false;
  std::sort(mu1.rbegin(), mu1.rend());
  std::sort(mu2.rbegin(), mu2.rend());
  std::function<bool(std::vector<int>&, size_t)> solve = [&](std::vector<int>& pool,
                                                             size_t block) -> bool {
    if (block == mu1.size()) return pool.empty();
    int target = mu1[block];
    // choose a subset of the pool summing to target; take the largest
    // remaining element first to cut symmetry
    std::function<bool(int, int, std::vector<int>&)> pick = [&](int start, int remaining,
                                                                std::vector<int>& chosen) -> bool {
      if (remaining == 0) {
        std::vector<int> rest;
        std::set<int> chosen_idx(chosen.begin(), chosen.end());
        for (int i = 0; i < static_cast<int>(pool.size()); ++i)
          if (!chosen_idx.count(i)) rest.push_back(pool[i]);
        return solve(rest, block + 1);
      }
      for (int i = start; i < static_cast<int>(pool.size()); ++i) {
        if (pool[i] > remaining) continue;
        if (i > start && pool[i] == pool[i - 1] &&
            std::find(chosen.begin(), chosen.end(), i - 1) == chosen.end())
          continue;  // skip duplicate choices
        chosen.push_back(i);
        if (pick(i + 1, remaining - pool[i], chosen)) return true;
        chosen.pop_back();
      }
      return false;
    };
    std::vector<int> chosen;
    return pick(0, target, chosen);
  };
  return solve(mu2, 0);
}

}  // namespace detail

// The degeneration criterion: s degenerates to t iff some column budget
// a_i < lambda_i, with total equal to the drop in scroll weight, leaves a
// scroll remnant at least as balanced as t's, and (mu, 1^a) refines t's mu.
inline bool degenerates(const Stratum& s, const Stratum& t) {
  require(s.c == t.c && s.d == t.d, Errc::input, "strata lie in different H_{c,d}");
  int need = partition_sum(s.lambda) - partition_sum(t.lambda);
  if (need < 0) return false;
  int d = s.d;
  if (d == 0) return need == 0 && detail::refines(s.mu, t.mu);

  std::vector<int> budget(d, 0);
  std::function<bool(int, int)> search = [&](int i, int remaining) -> bool {
    if (i == d) {
      if (remaining != 0) return false;
      Partition remnant(d);
      for (int k = 0; k < d; ++k) remnant[k] = s.lambda[k] - budget[k];
      std::sort(remnant.rbegin(), remnant.rend());
      if (!more_balanced(remnant, t.lambda)) return false;
      std::vector<int> mu2 = s.mu;
      for (int k = 0; k < need; ++k) mu2.push_back(1);
      return detail::refines(mu2, t.mu);
    }
    for (int a = 0; a <= std::min(remaining, s.lambda[i] - 1); ++a) {
      budget[i] = a;
      if (search(i + 1, remaining - a)) return true;
    }
    budget[i] = 0;
    return false;
  };
  return search(0, need);
}

struct Poset {
  int c = 0, d = 0;
  std::vector<Stratum> nodes;
  std::vector<std::vector<bool>> reach;         // the degeneration relation
  std::vector<std::pair<int, int>> hasse;       // covering pairs (upper, lower)
  bool closure_matches_criterion = false;
  int minimal_node = -1;

  std::string dot(const std::string& name = "degenerations") const {
    std::string out = "digraph " + name + " {\n";
    out += "  rankdir=TB;\n";
    std::map<int, std::vector<int>> by_weight;
    for (size_t i = 0; i < nodes.size(); ++i)
      by_weight[-partition_sum(nodes[i].lambda)].push_back(static_cast<int>(i));
    for (auto& [w, ids] : by_weight) {
      out += "  { rank=same;";
      for (int i : ids) out += " n" + std::to_string(i) + ";";
      out += " }\n";
    }
    for (size_t i = 0; i < nodes.size(); ++i)
      out += "  n" + std::to_string(i) + " [label=\"" + nodes[i].label() + "\"];\n";
    for (auto& [a, b] : hasse)
      out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
  }
};

// full degeneration poset of H_{c,d}: criterion relation, its agreement with
// the closure of the peel/merge/rebalance moves, and the Hasse reduction
inline Poset poset(int c, int d) {
  Poset P;
  P.c = c;
  P.d = d;
  P.nodes = strata(c, d);
  int n = static_cast<int>(P.nodes.size());
  std::map<Stratum, int> id;
  for (int i = 0; i < n; ++i) id[P.nodes[i]] = i;

  P.reach.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) P.reach[i][j] = degenerates(P.nodes[i], P.nodes[j]);

  // closure of single moves: peel, merge, and one-unit scroll rebalance
  std::vector<std::vector<bool>> closure(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    // BFS
    std::vector<int> stack{i};
    closure[i][i] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      const Stratum& s = P.nodes[u];
      std::vector<Stratum> nexts;
      for (int j = 1; j <= static_cast<int>(s.lambda.size()); ++j)
        if (s.lambda[j - 1] > 1) nexts.push_back(move_peel(s, j));
      for (int h = 1; h <= static_cast<int>(s.mu.size()); ++h)
        for (int k = h + 1; k <= static_cast<int>(s.mu.size()); ++k)
          nexts.push_back(move_merge(s, h, k));
      // one unit from a part to a part at least as large (toward imbalance)
      for (size_t give = 0; give < s.lambda.size(); ++give)
        for (size_t take = 0; take < s.lambda.size(); ++take) {
          if (give == take || s.lambda[take] < 2 || s.lambda[give] < s.lambda[take]) continue;
          Partition lam = s.lambda;
          lam[give] += 1;
          lam[take] -= 1;
          nexts.push_back(Stratum::of(c, d, std::move(lam), s.mu));
        }
      for (auto& t : nexts) {
        int v = id.at(t);
        if (!closure[i][v]) {
          closure[i][v] = true;
          stack.push_back(v);
        }
      }
    }
  }
  P.closure_matches_criterion = closure == P.reach;

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !P.reach[i][j]) continue;
      bool covered = true;
      for (int k = 0; k < n && covered; ++k)
        if (k != i && k != j && P.reach[i][k] && P.reach[k][j]) covered = false;
      if (covered) P.hasse.push_back({i, j});
    }

  for (int j = 0; j < n; ++j) {
    bool minimal = true;
    for (int i = 0; i < n && minimal; ++i)
      if (!P.reach[i][j]) minimal = false;
    if (minimal) {
      require(P.minimal_node < 0, Errc::internal, "two minimal strata");
      P.minimal_node = j;
    }
  }
  return P;
}

// ---- parametric flat families ---------------------------------------------

struct ParametricFamily {
  enum class Move { peel, merge };
  Move move;
  std::vector<Block> base_blocks;  // after any eigenvalue normalization
  Field field;
  int index_a = 0, index_b = 0;  // peel: scroll index; merge: Jordan pair
  Scalar epsilon;                // peel parameter
  Stratum source, target;
  std::vector<Scalar> excluded;  // parameter values outside the family's claims

  // the fiber at t = t0
  LinearMatrix2 specialize(const Scalar& t0) const;
  // a printable generic fiber over the parameter ring
  LinearMatrix2 generic_matrix() const;
};

namespace detail {

inline Stratum type_of_blocks(int c, const std::vector<Block>& blocks) {
  Partition lambda, mu;
  for (auto& b : blocks) {
    if (b.kind == Block::Kind::scroll) lambda.push_back(b.size);
    else mu.push_back(b.size);
  }
  int d = static_cast<int>(lambda.size());
  return Stratum::of(c, d, std::move(lambda), std::move(mu));
}

// build the family matrix over the block ring extended by a parameter; the
// parameter slot is filled with a scalar at specialization time
inline LinearMatrix2 family_matrix(const ParametricFamily& fam,
                                   const std::optional<Scalar>& t0) {
  Field f = fam.field;
  bool generic = !t0.has_value();
  BlockMatrix bm = build_matrix(fam.base_blocks, f);
  RingPtr ring = bm.matrix.ring;
  if (generic) {
    std::vector<Variable> vars = ring->vars();
    vars.push_back({"t", VarRole::Param, 0, 0});
    ring = make_ring(std::move(vars));
  }
  auto var = [&](int k) { return Polynomial::variable(ring, k, f); };
  auto tpoly = [&]() {
    return generic ? Polynomial::variable(ring, ring->param_var(), f)
                   : Polynomial::constant(ring, *t0);
  };

  LinearMatrix2 m;
  m.ring = ring;
  m.field = f;
  int nblocks = static_cast<int>(fam.base_blocks.size());
  for (int bi = 0; bi < nblocks; ++bi) {
    const Block& b = fam.base_blocks[bi];
    int v0 = bm.var_range[bi].first;
    int p = b.size;
    if (fam.move == ParametricFamily::Move::peel && bi == fam.index_a) {
      // scroll with the last column bent: (t x_p + eps x_{p+1}; x_{p+1})
      for (int k = 0; k < p - 1; ++k) {
        m.rows[0].push_back(var(v0 + k));
        m.rows[1].push_back(var(v0 + k + 1));
      }
      m.rows[0].push_back(tpoly() * var(v0 + p - 1) + var(v0 + p) * fam.epsilon);
      m.rows[1].push_back(var(v0 + p));
      continue;
    }
    if (fam.move == ParametricFamily::Move::merge && bi == fam.index_a) {
      // Jordan block with eigenvalue 0 whose last column hooks the head
      // variable of the partner block: (x_p; (1-t) y_1)
      int w0 = bm.var_range[fam.index_b].first;
      for (int k = 0; k < p - 1; ++k) {
        m.rows[0].push_back(var(v0 + k));
        m.rows[1].push_back(var(v0 + k + 1));
      }
      m.rows[0].push_back(var(v0 + p - 1));
      m.rows[1].push_back((Polynomial::constant(ring, Scalar::one(f)) - tpoly()) * var(w0));
      continue;
    }
    if (fam.move == ParametricFamily::Move::merge && bi == fam.index_b) {
      // the partner block with eigenvalue scaled by t
      Polynomial eps_t = tpoly() * fam.base_blocks[bi].eigenvalue;
      for (int k = 0; k < p; ++k) {
        m.rows[0].push_back(var(v0 + k));
        Polynomial second = eps_t * var(v0 + k);
        if (k + 1 < p) second = var(v0 + k + 1) + second;
        m.rows[1].push_back(second);
      }
      continue;
    }
    for (int k = 0; k < b.columns(); ++k) {
      int col = bm.col_range[bi].first + k;
      m.rows[0].push_back(bm.matrix.rows[0][col].rename(ring));
      m.rows[1].push_back(bm.matrix.rows[1][col].rename(ring));
    }
  }
  return m;
}

}  // namespace detail

inline LinearMatrix2 ParametricFamily::specialize(const Scalar& t0) const {
  return detail::family_matrix(*this, t0);
}

inline LinearMatrix2 ParametricFamily::generic_matrix() const {
  return detail::family_matrix(*this, std::nullopt);
}

// one-parameter family degenerating (lambda; mu) to (lambda - e_j; mu, 1):
// the j-th scroll block's last column becomes (t x_p + eps x_{p+1}; x_{p+1});
// eps must be nonzero with 1/eps distinct from every eigenvalue
inline ParametricFamily family_peel(const std::vector<Block>& blocks, int j,
                                    const Scalar& eps, Field field) {
  require(!eps.is_zero(), Errc::input, "peel parameter eps must be nonzero");
  int scroll_seen = 0, block_index = -1, c1 = 0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    c1 += blocks[i].columns();
    require(blocks[i].kind != Block::Kind::nilpotent, Errc::input,
            "families need scroll and Jordan blocks only");
    if (blocks[i].kind == Block::Kind::scroll && ++scroll_seen == j)
      block_index = static_cast<int>(i);
  }
  require(block_index >= 0, Errc::input, "no such scroll block");
  require(blocks[block_index].size > 1, Errc::input, "peel needs a scroll part > 1");
  Scalar inv_eps = eps.inv();
  for (auto& b : blocks)
    if (b.kind == Block::Kind::jordan)
      require(b.eigenvalue != inv_eps, Errc::input,
              "1/eps collides with a Jordan eigenvalue");

  ParametricFamily fam;
  fam.move = ParametricFamily::Move::peel;
  fam.base_blocks = blocks;
  fam.field = field;
  fam.index_a = block_index;
  fam.epsilon = eps;
  int c = c1 - 1;
  fam.source = detail::type_of_blocks(c, blocks);
  {
    std::vector<Block> target = blocks;
    target[block_index].size -= 1;
    target.push_back(Block::jordan(1, inv_eps));
    fam.target = detail::type_of_blocks(c, target);
  }
  fam.excluded = {Scalar::zero(field)};
  return fam;
}

// one-parameter family merging the Jordan parts h and k; the h-th eigenvalue
// is first translated to zero, the k-th is scaled by t
inline ParametricFamily family_merge(const std::vector<Block>& blocks, int h, int k,
                                     Field field) {
  require(h != k, Errc::input, "merge needs two distinct Jordan blocks");
  int jordan_seen = 0, bh = -1, bk = -1, c1 = 0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    c1 += blocks[i].columns();
    require(blocks[i].kind != Block::Kind::nilpotent, Errc::input,
            "families need scroll and Jordan blocks only");
    if (blocks[i].kind == Block::Kind::jordan) {
      ++jordan_seen;
      if (jordan_seen == h) bh = static_cast<int>(i);
      if (jordan_seen == k) bk = static_cast<int>(i);
    }
  }
  require(bh >= 0 && bk >= 0, Errc::input, "no such Jordan blocks");

  // normalize: subtract the h-th eigenvalue everywhere (block data only; the
  // KW type is unchanged)
  std::vector<Block> base = blocks;
  Scalar shift = -blocks[bh].eigenvalue;
  for (auto& b : base)
    if (b.kind == Block::Kind::jordan) b.eigenvalue = b.eigenvalue + shift;

  ParametricFamily fam;
  fam.move = ParametricFamily::Move::merge;
  fam.base_blocks = base;
  fam.field = field;
  fam.index_a = bh;
  fam.index_b = bk;
  int c = c1 - 1;
  fam.source = detail::type_of_blocks(c, base);
  {
    std::vector<Block> target;
    for (size_t i = 0; i < base.size(); ++i)
      if (static_cast<int>(i) != bh && static_cast<int>(i) != bk) target.push_back(base[i]);
    target.push_back(Block::jordan(base[bh].size + base[bk].size, Scalar::zero(field)));
    fam.target = detail::type_of_blocks(c, target);
  }
  // excluded: t = 0 is the special fiber; t with t*eps_k equal to another
  // eigenvalue breaks distinctness
  fam.excluded = {Scalar::zero(field)};
  Scalar eps_k = base[bk].eigenvalue;
  if (!eps_k.is_zero())
    for (size_t i = 0; i < base.size(); ++i)
      if (base[i].kind == Block::Kind::jordan && static_cast<int>(i) != bh &&
          static_cast<int>(i) != bk)
        fam.excluded.push_back(base[i].eigenvalue / eps_k);
  return fam;
}

struct FlatnessReport {
  bool hilbert_functions_agree = true;
  int witness_degree = -1;
  std::vector<Scalar> samples;
  std::vector<std::vector<mpz_class>> hf;  // per sample
  std::vector<KWType> fiber_types;         // per sample
  bool types_match_claims = true;
};

// Hilbert functions of the fibers at the sampled parameter values must agree
// degree by degree; fiber KW types are classified and compared with the
// family's source/target claims (t = 0 is the target, admissible t != 0 the
// source).
inline FlatnessReport flatness_check(const ParametricFamily& fam,
                                     const std::vector<Scalar>& samples, int bound) {
  FlatnessReport rep;
  rep.samples = samples;
  for (auto& t0 : samples) {
    // t = 0 is the special fiber; the other excluded values break the
    // family's genericity claims and are rejected
    for (auto& ex : fam.excluded)
      if (!ex.is_zero())
        require(t0 != ex, Errc::input, "sample " + t0.str() + " is excluded for this family");
    LinearMatrix2 m = fam.specialize(t0);
    Ideal I = minors_ideal(m);
    MonomialOrder ord = MonomialOrder::grevlex(m.ring);
    rep.hf.push_back(hilbert_function(I, ord, bound));
    KWType type = classify(m);
    KWType want;
    const Stratum& claim = t0.is_zero() ? fam.target : fam.source;
    want.lambda = claim.lambda;
    want.mu = claim.mu;
    if (!(type == want)) rep.types_match_claims = false;
    rep.fiber_types.push_back(std::move(type));
  }
  for (size_t i = 1; i < rep.hf.size(); ++i)
    for (int k = 0; k <= bound; ++k)
      if (rep.hf[i][k] != rep.hf[0][k]) {
        rep.hilbert_functions_agree = false;
        if (rep.witness_degree < 0) rep.witness_degree = k;
      }
  return rep;
}

}  // namespace twodet
