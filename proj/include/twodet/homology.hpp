#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "twodet/common.hpp"
#include "twodet/matrix.hpp"
#include "twodet/scalar.hpp"

namespace twodet {

// A complex given by the full list of its faces as vertex bitmasks (the
// empty face included); at most 64 vertices.
struct FaceSet {
  int nverts = 0;
  std::vector<uint64_t> faces;

  static FaceSet from_facets(int nverts, const std::vector<std::vector<int>>& facets) {
    require(nverts <= 64, Errc::cap_exceeded, "face enumeration needs <= 64 vertices");
    std::unordered_set<uint64_t> seen;
    for (auto& f : facets) {
      uint64_t m = 0;
      for (int v : f) m |= uint64_t(1) << v;
      // all subsets of m
      uint64_t sub = m;
      while (true) {
        seen.insert(sub);
        if (sub == 0) break;
        sub = (sub - 1) & m;
      }
    }
    if (facets.empty()) seen.insert(0);  // the irrelevant complex {°}
    FaceSet fs;
    fs.nverts = nverts;
    fs.faces.assign(seen.begin(), seen.end());
    std::sort(fs.faces.begin(), fs.faces.end());
    return fs;
  }

  int max_face_size() const {
    int s = 0;
    for (uint64_t f : faces) s = std::max(s, __builtin_popcountll(f));
    return s;
  }
};

namespace detail {

// sparse elimination over F_p with min-fill-ish pivoting; rows are sorted
// (column, value) lists
inline int fp_rank_sparse(std::vector<std::vector<std::pair<int, uint32_t>>> rows, uint32_t p) {
  auto mulmod = [p](uint64_t a, uint64_t b) { return static_cast<uint32_t>(a * b % p); };
  auto inv = [p, &mulmod](uint32_t a) {
    // Fermat
    uint64_t r = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<uint32_t>(r);
  };
  int rank = 0;
  std::vector<bool> used(rows.size(), false);
  std::unordered_map<int, std::vector<int>> by_col;  // column -> candidate rows
  for (size_t i = 0; i < rows.size(); ++i)
    for (auto& [c, v] : rows[i]) by_col[c].push_back(static_cast<int>(i));

  while (true) {
    // pick the unused nonempty row with fewest entries
    int best = -1;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (used[i] || rows[i].empty()) continue;
      if (best < 0 || rows[i].size() < rows[best].size()) best = static_cast<int>(i);
    }
    if (best < 0) break;
    used[best] = true;
    ++rank;
    int pc = rows[best].front().first;
    uint32_t pval = rows[best].front().second;
    uint32_t pinv = inv(pval);
    std::vector<int> cands = by_col[pc];
    for (int j : cands) {
      if (j == best || used[j] || rows[j].empty()) continue;
      uint32_t coeff = 0;
      for (auto& [c, v] : rows[j])
        if (c == pc) { coeff = v; break; }
      if (!coeff) continue;
      uint32_t factor = mulmod(coeff, pinv);
      // row_j -= factor * row_best (merge)
      std::vector<std::pair<int, uint32_t>> merged;
      merged.reserve(rows[j].size() + rows[best].size());
      size_t x = 0, y = 0;
      while (x < rows[j].size() || y < rows[best].size()) {
        if (y == rows[best].size() ||
            (x < rows[j].size() && rows[j][x].first < rows[best][y].first)) {
          merged.push_back(rows[j][x++]);
        } else if (x == rows[j].size() || rows[best][y].first < rows[j][x].first) {
          uint32_t nv = p - mulmod(factor, rows[best][y].second);
          if (nv == p) nv = 0;
          if (nv) {
            merged.push_back({rows[best][y].first, nv});
            by_col[rows[best][y].first].push_back(j);
          }
          ++y;
        } else {
          uint64_t nv = (rows[j][x].second + uint64_t(p) - mulmod(factor, rows[best][y].second)) % p;
          if (nv) merged.push_back({rows[j][x].first, static_cast<uint32_t>(nv)});
          ++x, ++y;
        }
      }
      rows[j] = std::move(merged);
    }
  }
  return rank;
}

}  // namespace detail

// Boundary matrices of the reduced chain complex, grouped by face size.
// boundary(s) maps size-s faces to size-(s-1) faces; entries are +-1.
struct ChainComplex {
  std::vector<std::vector<uint64_t>> by_size;  // faces grouped by popcount
  std::vector<std::unordered_map<uint64_t, int>> index;

  explicit ChainComplex(const FaceSet& fs) {
    int top = fs.max_face_size();
    by_size.assign(top + 1, {});
    for (uint64_t f : fs.faces) by_size[__builtin_popcountll(f)].push_back(f);
    for (auto& layer : by_size) std::sort(layer.begin(), layer.end());
    index.assign(top + 1, {});
    for (size_t s = 0; s < by_size.size(); ++s)
      for (size_t i = 0; i < by_size[s].size(); ++i) index[s][by_size[s][i]] = static_cast<int>(i);
  }

  // rows = size-s faces; one (column, sign) entry per removed vertex
  std::vector<std::vector<std::pair<int, int>>> boundary(int s) const {
    std::vector<std::vector<std::pair<int, int>>> rows;
    if (s <= 0 || s >= static_cast<int>(by_size.size())) return rows;
    rows.reserve(by_size[s].size());
    for (uint64_t f : by_size[s]) {
      std::vector<std::pair<int, int>> row;
      int pos = 0, sign = 1;
      for (uint64_t rest = f; rest; rest &= rest - 1, ++pos) {
        uint64_t bit = rest & (~rest + 1);
        uint64_t sub = f & ~bit;
        row.push_back({index[s - 1].at(sub), sign});
        sign = -sign;
      }
      std::sort(row.begin(), row.end());
      rows.push_back(std::move(row));
    }
    return rows;
  }
};

// reduced Betti numbers over the given field: result[s] = dim H~_{s-1},
// s = 0 .. max face size. Over the rationals, ranks are screened mod a
// large prime and recomputed exactly (integer fraction-free elimination)
// only where the screen reports torsion-suspect nonzero homology; a zero
// from the screen is already exact since rank_p <= rank_QQ.
inline std::vector<long> reduced_homology(const FaceSet& fs, Field field) {
  ChainComplex cc(fs);
  int top = static_cast<int>(cc.by_size.size()) - 1;
  uint32_t p = field.is_rational() ? 32003 : field.p;

  auto rank_mod = [&](int s) -> int {
    auto rows = cc.boundary(s);
    std::vector<std::vector<std::pair<int, uint32_t>>> m;
    m.reserve(rows.size());
    for (auto& r : rows) {
      std::vector<std::pair<int, uint32_t>> row;
      for (auto& [c, sign] : r) row.push_back({c, sign > 0 ? 1u : p - 1u});
      m.push_back(std::move(row));
    }
    return detail::fp_rank_sparse(std::move(m), p);
  };
  auto rank_exact_qq = [&](int s) -> int {
    auto rows = cc.boundary(s);
    if (rows.empty()) return 0;
    int cols = static_cast<int>(cc.by_size[s - 1].size());
    std::vector<std::vector<mpz_class>> m(rows.size(), std::vector<mpz_class>(cols, 0));
    for (size_t i = 0; i < rows.size(); ++i)
      for (auto& [c, sign] : rows[i]) m[i][c] = sign;
    return rank_int_bareiss(std::move(m));
  };

  std::vector<int> rank(top + 2, 0);
  for (int s = 1; s <= top; ++s) rank[s] = rank_mod(s);
  std::vector<long> betti(top + 1, 0);
  auto recompute = [&]() {
    for (int s = 0; s <= top; ++s) {
      long n = static_cast<long>(cc.by_size[s].size());
      betti[s] = n - rank[s] - rank[s + 1];
    }
  };
  recompute();
  if (field.is_rational()) {
    // each screened rank is a lower bound, so a zero here is already exact;
    // any nonzero entry is recomputed with exact ranks on both sides, to a
    // fixed point since upgrades can surface new nonzero positions
    std::vector<bool> exact(top + 2, false);
    exact[0] = exact[top + 1] = true;  // empty boundaries
    bool changed = true;
    while (changed) {
      changed = false;
      for (int s = 0; s <= top; ++s) {
        if (betti[s] == 0) continue;
        if (s >= 1 && !exact[s]) {
          rank[s] = rank_exact_qq(s);
          exact[s] = true;
          changed = true;
        }
        if (s + 1 <= top && !exact[s + 1]) {
          rank[s + 1] = rank_exact_qq(s + 1);
          exact[s + 1] = true;
          changed = true;
        }
      }
      if (changed) recompute();
    }
  }
  return betti;
}

struct ReisnerReport {
  bool cohen_macaulay = true;
  uint64_t witness_face = 0;  // face whose link has low-dimensional homology
  int witness_dim = 0;
  long witness_rank = 0;
  long faces_checked = 0;
};

// Reisner's criterion: CM over k iff for every face (including the empty
// one) the link has vanishing reduced homology below its dimension.
inline ReisnerReport reisner_cm(const FaceSet& fs, Field field) {
  ReisnerReport rep;
  for (uint64_t f : fs.faces) {
    FaceSet link;
    link.nverts = fs.nverts;
    for (uint64_t g : fs.faces)
      if ((g & f) == f) link.faces.push_back(g & ~f);
    ++rep.faces_checked;
    std::vector<long> betti = reduced_homology(link, field);
    int top = static_cast<int>(betti.size()) - 1;  // link dim = top - 1
    for (int s = 0; s < top; ++s) {
      if (betti[s] != 0) {
        rep.cohen_macaulay = false;
        rep.witness_face = f;
        rep.witness_dim = s - 1;
        rep.witness_rank = betti[s];
        return rep;
      }
    }
  }
  return rep;
}

// graded Betti numbers of the Stanley-Reisner ideal via reduced homology of
// induced subcomplexes: beta_{i,j} = sum_{|W|=j} dim H~_{j-i-2}(K[W])
struct BettiTable {
  std::map<std::pair<int, int>, long> beta;  // (i, j) -> value
  long operator()(int i, int j) const {
    auto it = beta.find({i, j});
    return it == beta.end() ? 0 : it->second;
  }
};

inline BettiTable hochster_betti(const FaceSet& fs, Field field) {
  require(fs.nverts <= 24, Errc::cap_exceeded, "Hochster enumeration capped at 24 vertices");
  BettiTable table;
  uint64_t full = fs.nverts == 64 ? ~uint64_t(0) : (uint64_t(1) << fs.nverts) - 1;
  for (uint64_t w = full;; w = (w - 1) & full) {
    int j = __builtin_popcountll(w);
    if (j >= 2) {
      FaceSet induced;
      induced.nverts = fs.nverts;
      for (uint64_t g : fs.faces)
        if ((g & ~w) == 0) induced.faces.push_back(g);
      std::vector<long> betti = reduced_homology(induced, field);
      // dim H~_{j-i-2} contributes to beta_{i,j}
      for (int s = 0; s < static_cast<int>(betti.size()); ++s) {
        if (betti[s] == 0) continue;
        int hdim = s - 1;
        int i = j - hdim - 2;
        if (i >= 0) table.beta[{i, j}] += betti[s];
      }
    }
    if (w == 0) break;
  }
  return table;
}

}  // namespace twodet
