#pragma once

#include <vector>

#include "twodet/kronecker.hpp"
#include "twodet/pencil.hpp"

namespace twodet {

// Adding delta to every Jordan eigenvalue preserves the ideal of minors up
// to an invertible substitution touching only the scroll variables: the row
// operation R2 -> R2 + delta*R1 turns each Jordan block into the shifted
// Jordan block directly, and each scroll block is restored by the explicit
// Pascal-triangle substitution below followed by in-block column operations.
struct TranslatedMatrix {
  BlockMatrix matrix;       // same ring, eigenvalues shifted by delta
  LinearAutomorphism phi;   // phi(I_2(original)) = I_2(shifted)
  bool certified = false;   // reduced-GB equality was checked
};

inline TranslatedMatrix translate_eigenvalues(const BlockMatrix& bm, const Scalar& delta,
                                              bool certify = true) {
  Field f = bm.matrix.field;
  RingPtr ring = bm.matrix.ring;
  for (auto& b : bm.blocks)
    require(b.kind != Block::Kind::nilpotent, Errc::input,
            "eigenvalue translation undefined with a nilpotent block");

  // shifted concatenation over the same variables
  BlockMatrix out = bm;
  out.matrix.rows[0].clear();
  out.matrix.rows[1].clear();
  auto var = [&](int k) { return Polynomial::variable(ring, k, f); };
  for (size_t bi = 0; bi < bm.blocks.size(); ++bi) {
    const Block& b = bm.blocks[bi];
    int v0 = bm.var_range[bi].first;
    if (b.kind == Block::Kind::scroll) {
      for (int k = 0; k < b.size; ++k) {
        out.matrix.rows[0].push_back(var(v0 + k));
        out.matrix.rows[1].push_back(var(v0 + k + 1));
      }
    } else {
      Scalar eps = b.eigenvalue + delta;
      out.blocks[bi].eigenvalue = eps;
      for (int k = 0; k < b.size; ++k) {
        out.matrix.rows[0].push_back(var(v0 + k));
        Polynomial second = var(v0 + k) * eps;
        if (k + 1 < b.size) second = var(v0 + k + 1) + second;
        out.matrix.rows[1].push_back(second);
      }
    }
  }

  int n = ring->size();
  Mat Q = Mat::identity(n, f);
  if (!delta.is_zero()) {
    for (size_t bi = 0; bi < bm.blocks.size(); ++bi) {
      const Block& b = bm.blocks[bi];
      if (b.kind != Block::Kind::scroll) continue;
      int p = b.size, v0 = bm.var_range[bi].first;
      // rows r_j of the in-block substitution: r_{j,k} = C(j-1, j-k) (-delta)^{j-k}
      std::vector<std::vector<Scalar>> r(p + 1, std::vector<Scalar>(p, Scalar::zero(f)));
      for (int j = 1; j <= p; ++j)
        for (int k = 1; k <= j; ++k) {
          Scalar v = Scalar::of_int(f, binomial(j - 1, j - k));
          Scalar md = -delta;
          for (int q = 0; q < j - k; ++q) v = v * md;
          r[j - 1][k - 1] = v;
        }
      for (int j = 1; j <= p; ++j)
        for (int k = 1; k <= p; ++k) Q.at(v0 + j - 1, v0 + k - 1) = r[j - 1][k - 1];
      // last row: (0, r_p) - delta (r_p, 0)
      for (int k = 0; k <= p; ++k) Q.at(v0 + p, v0 + k) = Scalar::zero(f);
      for (int k = 1; k <= p; ++k)
        Q.at(v0 + p, v0 + k) = Q.at(v0 + p, v0 + k) + r[p - 1][k - 1];
      for (int k = 0; k < p; ++k)
        Q.at(v0 + p, v0 + k) = Q.at(v0 + p, v0 + k) - delta * r[p - 1][k];
    }
  }

  TranslatedMatrix t{std::move(out), LinearAutomorphism::of(ring, f, std::move(Q)), false};
  if (certify) {
    Ideal orig = minors_ideal(bm.matrix);
    std::vector<Polynomial> mapped;
    for (auto& g : orig.gens) mapped.push_back(t.phi.apply(g));
    MonomialOrder ord = MonomialOrder::grevlex(ring);
    require(ideals_equal(Ideal::of(ring, f, std::move(mapped)), minors_ideal(t.matrix.matrix), ord),
            Errc::internal, "eigenvalue translation certificate failed");
    t.certified = true;
  }
  return t;
}

struct PrimaryComponent {
  Ideal prime;
  int multiplicity;
  std::string label;  // "p0" or "p<i>" for the i-th Jordan block
};

// Primary structure of I_2 for a concatenation of scroll blocks and Jordan
// blocks with pairwise distinct eigenvalues: the scroll-and-linear component
// p0 (when scroll blocks are present) and one linear prime per Jordan block.
inline std::vector<PrimaryComponent> primary_components(const BlockMatrix& bm) {
  Field f = bm.matrix.field;
  RingPtr ring = bm.matrix.ring;
  std::vector<int> scrolls, jordans;
  for (size_t i = 0; i < bm.blocks.size(); ++i) {
    switch (bm.blocks[i].kind) {
      case Block::Kind::scroll: scrolls.push_back(static_cast<int>(i)); break;
      case Block::Kind::jordan: jordans.push_back(static_cast<int>(i)); break;
      case Block::Kind::nilpotent:
        fail(Errc::not_maximal_codim, "primary components undefined for nilpotent blocks");
    }
  }
  for (size_t a = 0; a < jordans.size(); ++a)
    for (size_t b = a + 1; b < jordans.size(); ++b)
      require(bm.blocks[jordans[a]].eigenvalue != bm.blocks[jordans[b]].eigenvalue,
              Errc::not_maximal_codim, "repeated Jordan eigenvalues");

  std::vector<PrimaryComponent> out;

  if (!scrolls.empty()) {
    // p0 = I_2(scroll columns) + (all Jordan variables)
    std::vector<Polynomial> gens;
    std::vector<int> scols;
    for (int i : scrolls)
      for (int c = bm.col_range[i].first; c < bm.col_range[i].second; ++c) scols.push_back(c);
    for (size_t a = 0; a < scols.size(); ++a)
      for (size_t b = a + 1; b < scols.size(); ++b)
        gens.push_back(minor2(bm.matrix, scols[a] + 1, scols[b] + 1));
    for (int i : jordans)
      for (int v = bm.var_range[i].first; v < bm.var_range[i].second; ++v)
        gens.push_back(Polynomial::variable(ring, v, f));
    int mult = 0;
    for (int i : scrolls) mult += bm.blocks[i].size;
    out.push_back({Ideal::of(ring, f, std::move(gens)), mult, "p0"});
  }

  for (size_t idx = 0; idx < jordans.size(); ++idx) {
    int i = jordans[idx];
    TranslatedMatrix t = translate_eigenvalues(bm, -bm.blocks[i].eigenvalue);
    std::vector<Polynomial> gens;
    for (auto& e : t.matrix.matrix.rows[1])
      if (!e.is_zero()) gens.push_back(t.phi.apply(e, /*inverse=*/true));
    out.push_back({Ideal::of(ring, f, std::move(gens)), bm.blocks[i].size,
                   "p" + std::to_string(idx + 1)});
  }

  return out;
}

}  // namespace twodet
