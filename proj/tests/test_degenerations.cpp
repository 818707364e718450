#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "twodet/degenerations.hpp"

using namespace twodet;

namespace {
const Field kFp = Field::fp(32003);
Scalar fp(long long v) { return Scalar::fp(32003, v); }
}  // namespace

TEST_CASE("strata enumeration", "[degenerations]") {
  REQUIRE(strata(6, 3).size() == 19);
  std::vector<Stratum> s20 = strata(2, 0);
  REQUIRE(s20.size() == 3);
  std::set<std::string> labels;
  for (auto& s : s20) labels.insert(s.label());
  REQUIRE(labels == std::set<std::string>{"(∅;3)", "(∅;2,1)", "(∅;1^3)"});
  // d = c+1 forces the pure unit-scroll type
  std::vector<Stratum> forced = strata(3, 4);
  REQUIRE(forced.size() == 1);
  REQUIRE(forced[0].label() == "(1^4;∅)");
}

TEST_CASE("moves", "[degenerations]") {
  Stratum a = Stratum::of(6, 3, {3, 2, 2}, {});
  REQUIRE(move_peel(a, 1) == Stratum::of(6, 3, {2, 2, 2}, {1}));
  REQUIRE(move_peel(Stratum::of(2, 1, {2}, {1}), 1) == Stratum::of(2, 1, {1}, {1, 1}));
  REQUIRE(move_peel(Stratum::of(6, 3, {5, 1, 1}, {}), 1) == Stratum::of(6, 3, {4, 1, 1}, {1}));
  REQUIRE_THROWS_AS(move_peel(Stratum::of(2, 1, {1}, {1, 1}), 1), Error);

  REQUIRE(move_merge(Stratum::of(6, 3, {1, 1, 1}, {1, 1, 1, 1}), 1, 2) ==
          Stratum::of(6, 3, {1, 1, 1}, {2, 1, 1}));
  REQUIRE(move_merge(Stratum::of(6, 3, {2, 1, 1}, {2, 1}), 1, 2) ==
          Stratum::of(6, 3, {2, 1, 1}, {3}));
  REQUIRE(move_merge(Stratum::of(2, 1, {1}, {1, 1}), 1, 2) == Stratum::of(2, 1, {1}, {2}));
  REQUIRE_THROWS_AS(move_merge(Stratum::of(2, 1, {1}, {1, 1}), 1, 1), Error);
}

TEST_CASE("tail-sum balance", "[degenerations]") {
  REQUIRE(more_balanced({2, 2, 2}, {3, 2, 1}));
  REQUIRE(!more_balanced({3, 2, 1}, {2, 2, 2}));
  REQUIRE(more_balanced({3, 2, 2}, {3, 3, 1}));
  REQUIRE(!more_balanced({3, 3, 1}, {3, 2, 2}));
  REQUIRE(more_balanced({4, 2, 1}, {4, 2, 1}));  // reflexive
  REQUIRE(harris_leq({2, 2, 2}, {3, 2, 1}));
  REQUIRE_THROWS_AS(more_balanced({2, 2}, {3, 2, 1}), Error);
}

TEST_CASE("the degeneration criterion on known pairs", "[degenerations]") {
  // the generic stratum reaches the unique closed one
  REQUIRE(degenerates(Stratum::of(6, 3, {3, 2, 2}, {}), Stratum::of(6, 3, {1, 1, 1}, {4})));
  // pure Harris step inside a fixed mu
  REQUIRE(degenerates(Stratum::of(6, 3, {2, 2, 2}, {1}), Stratum::of(6, 3, {3, 2, 1}, {1})));
  REQUIRE(!degenerates(Stratum::of(6, 3, {3, 2, 1}, {1}), Stratum::of(6, 3, {2, 2, 2}, {1})));
  // reflexivity
  Stratum s = Stratum::of(6, 3, {2, 2, 1}, {2});
  REQUIRE(degenerates(s, s));
  // a does not reach b when the Jordan part cannot refine
  REQUIRE(!degenerates(Stratum::of(6, 3, {1, 1, 1}, {2, 2}), Stratum::of(6, 3, {1, 1, 1}, {3, 1})));
}

TEST_CASE("degenerates is reflexive and transitive for c <= 7", "[degenerations]") {
  for (int c = 2; c <= 7; ++c)
    for (int d = 0; d <= c + 1; ++d) {
      std::vector<Stratum> S = strata(c, d);
      int n = static_cast<int>(S.size());
      std::vector<std::vector<bool>> R(n, std::vector<bool>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) R[i][j] = degenerates(S[i], S[j]);
      for (int i = 0; i < n; ++i) REQUIRE(R[i][i]);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            if (R[i][j] && R[j][k]) REQUIRE(R[i][k]);
    }
}

TEST_CASE("poset of H_{6,3}: count, extremes, a sample edge", "[degenerations]") {
  Poset P = poset(6, 3);
  REQUIRE(P.nodes.size() == 19);
  REQUIRE(P.closure_matches_criterion);
  REQUIRE(P.minimal_node >= 0);
  REQUIRE(P.nodes[P.minimal_node].label() == "(1^3;4)");
  // the generic stratum is the unique maximal one
  int maximal = -1;
  for (int j = 0; j < 19; ++j) {
    bool max = true;
    for (int i = 0; i < 19 && max; ++i)
      if (i != j && P.reach[i][j]) max = false;
    if (max) {
      REQUIRE(maximal < 0);
      maximal = j;
    }
  }
  REQUIRE(P.nodes[maximal].label() == "(3,2^2;∅)");
  auto id_of = [&](const std::string& label) {
    for (size_t i = 0; i < P.nodes.size(); ++i)
      if (P.nodes[i].label() == label) return static_cast<int>(i);
    FAIL("missing node " + label);
    return -1;
  };
  std::set<std::pair<int, int>> hasse(P.hasse.begin(), P.hasse.end());
  // The published diagram draws (2^2,1;2) -- (2,1^2;2,1). That relation does
  // hold (a single peel), but it is not a cover: it factors through
  // (3,1^2;2), reached from (2^2,1;2) by rebalancing (2,2,1) to (3,1,1) at
  // fixed mu = (2). The Hasse diagram therefore carries the rebalancing edge.
  int c2 = id_of("(2^2,1;2)"), c4 = id_of("(3,1^2;2)"), d2 = id_of("(2,1^2;2,1)");
  REQUIRE(P.reach[c2][d2]);
  REQUIRE(P.reach[c2][c4]);
  REQUIRE(P.reach[c4][d2]);
  REQUIRE(hasse.count({c2, c4}));
  REQUIRE(!hasse.count({c2, d2}));
  // the analogous rebalancing edges that the diagram does draw
  REQUIRE(hasse.count({id_of("(3,2,1;1)"), id_of("(4,1^2;1)")}));
  REQUIRE(hasse.count({id_of("(2^2,1;1^2)"), id_of("(3,1^2;1^2)")}));
  // DOT export mentions every node label
  std::string dot = P.dot();
  for (auto& node : P.nodes) REQUIRE(dot.find(node.label()) != std::string::npos);
}

TEST_CASE("poset of H_{3,3}: one peel edge", "[degenerations]") {
  // partitions of c+1 = 4 with exactly three scroll parts: (2,1,1) and,
  // with a unit Jordan part, (1,1,1). Two strata joined by the peel move.
  Poset P = poset(3, 3);
  REQUIRE(P.nodes.size() == 2);
  REQUIRE(P.hasse.size() == 1);
  REQUIRE(P.nodes[P.hasse[0].first].label() == "(2,1^2;∅)");
  REQUIRE(P.nodes[P.hasse[0].second].label() == "(1^3;1)");
  REQUIRE(P.nodes[P.minimal_node].label() == "(1^3;1)");
}

TEST_CASE("move closure equals the criterion for c <= 6", "[degenerations]") {
  for (int c = 2; c <= 6; ++c)
    for (int d = 0; d <= c + 1; ++d) REQUIRE(poset(c, d).closure_matches_criterion);
}

TEST_CASE("unique minimum across the grid", "[degenerations]") {
  for (int c = 2; c <= 6; ++c)
    for (int d = 0; d <= c + 1; ++d) {
      std::vector<Stratum> S = strata(c, d);
      Partition lam(d, 1);
      Stratum bottom = Stratum::of(c, d, lam, d == c + 1 ? Partition{} : Partition{c + 1 - d});
      for (auto& s : S) REQUIRE(degenerates(s, bottom));
    }
}

TEST_CASE("peel family: fiber types at the endpoints", "[degenerations]") {
  // peel the scroll part of (2,1;1)
  std::vector<Block> blocks{Block::scroll(2), Block::scroll(1), Block::jordan(1, fp(7))};
  ParametricFamily fam = family_peel(blocks, 1, fp(1), kFp);
  REQUIRE(fam.source.label() == "(2,1;1)");
  REQUIRE(fam.target.label() == "(1^2;1^2)");
  KWType at1 = classify(fam.specialize(fp(1)));
  REQUIRE(at1.str() == "(2,1;1)");
  KWType at0 = classify(fam.specialize(fp(0)));
  REQUIRE(at0.str() == "(1^2;1^2)");
  // eps = 0 is rejected
  REQUIRE_THROWS_AS(family_peel(blocks, 1, fp(0), kFp), Error);
  // 1/eps colliding with an eigenvalue is rejected
  REQUIRE_THROWS_AS(family_peel(blocks, 1, fp(7).inv(), kFp), Error);
}

TEST_CASE("merge family: fiber types at the endpoints", "[degenerations]") {
  std::vector<Block> blocks{Block::scroll(1), Block::scroll(1), Block::jordan(1, fp(2)),
                            Block::jordan(1, fp(5))};
  ParametricFamily fam = family_merge(blocks, 1, 2, kFp);
  REQUIRE(fam.source.label() == "(1^2;1^2)");
  REQUIRE(fam.target.label() == "(1^2;2)");
  REQUIRE(classify(fam.specialize(fp(0))).str() == "(1^2;2)");
  REQUIRE(classify(fam.specialize(fp(1))).str() == "(1^2;1^2)");
}

TEST_CASE("flatness: equal Hilbert functions along the samples", "[degenerations]") {
  std::vector<Block> peel_blocks{Block::scroll(2), Block::scroll(1), Block::jordan(1, fp(7))};
  ParametricFamily peel = family_peel(peel_blocks, 1, fp(1), kFp);
  FlatnessReport rep = flatness_check(peel, {fp(0), fp(1), fp(2)}, 6);
  REQUIRE(rep.hilbert_functions_agree);
  REQUIRE(rep.types_match_claims);

  std::vector<Block> merge_blocks{Block::scroll(1), Block::jordan(2, fp(0)), Block::jordan(1, fp(3))};
  ParametricFamily merge = family_merge(merge_blocks, 1, 2, kFp);
  FlatnessReport mrep = flatness_check(merge, {fp(0), fp(1), fp(3)}, 6);
  REQUIRE(mrep.hilbert_functions_agree);
  REQUIRE(mrep.types_match_claims);

  // a single sample passes trivially
  FlatnessReport single = flatness_check(peel, {fp(5)}, 4);
  REQUIRE(single.hilbert_functions_agree);
}

TEST_CASE("an explicit flat family certifies the H_{6,3} diagram correction", "[degenerations]") {
  // A one-parameter family with fiber type (2,2,1;2) for t != 0 and
  // (3,1,1;2) at t = 0: the (3,1)-scroll pair bent by a single entry,
  // t*z1 added at position (2,1), with the unit scroll and the Jordan
  // block constant. All fibers are 2-determinantal of codimension 6, so
  // the Hilbert function is constant and the family is flat; the stratum
  // (2^2,1;2) therefore degenerates to (3,1^2;2), which together with the
  // cover analysis pins the corrected Hasse edge.
  RingPtr r = make_ring({{"w1"}, {"w2"}, {"w3"}, {"w4"}, {"z1"}, {"z2"},
                         {"u1"}, {"u2"}, {"v1"}, {"v2"}});
  auto P = [&](const std::string& s) { return Polynomial::parse(r, kFp, s); };
  auto fiber = [&](long t0) {
    LinearMatrix2 m;
    m.ring = r;
    m.field = kFp;
    m.rows[0] = {P("w1"), P("w2"), P("w3"), P("z1"), P("u1"), P("v1"), P("v2")};
    m.rows[1] = {P("w2") + P("z1") * fp(t0), P("w3"), P("w4"), P("z2"), P("u2"),
                 P("v2 + 11*v1"), P("11*v2")};
    return m;
  };
  REQUIRE(classify(fiber(0)).str() == "(3,1^2;2)");
  REQUIRE(classify(fiber(1)).str() == "(2^2,1;2)");
  REQUIRE(classify(fiber(2)).str() == "(2^2,1;2)");
  MonomialOrder ord = MonomialOrder::grevlex(r);
  auto hf0 = hilbert_function(minors_ideal(fiber(0)), ord, 6);
  auto hf1 = hilbert_function(minors_ideal(fiber(1)), ord, 6);
  auto hf2 = hilbert_function(minors_ideal(fiber(2)), ord, 6);
  REQUIRE(hf0 == hf1);
  REQUIRE(hf0 == hf2);
}

TEST_CASE("moves preserve (c,d) bookkeeping on random strata", "[degenerations]") {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    int c = 3 + static_cast<int>(rng.below(4));
    int d = static_cast<int>(rng.below(c + 2));
    std::vector<Stratum> S = strata(c, d);
    const Stratum& s = S[rng.below(S.size())];
    for (int j = 1; j <= d; ++j)
      if (s.lambda[j - 1] > 1) {
        Stratum t = move_peel(s, j);
        REQUIRE(t.c == c);
        REQUIRE(t.d == d);
        REQUIRE(partition_sum(t.lambda) + partition_sum(t.mu) == c + 1);
      }
    if (s.mu.size() >= 2) {
      Stratum t = move_merge(s, 1, 2);
      REQUIRE(partition_sum(t.lambda) + partition_sum(t.mu) == c + 1);
      REQUIRE(t.mu.size() == s.mu.size() - 1);
    }
  }
}

TEST_CASE("excluded parameter samples are rejected", "[degenerations]") {
  std::vector<Block> blocks{Block::scroll(1), Block::jordan(1, fp(2)), Block::jordan(1, fp(6)),
                            Block::jordan(1, fp(10))};
  ParametricFamily fam = family_merge(blocks, 1, 2, kFp);
  // merging the blocks with eigenvalues 2 and 6 shifts them to 0 and 4; the
  // third block sits at 8, so t = 2 collides (t * 4 == 8)
  REQUIRE_THROWS_AS(flatness_check(fam, {fp(2)}, 3), Error);
  FlatnessReport ok = flatness_check(fam, {fp(0), fp(1), fp(3)}, 3);
  REQUIRE(ok.hilbert_functions_agree);
}
