#include <catch2/catch_amalgamated.hpp>

#include "twodet/order.hpp"
#include "twodet/polynomial.hpp"

using namespace twodet;

namespace {

// Independent re-implementation of the composite order, structured as a
// literal transcription of the four tie-breaking steps; the library version
// is layer-table driven, this one recomputes everything from scratch.
int brute_composite_cmp(const Ring& r, const Monomial& u, const Monomial& v) {
  int d = r.d(), e = r.e(), c1 = r.c() + 1;
  // step 1: lex on y2 exponents, y2_1 > ... > y2_d
  for (int j = 1; j <= d; ++j) {
    int a = u.exponent(r.y_var(2, j)), b = v.exponent(r.y_var(2, j));
    if (a != b) return a > b ? 1 : -1;
  }
  auto md1 = [&](const Monomial& m) {
    std::vector<int> w(c1, 0);
    for (auto& [var, ex] : m.exponents()) {
      const Variable& vv = r.var(var);
      if (vv.role == VarRole::T) { w[vv.i - 1] += ex; w[vv.j - 1] += ex; }
      if (vv.role == VarRole::Y1) w[vv.i - 1] += ex;
      if (vv.role == VarRole::X) w[vv.i + d - 1] += ex;
    }
    return w;
  };
  auto md2 = [&](const Monomial& m) {
    std::vector<int> w(c1, 0);
    for (auto& [var, ex] : m.exponents()) {
      const Variable& vv = r.var(var);
      if (vv.role == VarRole::T) w[vv.i - 1] += ex;
    }
    return w;
  };
  auto grev = [](const std::vector<int>& a, const std::vector<int>& b,
                 const std::vector<int>& rank_high_to_low) {
    int da = 0, db = 0;
    for (size_t i = 0; i < a.size(); ++i) da += a[i], db += b[i];
    if (da != db) return da > db ? 1 : -1;
    // lowest-ranked coordinate with a difference; the deficient side wins
    for (auto it = rank_high_to_low.rbegin(); it != rank_high_to_low.rend(); ++it)
      if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
    return 0;
  };
  std::vector<int> high(c1), low(c1);
  for (int i = 0; i < c1; ++i) high[i] = c1 - 1 - i;  // e_{c+1} > ... > e_1
  for (int i = 0; i < c1; ++i) low[i] = i;            // e_1 > ... > e_{c+1}
  if (int s = grev(md1(u), md1(v), high)) return s;
  if (int s = grev(md2(u), md2(v), low)) return s;
  // step 4: lex with y2 > y1 > x1 > T (by (a,b)) > x2 > ... > xe
  std::vector<int> rank;
  for (int j = 1; j <= d; ++j) rank.push_back(r.y_var(2, j));
  for (int j = 1; j <= d; ++j) rank.push_back(r.y_var(1, j));
  if (e >= 1) rank.push_back(r.x_var(1));
  for (int a = 1; a <= c1; ++a)
    for (int b = a + 1; b <= c1; ++b) rank.push_back(r.t_var(a, b));
  for (int h = 2; h <= e; ++h) rank.push_back(r.x_var(h));
  for (int var : rank) {
    int a = u.exponent(var), b = v.exponent(var);
    if (a != b) return a > b ? 1 : -1;
  }
  return 0;
}

Monomial random_monomial(Rng& rng, int nvars, int maxdeg, bool t_only = false,
                         const Ring* ring = nullptr) {
  std::vector<std::pair<int, int>> ex;
  int deg = static_cast<int>(rng.below(maxdeg + 1));
  for (int i = 0; i < deg; ++i) {
    int v = static_cast<int>(rng.below(nvars));
    if (t_only && ring && ring->var(v).role != VarRole::T) { --i; continue; }
    ex.push_back({v, 1});
  }
  return Monomial::of(std::move(ex));
}

void check_order_axioms(const MonomialOrder& ord, int nvars, uint64_t seed, int trials,
                        bool t_only = false) {
  Rng rng(seed);
  const Ring* ring = ord.ring().get();
  Monomial one = Monomial::one();
  for (int i = 0; i < trials; ++i) {
    Monomial u = random_monomial(rng, nvars, 5, t_only, ring);
    Monomial v = random_monomial(rng, nvars, 5, t_only, ring);
    Monomial w = random_monomial(rng, nvars, 4, t_only, ring);
    auto cuv = ord.compare(u, v);
    auto cvu = ord.compare(v, u);
    // antisymmetry + totality
    if (cuv == std::strong_ordering::less) REQUIRE(cvu == std::strong_ordering::greater);
    if (cuv == std::strong_ordering::greater) REQUIRE(cvu == std::strong_ordering::less);
    if (cuv == std::strong_ordering::equal) REQUIRE(cvu == std::strong_ordering::equal);
    if (u == v) REQUIRE(cuv == std::strong_ordering::equal);
    if (cuv == std::strong_ordering::equal) REQUIRE(u == v);
    // multiplicativity
    REQUIRE(ord.compare(u * w, v * w) == cuv);
    // unit minimality
    if (!u.is_one()) REQUIRE(ord.greater(u, one));
    // transitivity on a sorted triple
    std::vector<Monomial> t{u, v, w};
    std::sort(t.begin(), t.end(), [&](auto& a, auto& b) { return ord.less(a, b); });
    REQUIRE(!ord.greater(t[0], t[1]));
    REQUIRE(!ord.greater(t[1], t[2]));
    REQUIRE(!ord.greater(t[0], t[2]));
  }
}

}  // namespace

TEST_CASE("unit monomial is minimal in every order", "[order]") {
  RingPtr r = blowup_ring(1, 4);
  MonomialOrder ord = MonomialOrder::composite(r);
  Monomial x1 = Monomial::var(r->x_var(1));
  REQUIRE(ord.less(Monomial::one(), x1));
}

TEST_CASE("composite order: the two printed T-comparisons at (1,4)", "[order]") {
  RingPtr r = blowup_ring(1, 4);
  MonomialOrder ord = MonomialOrder::composite(r);
  // T13*T24 vs T14*T23: steps 2 and 3 tie, step 4 decides
  Monomial a = Monomial::var(r->t_var(1, 3)) * Monomial::var(r->t_var(2, 4));
  Monomial b = Monomial::var(r->t_var(1, 4)) * Monomial::var(r->t_var(2, 3));
  REQUIRE(mdeg1(*r, a) == mdeg1(*r, b));
  REQUIRE(mdeg2(*r, a) == mdeg2(*r, b));
  REQUIRE(ord.greater(a, b));
  // x1*T13 vs x2*T12: likewise decided at step 4
  Monomial u = Monomial::var(r->x_var(1)) * Monomial::var(r->t_var(1, 3));
  Monomial v = Monomial::var(r->x_var(2)) * Monomial::var(r->t_var(1, 2));
  REQUIRE(mdeg1(*r, u) == mdeg1(*r, v));
  REQUIRE(mdeg2(*r, u) == mdeg2(*r, v));
  REQUIRE(ord.greater(u, v));
}

TEST_CASE("column multigradings: images and additivity", "[order]") {
  RingPtr r = blowup_ring(1, 4);  // c+1 = 5
  auto basis = [&](std::initializer_list<int> is) {
    Multidegree m(5, 0);
    for (int i : is) m[i - 1] += 1;
    return m;
  };
  REQUIRE(mdeg1(*r, Monomial::var(r->t_var(1, 3))) == basis({1, 3}));
  REQUIRE(mdeg1(*r, Monomial::var(r->y_var(2, 1))) == basis({}));
  REQUIRE(mdeg1(*r, Monomial::var(r->x_var(2)) * Monomial::var(r->t_var(1, 2))) ==
          basis({1, 2, 3}));
  RingPtr r2 = blowup_ring(2, 4);  // c+1 = 6, T25 exists
  Multidegree e2(6, 0);
  e2[1] = 1;
  REQUIRE(mdeg2(*r2, Monomial::var(r2->t_var(2, 5))) == e2);
  REQUIRE(mdeg2(*r, Monomial::var(r->x_var(3))) == basis({}));
  REQUIRE(mdeg2(*r, Monomial::var(r->t_var(1, 2)) * Monomial::var(r->t_var(2, 3))) ==
          basis({1, 2}));
  // monoid homomorphism on random pairs
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    Monomial u = random_monomial(rng, r->size() - 1, 4);  // avoid tau
    Monomial v = random_monomial(rng, r->size() - 1, 4);
    Multidegree sum = mdeg1(*r, u);
    Multidegree mv = mdeg1(*r, v);
    for (size_t k = 0; k < sum.size(); ++k) sum[k] += mv[k];
    REQUIRE(mdeg1(*r, u * v) == sum);
  }
  REQUIRE_THROWS_AS(mdeg1(*r, Monomial::var(r->tau_var())), Error);
}

TEST_CASE("order axioms hold for every variant", "[order]") {
  RingPtr r = blowup_ring(2, 3);
  int n = r->size() - 1;  // tau excluded from random monomials
  check_order_axioms(MonomialOrder::lex(r), n, 11, 300);
  check_order_axioms(MonomialOrder::grevlex(r), n, 12, 300);
  check_order_axioms(MonomialOrder::composite(r), n, 13, 300);
  std::vector<int> kill{r->x_var(1), r->x_var(2)};
  check_order_axioms(MonomialOrder::elimination(kill, MonomialOrder::grevlex(r)), n, 14, 300);
  // restricted to T-monomials the composite is again a monomial order
  check_order_axioms(MonomialOrder::composite(r), n, 15, 300, /*t_only=*/true);
}

TEST_CASE("composite order agrees with the literal step-by-step oracle", "[order]") {
  for (auto [d, e] : std::vector<std::pair<int, int>>{{1, 4}, {0, 4}, {2, 3}, {3, 0}}) {
    RingPtr r = blowup_ring(d, e);
    MonomialOrder ord = MonomialOrder::composite(r);
    Rng rng(100 + d * 10 + e);
    for (int i = 0; i < 500; ++i) {
      Monomial u = random_monomial(rng, r->size() - 1, 5);
      Monomial v = random_monomial(rng, r->size() - 1, 5);
      int want = brute_composite_cmp(*r, u, v);
      auto got = ord.compare(u, v);
      if (want > 0) REQUIRE(got == std::strong_ordering::greater);
      else if (want < 0) REQUIRE(got == std::strong_ordering::less);
      else REQUIRE(got == std::strong_ordering::equal);
    }
  }
}

TEST_CASE("elimination order has the block property", "[order]") {
  RingPtr r = blowup_ring(1, 3);
  std::vector<int> kill{r->y_var(1, 1), r->y_var(2, 1)};
  MonomialOrder ord = MonomialOrder::elimination(kill, MonomialOrder::grevlex(r));
  Monomial with_killed = Monomial::var(r->y_var(1, 1));
  Monomial without = Monomial::var(r->x_var(1)) * Monomial::var(r->t_var(1, 2));
  REQUIRE(ord.greater(with_killed, without));
}

TEST_CASE("composite order needs blowup roles", "[order]") {
  RingPtr plain = make_ring({{"x", VarRole::Generic}, {"y", VarRole::Generic}});
  REQUIRE_THROWS_AS(MonomialOrder::composite(plain), Error);
}
