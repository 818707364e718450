#include <catch2/catch_amalgamated.hpp>

#include "twodet/polynomial.hpp"

using namespace twodet;

namespace {

RingPtr xy_ring() {
  return make_ring({{"x", VarRole::Generic}, {"y", VarRole::Generic}});
}

Polynomial parse(RingPtr r, const std::string& s, Field f = Field::rationals()) {
  return Polynomial::parse(std::move(r), f, s);
}

}  // namespace

TEST_CASE("arithmetic basics", "[polynomial]") {
  RingPtr r = xy_ring();
  Polynomial sum = parse(r, "x + y");
  Polynomial diff = parse(r, "x - y");
  REQUIRE(sum * diff == parse(r, "x^2 - y^2"));
  REQUIRE((sum - sum).is_zero());
  REQUIRE(sum.pow(2) == parse(r, "x^2 + 2*x*y + y^2"));
}

TEST_CASE("substitution is a ring map", "[polynomial]") {
  RingPtr r = xy_ring();
  Polynomial f = parse(r, "x*y + y");
  std::map<int, Polynomial> kill_x{{0, Polynomial::zero(r, Field::rationals())}};
  REQUIRE(f.substitute(kill_x, r) == parse(r, "y"));
  // homomorphism on random pairs
  Rng rng(5);
  Field qq = Field::rationals();
  auto rnd_poly = [&]() {
    std::vector<Term> ts;
    for (int i = 0; i < 4; ++i) {
      Monomial m = Monomial::of({{0, static_cast<int>(rng.below(3))},
                                 {1, static_cast<int>(rng.below(3))}});
      ts.push_back({m, Scalar::rational(static_cast<long>(rng.below(11)) - 5)});
    }
    return Polynomial::of_terms(r, qq, std::move(ts));
  };
  std::map<int, Polynomial> sub{{0, parse(r, "x + y")}, {1, parse(r, "x*y - 1")}};
  for (int i = 0; i < 50; ++i) {
    Polynomial a = rnd_poly(), b = rnd_poly();
    REQUIRE((a * b).substitute(sub, r) == a.substitute(sub, r) * b.substitute(sub, r));
    REQUIRE((a + b).substitute(sub, r) == a.substitute(sub, r) + b.substitute(sub, r));
  }
  // a used variable with no image in the target ring is an error
  RingPtr only_x = make_ring({{"x", VarRole::Generic}});
  REQUIRE_THROWS_AS(f.substitute({}, only_x), Error);
}

TEST_CASE("ring axioms sampled over both scalar kinds", "[polynomial]") {
  RingPtr r = blowup_ring(1, 3);
  for (Field f : {Field::rationals(), Field::fp(32003)}) {
    Rng rng(17);
    auto rnd = [&]() {
      std::vector<Term> ts;
      int n = 1 + static_cast<int>(rng.below(4));
      for (int i = 0; i < n; ++i) {
        std::vector<std::pair<int, int>> ex;
        for (int j = 0; j < 2; ++j)
          ex.push_back({static_cast<int>(rng.below(r->size())), static_cast<int>(rng.below(2))});
        ts.push_back({Monomial::of(std::move(ex)),
                      Scalar::of_int(f, static_cast<long long>(rng.below(19)) - 9)});
      }
      return Polynomial::of_terms(r, f, std::move(ts));
    };
    for (int i = 0; i < 60; ++i) {
      Polynomial a = rnd(), b = rnd(), c = rnd();
      REQUIRE((a + b) * c == a * c + b * c);
      REQUIRE(a * b == b * a);
      REQUIRE((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("text grammar round-trips on canonical forms", "[polynomial]") {
  RingPtr r = blowup_ring(2, 3, /*with_tau=*/true, /*with_param=*/true);
  Field qq = Field::rationals();
  for (auto s : {"y1_2", "3*x2^2*T[1,3] - 2*y2_1 + 5", "T[1,2]*T[3,4] + tau", "t^2 - 1/2", "0",
                 "-x1 + 1/3*y1_1"}) {
    Polynomial p = Polynomial::parse(r, qq, s);
    REQUIRE(Polynomial::parse(r, qq, p.str()) == p);
  }
  // print . parse is the identity on canonical text
  Polynomial p = Polynomial::parse(r, qq, "x1^2*T[1,3] - 2*y1_1 + 5");
  REQUIRE(p.str() == "x1^2*T[1,3] - 2*y1_1 + 5");
  // random polynomials round-trip
  Rng rng(23);
  for (Field f : {Field::rationals(), Field::fp(101)}) {
    for (int i = 0; i < 100; ++i) {
      std::vector<Term> ts;
      int n = static_cast<int>(rng.below(5));
      for (int k = 0; k < n; ++k) {
        std::vector<std::pair<int, int>> ex;
        for (int j = 0; j < 3; ++j)
          ex.push_back({static_cast<int>(rng.below(r->size())), static_cast<int>(rng.below(3))});
        long num = static_cast<long>(rng.below(21)) - 10;
        Scalar c = f.is_rational() ? Scalar::rational(num, 1 + static_cast<long>(rng.below(7)))
                                   : Scalar::fp(f.p, num);
        ts.push_back({Monomial::of(std::move(ex)), c});
      }
      Polynomial p2 = Polynomial::of_terms(r, f, std::move(ts));
      REQUIRE(Polynomial::parse(r, f, p2.str()) == p2);
    }
  }
}
