#include <catch2/catch_amalgamated.hpp>

#include "twodet/invariants.hpp"

using namespace twodet;

TEST_CASE("closed-form fiber multiplicities and dimensions", "[invariants]") {
  REQUIRE(fiber_mult(4, 0) == 11);   // 2^4 - 4 - 1
  REQUIRE(fiber_mult(4, 1) == 10);
  REQUIRE(fiber_dim(4, 1) == 6);     // min(7, 6)
  REQUIRE(fiber_mult(5, 3) == 14);   // c-d = 2: Catalan branch
  REQUIRE(fiber_dim(4, 0) == 5);     // uniform convention: c + 1 at d = 0
}

TEST_CASE("rees multiplicity closed form", "[invariants]") {
  REQUIRE(rees_mult_d1(4) == 36);
  REQUIRE(rees_mult_d1(5) == 89);
  REQUIRE(rees_mult_d1(3) == 13);
}

TEST_CASE("the auxiliary counting functions", "[invariants]") {
  REQUIRE(conca_e0(4, 1) == 4);
  REQUIRE(conca_e1(4, 1) == 3);
  REQUIRE(conca_e0(3, 2) == 9);
}

TEST_CASE("the d=0 branch of the count formula collapses to 2^c - c - 1", "[invariants]") {
  for (int c = 3; c <= 12; ++c) {
    long sum = 0;
    for (int h = 1; h <= c - 1; ++h) sum += binomial(c, h);
    REQUIRE(sum - (c - 1) == (1L << c) - c - 1);
    if (c - 0 >= 3) {
      long viaA = 0;
      for (int j = 2; j <= c; ++j) viaA += binomial(c, c + 1 - j);
      REQUIRE(viaA - (c - 1) * binomial(c, c) == (1L << c) - c - 1);
    }
  }
}

TEST_CASE("rees formula equals the census for 3 <= e <= 6", "[invariants]") {
  for (int e = 3; e <= 6; ++e) {
    SimplicialComplex R = build_delta_R(1, e);
    long formula = (1L << (e + 2)) - static_cast<long>(e + 1) * (e + 1) - 3;
    REQUIRE(static_cast<long>(R.facets.size()) == formula);
  }
}

TEST_CASE("the d=0 Hilbert polynomial matches the oracle fiber ring", "[invariants]") {
  for (int e = 3; e <= 5; ++e) {
    BlowupPresentation p(0, e, kDefaultOracleField);
    MonomialOrder ord = p.order();
    auto [kernel, gb] = fiber_kernel_oracle(p);
    int tvars = e * (e - 1) / 2;
    HilbertData hd = hilbert_of_monomials(tvars, initial_ideal(gb, ord));
    std::vector<mpz_class> hf = hilbert_series_coeffs(hd.numerator, hd.nvars, 4);
    for (int h = 0; h <= 4; ++h) REQUIRE(hf[h] == fiber_hp_d0(e, h));
  }
}

TEST_CASE("cross-check reports at the pinned values", "[invariants]") {
  InvariantReport r41 = cross_check(4, 1);
  REQUIRE(r41.ok());
  REQUIRE(r41.formula_fiber_mult == 10);
  REQUIRE(r41.census_fiber_mult == 10);
  REQUIRE(r41.oracle_fiber_mult == 10);
  REQUIRE(r41.formula_rees_mult == 36);
  REQUIRE(r41.census_rees_mult == 36);
  REQUIRE(r41.oracle_rees_mult == 36);

  InvariantReport r30 = cross_check(3, 0);
  REQUIRE(r30.ok());
  REQUIRE(r30.formula_fiber_mult == 4);
  REQUIRE(r30.census_fiber_dim == 4);
  REQUIRE(!r30.convention_note.empty());

  InvariantReport r53 = cross_check(5, 3, /*with_oracle=*/false);
  REQUIRE(r53.fiber_agree);
  REQUIRE(r53.formula_fiber_mult == 14);
}
