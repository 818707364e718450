#include <catch2/catch_amalgamated.hpp>

#include "twodet/complexes.hpp"
#include "twodet/hilbert.hpp"

using namespace twodet;

TEST_CASE("k[x]/(x^2): numerator 1+t after clearing, length 2", "[hilbert]") {
  HilbertData hd = hilbert_of_monomials(1, {Monomial::var(0, 2)});
  REQUIRE(hd.nvars == 1);
  REQUIRE(hd.dim == 0);
  REQUIRE(hd.multiplicity == 2);
}

TEST_CASE("hilbert rejects non-monomial generators", "[hilbert]") {
  RingPtr r = make_ring({{"x", VarRole::Generic}, {"y", VarRole::Generic}});
  Field f = Field::rationals();
  Ideal I = Ideal::of(r, f, {Polynomial::parse(r, f, "x + y")});
  REQUIRE_THROWS_AS(hilbert(I), Error);
}

TEST_CASE("hilbert_function rejects inhomogeneous input", "[hilbert]") {
  RingPtr r = make_ring({{"x", VarRole::Generic}, {"y", VarRole::Generic}});
  Field f = Field::rationals();
  Ideal I = Ideal::of(r, f, {Polynomial::parse(r, f, "x^2 + y")});
  REQUIRE_THROWS_AS(hilbert_function(I, MonomialOrder::grevlex(r), 3), Error);
}

TEST_CASE("initial complex ideals: pinned dimensions and multiplicities", "[hilbert]") {
  // I(Delta_F(0,4)) in 6 T-variables: dim 4, mult 4
  SimplicialComplex F04 = build_delta_F(0, 4);
  std::vector<Monomial> gens;
  for (auto& [a, b] : F04.forbidden) gens.push_back(Monomial::var(a) * Monomial::var(b));
  HilbertData hd = hilbert_of_monomials(F04.nverts(), gens);
  REQUIRE(hd.dim == 4);
  REQUIRE(hd.multiplicity == 4);

  // I(Delta_R(1,4)): dim 7, mult 36
  SimplicialComplex R14 = build_delta_R(1, 4);
  std::vector<Monomial> rgens;
  for (auto& [a, b] : R14.forbidden) rgens.push_back(Monomial::var(a) * Monomial::var(b));
  HilbertData hr = hilbert_of_monomials(R14.nverts(), rgens);
  REQUIRE(hr.dim == 7);
  REQUIRE(hr.multiplicity == 36);
}

TEST_CASE("hilbert function: free ring and determinantal members", "[hilbert]") {
  RingPtr r2 = make_ring({{"x", VarRole::Generic}, {"y", VarRole::Generic}});
  Field f = Field::rationals();
  Ideal zero = Ideal::of(r2, f, {});
  std::vector<mpz_class> hf = hilbert_function(zero, MonomialOrder::grevlex(r2), 3);
  REQUIRE(hf == std::vector<mpz_class>{1, 2, 3, 4});

  // two members of H_{2,1} in 4 variables have the same Hilbert function
  Field fp = Field::fp(32003);
  BlockMatrix a = build_matrix({Block::scroll(1), Block::jordan(2, Scalar::fp(32003, 0))}, fp);
  BlockMatrix b = build_matrix(
      {Block::scroll(1), Block::jordan(1, Scalar::fp(32003, 1)), Block::jordan(1, Scalar::fp(32003, 2))},
      fp);
  auto hf_of = [&](const BlockMatrix& bm) {
    return hilbert_function(minors_ideal(bm.matrix), MonomialOrder::grevlex(bm.matrix.ring), 3);
  };
  REQUIRE(hf_of(a) == hf_of(b));
}

TEST_CASE("hilbert polynomial matches the series in high degrees", "[hilbert]") {
  // squarefree quadrics in 4 variables
  std::vector<Monomial> gens{Monomial::var(0) * Monomial::var(1),
                             Monomial::var(2) * Monomial::var(3)};
  HilbertData hd = hilbert_of_monomials(4, gens);
  std::vector<mpz_class> hf = hilbert_series_coeffs(hd.numerator, 4, 10);
  for (int k = 5; k <= 10; ++k) REQUIRE(mpq_class(hf[k]) == hd.hp_eval(k));
}

TEST_CASE("hilbert agrees with the f-vector route on squarefree ideals", "[hilbert]") {
  for (auto [d, e] : std::vector<std::pair<int, int>>{{2, 2}, {0, 4}, {1, 3}, {1, 4}}) {
    SimplicialComplex K = build_delta_F(d, e);
    std::vector<Monomial> gens;
    for (auto& [a, b] : K.forbidden) gens.push_back(Monomial::var(a) * Monomial::var(b));
    HilbertData via_ideal = hilbert_of_monomials(K.nverts(), gens);
    HilbertData via_fvec = sr_hilbert(K);
    REQUIRE(via_ideal.numerator == via_fvec.numerator);
    REQUIRE(via_ideal.dim == via_fvec.dim);
    REQUIRE(via_ideal.multiplicity == via_fvec.multiplicity);
  }
}
