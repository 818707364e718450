#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <vector>

#include "twodet/groebner.hpp"
#include "twodet/polynomial.hpp"

namespace twodet {

namespace detail {

using ZPoly = std::vector<mpz_class>;  // coefficient list, index = degree

inline void zp_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  zp_trim(r);
  return r;
}

inline ZPoly zp_shift(const ZPoly& a, int k) {  // multiply by t^k
  if (a.empty()) return a;
  ZPoly r(a.size() + k, 0);
  for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
  return r;
}

inline ZPoly zp_mul_one_minus_tk(const ZPoly& a, int k) {  // a * (1 - t^k)
  ZPoly r(a.size() + k, 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < a.size(); ++i) r[i + k] -= a[i];
  zp_trim(r);
  return r;
}

// numerator N(t) with series(S/I) = N(t)/(1-t)^n, by pivot recursion
inline ZPoly hilbert_numerator_rec(std::vector<Monomial> gens) {
  gens = minimalize_monomials(std::move(gens));
  for (auto& g : gens)
    if (g.is_one()) return {};  // quotient ring is zero
  if (gens.empty()) return {mpz_class(1)};

  bool coprime = true;
  for (size_t i = 0; i < gens.size() && coprime; ++i)
    for (size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!Monomial::coprime(gens[i], gens[j])) coprime = false;
  if (coprime) {
    ZPoly r{mpz_class(1)};
    for (auto& g : gens) r = zp_mul_one_minus_tk(r, g.degree());
    return r;
  }

  // pivot: the variable occurring in the most generators
  std::vector<std::pair<int, int>> freq;  // (var, count)
  for (auto& g : gens)
    for (auto& [v, e] : g.exponents()) {
      bool found = false;
      for (auto& f : freq)
        if (f.first == v) { ++f.second; found = true; break; }
      if (!found) freq.push_back({v, 1});
    }
  int pivot = -1, best = 0;
  for (auto& [v, cnt] : freq)
    if (cnt > best || (cnt == best && (pivot < 0 || v < pivot))) { best = cnt; pivot = v; }

  // N(I) = (1-t) N(gens avoiding pivot) + t N(I : pivot)
  std::vector<Monomial> without;
  for (auto& g : gens)
    if (g.exponent(pivot) == 0) without.push_back(g);
  std::vector<Monomial> colon;
  for (auto& g : gens) {
    if (g.exponent(pivot) == 0) colon.push_back(g);
    else colon.push_back(g / Monomial::var(pivot));
  }
  ZPoly a = zp_mul_one_minus_tk(hilbert_numerator_rec(std::move(without)), 1);
  ZPoly b = zp_shift(hilbert_numerator_rec(std::move(colon)), 1);
  return zp_add(a, b);
}

}  // namespace detail

struct HilbertData {
  std::vector<mpz_class> numerator;  // series = numerator / (1-t)^nvars
  int nvars = 0;
  int dim = 0;                       // Krull dimension of the quotient
  mpz_class multiplicity = 0;        // Q(1) after clearing (1-t)^s; length when dim = 0
  std::vector<mpq_class> hilbert_poly;  // coefficients in k, degree dim-1

  mpq_class hp_eval(long k) const {
    mpq_class v = 0, kp = 1;
    for (auto& c : hilbert_poly) {
      v += c * kp;
      kp *= k;
    }
    return v;
  }
};

// derive dimension, multiplicity, and the Hilbert polynomial from a
// numerator over (1-t)^nvars
inline HilbertData hilbert_from_numerator(std::vector<mpz_class> numerator, int nvars) {
  HilbertData hd;
  hd.nvars = nvars;
  hd.numerator = std::move(numerator);

  if (hd.numerator.empty()) {  // zero quotient
    hd.dim = -1;
    hd.multiplicity = 0;
    return hd;
  }

  // factor out (1-t)^s
  std::vector<mpz_class> q = hd.numerator;
  int s = 0;
  while (true) {
    mpz_class sum = 0;
    for (auto& c : q) sum += c;
    if (sum != 0) break;
    // divide by (1-t): synthetic division at t=1
    std::vector<mpz_class> next(q.size() - 1, 0);
    mpz_class carry = 0;
    // q(t) = (1-t) * next(t)  =>  next_i = q_0 + q_1 + ... + q_i
    for (size_t i = 0; i + 1 < q.size(); ++i) {
      carry += q[i];
      next[i] = carry;
    }
    q = std::move(next);
    detail::zp_trim(q);
    ++s;
    if (q.empty()) break;
  }
  require(!q.empty(), Errc::internal, "hilbert numerator degenerated");
  hd.dim = nvars - s;
  mpz_class q1 = 0;
  for (auto& c : q) q1 += c;
  hd.multiplicity = q1;

  // Hilbert polynomial: HP(k) = sum_j q_j * C(k - j + dim - 1, dim - 1)
  if (hd.dim >= 1) {
    int D = hd.dim;
    std::vector<mpq_class> total(D, 0);
    for (size_t j = 0; j < q.size(); ++j) {
      // C(k - j + D - 1, D - 1) as a polynomial in k
      std::vector<mpq_class> prod{1};
      for (int i = 1; i <= D - 1; ++i) {
        // multiply by (k - j + i)
        std::vector<mpq_class> next(prod.size() + 1, 0);
        mpq_class a = mpq_class(static_cast<long>(i)) - mpq_class(static_cast<long>(j));
        for (size_t m = 0; m < prod.size(); ++m) {
          next[m] += prod[m] * a;
          next[m + 1] += prod[m];
        }
        prod = std::move(next);
      }
      mpz_class fact = 1;
      for (int i = 2; i <= D - 1; ++i) fact *= i;
      for (size_t m = 0; m < prod.size(); ++m)
        total[m] += prod[m] * mpq_class(q[j]) / mpq_class(fact);
    }
    hd.hilbert_poly = std::move(total);
  }
  return hd;
}

// Exact Hilbert data of S/I for a monomial ideal I.
inline HilbertData hilbert_of_monomials(int nvars, std::vector<Monomial> gens) {
  return hilbert_from_numerator(detail::hilbert_numerator_rec(std::move(gens)), nvars);
}

// Checked wrapper: all generators must be monomials.
inline HilbertData hilbert(const Ideal& I) {
  std::vector<Monomial> gens;
  for (auto& g : I.gens) {
    require(g.size() == 1, Errc::input, "hilbert: non-monomial generator");
    gens.push_back(g.terms().front().mono);
  }
  return hilbert_of_monomials(I.ring->size(), std::move(gens));
}

// coefficients of numerator/(1-t)^n up to degree `bound`
inline std::vector<mpz_class> hilbert_series_coeffs(const std::vector<mpz_class>& numerator,
                                                    int n, int bound) {
  // 1/(1-t)^n has coefficients C(n-1+k, n-1)
  std::vector<mpz_class> base(bound + 1);
  for (int k = 0; k <= bound; ++k) {
    mpz_class b = 1;
    for (int i = 1; i <= n - 1; ++i) {
      b *= (k + i);
      b /= i;
    }
    base[k] = (n == 0) ? mpz_class(k == 0 ? 1 : 0) : b;
  }
  std::vector<mpz_class> out(bound + 1, 0);
  for (size_t j = 0; j < numerator.size() && j <= static_cast<size_t>(bound); ++j)
    for (int k = static_cast<int>(j); k <= bound; ++k)
      out[k] += numerator[j] * base[k - j];
  return out;
}

// HF(S/I; k) for k = 0..bound, from the initial ideal's standard monomials.
inline std::vector<mpz_class> hilbert_function(const Ideal& I, const MonomialOrder& ord,
                                               int bound) {
  for (auto& g : I.gens)
    require(g.is_homogeneous(), Errc::input, "hilbert_function: inhomogeneous generator");
  std::vector<Monomial> lms;
  if (!I.gens.empty()) {
    GroebnerBasis gb = buchberger(I, ord);
    lms = initial_ideal(gb, ord);
  }
  HilbertData hd = hilbert_of_monomials(I.ring->size(), std::move(lms));
  return hilbert_series_coeffs(hd.numerator, hd.nvars, bound);
}

}  // namespace twodet
