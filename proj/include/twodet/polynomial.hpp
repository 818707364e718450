#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "twodet/monomial.hpp"
#include "twodet/order.hpp"
#include "twodet/ring.hpp"
#include "twodet/scalar.hpp"

namespace twodet {

struct Term {
  Monomial mono;
  Scalar coeff;
};

// Persistent value type. Terms are kept sorted descending under the
// structural monomial order, so equality is structural and printing is
// canonical.
class Polynomial {
public:
  Polynomial() = default;

  static Polynomial zero(RingPtr ring, Field f) {
    Polynomial p;
    p.ring_ = std::move(ring);
    p.field_ = f;
    return p;
  }

  static Polynomial constant(RingPtr ring, Scalar c) {
    Polynomial p = zero(std::move(ring), c.field());
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(), std::move(c)});
    return p;
  }

  static Polynomial variable(RingPtr ring, int var, Field f) {
    require(var >= 0 && var < ring->size(), Errc::input, "variable index out of range");
    Polynomial p = zero(std::move(ring), f);
    p.terms_.push_back({Monomial::var(var), Scalar::one(f)});
    return p;
  }

  static Polynomial term(RingPtr ring, Monomial m, Scalar c) {
    Polynomial p = zero(std::move(ring), c.field());
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  static Polynomial of_terms(RingPtr ring, Field f, std::vector<Term> terms) {
    Polynomial p = zero(std::move(ring), f);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return Monomial::cmp(a.mono, b.mono) == std::strong_ordering::greater;
    });
    for (auto& t : terms) {
      if (t.coeff.is_zero()) continue;
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
        if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      } else {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  Field field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  int degree() const {
    int d = -1;
    for (auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().mono.degree();
    for (auto& t : terms_)
      if (t.mono.degree() != d) return false;
    return true;
  }

  Polynomial operator-() const {
    Polynomial p(*this);
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  Polynomial operator+(const Polynomial& o) const {
    check_compat(o);
    Polynomial r = zero(ring_, field_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size()) { r.terms_.push_back(terms_[i++]); continue; }
      if (i == terms_.size()) { r.terms_.push_back(o.terms_[j++]); continue; }
      auto c = Monomial::cmp(terms_[i].mono, o.terms_[j].mono);
      if (c == std::strong_ordering::greater) r.terms_.push_back(terms_[i++]);
      else if (c == std::strong_ordering::less) r.terms_.push_back(o.terms_[j++]);
      else {
        Scalar s = terms_[i].coeff + o.terms_[j].coeff;
        if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
        ++i, ++j;
      }
    }
    return r;
  }

  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

  Polynomial operator*(const Scalar& c) const {
    if (c.is_zero()) return zero(ring_, field_);
    Polynomial p(*this);
    for (auto& t : p.terms_) t.coeff = t.coeff * c;
    return p;
  }

  Polynomial mul_term(const Monomial& m, const Scalar& c) const {
    if (c.is_zero()) return zero(ring_, field_);
    Polynomial p = zero(ring_, field_);
    p.terms_.reserve(terms_.size());
    for (auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
    // multiplying by a fixed monomial preserves the structural sort? only for
    // the degree part; re-sort to stay canonical
    std::sort(p.terms_.begin(), p.terms_.end(), [](const Term& a, const Term& b) {
      return Monomial::cmp(a.mono, b.mono) == std::strong_ordering::greater;
    });
    return p;
  }

  Polynomial operator*(const Polynomial& o) const {
    check_compat(o);
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (auto& a : terms_)
      for (auto& b : o.terms_) acc.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return of_terms(ring_, field_, std::move(acc));
  }

  Polynomial pow(int k) const {
    require(k >= 0, Errc::input, "negative power");
    Polynomial r = constant(ring_, Scalar::one(field_));
    Polynomial base(*this);
    while (k) {
      if (k & 1) r = r * base;
      base = k > 1 ? base * base : base;
      k >>= 1;
    }
    return r;
  }

  bool operator==(const Polynomial& o) const {
    if (field_ != o.field_ || terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
        return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Ring homomorphism on the polynomial algebra. Variables absent from the
  // mapping go to the same-named variable of the target ring; a used variable
  // with no image and no name match is an error.
  Polynomial substitute(const std::map<int, Polynomial>& images, RingPtr target) const {
    Field f = field_;
    Polynomial result = zero(target, f);
    for (auto& t : terms_) {
      Polynomial prod = constant(target, t.coeff);
      for (auto& [v, e] : t.mono.exponents()) {
        Polynomial img = zero(target, f);
        auto it = images.find(v);
        if (it != images.end()) {
          img = it->second;
          require(img.ring().get() == target.get(), Errc::input,
                  "substitution image lives in the wrong ring");
        } else {
          const std::string& name = ring_->var(v).name;
          require(target->has(name), Errc::input,
                  "substitution: no image for variable " + name);
          img = variable(target, target->index_of(name), f);
        }
        prod = prod * img.pow(e);
        if (prod.is_zero()) break;
      }
      result = result + prod;
    }
    return result;
  }

  Polynomial rename(RingPtr target) const { return substitute({}, std::move(target)); }

  const Term& leading_term(const MonomialOrder& ord) const {
    require(!terms_.empty(), Errc::input, "leading term of zero polynomial");
    size_t best = 0;
    for (size_t i = 1; i < terms_.size(); ++i)
      if (ord.greater(terms_[i].mono, terms_[best].mono)) best = i;
    return terms_[best];
  }
  const Monomial& leading_monomial(const MonomialOrder& ord) const {
    return leading_term(ord).mono;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& t : terms_) {
      Scalar c = t.coeff;
      bool neg = false;
      if (c.is_rational_kind() && c.rat() < 0) { neg = true; c = -c; }
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      bool unit_mono = t.mono.is_one();
      if (!c.is_one() || unit_mono) {
        out += c.str();
        if (!unit_mono) out += "*";
      }
      bool first_var = true;
      for (auto& [v, e] : t.mono.exponents()) {
        if (!first_var) out += "*";
        first_var = false;
        out += ring_->var(v).name;
        if (e > 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

  static Polynomial parse(RingPtr ring, Field f, const std::string& text);

private:
  void check_compat(const Polynomial& o) const {
    require(ring_.get() == o.ring_.get(), Errc::input, "polynomial ring mismatch");
    require(field_ == o.field_, Errc::input, "polynomial field mismatch");
  }

  RingPtr ring_;
  Field field_;
  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

namespace detail {

class PolyParser {
public:
  PolyParser(RingPtr ring, Field f, const std::string& s)
      : ring_(std::move(ring)), field_(f), s_(s) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip_ws();
    bool neg = eat_sign();
    while (true) {
      Term t = parse_term();
      if (neg) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_ws();
      if (pos_ == s_.size()) break;
      char c = s_[pos_];
      require(c == '+' || c == '-', Errc::input, "expected '+' or '-' in polynomial: " + s_);
      neg = (c == '-');
      ++pos_;
      skip_ws();
    }
    return Polynomial::of_terms(ring_, field_, std::move(terms));
  }

private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat_sign() {
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      bool neg = s_[pos_] == '-';
      ++pos_;
      skip_ws();
      return neg;
    }
    return false;
  }

  Term parse_term() {
    Scalar coeff = Scalar::one(field_);
    std::vector<std::pair<int, int>> expo;
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = coeff * parse_number();
        have_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        auto [v, e] = parse_var_power();
        expo.push_back({v, e});
        have_factor = true;
      } else {
        break;
      }
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    require(have_factor, Errc::input, "empty term in polynomial: " + s_);
    return {Monomial::of(std::move(expo)), std::move(coeff)};
  }

  Scalar parse_number() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string lit = s_.substr(start, pos_ - start);
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      skip_ws();
      size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      require(pos_ > dstart, Errc::input, "bad fraction in polynomial: " + s_);
      lit += "/" + s_.substr(dstart, pos_ - dstart);
    }
    return Scalar::parse(field_, lit);
  }

  std::pair<int, int> parse_var_power() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    if (pos_ < s_.size() && s_[pos_] == '[') {
      // bracketed T-style name
      size_t close = s_.find(']', pos_);
      require(close != std::string::npos, Errc::input, "unterminated '[' in: " + s_);
      name += s_.substr(pos_, close - pos_ + 1);
      pos_ = close + 1;
    }
    int var = ring_->index_of(name);
    int exp = 1;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip_ws();
      size_t estart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      require(pos_ > estart, Errc::input, "bad exponent in: " + s_);
      exp = std::stoi(s_.substr(estart, pos_ - estart));
    }
    return {var, exp};
  }

  RingPtr ring_;
  Field field_;
  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial Polynomial::parse(RingPtr ring, Field f, const std::string& text) {
  std::string trimmed = text;
  // "0" is the canonical zero
  size_t a = trimmed.find_first_not_of(" \t");
  size_t b = trimmed.find_last_not_of(" \t");
  if (a == std::string::npos) fail(Errc::input, "empty polynomial text");
  trimmed = trimmed.substr(a, b - a + 1);
  if (trimmed == "0") return zero(std::move(ring), f);
  return detail::PolyParser(std::move(ring), f, trimmed).run();
}

}  // namespace twodet
