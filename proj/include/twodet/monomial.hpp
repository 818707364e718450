#pragma once

#include <algorithm>
#include <compare>
#include <vector>

#include "twodet/common.hpp"

namespace twodet {

// Sparse exponent list; indices strictly increasing, exponents positive.
class Monomial {
public:
  Monomial() = default;

  static Monomial one() { return {}; }

  static Monomial var(int v, int exp = 1) {
    Monomial m;
    if (exp != 0) m.ex_.push_back({v, exp});
    require(exp >= 0, Errc::input, "negative exponent");
    return m;
  }

  static Monomial of(std::vector<std::pair<int, int>> ex) {
    std::sort(ex.begin(), ex.end());
    Monomial m;
    for (auto& [v, e] : ex) {
      require(e >= 0, Errc::input, "negative exponent");
      if (e == 0) continue;
      if (!m.ex_.empty() && m.ex_.back().first == v) m.ex_.back().second += e;
      else m.ex_.push_back({v, e});
    }
    return m;
  }

  bool is_one() const { return ex_.empty(); }
  int degree() const {
    int s = 0;
    for (auto& [v, e] : ex_) s += e;
    return s;
  }
  int exponent(int v) const {
    for (auto& [w, e] : ex_)
      if (w == v) return e;
    return 0;
  }
  const std::vector<std::pair<int, int>>& exponents() const { return ex_; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    r.ex_.reserve(ex_.size() + o.ex_.size());
    size_t i = 0, j = 0;
    while (i < ex_.size() || j < o.ex_.size()) {
      if (j == o.ex_.size() || (i < ex_.size() && ex_[i].first < o.ex_[j].first))
        r.ex_.push_back(ex_[i++]);
      else if (i == ex_.size() || o.ex_[j].first < ex_[i].first)
        r.ex_.push_back(o.ex_[j++]);
      else {
        r.ex_.push_back({ex_[i].first, ex_[i].second + o.ex_[j].second});
        ++i, ++j;
      }
    }
    return r;
  }

  bool divides(const Monomial& o) const {
    size_t j = 0;
    for (auto& [v, e] : ex_) {
      while (j < o.ex_.size() && o.ex_[j].first < v) ++j;
      if (j == o.ex_.size() || o.ex_[j].first != v || o.ex_[j].second < e) return false;
    }
    return true;
  }

  // this / o; requires divisibility
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    size_t j = 0;
    for (auto& [v, e] : ex_) {
      int sub = 0;
      while (j < o.ex_.size() && o.ex_[j].first < v) ++j;
      if (j < o.ex_.size() && o.ex_[j].first == v) sub = o.ex_[j].second;
      require(e >= sub, Errc::input, "monomial division not exact");
      if (e > sub) r.ex_.push_back({v, e - sub});
    }
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < a.ex_.size() || j < b.ex_.size()) {
      if (j == b.ex_.size() || (i < a.ex_.size() && a.ex_[i].first < b.ex_[j].first))
        r.ex_.push_back(a.ex_[i++]);
      else if (i == a.ex_.size() || b.ex_[j].first < a.ex_[i].first)
        r.ex_.push_back(b.ex_[j++]);
      else {
        r.ex_.push_back({a.ex_[i].first, std::max(a.ex_[i].second, b.ex_[j].second)});
        ++i, ++j;
      }
    }
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    size_t i = 0, j = 0;
    while (i < a.ex_.size() && j < b.ex_.size()) {
      if (a.ex_[i].first < b.ex_[j].first) ++i;
      else if (b.ex_[j].first < a.ex_[i].first) ++j;
      else return false;
    }
    return true;
  }

  bool is_squarefree() const {
    for (auto& [v, e] : ex_)
      if (e > 1) return false;
    return true;
  }

  bool operator==(const Monomial&) const = default;

  // structural order used for canonical term sorting: degree, then
  // lex with lower variable index ranked higher
  static std::strong_ordering cmp(const Monomial& a, const Monomial& b) {
    if (int da = a.degree(), db = b.degree(); da != db)
      return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
    size_t i = 0, j = 0;
    while (i < a.ex_.size() && j < b.ex_.size()) {
      if (a.ex_[i].first != b.ex_[j].first)
        // the one holding the smaller variable index is lex-larger
        return a.ex_[i].first < b.ex_[j].first ? std::strong_ordering::greater
                                               : std::strong_ordering::less;
      if (a.ex_[i].second != b.ex_[j].second)
        return a.ex_[i].second < b.ex_[j].second ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
      ++i, ++j;
    }
    if (i < a.ex_.size()) return std::strong_ordering::greater;
    if (j < b.ex_.size()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }

private:
  std::vector<std::pair<int, int>> ex_;
};

}  // namespace twodet
