#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "twodet/common.hpp"

namespace twodet {

// Coefficient field selector: p == 0 means the rationals, otherwise F_p.
struct Field {
  uint32_t p = 0;

  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;

  static Field rationals() { return Field{0}; }
  static Field fp(uint32_t p) {
    require(p >= 2, Errc::input, "prime field modulus must be >= 2");
    return Field{p};
  }

  // accepts "rational" | "fp:P"
  static Field parse(const std::string& s) {
    if (s == "rational" || s == "qq" || s == "QQ") return rationals();
    if (s.rfind("fp:", 0) == 0) return fp(static_cast<uint32_t>(std::stoul(s.substr(3))));
    fail(Errc::input, "unknown field descriptor: " + s);
  }

  std::string str() const { return p == 0 ? "rational" : "fp:" + std::to_string(p); }
};

inline const Field kDefaultOracleField = Field{32003};

// Immutable exact field element: a rational in lowest terms with positive
// denominator, or a residue in [0, p).
class Scalar {
public:
  Scalar() : p_(0), r_(0) {}  // rational zero

  static Scalar zero(Field f) { return f.is_rational() ? rational(0) : fp(f.p, 0); }
  static Scalar one(Field f) { return f.is_rational() ? rational(1) : fp(f.p, 1); }

  static Scalar rational(long num, long den = 1) {
    require(den != 0, Errc::input, "zero denominator");
    Scalar s;
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
  }

  static Scalar rational(mpq_class q) {
    Scalar s;
    s.q_ = std::move(q);
    s.q_.canonicalize();
    return s;
  }

  static Scalar fp(uint32_t p, long long v) {
    Scalar s;
    s.p_ = p;
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += p;
    s.r_ = static_cast<uint64_t>(m);
    return s;
  }

  static Scalar of_int(Field f, long long v) {
    return f.is_rational() ? rational(mpq_class(static_cast<long>(v))) : fp(f.p, v);
  }

  Field field() const { return Field{p_}; }
  bool is_rational_kind() const { return p_ == 0; }
  bool is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  const mpq_class& rat() const {
    require(p_ == 0, Errc::input, "not a rational scalar");
    return q_;
  }
  uint64_t residue() const { return r_; }

  Scalar operator-() const {
    Scalar s(*this);
    if (p_ == 0) s.q_ = -s.q_;
    else if (s.r_) s.r_ = p_ - s.r_;
    return s;
  }

  Scalar operator+(const Scalar& o) const {
    check(o);
    Scalar s(*this);
    if (p_ == 0) s.q_ += o.q_;
    else s.r_ = (s.r_ + o.r_) % p_;
    return s;
  }

  Scalar operator-(const Scalar& o) const { return *this + (-o); }

  Scalar operator*(const Scalar& o) const {
    check(o);
    Scalar s(*this);
    if (p_ == 0) s.q_ *= o.q_;
    else s.r_ = (s.r_ * o.r_) % p_;
    return s;
  }

  Scalar inv() const {
    require(!is_zero(), Errc::input, "division by zero");
    Scalar s(*this);
    if (p_ == 0) {
      s.q_ = 1 / s.q_;
    } else {
      // extended Euclid on (r, p)
      int64_t t = 0, nt = 1, r = p_, nr = static_cast<int64_t>(r_);
      while (nr != 0) {
        int64_t q = r / nr;
        t -= q * nt; std::swap(t, nt);
        r -= q * nr; std::swap(r, nr);
      }
      if (t < 0) t += p_;
      s.r_ = static_cast<uint64_t>(t);
    }
    return s;
  }

  Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

  bool operator==(const Scalar& o) const {
    return p_ == o.p_ && (p_ == 0 ? q_ == o.q_ : r_ == o.r_);
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const {
    if (p_ != 0) return std::to_string(r_);
    return q_.get_str();
  }

  // grammar: decimal integer or "a/b"
  static Scalar parse(Field f, const std::string& s) {
    auto slash = s.find('/');
    if (f.is_rational()) {
      mpq_class q;
      if (q.set_str(s, 10) != 0) fail(Errc::input, "bad rational literal: " + s);
      return rational(q);
    }
    if (slash == std::string::npos) {
      mpz_class z;
      if (z.set_str(s, 10) != 0) fail(Errc::input, "bad integer literal: " + s);
      mpz_class m = z % static_cast<long>(f.p);
      long v = m.get_si();
      return fp(f.p, v);
    }
    Scalar num = parse(f, s.substr(0, slash));
    Scalar den = parse(f, s.substr(slash + 1));
    return num / den;
  }

private:
  void check(const Scalar& o) const {
    require(p_ == o.p_, Errc::input, "scalar field mismatch");
  }

  uint32_t p_;
  uint64_t r_;
  mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace twodet
