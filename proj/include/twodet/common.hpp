#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twodet {

enum class Errc {
  input,            // malformed input, ring mismatch, bad indices
  cap_exceeded,     // degree cap hit during a basis computation
  certificate,      // a verification produced a counterexample
  non_split,        // pencil eigenvalue not rational over the base field
  not_maximal_codim,// block signature incompatible with codim = c
  cone,             // matrix entries do not span the degree-1 part
  internal          // broken invariant (a bug witness)
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool ok, Errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

// Deterministic xorshift-based generator. std::uniform_int_distribution is
// implementation-defined, so bounded draws are done by hand.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  uint64_t next() {
    uint64_t x = state_;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    state_ = x;
    return x * 0x2545f4914f6cdd1dULL;
  }

  // uniform-ish in [0, n); bias is irrelevant for test-data generation
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }

private:
  uint64_t state_;
};

inline long long binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace twodet
