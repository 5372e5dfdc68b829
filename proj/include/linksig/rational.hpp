// Exact arbitrary-precision integers and rationals (GMP-backed) plus the
// small helpers the rest of the library needs.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace linksig {

using Int = mpz_class;
using Rat = mpq_class;

// num/den with canonicalization (mpq_class does not reduce on construction).
inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline int sign_of(const Rat& x) { return sgn(x); }
inline int sign_of(const Int& x) { return sgn(x); }

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_rat(const Rat& x) {
  return floor_div(x.get_num(), x.get_den());
}

inline Int ceil_rat(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

// The rational with the smallest denominator in the closed interval [lo, hi]
// (Stern-Brocot descent). Among equal-denominator candidates the result is
// the standard continued-fraction choice.
Rat simplest_rational_in(Rat lo, Rat hi);

// Exact decimal-free text form, "p/q" or "p" when integral.
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

// Deterministic 64-bit generator (splitmix64); used instead of
// std::uniform_int_distribution so streams are identical across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform on [lo, hi] via rejection sampling.
  long next_in(long lo, long hi);

 private:
  std::uint64_t state_;
};

}  // namespace linksig
