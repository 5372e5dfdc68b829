#include "linksig/rational.hpp"

#include <stdexcept>
#include <utility>

namespace linksig {

Rat simplest_rational_in(Rat lo, Rat hi) {
  if (lo > hi) std::swap(lo, hi);
  // An integer in [lo, hi]?  Take the one closest to zero.
  Int c = ceil_rat(lo);
  Int f = floor_rat(hi);
  if (c <= f) {
    if (c <= 0 && 0 <= f) return Rat(0);
    return c > 0 ? Rat(c) : Rat(f);
  }
  // lo, hi lie strictly between consecutive integers n and n+1.
  Int n = floor_rat(lo);
  Rat inner = simplest_rational_in(Rat(1) / (hi - Rat(n)), Rat(1) / (lo - Rat(n)));
  return Rat(n) + Rat(1) / inner;
}

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const Int& x) { return x.get_str(); }

long SplitMix64::next_in(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("next_in: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return lo + static_cast<long>(next());
  std::uint64_t limit = ~0ull - (~0ull % span);
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return lo + static_cast<long>(v % span);
}

}  // namespace linksig
