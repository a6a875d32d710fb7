// Exact rational scalars.  Thin layer over GMP's mpq_class: canonical
// construction, fraction-string round trip ("-3/2", "7"), and the bit-length
// measure used for pivot selection.
#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace gldirac {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat frac(long num, long den) {
  if (den == 0) throw std::invalid_argument("frac: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// "num/den" with den omitted when 1; sign on the numerator.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

// Bits of numerator plus bits of denominator; the pivot-size heuristic.
inline std::size_t bit_length(const Rat& q) {
  return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

inline std::size_t bit_length(const Int& z) {
  return mpz_sizeinbase(z.get_mpz_t(), 2);
}

inline int sign(const Rat& q) { return sgn(q); }

}  // namespace gldirac
