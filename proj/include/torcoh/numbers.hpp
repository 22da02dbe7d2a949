#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "torcoh/errors.hpp"

namespace torcoh {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int rat_floor(const Rat& x) { return floor_div(x.get_num(), x.get_den()); }

// x - floor(x), in [0,1).
inline Rat rat_frac(const Rat& x) { return x - Rat(rat_floor(x)); }

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

std::size_t binom(std::size_t n, std::size_t k);

std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);  // accepts "p" and "p/q"; throws InputError

}  // namespace torcoh
