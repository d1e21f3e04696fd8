#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nildist {

using BigInt = mpz_class;

/// Exponent vector with respect to an ordered basis.
using Coords = std::vector<BigInt>;

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline int cmpabs(const BigInt& a, const BigInt& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

inline bool divides(const BigInt& d, const BigInt& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// g = s*a + t*b with g = gcd(a, b) >= 0.
struct ExtendedGcd {
  BigInt g, s, t;
};

inline ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b) {
  ExtendedGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

inline std::optional<std::int64_t> to_int64(const BigInt& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) return std::nullopt;
  return static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

std::string format_coords(const Coords& v);

}  // namespace nildist
