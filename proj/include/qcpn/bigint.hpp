#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qcpn {

/// Arbitrary-precision signed integer. Every coefficient in the library is
/// one of these; nothing is ever rounded.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

/// Generalized binomial coefficient m(m-1)...(m-k+1)/k!, defined for every
/// integer m. Returns 0 for k < 0, and for 0 <= m < k.
inline BigInt binomial(std::int64_t m, std::int64_t k) {
  if (k < 0) return 0;
  BigInt top(std::to_string(m));
  BigInt result;
  mpz_bin_ui(result.get_mpz_t(), top.get_mpz_t(),
             static_cast<unsigned long>(k));
  return result;
}

}  // namespace qcpn
