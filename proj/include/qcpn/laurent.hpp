#pragma once

#include <map>
#include <string>

#include "qcpn/bigint.hpp"

namespace qcpn {

/**
 * Laurent polynomial in q with integer coefficients, i.e. an element of
 * Z[q, q^-1].
 *
 * Stored sparsely as exponent -> coefficient. Zero coefficients are never
 * stored, so two equal values always have identical maps. The *-involution
 * of the sphere algebra fixes every LaurentQ (q is real).
 */
class LaurentQ {
 public:
  using Terms = std::map<int, BigInt>;

  LaurentQ() = default;
  LaurentQ(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentQ(const BigInt& constant);

  static LaurentQ monomial(const BigInt& coefficient, int exponent);
  /// q^exponent
  static LaurentQ q(int exponent = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  const Terms& terms() const noexcept { return terms_; }
  BigInt coefficient(int exponent) const;

  /// Specialization q = 1 (sum of coefficients).
  BigInt at_one() const;

  LaurentQ& operator+=(const LaurentQ& rhs);
  LaurentQ& operator-=(const LaurentQ& rhs);
  LaurentQ& operator*=(const LaurentQ& rhs);

  friend LaurentQ operator+(LaurentQ lhs, const LaurentQ& rhs) { return lhs += rhs; }
  friend LaurentQ operator-(LaurentQ lhs, const LaurentQ& rhs) { return lhs -= rhs; }
  friend LaurentQ operator*(LaurentQ lhs, const LaurentQ& rhs) { return lhs *= rhs; }
  LaurentQ operator-() const;

  friend bool operator==(const LaurentQ& lhs, const LaurentQ& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

  /// Ascending exponents, e.g. "q^-2 - 1", "3*q", "-q^4". Zero is "0".
  std::string to_string() const;

 private:
  void add_term(int exponent, const BigInt& coefficient);

  Terms terms_;
};

}  // namespace qcpn
