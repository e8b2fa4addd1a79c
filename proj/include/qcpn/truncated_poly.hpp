#pragma once

#include <string>
#include <vector>

#include "qcpn/bigint.hpp"

namespace qcpn {

/**
 * Element of the truncated ring Z[t]/t^{n+1}.
 *
 * `coeffs()[k]` is the coefficient of t^k and there are always exactly n+1
 * of them. Binary operations on operands with different n throw
 * OrderMismatch; there is no implicit coercion between orders.
 */
class TruncatedPoly {
 public:
  /// Throws DomainError when n < 0 or coeffs.size() != n + 1.
  TruncatedPoly(int n, std::vector<BigInt> coeffs);

  static TruncatedPoly zero(int n);
  static TruncatedPoly one(int n);
  /// c * t^degree; degrees above n give the zero polynomial.
  static TruncatedPoly monomial(int n, int degree, const BigInt& c = 1);

  int n() const noexcept { return n_; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  const BigInt& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  bool is_zero() const;

  TruncatedPoly& operator+=(const TruncatedPoly& rhs);
  TruncatedPoly& operator-=(const TruncatedPoly& rhs);
  TruncatedPoly& operator*=(const BigInt& scalar);

  friend TruncatedPoly operator+(TruncatedPoly a, const TruncatedPoly& b) { return a += b; }
  friend TruncatedPoly operator-(TruncatedPoly a, const TruncatedPoly& b) { return a -= b; }
  friend TruncatedPoly operator*(TruncatedPoly a, const BigInt& s) { return a *= s; }
  friend TruncatedPoly operator*(const BigInt& s, TruncatedPoly a) { return a *= s; }
  TruncatedPoly operator-() const;

  friend bool operator==(const TruncatedPoly& a, const TruncatedPoly& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

  /// "c0 + c1*t + c2*t^2 + ...", zero terms omitted, unit coefficients
  /// elided and negative terms written with " - ". The zero polynomial is "0".
  std::string to_string() const;

 private:
  int n_;
  std::vector<BigInt> coeffs_;
};

TruncatedPoly tp_add(const TruncatedPoly& a, const TruncatedPoly& b);

/// Convolution product, terms of degree > n discarded.
TruncatedPoly tp_mul(const TruncatedPoly& a, const TruncatedPoly& b);

TruncatedPoly tp_pow(const TruncatedPoly& a, int exponent);

/// Inverse in Z[t]/t^{n+1}. Requires a unit constant term (+1 or -1);
/// otherwise throws NotInvertible.
TruncatedPoly tp_invert_unit(const TruncatedPoly& a);

inline TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) {
  return tp_mul(a, b);
}

}  // namespace qcpn
