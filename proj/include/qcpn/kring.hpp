#pragma once

#include "qcpn/truncated_poly.hpp"

namespace qcpn {

/**
 * A K_0-class of the quantum projective space CP^n_q, written in the basis
 * {1, t, ..., t^n} where t = [1] - [L^n_1] is the Euler class of the Hopf
 * line bundle.
 *
 * Line bundles follow the convention [L^n_m] = (1 - t)^m, so L^n_1 is the
 * dual tautological (Hopf) bundle and L^n_{-1} the tautological one.
 */
class KClass {
 public:
  explicit KClass(TruncatedPoly poly) : poly_(std::move(poly)) {}

  static KClass zero(int n) { return KClass(TruncatedPoly::zero(n)); }
  static KClass one(int n) { return KClass(TruncatedPoly::one(n)); }

  int n() const noexcept { return poly_.n(); }
  const TruncatedPoly& poly() const noexcept { return poly_; }
  const std::vector<BigInt>& coeffs() const noexcept { return poly_.coeffs(); }
  /// Constant coefficient; for a class built from a bundle this is its rank.
  const BigInt& rank() const { return poly_[0]; }

  KClass& operator+=(const KClass& rhs) { poly_ += rhs.poly_; return *this; }
  KClass& operator-=(const KClass& rhs) { poly_ -= rhs.poly_; return *this; }
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  friend KClass operator*(const KClass& a, const KClass& b) {
    return KClass(tp_mul(a.poly_, b.poly_));
  }
  friend KClass operator*(const BigInt& s, const KClass& a) { return KClass(s * a.poly_); }
  friend bool operator==(const KClass& a, const KClass& b) { return a.poly_ == b.poly_; }

  std::string to_string() const { return poly_.to_string(); }

 private:
  TruncatedPoly poly_;
};

struct EulerClass {
  KClass value;
  /// Set for n = 0, where K_0 is Z and t vanishes.
  bool degenerate = false;
};

/// The class t = [1] - [L^n_1]. For n = 0 the zero class is returned with
/// `degenerate` set.
EulerClass euler_class(int n);

/// [L^n_m] = (1 - t)^m for every integer m; negative m goes through the
/// unit inverse.
KClass line_class(int n, long m);

/// Pushforward to K_0(CP^{n_target}_q): truncate the t-expansion. Sends
/// line_class(n, m) to line_class(n_target, m). Requires
/// 1 <= n_target <= c.n().
KClass restrict_to(const KClass& c, int n_target);

}  // namespace qcpn
