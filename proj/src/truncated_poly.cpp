#include "qcpn/truncated_poly.hpp"

#include <sstream>

#include "qcpn/errors.hpp"

namespace qcpn {
namespace {

void require_same_order(const TruncatedPoly& a, const TruncatedPoly& b) {
  if (a.n() != b.n()) throw OrderMismatch(a.n(), b.n());
}

}  // namespace

TruncatedPoly::TruncatedPoly(int n, std::vector<BigInt> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  if (n < 0) throw DomainError("truncation order must be nonnegative");
  if (coeffs_.size() != static_cast<std::size_t>(n) + 1)
    throw DomainError("expected " + std::to_string(n + 1) +
                      " coefficients, got " + std::to_string(coeffs_.size()));
}

TruncatedPoly TruncatedPoly::zero(int n) {
  if (n < 0) throw DomainError("truncation order must be nonnegative");
  return {n, std::vector<BigInt>(static_cast<std::size_t>(n) + 1, BigInt(0))};
}

TruncatedPoly TruncatedPoly::one(int n) { return monomial(n, 0); }

TruncatedPoly TruncatedPoly::monomial(int n, int degree, const BigInt& c) {
  TruncatedPoly p = zero(n);
  if (degree < 0) throw DomainError("negative degree");
  if (degree <= n) p.coeffs_[static_cast<std::size_t>(degree)] = c;
  return p;
}

bool TruncatedPoly::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

TruncatedPoly& TruncatedPoly::operator+=(const TruncatedPoly& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

TruncatedPoly& TruncatedPoly::operator-=(const TruncatedPoly& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

TruncatedPoly& TruncatedPoly::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedPoly TruncatedPoly::operator-() const {
  TruncatedPoly result = *this;
  for (auto& c : result.coeffs_) c = -c;
  return result;
}

std::string TruncatedPoly::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= n_; ++k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    BigInt magnitude = abs(c);
    if (k == 0) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out << magnitude.get_str() << "*";
    out << "t";
    if (k > 1) out << "^" << k;
  }
  return first ? "0" : out.str();
}

TruncatedPoly tp_add(const TruncatedPoly& a, const TruncatedPoly& b) { return a + b; }

TruncatedPoly tp_mul(const TruncatedPoly& a, const TruncatedPoly& b) {
  require_same_order(a, b);
  const int n = a.n();
  std::vector<BigInt> out(static_cast<std::size_t>(n) + 1, BigInt(0));
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return {n, std::move(out)};
}

TruncatedPoly tp_pow(const TruncatedPoly& a, int exponent) {
  if (exponent < 0) throw DomainError("tp_pow requires a nonnegative exponent");
  TruncatedPoly result = TruncatedPoly::one(a.n());
  TruncatedPoly base = a;
  for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
    if (e & 1U) result = tp_mul(result, base);
    if (e > 1) base = tp_mul(base, base);
  }
  return result;
}

TruncatedPoly tp_invert_unit(const TruncatedPoly& a) {
  const BigInt& a0 = a[0];
  if (a0 != 1 && a0 != -1) throw NotInvertible();
  const int n = a.n();
  // a0 is its own inverse, so b_k = -a0 * sum_{i=1..k} a_i b_{k-i}.
  std::vector<BigInt> b(static_cast<std::size_t>(n) + 1, BigInt(0));
  b[0] = a0;
  for (int k = 1; k <= n; ++k) {
    BigInt acc = 0;
    for (int i = 1; i <= k; ++i) acc += a[i] * b[static_cast<std::size_t>(k - i)];
    b[static_cast<std::size_t>(k)] = -a0 * acc;
  }
  return {n, std::move(b)};
}

}  // namespace qcpn
