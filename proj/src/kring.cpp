#include "qcpn/kring.hpp"

#include "qcpn/errors.hpp"

namespace qcpn {

EulerClass euler_class(int n) {
  if (n < 0) throw DomainError("dimension must be nonnegative");
  if (n == 0) return {KClass::zero(0), true};
  return {KClass(TruncatedPoly::monomial(n, 1)), false};
}

KClass line_class(int n, long m) {
  // 1 - t
  TruncatedPoly hopf = TruncatedPoly::one(n) - TruncatedPoly::monomial(n, 1);
  const long magnitude = m < 0 ? -m : m;
  TruncatedPoly power = tp_pow(hopf, static_cast<int>(magnitude));
  return KClass(m < 0 ? tp_invert_unit(power) : power);
}

KClass restrict_to(const KClass& c, int n_target) {
  if (n_target < 1 || n_target > c.n())
    throw DomainError("restriction target must satisfy 1 <= n_target <= " +
                      std::to_string(c.n()) + ", got " + std::to_string(n_target));
  const auto& src = c.coeffs();
  return KClass(TruncatedPoly(
      n_target, std::vector<BigInt>(src.begin(), src.begin() + n_target + 1)));
}

}  // namespace qcpn
