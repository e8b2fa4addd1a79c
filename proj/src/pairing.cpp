#include "qcpn/pairing.hpp"

#include "qcpn/errors.hpp"

namespace qcpn {

BigInt pair_mu(int k, const KClass& c) {
  if (k < 0 || k > c.n())
    throw DomainError("pairing index k=" + std::to_string(k) +
                      " out of range 0.." + std::to_string(c.n()));
  const BigInt& coeff = c.poly()[k];
  return (k % 2 == 0) ? coeff : BigInt(-coeff);
}

PairingVector pair_vector(const KClass& c) {
  PairingVector out{c.n(), {}};
  out.values.reserve(static_cast<std::size_t>(c.n()) + 1);
  for (int k = 0; k <= c.n(); ++k) out.values.push_back(pair_mu(k, c));
  return out;
}

IntMatrix pairing_matrix(const std::vector<KClass>& classes) {
  if (classes.empty()) throw DomainError("pairing matrix needs at least one class");
  const int n = classes.front().n();
  if (classes.size() != static_cast<std::size_t>(n) + 1)
    throw DomainError("pairing matrix needs exactly n+1 = " +
                      std::to_string(n + 1) + " classes, got " +
                      std::to_string(classes.size()));
  IntMatrix m(classes.size(), classes.size());
  for (std::size_t j = 0; j < classes.size(); ++j) {
    if (classes[j].n() != n) throw OrderMismatch(n, classes[j].n());
    for (int k = 0; k <= n; ++k) m(static_cast<std::size_t>(k), j) = pair_mu(k, classes[j]);
  }
  return m;
}

}  // namespace qcpn
