#pragma once

#include <vector>

#include "qcpn/int_matrix.hpp"
#include "qcpn/kring.hpp"

namespace qcpn {

// The K-homology generators mu_0..mu_n enter only through their pairing
// values on the t-basis: <mu_k, t^j> = (-1)^j delta_{jk}.

struct PairingVector {
  int n = 0;
  std::vector<BigInt> values;  // values[k] = <mu_k, class>
};

/// (-1)^k times the t^k coefficient. Throws DomainError unless 0 <= k <= c.n().
BigInt pair_mu(int k, const KClass& c);

PairingVector pair_vector(const KClass& c);

/// Entry (k, j) = pair_mu(k, classes[j]). Needs exactly n+1 classes of a
/// common order n.
IntMatrix pairing_matrix(const std::vector<KClass>& classes);

}  // namespace qcpn
