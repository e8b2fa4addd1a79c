#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qcpn/kring.hpp"

namespace qcpn {

/**
 * Multiset of U(1)-weights (exponents of u) of a corepresentation whose
 * image under a Hopf surjection onto O(U(1)) is diagonal.
 *
 * Weights are kept sorted so that equal multisets compare equal.
 */
class WeightVector {
 public:
  /// Throws DomainError on an empty multiset.
  explicit WeightVector(std::vector<std::int64_t> weights);

  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  std::int64_t sum() const;
  /// weight -> multiplicity
  std::map<std::int64_t, std::int64_t> multiplicities() const;

  /// Multiset union.
  friend WeightVector operator+(const WeightVector& a, const WeightVector& b);
  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.weights_ == b.weights_;
  }

 private:
  std::vector<std::int64_t> weights_;
};

/// Weights of the fundamental corepresentation of SU_q(m) restricted along
/// the diagonal surjection onto O(U(1)): u^{-1} with multiplicity m-1 and
/// u^{m-1} once. Requires m >= 2.
WeightVector pi_weights(int m);

/// Diagonal part of the quantum determinant condition: the determinant maps
/// to u^{sum of weights}, which has to be 1.
bool check_determinant_condition(const WeightVector& w);

/// K-class of the associated bundle in the character-graded case: each
/// weight lambda contributes the spectral subspace L^n_lambda.
KClass associated_class(int n, const WeightVector& w);

/// Line-bundle labels (label -> multiplicity) of F^n_m,
/// i.e. (L^n_{-1})^{m-1} + L^n_{m-1}. Requires 2 <= m <= n.
std::map<std::int64_t, std::int64_t> fundamental_decomposition(int n, int m);

}  // namespace qcpn
