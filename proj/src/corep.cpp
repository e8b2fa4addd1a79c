#include "qcpn/corep.hpp"

#include <algorithm>
#include <numeric>

#include "qcpn/errors.hpp"

namespace qcpn {

WeightVector::WeightVector(std::vector<std::int64_t> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw DomainError("weight vector must be nonempty");
  std::sort(weights_.begin(), weights_.end());
}

std::int64_t WeightVector::sum() const {
  return std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0});
}

std::map<std::int64_t, std::int64_t> WeightVector::multiplicities() const {
  std::map<std::int64_t, std::int64_t> out;
  for (auto w : weights_) ++out[w];
  return out;
}

WeightVector operator+(const WeightVector& a, const WeightVector& b) {
  std::vector<std::int64_t> merged = a.weights_;
  merged.insert(merged.end(), b.weights_.begin(), b.weights_.end());
  return WeightVector(std::move(merged));
}

WeightVector pi_weights(int m) {
  if (m < 2) throw DomainError("pi_m is defined for m >= 2, got m=" + std::to_string(m));
  std::vector<std::int64_t> w(static_cast<std::size_t>(m - 1), -1);
  w.push_back(m - 1);
  return WeightVector(std::move(w));
}

bool check_determinant_condition(const WeightVector& w) { return w.sum() == 0; }

KClass associated_class(int n, const WeightVector& w) {
  if (n < 1) throw DomainError("associated_class requires n >= 1");
  KClass total = KClass::zero(n);
  for (const auto& [weight, mult] : w.multiplicities())
    total += BigInt(static_cast<long>(mult)) * line_class(n, static_cast<long>(weight));
  return total;
}

std::map<std::int64_t, std::int64_t> fundamental_decomposition(int n, int m) {
  if (m < 2 || m > n)
    throw DomainError("fundamental_decomposition requires 2 <= m <= n, got n=" +
                      std::to_string(n) + ", m=" + std::to_string(m));
  return pi_weights(m).multiplicities();
}

}  // namespace qcpn
