#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qcpn/basis_cert.hpp"
#include "qcpn/errors.hpp"
#include "qcpn/pairing.hpp"

using namespace qcpn;

TEST_CASE("pairing with line bundles reproduces binomials") {
  for (int n = 0; n <= 16; ++n)
    for (int m = 0; m <= 30; ++m) {
      const auto c = line_class(n, m);
      for (int k = 0; k <= n; ++k) CHECK(pair_mu(k, c) == oracle::pascal_binomial(m, k));
    }
}

TEST_CASE("tautological bundle pairs to alternating signs") {
  for (int n = 1; n <= 16; ++n)
    for (int k = 0; k <= n; ++k) CHECK(pair_mu(k, line_class(n, -1)) == (k % 2 ? -1 : 1));
}

TEST_CASE("rank and first Chern class for every integer m") {
  for (int n = 1; n <= 8; ++n)
    for (int m = -25; m <= 25; ++m) {
      CHECK(pair_mu(0, line_class(n, m)) == 1);
      CHECK(pair_mu(1, line_class(n, m)) == m);
    }
}

TEST_CASE("negative m follows the generalized binomial") {
  for (int n = 1; n <= 10; ++n)
    for (int m = -20; m < 0; ++m)
      for (int k = 0; k <= n; ++k) CHECK(pair_mu(k, line_class(n, m)) == oracle::falling_binomial(m, k));
}

TEST_CASE("pair_vector examples") {
  CHECK(pair_vector(KClass::one(4)).values == std::vector<BigInt>{1, 0, 0, 0, 0});
  CHECK(pair_vector(line_class(2, -1)).values == std::vector<BigInt>{1, -1, 1});
  CHECK(pair_vector(KClass(TruncatedPoly::monomial(2, 2))).values == std::vector<BigInt>{0, 0, 1});
}

TEST_CASE("pairing on the t-basis") {
  for (int n = 1; n <= 10; ++n) {
    std::vector<KClass> powers;
    for (int j = 0; j <= n; ++j) powers.emplace_back(TruncatedPoly::monomial(n, j));
    const IntMatrix m = pairing_matrix(powers);
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= n; ++j)
        CHECK(m(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) == (j == k ? (j % 2 ? -1 : 1) : 0));
  }
}

TEST_CASE("pairing matrix of the E-classes, n = 2") {
  // E^2_2 = t^2 pairs with mu_2 to +1.
  std::vector<KClass> e;
  for (int j = 0; j <= 2; ++j) e.push_back(e_class(2, j));
  CHECK(pairing_matrix(e)(2, 2) == 1);
  CHECK(pairing_matrix(e).to_rows() ==
        std::vector<std::vector<BigInt>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(pair_mu(3, line_class(2, 1)), DomainError);
  CHECK_THROWS_AS(pair_mu(-1, line_class(2, 1)), DomainError);
  CHECK_THROWS_AS(pairing_matrix({KClass::one(2), KClass::one(2)}), DomainError);
  CHECK_THROWS_AS(pairing_matrix({KClass::one(1), KClass::one(2)}), DomainError);
  CHECK_THROWS_AS(pairing_matrix({}), DomainError);
}

TEST_CASE("property: pairing is linear") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 12);
    KClass a(TruncatedPoly(n, oracle::random_coeffs(rng, n)));
    KClass b(TruncatedPoly(n, oracle::random_coeffs(rng, n)));
    for (int k = 0; k <= n; ++k) CHECK(pair_mu(k, a + b) == pair_mu(k, a) + pair_mu(k, b));
  }
}
