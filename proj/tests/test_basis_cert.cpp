#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qcpn/basis_cert.hpp"
#include "qcpn/errors.hpp"
#include "qcpn/pairing.hpp"

using namespace qcpn;

namespace {

using Rows = std::vector<std::vector<BigInt>>;

std::vector<BigInt> padded(std::vector<long> c, int n) {
  std::vector<BigInt> out(c.begin(), c.end());
  out.resize(static_cast<std::size_t>(n) + 1, BigInt(0));
  return out;
}

}  // namespace

TEST_CASE("e_class examples") {
  CHECK(e_class(2, 1).coeffs() == padded({0, -1}, 2));

  // (1 + t + t^2) + (1 - t) - 2
  CHECK(e_class(2, 2).coeffs() == padded({0, 0, 1}, 2));

  // 2 (1 + t + t^2 + t^3) + (1 - t)^2 - 3
  std::vector<BigInt> expected = oracle::one_minus_t_power(3, 2);
  for (auto& c : expected) c += 2;
  expected[0] -= 3;
  CHECK(e_class(3, 3).coeffs() == expected);
  CHECK(expected == padded({0, 0, 3, 2}, 3));

  CHECK(e_class(4, 0) == KClass::one(4));
  CHECK_THROWS_AS(e_class(2, 3), DomainError);
  CHECK_THROWS_AS(e_class(2, -1), DomainError);
}

TEST_CASE("e_class_formula examples") {
  CHECK(e_class_formula(3, 3).coeffs() == padded({0, 0, 3, 2}, 3));
  CHECK(e_class_formula(2, 2).coeffs() == padded({0, 0, 1}, 2));
  CHECK(e_class_formula(4, 2).coeffs() == padded({0, 0, 1, 1, 1}, 4));
  CHECK_THROWS_AS(e_class_formula(4, 1), DomainError);
  CHECK_THROWS_AS(e_class_formula(4, 5), DomainError);
}

TEST_CASE("closed form agrees with the decomposition route") {
  for (int n = 2; n <= 32; ++n)
    for (int m = 2; m <= n; ++m) CHECK(e_class_formula(n, m) == e_class(n, m));
}

TEST_CASE("basis_matrix examples") {
  CHECK(basis_matrix(1).to_rows() == Rows{{1, 0}, {0, -1}});
  CHECK(basis_matrix(2).to_rows() == Rows{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}});
  CHECK(basis_matrix(3).to_rows() == Rows{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 1}, {0, 0, 3, 2}});
  CHECK_THROWS_AS(basis_matrix(0), DomainError);
}

TEST_CASE("basis_matrix row structure") {
  for (int n = 1; n <= 20; ++n) {
    const auto m = basis_matrix(n);
    CHECK(m(0, 0) == 1);
    CHECK(m(1, 1) == -1);
    for (std::size_t c = 1; c < m.cols(); ++c) CHECK(m(0, c) == 0);
    for (std::size_t r = 2; r < m.rows(); ++r) {
      CHECK(m(r, 0) == 0);
      CHECK(m(r, 1) == 0);
    }
  }
}

TEST_CASE("det_exact against cofactor expansion") {
  CHECK(oracle::cofactor_det(basis_matrix(2).to_rows()) == -1);
  CHECK(det_exact(basis_matrix(2)) == -1);
  CHECK(oracle::cofactor_det(basis_matrix(3).to_rows()) == 1);
  CHECK(det_exact(basis_matrix(3)) == 1);
  CHECK(det_exact(IntMatrix::identity(6)) == 1);
  CHECK(det_exact(IntMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(det_exact(IntMatrix(2, 3)), DomainError);

  for (int n = 1; n <= 7; ++n) CHECK(det_exact(basis_matrix(n)) == oracle::cofactor_det(basis_matrix(n).to_rows()));

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto size = 1 + static_cast<std::size_t>(rng() % 7);
    IntMatrix m(size, size);
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c)
        m(r, c) = (rng() % 3 == 0) ? 0 : entry(rng);  // sparse so pivoting gets exercised
    CHECK(det_exact(m) == oracle::cofactor_det(m.to_rows()));
  }
}

TEST_CASE("certify_basis examples") {
  auto c2 = certify_basis(2);
  CHECK(c2.det == -1);
  CHECK(c2.inverse.to_rows() == Rows{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}});
  CHECK(c2.matrix * c2.inverse == IntMatrix::identity(3));

  CHECK(certify_basis(1).det == -1);

  auto c64 = certify_basis(64);
  CHECK(abs(c64.det) == 1);
  CHECK(c64.matrix * c64.inverse == IntMatrix::identity(65));
  CHECK(c64.inverse * c64.matrix == IntMatrix::identity(65));

  CHECK_THROWS_AS(certify_basis(0), DomainError);
}

TEST_CASE("expand_in_e_basis examples") {
  CHECK(expand_in_e_basis(KClass::one(5)) == padded({1}, 5));
  CHECK(expand_in_e_basis(KClass(TruncatedPoly::monomial(2, 2))) == padded({0, 0, 1}, 2));

  const KClass target = line_class(3, -1);
  const auto x = expand_in_e_basis(target);
  KClass rebuilt = KClass::zero(3);
  for (int j = 0; j <= 3; ++j) rebuilt += x[static_cast<std::size_t>(j)] * e_class(3, j);
  CHECK(rebuilt == target);
  CHECK(target.coeffs() == padded({1, 1, 1, 1}, 3));
}

TEST_CASE("property: expansion round trip") {
  std::mt19937_64 rng(19);
  for (int n = 1; n <= 16; ++n) {
    const auto cert = certify_basis(n);
    std::vector<KClass> basis;
    for (int j = 0; j <= n; ++j) basis.push_back(e_class(n, j));
    for (int trial = 0; trial < 100; ++trial) {
      KClass c(TruncatedPoly(n, oracle::random_coeffs(rng, n)));
      const auto x = expand_in_e_basis(c, cert);
      KClass rebuilt = KClass::zero(n);
      for (int j = 0; j <= n; ++j) rebuilt += x[static_cast<std::size_t>(j)] * basis[static_cast<std::size_t>(j)];
      CHECK(rebuilt == c);
    }
  }
  CHECK_THROWS_AS(expand_in_e_basis(KClass::one(2), certify_basis(3)), OrderMismatch);
}

TEST_CASE("nesting") {
  CHECK(nesting_check(1));
  CHECK(nesting_check(2));
  CHECK(nesting_check(10));
  for (int n = 1; n <= 32; ++n) CHECK(nesting_check(n));
}

TEST_CASE("pairing matrix agrees with M_n up to sign") {
  for (int n = 1; n <= 16; ++n) {
    std::vector<KClass> e;
    for (int j = 0; j <= n; ++j) e.push_back(e_class(n, j));
    const auto pairing = pairing_matrix(e);
    const auto m = basis_matrix(n);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k)
      for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j)
        CHECK(pairing(k, j) == (k % 2 ? BigInt(-m(j, k)) : m(j, k)));
  }
}
